#include "ug4/splitcas.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace ug4 {

namespace {

// ---------------------------------------------------------------------------
// symmetric group data (n = 2, 3, 4)
// ---------------------------------------------------------------------------

struct SnData {
    int n;
    std::vector<std::vector<int>> perms;   // all n! permutations (image lists)
    std::vector<int> class_of;             // conjugacy class per permutation
    std::vector<int> class_size;
    std::vector<int> class_cycles;         // number of cycles of a class member
    std::vector<std::vector<int>> partitions;         // modules, same order as chars
    std::vector<std::vector<long>> chars;  // chars[partition][class]
};

std::vector<int> cycle_type(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

const SnData& sn_data(int n) {
    static std::map<int, SnData> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SnData s;
    s.n = n;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> p = base;
    do {
        s.perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // classes ordered by sorted cycle type, deterministic
    std::map<std::vector<int>, int> class_id;
    for (const auto& q : s.perms) {
        auto t = cycle_type(q);
        if (!class_id.count(t)) class_id[t] = static_cast<int>(class_id.size());
    }
    s.class_size.assign(class_id.size(), 0);
    s.class_cycles.assign(class_id.size(), 0);
    for (const auto& q : s.perms) {
        auto t = cycle_type(q);
        int c = class_id[t];
        s.class_of.push_back(c);
        s.class_size[c]++;
        s.class_cycles[c] = static_cast<int>(t.size());
    }
    // Character tables, classes keyed by cycle type via class_id lookups.
    auto cls = [&class_id](std::vector<int> t) { return class_id.at(t); };
    int nc = static_cast<int>(class_id.size());
    if (n == 2) {
        s.partitions = {{2}, {1, 1}};
        s.chars.assign(2, std::vector<long>(nc, 0));
        s.chars[0][cls({1, 1})] = 1;
        s.chars[0][cls({2})] = 1;
        s.chars[1][cls({1, 1})] = 1;
        s.chars[1][cls({2})] = -1;
    } else if (n == 3) {
        s.partitions = {{3}, {2, 1}, {1, 1, 1}};
        s.chars.assign(3, std::vector<long>(nc, 0));
        auto e = cls({1, 1, 1}), t2 = cls({2, 1}), t3 = cls({3});
        s.chars[0][e] = 1;  s.chars[0][t2] = 1;  s.chars[0][t3] = 1;
        s.chars[1][e] = 2;  s.chars[1][t2] = 0;  s.chars[1][t3] = -1;
        s.chars[2][e] = 1;  s.chars[2][t2] = -1; s.chars[2][t3] = 1;
    } else if (n == 4) {
        s.partitions = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
        s.chars.assign(5, std::vector<long>(nc, 0));
        auto e = cls({1, 1, 1, 1}), c2 = cls({2, 1, 1}), c22 = cls({2, 2}), c3 = cls({3, 1}),
             c4 = cls({4});
        s.chars[0] = std::vector<long>(nc, 0);
        s.chars[0][e] = 1;  s.chars[0][c2] = 1;  s.chars[0][c22] = 1;  s.chars[0][c3] = 1;  s.chars[0][c4] = 1;
        s.chars[1][e] = 3;  s.chars[1][c2] = 1;  s.chars[1][c22] = -1; s.chars[1][c3] = 0;  s.chars[1][c4] = -1;
        s.chars[2][e] = 2;  s.chars[2][c2] = 0;  s.chars[2][c22] = 2;  s.chars[2][c3] = -1; s.chars[2][c4] = 0;
        s.chars[3][e] = 3;  s.chars[3][c2] = -1; s.chars[3][c22] = -1; s.chars[3][c3] = 0;  s.chars[3][c4] = 1;
        s.chars[4][e] = 1;  s.chars[4][c2] = -1; s.chars[4][c22] = 1;  s.chars[4][c3] = 1;  s.chars[4][c4] = -1;
    } else {
        throw std::invalid_argument("tensor power n must be 2..4");
    }
    return cache.emplace(n, std::move(s)).first->second;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int partition_index(const SnData& s, const std::vector<int>& part) {
    for (size_t i = 0; i < s.partitions.size(); ++i)
        if (s.partitions[i] == part) return static_cast<int>(i);
    throw std::invalid_argument("unknown partition");
}

}  // namespace

ModuleInfo module_info(const std::string& label) {
    std::string m = canonical_module(label);
    ModuleInfo info;
    info.name = m;
    if (m == "sym2") { info.n = 2; info.partition = {2}; }
    else if (m == "asym2") { info.n = 2; info.partition = {1, 1}; }
    else if (m == "asym3") { info.n = 3; info.partition = {1, 1, 1}; }
    else if (m == "4") { info.n = 4; info.partition = {4}; }
    else if (m == "31") { info.n = 4; info.partition = {3, 1}; }
    else if (m == "22") { info.n = 4; info.partition = {2, 2}; }
    else if (m == "211") { info.n = 4; info.partition = {2, 1, 1}; }
    else { info.n = 4; info.partition = {1, 1, 1, 1}; }
    const SnData& s = sn_data(info.n);
    int pi = partition_index(s, info.partition);
    // dim R = character of the identity class
    for (size_t c = 0; c < s.class_size.size(); ++c)
        if (s.class_cycles[c] == info.n) info.sn_dim = static_cast<int>(s.chars[pi][c]);
    return info;
}

// ---------------------------------------------------------------------------
// SplitCasimir: exact pairwise operator
// ---------------------------------------------------------------------------

SplitCasimir::SplitCasimir(const LieAlgebra& alg, int n) : alg_(&alg), n_(n) {
    if (n < 2 || n > 4) throw std::invalid_argument("tensor power n must be 2..4");
    int d = alg.dimension;
    // scale = lcm of g^{ab} denominators
    mpz_class l(1);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (alg.killing_inv[a][b] != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), alg.killing_inv[a][b].get_den().get_mpz_t());
    scale_ = Rat(l);

    // columns of scale * g^{ab} ad(X_a) (x) ad(X_b), exact integers
    pair_cols_.assign(static_cast<size_t>(d) * d, {});
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            std::map<std::pair<int, int>, Rat> acc;
            for (int a = 0; a < d; ++a) {
                const SparseVec& ax = alg.bracket(a, x);
                if (ax.empty()) continue;
                for (int b = 0; b < d; ++b) {
                    const Rat& g = alg.killing_inv[a][b];
                    if (g == 0) continue;
                    const SparseVec& by = alg.bracket(b, y);
                    for (const auto& [xp, vx] : ax)
                        for (const auto& [yp, vy] : by) acc[{xp, yp}] += g * vx * vy;
                }
            }
            auto& col = pair_cols_[static_cast<size_t>(x) * d + y];
            for (auto& [key, v] : acc) {
                v *= scale_;
                v.canonicalize();
                if (v == 0) continue;
                if (v.get_den() != 1 || !v.get_num().fits_slong_p())
                    throw std::logic_error("scaled pair operator entry not a small integer");
                col.push_back({key, v.get_num().get_si()});
            }
        }
}

std::uint64_t SplitCasimir::dim() const {
    std::uint64_t r = 1;
    for (int i = 0; i < n_; ++i) r *= alg_->dimension;
    return r;
}

const std::vector<std::pair<std::pair<int, int>, long long>>& SplitCasimir::pair_column(
    int x, int y) const {
    return pair_cols_[static_cast<size_t>(x) * alg_->dimension + y];
}

namespace {

void decode(std::uint64_t t, int d, int n, int* out) {
    for (int s = n - 1; s >= 0; --s) {
        out[s] = static_cast<int>(t % d);
        t /= d;
    }
}

std::uint64_t encode(const int* digits, int d, int n) {
    std::uint64_t t = 0;
    for (int s = 0; s < n; ++s) t = t * d + digits[s];
    return t;
}

std::uint64_t permute_index(std::uint64_t t, const std::vector<int>& sigma, int d, int n) {
    int x[4], y[4];
    decode(t, d, n, x);
    for (int s = 0; s < n; ++s) y[s] = x[sigma[s]];
    return encode(y, d, n);
}

}  // namespace

std::map<std::uint64_t, Rat> SplitCasimir::apply(const std::map<std::uint64_t, Rat>& v) const {
    int d = alg_->dimension, n = n_;
    Rat inv_scale = Rat(1) / scale_;
    inv_scale.canonicalize();
    std::map<std::uint64_t, Rat> out;
    int x[4];
    std::uint64_t pw[4];  // place value of each slot
    pw[n - 1] = 1;
    for (int s = n - 2; s >= 0; --s) pw[s] = pw[s + 1] * d;
    for (const auto& [t, coef] : v) {
        if (coef == 0) continue;
        decode(t, d, n, x);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (const auto& [xy, val] : pair_column(x[i], x[j])) {
                    std::uint64_t u = t + (xy.first - x[i]) * pw[i] + (xy.second - x[j]) * pw[j];
                    out[u] += coef * Rat(static_cast<long>(val)) * inv_scale;
                }
    }
    for (auto it = out.begin(); it != out.end();) {
        it->second.canonicalize();
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

std::vector<Rat> SplitCasimir::apply(const std::vector<Rat>& v) const {
    if (v.size() != dim()) throw std::invalid_argument("tensor vector dimension mismatch");
    std::map<std::uint64_t, Rat> mv;
    for (std::uint64_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) mv[i] = v[i];
    auto mo = apply(mv);
    std::vector<Rat> out(v.size(), Rat(0));
    for (auto& [i, c] : mo) out[i] = c;
    return out;
}

std::map<std::uint64_t, Rat> SplitCasimir::permute(const std::vector<int>& sigma,
                                                   const std::map<std::uint64_t, Rat>& v) const {
    std::map<std::uint64_t, Rat> out;
    for (const auto& [t, c] : v) out[permute_index(t, sigma, alg_->dimension, n_)] += c;
    return out;
}

std::map<std::uint64_t, Rat> SplitCasimir::project(const std::string& module,
                                                   const std::map<std::uint64_t, Rat>& v) const {
    ModuleInfo info = module_info(module);
    if (info.n != n_) throw std::invalid_argument("module tensor power mismatch");
    const SnData& s = sn_data(n_);
    int pi = partition_index(s, info.partition);
    Rat pref = Rat(info.sn_dim, factorial(n_));
    pref.canonicalize();
    std::map<std::uint64_t, Rat> out;
    for (size_t q = 0; q < s.perms.size(); ++q) {
        long chi = s.chars[pi][s.class_of[q]];
        if (chi == 0) continue;
        for (const auto& [t, c] : v)
            out[permute_index(t, s.perms[q], alg_->dimension, n_)] += pref * Rat(chi) * c;
    }
    for (auto it = out.begin(); it != out.end();) {
        it->second.canonicalize();
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

std::vector<Rat> SplitCasimir::project(const std::string& module, const std::vector<Rat>& v) const {
    if (v.size() != dim()) throw std::invalid_argument("tensor vector dimension mismatch");
    std::map<std::uint64_t, Rat> mv;
    for (std::uint64_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) mv[i] = v[i];
    auto mo = project(module, mv);
    std::vector<Rat> out(v.size(), Rat(0));
    for (auto& [i, c] : mo) out[i] = c;
    return out;
}

// ---------------------------------------------------------------------------
// weight blocks
// ---------------------------------------------------------------------------

namespace {

struct Blocks {
    int d, n;
    std::vector<std::vector<std::uint32_t>> members;  // tensor indices per block
    std::vector<std::int32_t> block_of;               // per tensor index
    std::vector<std::uint32_t> pos_of;                // position within its block
};

std::vector<std::vector<int>> basis_weights(const LieAlgebra& alg) {
    std::vector<std::vector<int>> w(alg.dimension, std::vector<int>(alg.rank, 0));
    for (int b = alg.rank; b < alg.dimension; ++b)
        for (int i = 0; i < alg.rank; ++i)
            for (const auto& [c, v] : alg.bracket(i, b))
                if (c == b) w[b][i] = static_cast<int>(rat_to_long(v));
    return w;
}

Blocks build_blocks(const LieAlgebra& alg, int n) {
    Blocks bl;
    bl.d = alg.dimension;
    bl.n = n;
    auto wts = basis_weights(alg);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= alg.dimension;
    bl.block_of.assign(total, -1);
    bl.pos_of.assign(total, 0);
    std::map<std::vector<int>, int> key_to_block;
    int x[4];
    std::vector<int> key(alg.rank);
    for (std::uint64_t t = 0; t < total; ++t) {
        decode(t, bl.d, n, x);
        std::fill(key.begin(), key.end(), 0);
        for (int s = 0; s < n; ++s)
            for (int i = 0; i < alg.rank; ++i) key[i] += wts[x[s]][i];
        auto [it, fresh] = key_to_block.try_emplace(key, static_cast<int>(bl.members.size()));
        if (fresh) bl.members.push_back({});
        int b = it->second;
        bl.block_of[t] = b;
        bl.pos_of[t] = static_cast<std::uint32_t>(bl.members[b].size());
        bl.members[b].push_back(static_cast<std::uint32_t>(t));
    }
    return bl;
}

// Scaled integer block matrix, CSR (rows = local indices).
struct BlockMat {
    int nloc = 0;
    std::vector<std::uint32_t> rowptr;
    std::vector<std::uint32_t> col;
    std::vector<long long> val;
};

BlockMat build_block_matrix(const SplitCasimir& op, const Blocks& bl, int block) {
    const auto& mem = bl.members[block];
    int nloc = static_cast<int>(mem.size());
    int d = bl.d, n = bl.n;
    std::uint64_t pw[4];
    pw[n - 1] = 1;
    for (int s = n - 2; s >= 0; --s) pw[s] = pw[s + 1] * d;
    // Build column-wise triplets, then transpose to CSR.
    std::vector<std::uint32_t> tr, tc;
    std::vector<long long> tv;
    int x[4];
    for (int j = 0; j < nloc; ++j) {
        std::uint64_t t = mem[j];
        decode(t, d, n, x);
        std::map<std::uint32_t, long long> column;
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = i1 + 1; i2 < n; ++i2)
                for (const auto& [xy, val] : op.pair_column(x[i1], x[i2])) {
                    std::uint64_t u = t + (std::uint64_t)(xy.first - x[i1]) * pw[i1] +
                                      (std::uint64_t)(xy.second - x[i2]) * pw[i2];
                    column[bl.pos_of[u]] += val;
                }
        for (auto& [r, v] : column)
            if (v != 0) { tr.push_back(r); tc.push_back(j); tv.push_back(v); }
    }
    BlockMat m;
    m.nloc = nloc;
    m.rowptr.assign(nloc + 1, 0);
    for (auto r : tr) m.rowptr[r + 1]++;
    for (int i = 0; i < nloc; ++i) m.rowptr[i + 1] += m.rowptr[i];
    m.col.resize(tr.size());
    m.val.resize(tr.size());
    std::vector<std::uint32_t> cursor(m.rowptr.begin(), m.rowptr.end() - 1);
    for (size_t k = 0; k < tr.size(); ++k) {
        std::uint32_t pos = cursor[tr[k]]++;
        m.col[pos] = tc[k];
        m.val[pos] = tv[k];
    }
    return m;
}

// ---------------------------------------------------------------------------
// class moments: exact and dual-prime modular backends
// ---------------------------------------------------------------------------

constexpr std::uint64_t kPrimes[2] = {2147483629ULL, 2147483587ULL};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r;
}
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a % p, p - 2, p); }
std::uint64_t rat_mod(const Rat& r, std::uint64_t p) {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class nm = num % pm;
    if (nm < 0) nm += pm;
    mpz_class dm = den % pm;
    std::uint64_t n = nm.get_ui(), d = dm.get_ui();
    if (d == 0) throw std::logic_error("prime divides rational denominator");
    return (unsigned __int128)n * inv_mod(d, p) % p;
}

// Per-class traces tr(sigma_c (scale*C)^k); exact (Rat) and modular variants.
struct ClassMomentsExact {
    int kmax;
    std::vector<std::vector<Rat>> T;  // [class][k], moments of C itself (unscaled)
};
struct ClassMomentsModp {
    int kmax;
    // Tm[prime][class][k]: tr(sigma_c C^k) mod p (scale divided out).
    std::array<std::vector<std::vector<std::uint64_t>>, 2> Tm;
    std::vector<long long> exact_k0;  // per class, exact tr(sigma_c) = d^{cycles}
};

// Orbit data shared by the sweeps: permuted local positions of a representative.
struct OrbitInfo {
    int stab;
    std::array<std::uint32_t, 24> ppos;  // local position of perms[q](t)
};

bool orbit_info(const Blocks& bl, const SnData& s, std::uint64_t t, OrbitInfo& out) {
    int np = static_cast<int>(s.perms.size());
    int stab = 0;
    for (int q = 0; q < np; ++q) {
        std::uint64_t u = permute_index(t, s.perms[q], bl.d, bl.n);
        if (u < t) return false;  // not the canonical (minimal) representative
        if (u == t) ++stab;
        out.ppos[q] = bl.pos_of[u];
    }
    out.stab = stab;
    return true;
}

ClassMomentsExact class_moments_exact(const SplitCasimir& op, const Blocks& bl, int kmax) {
    const SnData& s = sn_data(bl.n);
    int nc = static_cast<int>(s.class_size.size());
    int np = static_cast<int>(s.perms.size());
    long nfact = factorial(bl.n);
    ClassMomentsExact cm;
    cm.kmax = kmax;
    cm.T.assign(nc, std::vector<Rat>(kmax + 1, Rat(0)));
    std::vector<mpz_class> v, w;
    OrbitInfo oi;
    for (size_t b = 0; b < bl.members.size(); ++b) {
        BlockMat M = build_block_matrix(op, bl, static_cast<int>(b));
        v.resize(M.nloc);
        w.resize(M.nloc);
        for (std::uint32_t j = 0; j < bl.members[b].size(); ++j) {
            std::uint64_t t = bl.members[b][j];
            if (!orbit_info(bl, s, t, oi)) continue;
            for (int i = 0; i < M.nloc; ++i) v[i] = 0;
            v[j] = 1;
            std::array<Rat, 8> wgt;  // per class: n!/(|cl|*|stab|)
            for (int c = 0; c < nc; ++c) {
                wgt[c] = Rat(nfact, static_cast<long>(s.class_size[c]) * oi.stab);
                wgt[c].canonicalize();
            }
            for (int k = 0; k <= kmax; ++k) {
                if (k > 0) {
                    for (int r = 0; r < M.nloc; ++r) {
                        mpz_class acc(0);
                        for (std::uint32_t e = M.rowptr[r]; e < M.rowptr[r + 1]; ++e)
                            if (v[M.col[e]] != 0)
                                acc += v[M.col[e]] * static_cast<long>(M.val[e]);
                        w[r] = acc;
                    }
                    std::swap(v, w);
                }
                std::array<mpz_class, 8> csum;
                for (int c = 0; c < nc; ++c) csum[c] = 0;
                for (int q = 0; q < np; ++q) csum[s.class_of[q]] += v[oi.ppos[q]];
                for (int c = 0; c < nc; ++c)
                    if (csum[c] != 0) cm.T[c][k] += wgt[c] * Rat(csum[c]);
            }
        }
    }
    // divide out the scale
    Rat sc = op.scale();
    Rat p(1);
    for (int k = 0; k <= kmax; ++k) {
        for (int c = 0; c < nc; ++c) {
            cm.T[c][k] /= p;
            cm.T[c][k].canonicalize();
        }
        p *= sc;
    }
    return cm;
}

ClassMomentsModp class_moments_modp(const SplitCasimir& op, const Blocks& bl, int kmax) {
    const SnData& s = sn_data(bl.n);
    int nc = static_cast<int>(s.class_size.size());
    int np = static_cast<int>(s.perms.size());
    long nfact = factorial(bl.n);
    ClassMomentsModp cm;
    cm.kmax = kmax;
    for (int pi = 0; pi < 2; ++pi)
        cm.Tm[pi].assign(nc, std::vector<std::uint64_t>(kmax + 1, 0));
    cm.exact_k0.assign(nc, 0);
    // exact k = 0: fixed points of sigma_c = d^{cycles}
    for (int c = 0; c < nc; ++c) {
        long long f = 1;
        for (int i = 0; i < s.class_cycles[c]; ++i) f *= bl.d;
        cm.exact_k0[c] = f;
    }
    std::array<std::array<std::uint64_t, 8>, 2> stabinv_cache{};
    std::vector<std::uint64_t> v1, v2, w1, w2;
    OrbitInfo oi;
    for (size_t b = 0; b < bl.members.size(); ++b) {
        BlockMat M = build_block_matrix(op, bl, static_cast<int>(b));
        std::vector<std::uint64_t> mval[2];
        for (int pi = 0; pi < 2; ++pi) {
            mval[pi].resize(M.val.size());
            std::uint64_t p = kPrimes[pi];
            for (size_t e = 0; e < M.val.size(); ++e) {
                long long x = M.val[e] % static_cast<long long>(p);
                mval[pi][e] = x < 0 ? x + p : x;
            }
        }
        v1.assign(M.nloc, 0);
        v2.assign(M.nloc, 0);
        w1.resize(M.nloc);
        w2.resize(M.nloc);
        for (std::uint32_t j = 0; j < bl.members[b].size(); ++j) {
            std::uint64_t t = bl.members[b][j];
            if (!orbit_info(bl, s, t, oi)) continue;
            std::fill(v1.begin(), v1.end(), 0);
            std::fill(v2.begin(), v2.end(), 0);
            v1[j] = 1;
            v2[j] = 1;
            // weights n!/(|cl|*|stab|) mod p
            std::array<std::array<std::uint64_t, 8>, 2> wgt;
            for (int pi = 0; pi < 2; ++pi)
                for (int c = 0; c < nc; ++c)
                    wgt[pi][c] =
                        (unsigned __int128)(nfact % kPrimes[pi]) *
                        inv_mod(static_cast<std::uint64_t>(s.class_size[c]) * oi.stab, kPrimes[pi]) %
                        kPrimes[pi];
            (void)stabinv_cache;
            for (int k = 0; k <= kmax; ++k) {
                if (k > 0) {
                    const std::uint64_t p1 = kPrimes[0], p2 = kPrimes[1];
                    for (int r = 0; r < M.nloc; ++r) {
                        unsigned __int128 a1 = 0, a2 = 0;
                        for (std::uint32_t e = M.rowptr[r]; e < M.rowptr[r + 1]; ++e) {
                            std::uint32_t cI = M.col[e];
                            a1 += (unsigned __int128)mval[0][e] * v1[cI];
                            a2 += (unsigned __int128)mval[1][e] * v2[cI];
                        }
                        w1[r] = static_cast<std::uint64_t>(a1 % p1);
                        w2[r] = static_cast<std::uint64_t>(a2 % p2);
                    }
                    std::swap(v1, w1);
                    std::swap(v2, w2);
                }
                std::array<std::uint64_t, 8> cs1{}, cs2{};
                for (int q = 0; q < np; ++q) {
                    cs1[s.class_of[q]] += v1[oi.ppos[q]];
                    cs2[s.class_of[q]] += v2[oi.ppos[q]];
                }
                for (int c = 0; c < nc; ++c) {
                    if (cs1[c])
                        cm.Tm[0][c][k] =
                            (cm.Tm[0][c][k] + (unsigned __int128)(cs1[c] % kPrimes[0]) * wgt[0][c]) %
                            kPrimes[0];
                    if (cs2[c])
                        cm.Tm[1][c][k] =
                            (cm.Tm[1][c][k] + (unsigned __int128)(cs2[c] % kPrimes[1]) * wgt[1][c]) %
                            kPrimes[1];
                }
            }
        }
    }
    // divide out scale^k, and check k=0 against the exact count
    for (int pi = 0; pi < 2; ++pi) {
        std::uint64_t p = kPrimes[pi];
        std::uint64_t sinv = inv_mod(rat_mod(op.scale(), p), p);
        for (int c = 0; c < nc; ++c) {
            std::uint64_t f = 1;
            for (int k = 0; k <= kmax; ++k) {
                cm.Tm[pi][c][k] = (unsigned __int128)cm.Tm[pi][c][k] * f % p;
                f = (unsigned __int128)f * sinv % p;
            }
            if (cm.Tm[pi][c][0] != static_cast<std::uint64_t>(cm.exact_k0[c]) % p)
                throw std::runtime_error("modular sweep failed the exact k=0 certificate");
        }
    }
    return cm;
}

// ---------------------------------------------------------------------------
// candidates and solving
// ---------------------------------------------------------------------------

struct Candidates {
    std::vector<Rat> eigs;                      // distinct, sorted
    std::vector<std::vector<Label>> labels;     // merged label sets
};

Candidates merged_candidates(const AlgebraId& id, const std::string& module, Provenance prov) {
    ModuleInfo info = module_info(module);
    VogelPoint pt = algebra_point(id);
    DecompositionTable tab = module_table(module, prov);
    std::map<Rat, std::vector<Label>> merged;
    for (const TableEntry& e : tab.entries) {
        Rat ev = casimir_eigenvalue(e.label, pt, info.n, prov);
        merged[ev].push_back(e.label);
    }
    Candidates c;
    for (auto& [ev, ls] : merged) {
        c.eigs.push_back(ev);
        c.labels.push_back(ls);
    }
    return c;
}

// Isotypic multiplicity-space moments from class moments:
// mu_k = tr(P_R C^k)/dimR = (1/n!) sum_cl |cl| chi_R(cl) T_{cl,k}.
std::vector<Rat> isotypic_moments(const ClassMomentsExact& cm, int n,
                                  const std::vector<int>& partition) {
    const SnData& s = sn_data(n);
    int pi = partition_index(s, partition);
    std::vector<Rat> mu(cm.kmax + 1, Rat(0));
    for (int k = 0; k <= cm.kmax; ++k) {
        for (size_t c = 0; c < s.class_size.size(); ++c)
            mu[k] += Rat(s.class_size[c]) * Rat(s.chars[pi][c]) * cm.T[c][k];
        mu[k] /= Rat(factorial(n));
        mu[k].canonicalize();
    }
    return mu;
}

Rat exact_mu0(int n, const std::vector<int>& partition, int d) {
    const SnData& s = sn_data(n);
    int pi = partition_index(s, partition);
    Rat mu(0);
    for (size_t c = 0; c < s.class_size.size(); ++c) {
        long long f = 1;
        for (int i = 0; i < s.class_cycles[c]; ++i) f *= d;
        mu += Rat(s.class_size[c]) * Rat(s.chars[pi][c]) * Rat(static_cast<long>(f));
    }
    mu /= Rat(factorial(n));
    mu.canonicalize();
    return mu;
}

// Exact Vandermonde solve with over-determined residual verification.
std::vector<Rat> solve_vandermonde_exact(const std::vector<Rat>& eigs, const std::vector<Rat>& mu) {
    size_t D = eigs.size();
    if (mu.size() < D) throw std::invalid_argument("not enough moments");
    std::vector<std::vector<Rat>> A(D, std::vector<Rat>(D + 1, Rat(0)));
    for (size_t k = 0; k < D; ++k) {
        for (size_t i = 0; i < D; ++i) {
            Rat pw(1);
            for (size_t e = 0; e < k; ++e) pw *= eigs[i];
            A[k][i] = pw;
        }
        A[k][D] = mu[k];
    }
    for (size_t col = 0; col < D; ++col) {
        size_t piv = col;
        while (piv < D && A[piv][col] == 0) ++piv;
        if (piv == D) throw std::logic_error("singular Vandermonde system");
        std::swap(A[piv], A[col]);
        Rat inv = Rat(1) / A[col][col];
        for (size_t c = col; c <= D; ++c) { A[col][c] *= inv; A[col][c].canonicalize(); }
        for (size_t r = 0; r < D; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (size_t c = col; c <= D; ++c) { A[r][c] -= f * A[col][c]; A[r][c].canonicalize(); }
        }
    }
    std::vector<Rat> m(D);
    for (size_t i = 0; i < D; ++i) m[i] = A[i][D];
    // residual moments
    for (size_t k = D; k < mu.size(); ++k) {
        Rat s(0);
        for (size_t i = 0; i < D; ++i) {
            Rat pw(1);
            for (size_t e = 0; e < k; ++e) pw *= eigs[i];
            s += m[i] * pw;
        }
        s.canonicalize();
        if (s != mu[k])
            throw std::runtime_error(
                "candidate eigenvalue list incomplete or wrong: residual moment k=" +
                std::to_string(k) + " off by " + rat_str(mu[k] - s));
    }
    return m;
}

std::vector<std::uint64_t> solve_vandermonde_modp(const std::vector<std::uint64_t>& eigs,
                                                  const std::vector<std::uint64_t>& mu,
                                                  std::uint64_t p) {
    size_t D = eigs.size();
    std::vector<std::vector<std::uint64_t>> A(D, std::vector<std::uint64_t>(D + 1, 0));
    for (size_t k = 0; k < D; ++k) {
        for (size_t i = 0; i < D; ++i) A[k][i] = pow_mod(eigs[i], k, p);
        A[k][D] = mu[k];
    }
    for (size_t col = 0; col < D; ++col) {
        size_t piv = col;
        while (piv < D && A[piv][col] == 0) ++piv;
        if (piv == D) throw std::logic_error("singular Vandermonde system mod p");
        std::swap(A[piv], A[col]);
        std::uint64_t inv = inv_mod(A[col][col], p);
        for (size_t c = col; c <= D; ++c) A[col][c] = (unsigned __int128)A[col][c] * inv % p;
        for (size_t r = 0; r < D; ++r) {
            if (r == col || A[r][col] == 0) continue;
            std::uint64_t f = A[r][col];
            for (size_t c = col; c <= D; ++c) {
                std::uint64_t sub = (unsigned __int128)f * A[col][c] % p;
                A[r][c] = (A[r][c] + p - sub) % p;
            }
        }
    }
    std::vector<std::uint64_t> m(D);
    for (size_t i = 0; i < D; ++i) m[i] = A[i][D];
    return m;
}

// Cached per-algebra machinery (single-threaded use).
struct EngineCache {
    std::unique_ptr<SplitCasimir> op;
    std::unique_ptr<Blocks> blocks;
    std::unique_ptr<ClassMomentsExact> exact;
    std::unique_ptr<ClassMomentsModp> modp;
};

// One cache entry per (algebra, n). The map itself is guarded; concurrent use
// is safe as long as each (algebra, n) pair is driven from a single thread
// (the CLI partitions verification work by algebra).
EngineCache& engine_cache(const LieAlgebra& alg, int n) {
    static std::map<std::pair<std::string, int>, EngineCache> cache;
    static std::mutex mu;
    std::unique_lock<std::mutex> lk(mu);
    EngineCache& e = cache[{alg.name, n}];
    lk.unlock();
    if (!e.op) {
        e.op = std::make_unique<SplitCasimir>(alg, n);
        e.blocks = std::make_unique<Blocks>(build_blocks(alg, n));
    }
    return e;
}

// All modules of tensor power n (to size kmax once for the cached sweep).
std::vector<std::string> modules_of_power(int n) {
    if (n == 2) return {"sym2", "asym2"};
    if (n == 3) return {"asym3"};
    return {"4", "31", "22", "211", "1111"};
}

int global_kmax(const AlgebraId& id, int n, Provenance prov) {
    size_t mx = 0;
    for (const auto& m : modules_of_power(n))
        mx = std::max(mx, merged_candidates(id, m, prov).eigs.size());
    return static_cast<int>(mx) + 3;
}

}  // namespace

std::vector<Rat> trace_moments(const LieAlgebra& alg, const std::string& module, int kmax) {
    ModuleInfo info = module_info(module);
    EngineCache& e = engine_cache(alg, info.n);
    if (!e.exact || e.exact->kmax < kmax)
        e.exact = std::make_unique<ClassMomentsExact>(class_moments_exact(*e.op, *e.blocks, kmax));
    std::vector<Rat> mu = isotypic_moments(*e.exact, info.n, info.partition);
    mu.resize(kmax + 1);
    // moments of tr(P_R C^k) = dimR * multiplicity-space moments
    for (auto& v : mu) {
        v *= Rat(info.sn_dim);
        v.canonicalize();
    }
    return mu;
}

ModuleSpectrum module_spectrum(const LieAlgebra& alg, const AlgebraId& id,
                               const std::string& module, Provenance prov) {
    ModuleInfo info = module_info(module);
    Candidates cand = merged_candidates(id, module, prov);
    size_t D = cand.eigs.size();
    int kmax = global_kmax(id, info.n, prov);
    EngineCache& eng = engine_cache(alg, info.n);
    std::uint64_t total_dim = eng.op->dim();

    ModuleSpectrum spec;
    spec.algebra = id.name;
    spec.module = info.name;

    Rat mu0 = exact_mu0(info.n, info.partition, alg.dimension);
    if (mu0.get_den() != 1)
        throw std::runtime_error("isotypic trace not divisible by the S_n irrep dimension");

    std::vector<long long> mults(D, 0);
    bool use_exact = info.n <= 3 || total_dim <= 5000;
    if (use_exact) {
        if (!eng.exact || eng.exact->kmax < kmax)
            eng.exact =
                std::make_unique<ClassMomentsExact>(class_moments_exact(*eng.op, *eng.blocks, kmax));
        std::vector<Rat> mu = isotypic_moments(*eng.exact, info.n, info.partition);
        if (mu[0] != mu0) throw std::runtime_error("measured k=0 moment disagrees with d^n counting");
        std::vector<Rat> m = solve_vandermonde_exact(cand.eigs, mu);
        for (size_t i = 0; i < D; ++i) {
            if (m[i].get_den() != 1 || m[i] < 0)
                throw std::runtime_error(
                    "candidate eigenvalue list incomplete or wrong: multiplicity of " +
                    rat_str(cand.eigs[i]) + " solves to " + rat_str(m[i]));
            mults[i] = rat_to_long(m[i]);
        }
        spec.backend = "exact";
    } else {
        if (!eng.modp || eng.modp->kmax < kmax)
            eng.modp =
                std::make_unique<ClassMomentsModp>(class_moments_modp(*eng.op, *eng.blocks, kmax));
        const SnData& s = sn_data(info.n);
        int pi_part = partition_index(s, info.partition);
        std::array<std::vector<std::uint64_t>, 2> sol;
        for (int pi = 0; pi < 2; ++pi) {
            std::uint64_t p = kPrimes[pi];
            std::vector<std::uint64_t> mu(kmax + 1, 0);
            std::uint64_t nfact_inv = inv_mod(static_cast<std::uint64_t>(factorial(info.n)), p);
            for (int k = 0; k <= kmax; ++k) {
                unsigned __int128 acc = 0;
                for (size_t c = 0; c < s.class_size.size(); ++c) {
                    long chi = s.chars[pi_part][c];
                    if (chi == 0) continue;
                    std::uint64_t term =
                        (unsigned __int128)(s.class_size[c]) * eng.modp->Tm[pi][c][k] % p;
                    if (chi > 0)
                        acc += (unsigned __int128)term * chi;
                    else
                        acc += (unsigned __int128)term % p * (p - static_cast<std::uint64_t>(-chi));
                }
                mu[k] = (unsigned __int128)(acc % p) * nfact_inv % p;
            }
            if (mu[0] != rat_mod(mu0, p))
                throw std::runtime_error("measured k=0 moment disagrees with d^n counting");
            std::vector<std::uint64_t> ev(D);
            for (size_t i = 0; i < D; ++i) ev[i] = rat_mod(cand.eigs[i], p);
            sol[pi] = solve_vandermonde_modp(ev, mu, p);
            // residual moments
            for (int k = static_cast<int>(D); k <= kmax; ++k) {
                unsigned __int128 srt = 0;
                for (size_t i = 0; i < D; ++i)
                    srt += (unsigned __int128)sol[pi][i] * pow_mod(ev[i], k, p) % p;
                if (srt % p != mu[k])
                    throw std::runtime_error(
                        "candidate eigenvalue list incomplete or wrong: residual moment k=" +
                        std::to_string(k) + " mismatch (mod p)");
            }
        }
        Rat sum_check(0);
        for (size_t i = 0; i < D; ++i) {
            if (sol[0][i] != sol[1][i])
                throw std::runtime_error("dual-prime disagreement in multiplicity solve");
            if (sol[0][i] > total_dim)
                throw std::runtime_error(
                    "candidate eigenvalue list incomplete or wrong: multiplicity of " +
                    rat_str(cand.eigs[i]) + " lifts outside [0, d^n]");
            mults[i] = static_cast<long long>(sol[0][i]);
            sum_check += Rat(static_cast<long>(mults[i]));
        }
        if (sum_check != mu0)
            throw std::runtime_error("multiplicity total fails the exact k=0 certificate");
        spec.backend = "modp";
    }

    spec.total = 0;
    for (size_t i = 0; i < D; ++i) {
        if (mults[i] == 0) continue;
        spec.entries.push_back({cand.eigs[i], cand.labels[i], mults[i]});
        spec.total += mults[i];
    }
    return spec;
}

std::string spectrum_to_json(const ModuleSpectrum& s) {
    nlohmann::json j;
    j["algebra"] = s.algebra;
    j["module"] = s.module;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : s.entries) {
        nlohmann::json labels = nlohmann::json::array();
        for (const auto& l : e.labels) labels.push_back(l.str());
        entries.push_back({{"eigenvalue", rat_str(e.eigenvalue)}, {"labels", labels}, {"dim", e.dim}});
    }
    j["entries"] = entries;
    j["total"] = s.total;
    j["backend"] = s.backend;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// annihilator check
// ---------------------------------------------------------------------------

AnnihilatorReport annihilator_check(const LieAlgebra& alg, const AlgebraId& id,
                                    const std::string& module, const ModuleSpectrum& spectrum,
                                    int nvec, std::uint64_t seed) {
    ModuleInfo info = module_info(module);
    EngineCache& eng = engine_cache(alg, info.n);
    const SplitCasimir& op = *eng.op;
    AnnihilatorReport rep;
    rep.algebra = id.name;
    rep.module = info.name;
    const Blocks& bl = *eng.blocks;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<std::uint64_t> pos(0, op.dim() - 1);

    // Scaled integer form of prod_j (C - lambda_j): Ms = scl * C with scl
    // clearing the Casimir scale and all eigenvalue denominators.
    mpz_class L(1);
    for (const auto& e : spectrum.entries)
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), e.eigenvalue.get_den().get_mpz_t());
    mpz_class scl = L * op.scale().get_num();
    std::vector<mpz_class> lam;
    for (const auto& e : spectrum.entries) {
        Rat v = e.eigenvalue * Rat(scl);
        v.canonicalize();
        lam.push_back(v.get_num());
    }

    std::map<int, BlockMat> bmats;  // per-block scaled operator, built lazily
    for (int v = 0; v < nvec; ++v) {
        std::map<std::uint64_t, Rat> vec;
        for (int k = 0; k < 3; ++k) {
            long c = coef(rng);
            if (c == 0) c = 1;
            vec[pos(rng)] += Rat(c);
        }
        auto w = op.project(module, vec);
        // clear denominators (projector denominators divide n!)
        mpz_class den(1);
        for (auto& [t, c] : w) {
            c.canonicalize();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        }
        // split support by weight block and run the integer product per block
        std::map<int, std::vector<std::pair<std::uint32_t, mpz_class>>> per_block;
        for (auto& [t, c] : w) {
            Rat ci = c * Rat(den);
            ci.canonicalize();
            if (ci == 0) continue;
            per_block[bl.block_of[t]].push_back({bl.pos_of[t], ci.get_num()});
        }
        bool zero = true;
        for (auto& [b, entries] : per_block) {
            auto it = bmats.find(b);
            if (it == bmats.end()) it = bmats.emplace(b, build_block_matrix(op, bl, b)).first;
            const BlockMat& M = it->second;
            std::vector<mpz_class> x(M.nloc), y(M.nloc);
            for (auto& [p2, c] : entries) x[p2] += c;
            for (const mpz_class& l : lam) {
                for (int r = 0; r < M.nloc; ++r) {
                    mpz_class acc(0);
                    for (std::uint32_t e = M.rowptr[r]; e < M.rowptr[r + 1]; ++e)
                        if (x[M.col[e]] != 0) acc += x[M.col[e]] * static_cast<long>(M.val[e]);
                    y[r] = acc * L - l * x[r];  // (scl*C - scl*lambda) x
                }
                std::swap(x, y);
            }
            for (int r = 0; r < M.nloc && zero; ++r)
                if (x[r] != 0) zero = false;
            if (!zero) break;
        }
        ++rep.vectors_checked;
        if (!zero) {
            rep.ok = false;
            rep.failure = "nonzero annihilator residue for vector seed " + std::to_string(seed) +
                          "#" + std::to_string(v);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

// ---------------------------------------------------------------------------
// dense exact oracle
// ---------------------------------------------------------------------------

ModuleSpectrum dense_spectrum_oracle(const LieAlgebra& alg, const AlgebraId& id,
                                     const std::string& module, Provenance prov) {
    ModuleInfo info = module_info(module);
    EngineCache& eng = engine_cache(alg, info.n);
    const Blocks& bl = *eng.blocks;
    const SplitCasimir& op = *eng.op;
    if (op.dim() > 5000) throw std::invalid_argument("dense oracle restricted to d^n <= 5000");
    const SnData& s = sn_data(info.n);
    int pi_part = partition_index(s, info.partition);
    int np = static_cast<int>(s.perms.size());
    Candidates cand = merged_candidates(id, module, prov);
    size_t D = cand.eigs.size();

    // Work with the integer matrix Ms = scl * C, where scl clears both the
    // Casimir scale and all candidate denominators; eigenvalues become the
    // integers lam[i] = scl * eigs[i].
    mpz_class L(1);
    for (const Rat& ev : cand.eigs)
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), ev.get_den().get_mpz_t());
    mpz_class scl = L * op.scale().get_num();
    std::vector<mpz_class> lam(D);
    for (size_t i = 0; i < D; ++i) {
        Rat v = cand.eigs[i] * Rat(scl);
        v.canonicalize();
        lam[i] = v.get_num();
    }
    // Characteristic product F(y) = prod_i (y - lam[i]) and the quotients
    // quot[i] = F / (y - lam[i]) by synthetic division.
    std::vector<mpz_class> F(D + 1);
    F[0] = 1;
    for (size_t i = 0; i < D; ++i) {
        F[i + 1] = F[i];
        for (size_t k = i; k > 0; --k) F[k] = F[k - 1] - lam[i] * F[k];
        F[0] = -lam[i] * F[0];
    }
    std::vector<std::vector<mpz_class>> quot(D, std::vector<mpz_class>(D));
    for (size_t i = 0; i < D; ++i) {
        mpz_class carry = F[D];
        for (size_t k = D; k > 0; --k) {
            quot[i][k - 1] = carry;
            carry = F[k - 1] + lam[i] * carry;
        }
        if (carry != 0) throw std::logic_error("synthetic division remainder nonzero");
    }

    // Rank bookkeeping mod a 31-bit prime. The ranks are provably exact:
    // each W_i column lies in the lam[i]-eigenspace of the isotypic block
    // (by the exact annihilation certificate below), eigenspaces of distinct
    // eigenvalues are independent, so sum_i rank(W_i) <= dim(isotypic block);
    // mod-p ranks are lower bounds; when the lower bounds already sum to the
    // block dimension, every rank is exact and the eigenspaces exhaust the
    // block.
    constexpr std::uint64_t p = kPrimes[0];
    std::vector<long long> mult(D, 0);

    for (size_t b = 0; b < bl.members.size(); ++b) {
        const auto& mem = bl.members[b];
        int nloc = static_cast<int>(mem.size());
        BlockMat M = build_block_matrix(op, bl, static_cast<int>(b));
        // Isotypic basis Q, built orbit by orbit: columns of P_R restricted to
        // each S_n orbit, column-reduced inside the orbit (denominators divide
        // n!, cleared per column).
        std::vector<std::vector<mpz_class>> Q;
        {
            std::vector<bool> seen(nloc, false);
            Rat pref = Rat(info.sn_dim, factorial(info.n));
            pref.canonicalize();
            for (int j = 0; j < nloc; ++j) {
                if (seen[j]) continue;
                std::vector<std::uint32_t> orbit;
                for (int q = 0; q < np; ++q) {
                    std::uint32_t pj = bl.pos_of[permute_index(mem[j], s.perms[q], bl.d, bl.n)];
                    if (!seen[pj]) { seen[pj] = true; orbit.push_back(pj); }
                }
                std::vector<std::vector<Rat>> accepted;  // restricted to orbit rows
                std::vector<int> pivot_rows;
                for (std::uint32_t t : orbit) {
                    std::map<std::uint32_t, Rat> colmap;  // column P_R e_t
                    for (int q = 0; q < np; ++q) {
                        long chi = s.chars[pi_part][s.class_of[q]];
                        if (chi == 0) continue;
                        std::uint32_t u = bl.pos_of[permute_index(mem[t], s.perms[q], bl.d, bl.n)];
                        colmap[u] += pref * Rat(chi);
                    }
                    std::vector<Rat> red(orbit.size(), Rat(0));
                    for (size_t oi = 0; oi < orbit.size(); ++oi) {
                        auto it = colmap.find(orbit[oi]);
                        if (it != colmap.end()) { red[oi] = it->second; red[oi].canonicalize(); }
                    }
                    for (size_t pr = 0; pr < pivot_rows.size(); ++pr) {
                        if (red[pivot_rows[pr]] == 0) continue;
                        Rat f = red[pivot_rows[pr]] / accepted[pr][pivot_rows[pr]];
                        f.canonicalize();
                        for (size_t oi = 0; oi < orbit.size(); ++oi) {
                            red[oi] -= f * accepted[pr][oi];
                            red[oi].canonicalize();
                        }
                    }
                    int prow = -1;
                    for (size_t oi = 0; oi < orbit.size(); ++oi)
                        if (red[oi] != 0) { prow = static_cast<int>(oi); break; }
                    if (prow < 0) continue;
                    pivot_rows.push_back(prow);
                    accepted.push_back(red);
                    mpz_class den(1);
                    for (const Rat& v : red)
                        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
                    std::vector<mpz_class> qi(nloc);
                    for (size_t oi = 0; oi < orbit.size(); ++oi) {
                        Rat v = red[oi] * Rat(den);
                        v.canonicalize();
                        qi[orbit[oi]] = v.get_num();
                    }
                    Q.push_back(std::move(qi));
                }
            }
        }
        int cR = static_cast<int>(Q.size());
        if (cR == 0) continue;

        // Incremental mod-p echelon bases per eigenvalue: (pivot row, vector
        // normalized to pivot value 1).
        std::vector<std::vector<std::pair<int, std::vector<std::uint64_t>>>> ech(D);
        std::vector<mpz_class> kry(static_cast<size_t>(D + 1) * nloc);
        std::vector<std::uint64_t> w(nloc);
        for (const auto& q : Q) {
            // integer Krylov K_k = Ms^k q, k = 0..D
            for (int r = 0; r < nloc; ++r) kry[r] = q[r];
            for (size_t k = 1; k <= D; ++k) {
                const mpz_class* prev = &kry[(k - 1) * nloc];
                mpz_class* cur = &kry[k * nloc];
                for (int r = 0; r < nloc; ++r) {
                    mpz_class acc(0);
                    for (std::uint32_t e = M.rowptr[r]; e < M.rowptr[r + 1]; ++e)
                        if (prev[M.col[e]] != 0)
                            acc += prev[M.col[e]] * static_cast<long>(M.val[e]);
                    cur[r] = acc * L;
                }
            }
            // Exact annihilation certificate: F(Ms) q = 0 proves the minimal
            // polynomial on this column splits over the candidate set.
            for (int r = 0; r < nloc; ++r) {
                mpz_class acc(0);
                for (size_t k = 0; k <= D; ++k)
                    if (kry[k * nloc + r] != 0) acc += F[k] * kry[k * nloc + r];
                if (acc != 0)
                    throw std::runtime_error(
                        "dense oracle: candidate set does not annihilate the block");
            }
            // Spectral components quot[i](Ms) q, reduced mod p and inserted
            // into the per-eigenvalue echelon bases.
            for (size_t i = 0; i < D; ++i) {
                for (int r = 0; r < nloc; ++r) {
                    mpz_class acc(0);
                    for (size_t k = 0; k < D; ++k)
                        if (kry[k * nloc + r] != 0) acc += quot[i][k] * kry[k * nloc + r];
                    w[r] = mpz_fdiv_ui(acc.get_mpz_t(), static_cast<unsigned long>(p));
                }
                for (const auto& [prow, bvec] : ech[i]) {
                    std::uint64_t f = w[prow];
                    if (f == 0) continue;
                    for (int r = 0; r < nloc; ++r) {
                        std::uint64_t sub = (unsigned __int128)f * bvec[r] % p;
                        w[r] = (w[r] + p - sub) % p;
                    }
                }
                int prow = -1;
                for (int r = 0; r < nloc; ++r)
                    if (w[r] != 0) { prow = r; break; }
                if (prow < 0) continue;
                std::uint64_t inv = inv_mod(w[prow], p);
                std::vector<std::uint64_t> bvec(nloc);
                for (int r = 0; r < nloc; ++r) bvec[r] = (unsigned __int128)w[r] * inv % p;
                ech[i].push_back({prow, std::move(bvec)});
            }
        }
        long long block_sum = 0;
        for (size_t i = 0; i < D; ++i) {
            mult[i] += static_cast<long long>(ech[i].size());
            block_sum += static_cast<long long>(ech[i].size());
        }
        if (block_sum != cR)
            throw std::runtime_error("dense oracle: eigenspaces do not exhaust the isotypic block");
    }

    ModuleSpectrum spec;
    spec.algebra = id.name;
    spec.module = info.name;
    spec.backend = "dense-oracle";
    spec.total = 0;
    for (size_t i = 0; i < D; ++i) {
        if (mult[i] == 0) continue;
        if (mult[i] % info.sn_dim != 0)
            throw std::runtime_error("dense oracle: isotypic dimension not divisible by dim R");
        spec.entries.push_back({cand.eigs[i], cand.labels[i], mult[i] / info.sn_dim});
        spec.total += mult[i] / info.sn_dim;
    }
    return spec;
}

// ---------------------------------------------------------------------------
// structural self-checks
// ---------------------------------------------------------------------------

namespace {

std::map<std::uint64_t, Rat> random_sparse_vector(std::uint64_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<std::uint64_t> pos(0, dim - 1);
    std::map<std::uint64_t, Rat> v;
    for (int k = 0; k < 4; ++k) {
        long c = coef(rng);
        if (c == 0) c = 2;
        v[pos(rng)] += Rat(c);
    }
    return v;
}

bool maps_equal(const std::map<std::uint64_t, Rat>& a, const std::map<std::uint64_t, Rat>& b) {
    std::map<std::uint64_t, Rat> diff = a;
    for (const auto& [t, c] : b) diff[t] -= c;
    for (auto& [t, c] : diff) {
        c.canonicalize();
        if (c != 0) return false;
    }
    return true;
}

}  // namespace

bool casimir_symmetry_check(const LieAlgebra& alg, int n, int nvec, std::uint64_t seed) {
    SplitCasimir op(alg, n);
    const SnData& s = sn_data(n);
    std::mt19937_64 rng(seed);
    int d = alg.dimension;
    for (int v = 0; v < nvec; ++v) {
        auto vec = random_sparse_vector(op.dim(), rng);
        auto cv = op.apply(vec);
        for (const auto& sigma : s.perms)
            if (!maps_equal(op.permute(sigma, cv), op.apply(op.permute(sigma, vec)))) return false;
        // diagonal action commutation for a few basis elements
        auto diag = [&](int a, const std::map<std::uint64_t, Rat>& w) {
            std::map<std::uint64_t, Rat> out;
            std::uint64_t pw[4];
            pw[n - 1] = 1;
            for (int sl = n - 2; sl >= 0; --sl) pw[sl] = pw[sl + 1] * d;
            int x[4];
            for (const auto& [t, c] : w) {
                decode(t, d, n, x);
                for (int sl = 0; sl < n; ++sl)
                    for (const auto& [y, f] : alg.bracket(a, x[sl]))
                        out[t + (std::uint64_t)(y - x[sl]) * pw[sl]] += c * f;
            }
            return out;
        };
        for (int a : {0, d / 2, d - 1})
            if (!maps_equal(op.apply(diag(a, vec)), diag(a, op.apply(vec)))) return false;
    }
    return true;
}

bool projector_algebra_check(const LieAlgebra& alg, int n, int nvec, std::uint64_t seed) {
    SplitCasimir op(alg, n);
    const SnData& s = sn_data(n);
    std::mt19937_64 rng(seed);
    int d = alg.dimension;
    // partition-level projector (covers S_n irreps without a named module,
    // e.g. the standard and trivial partitions at n = 3)
    auto project_part = [&](int pi, const std::map<std::uint64_t, Rat>& v) {
        long dimR = 0;
        for (size_t c = 0; c < s.class_size.size(); ++c)
            if (s.class_cycles[c] == n) dimR = s.chars[pi][c];
        Rat pref(dimR, factorial(n));
        pref.canonicalize();
        std::map<std::uint64_t, Rat> out;
        for (size_t q = 0; q < s.perms.size(); ++q) {
            long chi = s.chars[pi][s.class_of[q]];
            if (chi == 0) continue;
            for (const auto& [t, c] : v)
                out[permute_index(t, s.perms[q], d, n)] += pref * Rat(chi) * c;
        }
        for (auto it = out.begin(); it != out.end();) {
            it->second.canonicalize();
            if (it->second == 0) it = out.erase(it);
            else ++it;
        }
        return out;
    };
    int nparts = static_cast<int>(s.partitions.size());
    for (int v = 0; v < nvec; ++v) {
        auto vec = random_sparse_vector(op.dim(), rng);
        std::map<std::uint64_t, Rat> sum;
        for (int pi = 0; pi < nparts; ++pi) {
            auto p = project_part(pi, vec);
            if (!maps_equal(project_part(pi, p), p)) return false;  // idempotent
            for (int pj = 0; pj < nparts; ++pj) {
                if (pj == pi) continue;
                if (!project_part(pj, p).empty()) return false;  // orthogonal
            }
            for (const auto& [t, c] : p) sum[t] += c;
        }
        if (!maps_equal(sum, vec)) return false;  // complete
    }
    return true;
}

}  // namespace ug4
