#include "ug4/chevalley.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ug4 {

namespace {

// ---------------------------------------------------------------------------
// Cartan matrices, convention A[i][j] = <alpha_j, alpha_i^vee>
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
    int r = rank;
    std::vector<std::vector<int>> A(r, std::vector<int>(r, 0));
    auto chain = [&A](int i, int j) { A[i][j] = A[j][i] = -1; };
    for (int i = 0; i < r; ++i) A[i][i] = 2;
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
            break;
        case 'B':  // alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
            if (r < 2) throw std::invalid_argument("B requires rank >= 2");
            for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
            A[r - 1][r - 2] = -2;
            break;
        case 'C':  // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
            if (r < 2) throw std::invalid_argument("C requires rank >= 2");
            for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
            A[r - 2][r - 1] = -2;
            break;
        case 'D':
            if (r < 3) throw std::invalid_argument("D requires rank >= 3");
            for (int i = 0; i + 1 < r - 1; ++i) chain(i, i + 1);
            chain(r - 3, r - 1);
            break;
        case 'E':
            if (r < 6 || r > 8) throw std::invalid_argument("E requires rank 6..8");
            // Bourbaki numbering: node 2 attached to node 4 of the chain 1-3-4-5-..-r.
            chain(0, 2);
            for (int i = 2; i + 1 < r; ++i) chain(i, i + 1);
            chain(1, 3);
            break;
        case 'F':
            if (r != 4) throw std::invalid_argument("F requires rank 4");
            chain(0, 1);
            chain(2, 3);
            A[1][2] = -2;  // alpha_3 short: <alpha_3, alpha_2^vee> = -2
            A[2][1] = -1;
            break;
        case 'G':
            if (r != 2) throw std::invalid_argument("G requires rank 2");
            A[0][1] = -3;  // alpha_2 short? our convention: <alpha_2, alpha_1^vee> = -3
            A[1][0] = -1;
            break;
        default:
            throw std::invalid_argument(std::string("unsupported type ") + type);
    }
    return A;
}

std::pair<char, int> parse_type(const std::string& s) {
    std::string t = s;
    static const std::map<std::string, std::string> names{
        {"g2", "G2"}, {"f4", "F4"}, {"e6", "E6"}, {"e7", "E7"}, {"e8", "E8"}};
    if (auto it = names.find(t); it != names.end()) t = it->second;
    if (t.size() >= 3 && (t.substr(0, 2) == "sl" || t.substr(0, 2) == "so" || t.substr(0, 2) == "sp")) {
        long N = std::stol(t.substr(2));
        if (t[1] == 'l') {
            if (N < 2) throw std::invalid_argument("sl requires N >= 2");
            return {'A', static_cast<int>(N - 1)};
        }
        if (t[1] == 'o') {
            if (N < 5) throw std::invalid_argument("so requires N >= 5");
            if (N % 2) return {'B', static_cast<int>((N - 1) / 2)};
            return {'D', static_cast<int>(N / 2)};
        }
        if (N < 4 || N % 2) throw std::invalid_argument("sp requires even N >= 4");
        return {'C', static_cast<int>(N / 2)};
    }
    if (t.size() < 2 || t[0] < 'A' || t[0] > 'G')
        throw std::invalid_argument("unsupported algebra type: " + s);
    int r = std::stoi(t.substr(1));
    if (r < 1) throw std::invalid_argument("bad rank in type: " + s);
    return {t[0], r};
}

// ---------------------------------------------------------------------------
// root system
// ---------------------------------------------------------------------------

struct RootSystem {
    int rank;
    std::vector<std::vector<int>> A;          // Cartan matrix
    std::vector<Rat> d;                       // symmetrizers: (alpha_i, alpha_j) = d_i A[i][j]
    std::vector<std::vector<int>> pos;        // positive roots, sorted by (height, lex)
    std::map<std::vector<int>, int> index;    // coords -> position in pos

    int height(const std::vector<int>& r) const {
        int h = 0;
        for (int c : r) h += c;
        return h;
    }
    // <beta, alpha_i^vee>
    int pairing(const std::vector<int>& beta, int i) const {
        int v = 0;
        for (int j = 0; j < rank; ++j) v += beta[j] * A[i][j];
        return v;
    }
    Rat inner(const std::vector<int>& x, const std::vector<int>& y) const {
        Rat v(0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) v += d[i] * Rat(A[i][j]) * Rat(x[i] * y[j]);
        v.canonicalize();
        return v;
    }
    bool is_pos_root(const std::vector<int>& r) const { return index.count(r) > 0; }
};

RootSystem build_roots(char type, int rank) {
    RootSystem rs;
    rs.rank = rank;
    rs.A = cartan_matrix(type, rank);
    // Symmetrize the Cartan matrix: d_i A[i][j] = d_j A[j][i], d_1 = 1.
    rs.d.assign(rank, Rat(0));
    rs.d[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (rs.A[i][j] != 0 && rs.d[i] != 0 && rs.d[j] == 0) {
                    rs.d[j] = rs.d[i] * Rat(rs.A[i][j]) / Rat(rs.A[j][i]);
                    rs.d[j].canonicalize();
                    changed = true;
                }
    }
    for (const Rat& v : rs.d)
        if (v == 0) throw std::logic_error("disconnected Cartan matrix");

    // Enumerate positive roots by height using root strings.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        known.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < rank; ++i) {
                // p = length of the descending alpha_i string through beta
                int p = 0;
                std::vector<int> down = beta;
                for (;;) {
                    down[i] -= 1;
                    bool root = down[i] >= 0 ? known.count(down) > 0
                                             : false;  // mixed-sign vectors are never roots
                    if (!root) {
                        // beta - (p+1) alpha_i = 0 is not a root either, but if beta
                        // itself is alpha_i the string below is empty; handled by loop.
                        break;
                    }
                    ++p;
                }
                if (p - rs.pairing(beta, i) >= 1) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    rs.pos.assign(known.begin(), known.end());
    std::sort(rs.pos.begin(), rs.pos.end(), [&rs](const auto& x, const auto& y) {
        int hx = rs.height(x), hy = rs.height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    for (size_t i = 0; i < rs.pos.size(); ++i) rs.index[rs.pos[i]] = static_cast<int>(i);
    return rs;
}

// ---------------------------------------------------------------------------
// structure constants N_{mu,nu} (Chevalley, extraspecial-pair signs)
// ---------------------------------------------------------------------------

// Signed roots: +(i+1) for positive root i, -(i+1) for its negative.
struct NTable {
    const RootSystem& rs;
    // N for ordered pairs of positive roots (xi, eta) with xi + eta a root.
    std::map<std::pair<int, int>, Rat> pospair;

    explicit NTable(const RootSystem& r) : rs(r) { fill(); }

    std::vector<int> coords(int signed_root) const {
        std::vector<int> v = rs.pos[std::abs(signed_root) - 1];
        if (signed_root < 0)
            for (int& x : v) x = -x;
        return v;
    }
    static std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> r = x;
        for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
        return r;
    }
    // Signed-root index of a coordinate vector, 0 if not a root.
    int root_id(const std::vector<int>& v) const {
        auto it = rs.index.find(v);
        if (it != rs.index.end()) return it->second + 1;
        std::vector<int> neg = v;
        for (int& x : neg) x = -x;
        it = rs.index.find(neg);
        if (it != rs.index.end()) return -(it->second + 1);
        return 0;
    }

    // Length of the descending alpha-string through beta: max p with
    // beta - p*alpha a root.
    int string_down(int beta_id, int alpha_id) const {
        std::vector<int> b = coords(beta_id), a = coords(alpha_id);
        int p = 0;
        for (;;) {
            for (size_t i = 0; i < b.size(); ++i) b[i] -= a[i];
            if (root_id(b) == 0) break;
            ++p;
        }
        return p;
    }

    // N_{mu,nu} for signed roots with mu+nu a root.
    Rat N(int mu, int nu) const {
        if (mu > 0 && nu > 0) {
            if (mu > nu) return -N(nu, mu);
            auto it = pospair.find({mu, nu});
            if (it == pospair.end()) throw std::logic_error("missing positive N entry");
            return it->second;
        }
        if (mu < 0 && nu < 0) return -N(-mu, -nu);
        if (mu < 0) return -N(nu, mu);
        // mu > 0, nu < 0
        std::vector<int> sum = add(coords(mu), coords(nu));
        int delta = root_id(sum);
        if (delta == 0) throw std::logic_error("N of non-root sum");
        Rat nmu = rs.inner(coords(mu), coords(mu));
        Rat nnu = rs.inner(coords(nu), coords(nu));
        std::vector<int> dd = coords(delta);
        Rat ndelta = rs.inner(dd, dd);
        if (delta > 0) {
            // triple (mu, nu, -delta): N_{mu,nu} = -(delta,delta)/(mu,mu) N_{-nu,delta}
            Rat r = -(ndelta / nmu) * N(-nu, delta);
            r.canonicalize();
            return r;
        }
        // delta negative: reduce via N_{mu,nu} = -(delta,delta)/(nu,nu) N_{mu,-delta}
        Rat r = -(ndelta / nnu) * N(mu, -delta);
        r.canonicalize();
        return r;
    }

    void fill() {
        // Positive roots are sorted by height, so iterating in order guarantees
        // every constant referenced below is already available.
        for (int gi = 0; gi < static_cast<int>(rs.pos.size()); ++gi) {
            const std::vector<int>& gamma = rs.pos[gi];
            if (rs.height(gamma) < 2) continue;
            // Collect special pairs (xi < eta according to table order).
            std::vector<std::pair<int, int>> pairs;
            for (int xi = 0; xi < static_cast<int>(rs.pos.size()); ++xi) {
                std::vector<int> eta = gamma;
                bool ok = true;
                for (int k = 0; k < rs.rank; ++k) {
                    eta[k] -= rs.pos[xi][k];
                    if (eta[k] < 0) ok = false;
                }
                if (!ok) continue;
                auto it = rs.index.find(eta);
                if (it == rs.index.end()) continue;
                if (xi < it->second) pairs.push_back({xi + 1, it->second + 1});
            }
            if (pairs.empty()) throw std::logic_error("non-simple root with no special pair");
            // Extraspecial pair: minimal xi in table order. pairs is produced in
            // increasing xi, so it is the first one.
            auto [a, b] = pairs.front();
            int p = string_down(b, a);
            pospair[{a, b}] = Rat(p + 1);
            for (size_t k = 1; k < pairs.size(); ++k) {
                auto [xi, eta] = pairs[k];
                // Jacobi identity with e_{-a}:
                //   N_{xi,eta} N_{-a,gamma} = N_{-a,xi} N_{xi-a,eta} + N_{-a,eta} N_{xi,eta-a}
                std::vector<int> ga = rs.pos[gi];
                Rat lhs_factor;  // N_{-a, gamma}
                {
                    std::vector<int> bb = rs.pos[b - 1];
                    Rat nb = rs.inner(bb, bb);
                    Rat ng = rs.inner(ga, ga);
                    lhs_factor = (nb / ng) * pospair[{a, b}];
                    lhs_factor.canonicalize();
                }
                Rat rhs(0);
                std::vector<int> xa = add(coords(xi), coords(-a));
                if (int rid = root_id(xa); rid != 0) rhs += N(-a, xi) * N(rid, eta);
                std::vector<int> ea = add(coords(eta), coords(-a));
                if (int rid = root_id(ea); rid != 0) rhs += N(-a, eta) * N(xi, rid);
                Rat val = rhs / lhs_factor;
                val.canonicalize();
                // Magnitude must be the root-string value p+1.
                int ps = string_down(eta, xi);
                if (val != Rat(ps + 1) && val != Rat(-(ps + 1)))
                    throw std::logic_error("structure-constant magnitude mismatch");
                pospair[{xi, eta}] = val;
            }
        }
    }
};

void sort_sparse(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

const SparseVec& LieAlgebra::bracket(int a, int b) const {
    return table[static_cast<size_t>(a) * dimension + b];
}

std::vector<std::vector<Rat>> LieAlgebra::ad_matrix(int a) const {
    std::vector<std::vector<Rat>> m(dimension, std::vector<Rat>(dimension, Rat(0)));
    for (int b = 0; b < dimension; ++b)
        for (const auto& [c, v] : bracket(a, b)) m[c][b] = v;
    return m;
}

LieAlgebra build_algebra(const std::string& type) {
    auto [t, rank] = parse_type(type);
    RootSystem rs = build_roots(t, rank);
    NTable nt(rs);

    LieAlgebra alg;
    alg.type = t;
    alg.rank = rank;
    alg.name = std::string(1, t) + std::to_string(rank);
    int m = static_cast<int>(rs.pos.size());
    alg.dimension = rank + 2 * m;
    alg.pos_roots = rs.pos;
    alg.cartan = rs.A;
    for (int i = 0; i < rank; ++i) alg.labels.push_back("h" + std::to_string(i + 1));
    for (int i = 0; i < m; ++i) alg.labels.push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < m; ++i) alg.labels.push_back("f" + std::to_string(i + 1));

    int d = alg.dimension;
    alg.table.assign(static_cast<size_t>(d) * d, {});
    auto set = [&alg, d](int a, int b, SparseVec v) {
        sort_sparse(v);
        SparseVec neg = v;
        for (auto& [c, x] : neg) x = -x;
        alg.table[static_cast<size_t>(a) * d + b] = std::move(v);
        alg.table[static_cast<size_t>(b) * d + a] = std::move(neg);
    };
    auto E = [rank](int i) { return rank + i; };
    auto F = [rank, m](int i) { return rank + m + i; };

    // [h_i, e/f_beta]
    for (int i = 0; i < rank; ++i)
        for (int b = 0; b < m; ++b) {
            int pair = rs.pairing(rs.pos[b], i);
            if (pair != 0) {
                set(i, E(b), {{E(b), Rat(pair)}});
                set(i, F(b), {{F(b), Rat(-pair)}});
            }
        }
    // [e_beta, f_beta] = h_beta = sum_j beta_j (alpha_j,alpha_j)/(beta,beta) h_j
    for (int b = 0; b < m; ++b) {
        Rat nb = rs.inner(rs.pos[b], rs.pos[b]);
        SparseVec h;
        for (int j = 0; j < rank; ++j)
            if (rs.pos[b][j] != 0) {
                Rat cj = Rat(rs.pos[b][j]) * Rat(2) * rs.d[j] / nb;
                cj.canonicalize();
                if (cj.get_den() != 1) throw std::logic_error("non-integral coroot coefficient");
                h.push_back({j, cj});
            }
        set(E(b), F(b), std::move(h));
    }
    // [e_mu, e_nu] for signed root pairs with mu+nu a root
    auto basis_of = [&](int signed_root) {
        return signed_root > 0 ? E(signed_root - 1) : F(-signed_root - 1);
    };
    for (int i = 1; i <= m; ++i)
        for (int s : {i, -i})
            for (int j = 1; j <= m; ++j)
                for (int u : {j, -j}) {
                    int bi = basis_of(s), bj = basis_of(u);
                    if (bi >= bj) continue;  // fill each unordered pair once
                    if (s == -u) continue;   // handled above
                    std::vector<int> sum = nt.add(nt.coords(s), nt.coords(u));
                    int rid = nt.root_id(sum);
                    if (rid == 0) continue;
                    Rat n = nt.N(s, u);
                    if (n.get_den() != 1) throw std::logic_error("non-integral structure constant");
                    set(bi, bj, {{basis_of(rid), n}});
                }

    // Sanity: for B/C the short/long root counts distinguish so(2r+1) from sp(2r).
    if (t == 'B' || t == 'C') {
        int short_count = 0, long_count = 0;
        Rat maxn(0);
        for (const auto& r : rs.pos) maxn = std::max(maxn, rs.inner(r, r));
        for (const auto& r : rs.pos) (rs.inner(r, r) == maxn ? long_count : short_count)++;
        if (t == 'B' && short_count != rank) throw std::logic_error("B-type root counts wrong");
        if (t == 'C' && long_count != rank) throw std::logic_error("C-type root counts wrong");
    }

    // Killing form by ad-traces: kappa_ab = sum_x coeff_x([a, [b, x]]).
    alg.killing.assign(d, std::vector<Rat>(d, Rat(0)));
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            Rat k(0);
            for (int x = 0; x < d; ++x)
                for (const auto& [y, v] : alg.bracket(b, x))
                    for (const auto& [z, w] : alg.bracket(a, y))
                        if (z == x) k += v * w;
            k.canonicalize();
            alg.killing[a][b] = k;
            alg.killing[b][a] = k;
        }
    // Exact inverse by Gauss-Jordan.
    {
        std::vector<std::vector<Rat>> M = alg.killing;
        std::vector<std::vector<Rat>> inv(d, std::vector<Rat>(d, Rat(0)));
        for (int i = 0; i < d; ++i) inv[i][i] = 1;
        for (int col = 0; col < d; ++col) {
            int piv = -1;
            for (int r = col; r < d; ++r)
                if (M[r][col] != 0) { piv = r; break; }
            if (piv < 0) throw std::logic_error("Killing form is degenerate");
            std::swap(M[piv], M[col]);
            std::swap(inv[piv], inv[col]);
            Rat scale = Rat(1) / M[col][col];
            scale.canonicalize();
            for (int c = 0; c < d; ++c) { M[col][c] *= scale; inv[col][c] *= scale; }
            for (int r = 0; r < d; ++r) {
                if (r == col || M[r][col] == 0) continue;
                Rat f = M[r][col];
                for (int c = 0; c < d; ++c) {
                    M[r][c] -= f * M[col][c];
                    inv[r][c] -= f * inv[col][c];
                }
            }
        }
        for (auto& row : inv)
            for (auto& v : row) v.canonicalize();
        alg.killing_inv = std::move(inv);
    }
    return alg;
}

long LieAlgebra::jacobi_violations() const {
    int d = dimension;
    auto brk = [this](const SparseVec& v, int z) {
        // [v, X_z] as a dense accumulation
        std::map<int, Rat> acc;
        for (const auto& [y, cy] : v)
            for (const auto& [c, w] : bracket(y, z)) acc[c] += cy * w;
        return acc;
    };
    auto check = [&](int x, int y, int z) {
        std::map<int, Rat> acc;
        for (const auto& [c, w] : bracket(x, y))
            for (const auto& [e, u] : bracket(c, z)) acc[e] += w * u;
        for (const auto& [c, w] : bracket(y, z))
            for (const auto& [e, u] : bracket(c, x)) acc[e] += w * u;
        for (const auto& [c, w] : bracket(z, x))
            for (const auto& [e, u] : bracket(c, y)) acc[e] += w * u;
        for (auto& [e, v] : acc) {
            v.canonicalize();
            if (v != 0) return false;
        }
        return true;
    };
    (void)brk;
    long bad = 0;
    if (d <= 60) {
        for (int x = 0; x < d; ++x)
            for (int y = x + 1; y < d; ++y)
                for (int z = y + 1; z < d; ++z)
                    if (!check(x, y, z)) ++bad;
    } else {
        std::mt19937_64 rng(20240817);
        std::uniform_int_distribution<int> pick(0, d - 1);
        for (int k = 0; k < 20000; ++k)
            if (!check(pick(rng), pick(rng), pick(rng))) ++bad;
    }
    return bad;
}

long LieAlgebra::killing_invariance_violations() const {
    int d = dimension;
    long bad = 0;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = y; z < d; ++z) {
                Rat s(0);
                for (const auto& [c, w] : bracket(x, y)) s += w * killing[c][z];
                for (const auto& [c, w] : bracket(x, z)) s += w * killing[y][c];
                s.canonicalize();
                if (s != 0) ++bad;
            }
    return bad;
}

Rat LieAlgebra::quadratic_casimir_check() const {
    int d = dimension;
    // M = sum_a ad(X_a) * D_a with D_a = sum_b g^{ab} ad(X_b).
    std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d, Rat(0)));
    for (int a = 0; a < d; ++a) {
        // D_a column-sparse access: D_a[y][x] = sum_b g^{ab} f_{bx}^y
        std::vector<std::vector<Rat>> D(d, std::vector<Rat>(d, Rat(0)));
        for (int b = 0; b < d; ++b) {
            const Rat& g = killing_inv[a][b];
            if (g == 0) continue;
            for (int x = 0; x < d; ++x)
                for (const auto& [y, v] : bracket(b, x)) D[y][x] += g * v;
        }
        // M += ad(X_a) * D: (ad_a)[z][y] sparse over brackets
        for (int y = 0; y < d; ++y)
            for (const auto& [z, v] : bracket(a, y))
                for (int x = 0; x < d; ++x)
                    if (D[y][x] != 0) M[z][x] += v * D[y][x];
    }
    Rat scalar = M[0][0];
    scalar.canonicalize();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            M[i][j].canonicalize();
            if (M[i][j] != (i == j ? scalar : Rat(0)))
                throw std::runtime_error("invariance violated");
        }
    return scalar;
}

std::string LieAlgebra::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["dimension"] = dimension;
    j["rank"] = rank;
    j["basis"] = labels;
    nlohmann::json sc = nlohmann::json::array();
    for (int a = 0; a < dimension; ++a)
        for (int b = a + 1; b < dimension; ++b)
            for (const auto& [c, v] : bracket(a, b))
                sc.push_back({a, b, c, rat_str(v)});
    j["structure_constants"] = sc;
    nlohmann::json kf = nlohmann::json::array();
    for (int a = 0; a < dimension; ++a)
        for (int b = a; b < dimension; ++b)
            if (killing[a][b] != 0) kf.push_back({a, b, rat_str(killing[a][b])});
    j["killing" "_form"] = kf;
    return j.dump(2);
}

std::string type_of_algebra(const AlgebraId& id) {
    switch (id.family) {
        case Family::sl: return "A" + std::to_string(id.N - 1);
        case Family::so:
            return id.N % 2 ? "B" + std::to_string((id.N - 1) / 2) : "D" + std::to_string(id.N / 2);
        case Family::sp: return "C" + std::to_string(id.N / 2);
        case Family::exc: {
            if (id.name == "g2") return "G2";
            if (id.name == "f4") return "F4";
            if (id.name == "e6") return "E6";
            if (id.name == "e7") return "E7";
            return "E8";
        }
    }
    throw std::logic_error("unreachable family");
}

Rat defining_rep_check_slN(const LieAlgebra& alg) {
    if (alg.type != 'A') throw std::invalid_argument("defining-rep oracle implemented for type A");
    int r = alg.rank, n = r + 1, d = alg.dimension;
    int m = (d - r) / 2;
    using Mat = std::vector<std::vector<Rat>>;
    auto zero = [n]() { return Mat(n, std::vector<Rat>(n, Rat(0))); };
    auto mul = [n](const Mat& a, const Mat& b) {
        Mat c(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (a[i][k] != 0)
                    for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    auto comm = [&](const Mat& a, const Mat& b) {
        Mat ab = mul(a, b), ba = mul(b, a);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ab[i][j] -= ba[i][j];
                ab[i][j].canonicalize();
            }
        return ab;
    };

    std::vector<Mat> rep(d, zero());
    // Simple generators: h_i = E_ii - E_{i+1,i+1}, e_i = E_{i,i+1}, f_i = E_{i+1,i}.
    // Simple root alpha_i sits at the table position of its unit coordinate
    // vector (roots are ordered by height then lex, not by simple index).
    std::vector<int> spos(r, -1);
    for (int i = 0; i < r; ++i)
        for (int b = 0; b < m; ++b) {
            const auto& rt = alg.pos_roots[b];
            bool unit = rt[i] == 1;
            for (int k = 0; k < r && unit; ++k)
                if (k != i && rt[k] != 0) unit = false;
            if (unit) { spos[i] = b; break; }
        }
    for (int i = 0; i < r; ++i) {
        rep[i][i][i] = 1;
        rep[i][i + 1][i + 1] = -1;
        rep[r + spos[i]][i][i + 1] = 1;
        rep[r + m + spos[i]][i + 1][i] = 1;
    }
    // Non-simple root vectors via brackets of lower-height ones: for the first
    // decomposition gamma = alpha_s + beta found, e_gamma = [e_s, e_beta]/N.
    for (int g = r; g < m; ++g) {
        const std::vector<int>& gamma = alg.pos_roots[g];
        bool done = false;
        for (int s = 0; s < r && !done; ++s) {
            if (gamma[s] == 0) continue;
            std::vector<int> beta = gamma;
            beta[s] -= 1;
            int se = r + spos[s], sf = r + m + spos[s];
            for (int b = 0; b < m; ++b) {
                if (alg.pos_roots[b] != beta) continue;
                // find N from the stored bracket [e_s, e_b]
                for (const auto& [c, v] : alg.bracket(se, r + b))
                    if (c == r + g) {
                        Mat es = rep[se], eb = rep[r + b];
                        Mat eg = comm(es, eb);
                        Rat inv = Rat(1) / v;
                        inv.canonicalize();
                        for (auto& row : eg)
                            for (auto& x : row) { x *= inv; x.canonicalize(); }
                        rep[r + g] = eg;
                        Mat fs = rep[sf], fb = rep[r + m + b];
                        // stored bracket [f_s, f_b] gives the exact coefficient:
                        for (const auto& [c2, v2] : alg.bracket(sf, r + m + b))
                            if (c2 == r + m + g) {
                                Mat fg2 = comm(fs, fb);
                                Rat inv2 = Rat(1) / v2;
                                inv2.canonicalize();
                                for (auto& row : fg2)
                                    for (auto& x : row) { x *= inv2; x.canonicalize(); }
                                rep[r + m + g] = fg2;
                            }
                        (void)fb;
                        done = true;
                        break;
                    }
                if (done) break;
            }
        }
        if (!done) throw std::logic_error("could not build defining rep vector");
    }
    // Homomorphism check on all basis pairs.
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            Mat lhs = comm(rep[a], rep[b]);
            Mat rhs = zero();
            for (const auto& [c, v] : alg.bracket(a, b))
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) rhs[i][j] += v * rep[c][i][j];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    rhs[i][j].canonicalize();
                    if (lhs[i][j] != rhs[i][j])
                        throw std::runtime_error("defining rep is not a homomorphism");
                }
        }
    // Trace-form proportionality: kappa(a,b) = lambda * tr(rep_a rep_b).
    auto trform = [&](int a, int b) {
        Mat p = mul(rep[a], rep[b]);
        Rat t(0);
        for (int i = 0; i < n; ++i) t += p[i][i];
        t.canonicalize();
        return t;
    };
    Rat lambda(0);
    bool have = false;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Rat t = trform(a, b);
            const Rat& k = alg.killing[a][b];
            if (t == 0) {
                if (k != 0) throw std::runtime_error("trace form not proportional to Killing form");
                continue;
            }
            Rat l = k / t;
            l.canonicalize();
            if (!have) { lambda = l; have = true; }
            else if (l != lambda) throw std::runtime_error("trace form not proportional to Killing form");
        }
    return lambda;  // 2N for sl(N)
}

}  // namespace ug4
