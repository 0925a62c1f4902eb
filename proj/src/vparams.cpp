#include "ug4/vparams.hpp"

#include <map>

namespace ug4 {

VogelPoint normalize(const Rat& a, const Rat& b, const Rat& c) {
    Rat s = a + b + c;
    s.canonicalize();
    if (s == 0) throw std::domain_error("degenerate projective point: coordinates sum to zero");
    Rat f = Rat(1, 2) / s;
    f.canonicalize();
    VogelPoint pt{a * f, b * f, c * f};
    pt.a.canonicalize();
    pt.b.canonicalize();
    pt.c.canonicalize();
    return pt;
}

std::array<PermutationS3, 6> PermutationS3::all() {
    return {identity(), swap_ab(), swap_ac(), swap_bc(), cycle_abc(), cycle_acb()};
}

VogelPoint apply_permutation(const PermutationS3& s, const VogelPoint& pt) {
    std::array<Rat, 3> v{pt.a, pt.b, pt.c};
    return {v[s.p[0]], v[s.p[1]], v[s.p[2]]};
}

namespace {

RatFun rf(long c) { return RatFun(Rat(c)); }

}  // namespace

FamilyLine family_line(Family f) {
    RatFun N = RatFun::x();
    switch (f) {
        case Family::sl:
            // (-1/N, 1/N, 1/2)
            return {f, rf(-1) / N, rf(1) / N, RatFun(Rat(1, 2))};
        case Family::so:
            // (-1/(N-2), 2/(N-2), (N-4)/(2N-4))
            return {f, rf(-1) / (N - rf(2)), rf(2) / (N - rf(2)),
                    (N - rf(4)) / (rf(2) * N - rf(4))};
        case Family::sp:
            // (1/(N+2), -2/(N+2), (N+4)/(2N+4))
            return {f, rf(1) / (N + rf(2)), rf(-2) / (N + rf(2)),
                    (N + rf(4)) / (rf(2) * N + rf(4))};
        case Family::exc:
            // (-1/N, 1/6 + 1/N, 1/3); exceptional points at N = 4, 9, 12, 18, 30
            return {f, rf(-1) / N, RatFun(Rat(1, 6)) + rf(1) / N, RatFun(Rat(1, 3))};
    }
    throw std::logic_error("unreachable family");
}

VogelPoint FamilyLine::at(long N) const {
    Rat n(N);
    try {
        return {a(n), b(n), c(n)};
    } catch (const std::domain_error&) {
        throw std::domain_error("parameter pole: family line undefined at N=" + std::to_string(N));
    }
}

AlgebraId parse_algebra(const std::string& name) {
    static const std::map<std::string, long> exceptional{
        {"g2", 4}, {"f4", 9}, {"e6", 12}, {"e7", 18}, {"e8", 30}};
    if (auto it = exceptional.find(name); it != exceptional.end())
        return {Family::exc, it->second, name};
    if (name.size() >= 3) {
        std::string fam = name.substr(0, 2);
        std::string num = name.substr(2);
        bool digits = !num.empty() && num.find_first_not_of("0123456789") == std::string::npos;
        if (digits) {
            long N = std::stol(num);
            if (fam == "sl" && N >= 2) return {Family::sl, N, name};
            if (fam == "so" && N >= 5) return {Family::so, N, name};
            if (fam == "sp" && N >= 4) {
                if (N % 2 != 0) throw std::invalid_argument("sp(N) requires even N: " + name);
                return {Family::sp, N, name};
            }
        }
    }
    throw std::invalid_argument("unknown algebra: " + name);
}

VogelPoint algebra_point(const AlgebraId& id) {
    return family_line(id.family).at(id.N);
}

}  // namespace ug4
