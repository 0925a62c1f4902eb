#include "ug4/udim.hpp"

#include <array>
#include <map>
#include <sstream>

namespace ug4 {

namespace {

// ---------------------------------------------------------------------------
// factored formulas
// ---------------------------------------------------------------------------

// Linear form ca*a + cb*b + cc*c + c0 with small integer coefficients.
struct Lin {
    int ca, cb, cc, c0;

    Rat eval(const VogelPoint& p) const {
        Rat r = Rat(ca) * p.a + Rat(cb) * p.b + Rat(cc) * p.c + Rat(c0);
        r.canonicalize();
        return r;
    }
    RatFun eval(const RatFun& a, const RatFun& b, const RatFun& c) const {
        return RatFun(Rat(ca)) * a + RatFun(Rat(cb)) * b + RatFun(Rat(cc)) * c + RatFun(Rat(c0));
    }
    std::string str() const {
        std::ostringstream os;
        auto term = [&os](int coef, const char* sym) {
            if (coef == 0) return;
            if (os.tellp() > 0) os << (coef > 0 ? "+" : "-");
            else if (coef < 0) os << "-";
            int m = coef > 0 ? coef : -coef;
            if (m != 1 || sym[0] == '\0') os << m;
            os << sym;
        };
        term(ca, "a");
        term(cb, "b");
        term(cc, "c");
        term(c0, "");
        return os.str();
    }
};

// P10: the degree-10 polynomial appearing in dim I, as (coeff, i, j, k) with
// monomial a^i b^j c^k. Symmetric under b <-> c.
struct Mono {
    long coeff;
    int i, j, k;
};

const std::vector<Mono>& p10_monomials() {
    static const std::vector<Mono> m = {
        {4, 10, 0, 0},  {-14, 9, 1, 0},   {-14, 9, 0, 1},   {-32, 8, 2, 0},  {-8, 8, 1, 1},
        {-32, 8, 0, 2}, {116, 7, 3, 0},   {259, 7, 2, 1},   {259, 7, 1, 2},  {116, 7, 0, 3},
        {116, 6, 4, 0}, {116, 6, 3, 1},   {196, 6, 2, 2},   {116, 6, 1, 3},  {116, 6, 0, 4},
        {-310, 5, 5, 0},{-1963, 5, 4, 1}, {-4762, 5, 3, 2}, {-4762, 5, 2, 3},{-1963, 5, 1, 4},
        {-310, 5, 0, 5},{-296, 4, 6, 0},  {-2634, 4, 5, 1}, {-9263, 4, 4, 2},{-13706, 4, 3, 3},
        {-9263, 4, 2, 4},{-2634, 4, 1, 5},{-296, 4, 0, 6},  {256, 3, 7, 0},  {500, 3, 6, 1},
        {-2938, 3, 5, 2},{-10206, 3, 4, 3},{-10206, 3, 3, 4},{-2938, 3, 2, 5},{500, 3, 1, 6},
        {256, 3, 0, 7}, {352, 2, 8, 0},   {4248, 2, 7, 1},  {20252, 2, 6, 2},{48516, 2, 5, 3},
        {64320, 2, 4, 4},{48516, 2, 3, 5},{20252, 2, 2, 6}, {4248, 2, 1, 7}, {352, 2, 0, 8},
        {96, 1, 9, 0},  {2976, 1, 8, 1},  {20712, 1, 7, 2}, {65496, 1, 6, 3},{112896, 1, 5, 4},
        {112896, 1, 4, 5},{65496, 1, 3, 6},{20712, 1, 2, 7},{2976, 1, 1, 8}, {96, 1, 0, 9},
        {576, 0, 9, 1}, {5184, 0, 8, 2},  {19728, 0, 7, 3}, {41472, 0, 6, 4},{52704, 0, 5, 5},
        {41472, 0, 4, 6},{19728, 0, 3, 7},{5184, 0, 2, 8},  {576, 0, 1, 9}};
    return m;
}

template <typename T>
T eval_p10(const T& a, const T& b, const T& c) {
    // Cache powers up to 10.
    std::array<T, 11> pa, pb, pc;
    pa[0] = T(Rat(1)); pb[0] = T(Rat(1)); pc[0] = T(Rat(1));
    for (int i = 1; i <= 10; ++i) {
        pa[i] = pa[i - 1] * a;
        pb[i] = pb[i - 1] * b;
        pc[i] = pc[i - 1] * c;
    }
    T acc(Rat(0));
    for (const Mono& m : p10_monomials())
        acc = acc + T(Rat(m.coeff)) * pa[m.i] * pb[m.j] * pc[m.k];
    return acc;
}

template <> Rat eval_p10<Rat>(const Rat& a, const Rat& b, const Rat& c) {
    std::array<Rat, 11> pa, pb, pc;
    pa[0] = 1; pb[0] = 1; pc[0] = 1;
    for (int i = 1; i <= 10; ++i) {
        pa[i] = pa[i - 1] * a;
        pb[i] = pb[i - 1] * b;
        pc[i] = pc[i - 1] * c;
    }
    Rat acc(0);
    for (const Mono& m : p10_monomials()) acc += Rat(m.coeff) * pa[m.i] * pb[m.j] * pc[m.k];
    acc.canonicalize();
    return acc;
}

// A universal dimension formula in one of two shapes:
//  * factored rational function of (a,b,c), optionally times P10 (label I);
//  * prefactor * prod_i (dim g - shift_i)   (X2/X3/X4-type closed forms in d).
struct Formula {
    Rat prefactor;
    std::vector<Lin> num, den;
    bool p10 = false;
    std::vector<long> dimg_shifts;  // when nonempty, the d-shape is used
};

Rat eval_dim_g(const VogelPoint& p);

Rat eval_formula(const Formula& f, const VogelPoint& p) {
    if (!f.dimg_shifts.empty()) {
        Rat d = eval_dim_g(p);
        Rat acc = f.prefactor;
        for (long s : f.dimg_shifts) acc *= (d - Rat(s));
        acc.canonicalize();
        return acc;
    }
    for (const Lin& l : f.den) {
        if (l.eval(p) == 0)
            throw PoleError("pole at point; use line evaluation (vanishing factor: " + l.str() + ")",
                            l.str());
    }
    Rat acc = f.prefactor;
    for (const Lin& l : f.num) acc *= l.eval(p);
    for (const Lin& l : f.den) acc /= l.eval(p);
    if (f.p10) acc *= eval_p10<Rat>(p.a, p.b, p.c);
    acc.canonicalize();
    return acc;
}

RatFun eval_formula_line(const Formula& f, const RatFun& a, const RatFun& b, const RatFun& c) {
    if (!f.dimg_shifts.empty()) {
        RatFun d = (a - RatFun(Rat(1))) * (b - RatFun(Rat(1))) * (c - RatFun(Rat(1))) / (a * b * c);
        RatFun acc(f.prefactor);
        for (long s : f.dimg_shifts) acc = acc * (d - RatFun(Rat(s)));
        return acc;
    }
    RatFun acc(f.prefactor);
    for (const Lin& l : f.num) acc = acc * l.eval(a, b, c);
    for (const Lin& l : f.den) {
        RatFun dv = l.eval(a, b, c);
        if (dv.is_zero())
            throw std::domain_error("undefined on line: factor " + l.str() + " vanishes identically");
        acc = acc / dv;
    }
    if (f.p10) acc = acc * eval_p10<RatFun>(a, b, c);
    return acc;
}

// Base formulas (corrected variants). Transcribed factored forms; each was
// cross-checked against sum identities at random points and against concrete
// tensor measurements before being frozen here.
const Formula& base_formula(Base base, Provenance prov) {
    static const Formula fr_g{Rat(1),
                              {{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}},
                              {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}};
    static const Formula fr_x2{Rat(1, 8),
                               {{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 1},
                                {-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 1}},
                               {{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0},
                                {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_x3{Rat(1, 6), {}, {}, false, {0, 1, 8}};
    static const Formula fr_x4{Rat(1, 24), {}, {}, false, {0, 1, 3, 14}};
    static const Formula fr_y2{Rat(-1, 2),
                               {{3, 0, 0, -1}, {0, 1, 0, -1}, {1, 1, 0, -1}, {0, 0, 1, -1}, {1, 0, 1, -1}},
                               {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, -1, 0, 0}, {0, 1, 0, 0}, {1, 0, -1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_y2_printed{Rat(-1, 2),
                               {{3, 0, 0, -1}, {0, 1, 0, -1}, {1, 1, 0, -1}, {0, 0, 1, -1}, {1, 0, 1, -1}},
                               {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, -1}, {0, 1, 0, 0}, {1, 0, -1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_y3{Rat(-1, 6),
                               {{5, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {1, 1, 0, -1}, {2, 1, 0, -1},
                                {0, 0, 1, -1}, {1, 0, 1, -1}, {2, 0, 1, -1}},
                               {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, -1, 0, 0}, {2, -1, 0, 0},
                                {0, 1, 0, 0}, {1, 0, -1, 0}, {2, 0, -1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_y4{Rat(-1, 24),
                               {{1, 0, 0, -1}, {2, 0, 0, -1}, {7, 0, 0, -1}, {0, 1, 0, -1}, {1, 1, 0, -1},
                                {2, 1, 0, -1}, {3, 1, 0, -1}, {0, 0, 1, -1}, {1, 0, 1, -1}, {2, 0, 1, -1},
                                {3, 0, 1, -1}},
                               {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0},
                                {1, -1, 0, 0}, {2, -1, 0, 0}, {3, -1, 0, 0}, {0, 1, 0, 0},
                                {1, 0, -1, 0}, {2, 0, -1, 0}, {3, 0, -1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_b{Rat(-1, 8),
                              {{1, 0, 0, -1}, {0, 1, 0, -1}, {2, 1, 0, 0}, {0, 2, 0, 1}, {0, 3, 0, -1},
                               {0, 0, 1, -1}, {2, 0, 1, 0}, {0, 0, 2, 1}, {0, 0, 3, -1}},
                              {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, -1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0},
                               {0, 1, -2, 0}, {1, 0, -1, 0}, {0, 2, -1, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_c{Rat(-2, 3),
                              {{2, 0, 0, 1}, {0, 1, 0, -1}, {0, 2, 0, 1}, {0, 0, 1, -1}, {0, 1, 1, 0},
                               {0, 2, 1, 0}, {0, 0, 2, 1}, {0, 1, 2, 0}},
                              {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, -2, 0, 0}, {1, -1, 0, 0},
                               {0, 1, 0, 0}, {1, 0, -2, 0}, {1, 0, -1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_j{Rat(1, 4),
                              {{1, 1, 0, 0}, {1, 0, 1, 0}, {2, 1, -1, 0}, {2, 2, -1, 0}, {2, -1, 1, 0},
                               {1, 2, 1, 0}, {2, 2, 1, 0}, {2, -1, 2, 0}, {1, 1, 2, 0}, {2, 1, 2, 0},
                               {1, 2, 2, 0}},
                              {{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                               {0, 0, 1, 0}, {1, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, -2, 0}, {0, 1, -1, 0},
                               {0, 1, -1, 0}, {0, 2, -1, 0}, {1, -1, -1, 0}}};
    static const Formula fr_d{Rat(1),
                              {{3, -2, -2, 0}, {1, -1, -2, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}, {2, 1, 1, 0},
                               {0, 2, 1, 0}, {1, 2, 1, 0}, {2, 2, 1, 0}, {1, 0, 2, 0}, {2, -1, 2, 0},
                               {1, 1, 2, 0}, {2, 1, 2, 0}, {1, 2, 2, 0}},
                              {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, -1, 0, 0}, {1, -1, 0, 0},
                               {3, -1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {1, 0, -2, 0}, {1, 0, -1, 0},
                               {2, 0, -1, 0}, {0, 1, -1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_e{Rat(64),
                              {{1, 1, 0, 0}, {2, 1, 0, 0}, {1, 2, 0, 0}, {1, 0, 1, 0}, {2, 0, 1, 0},
                               {1, 0, 2, 0}, {1, 1, 1, 0}, {1, 2, 1, 0}, {2, 2, 1, 0}, {1, 1, 2, 0},
                               {2, 1, 2, 0}, {1, 2, 2, 0}},
                              {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0},
                               {1, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, -3, 0}, {0, 1, -1, 0}, {0, 1, -1, 0},
                               {0, 3, -1, 0}, {2, -1, -1, 0}}};
    static const Formula fr_h{Rat(1, 12),
                              {{1, 2, 0, 0}, {3, -2, -2, 0}, {1, -1, -2, 0}, {1, -2, -1, 0}, {2, 1, 1, 0},
                               {0, 2, 1, 0}, {1, 2, 1, 0}, {2, 2, 1, 0}, {1, 0, 2, 0}, {0, 1, 2, 0},
                               {1, 1, 2, 0}, {2, 1, 2, 0}, {1, 2, 2, 0}},
                              {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, -2, 0, 0},
                               {1, -1, 0, 0}, {1, -1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {1, 0, -2, 0},
                               {1, 0, -1, 0}, {1, 0, -1, 0}, {2, -1, -1, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}};
    static const Formula fr_g2{Rat(-1, 2),
                               {{0, 2, 1, 0}, {0, 1, 2, 0}, {1, -2, -2, 0}, {1, -1, -2, 0}, {1, -2, -1, 0},
                                {1, 1, 1, 0}, {2, 1, 1, 0}, {1, 2, 1, 0}, {2, 2, 1, 0}, {1, 1, 2, 0},
                                {2, 1, 2, 0}, {1, 2, 2, 0}},
                               {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0},
                                {0, 0, 1, 0}, {1, -1, 0, 0}, {1, -1, 0, 0}, {2, -1, 0, 0}, {1, 0, -1, 0},
                                {1, 0, -1, 0}, {2, 0, -1, 0}}};
    static const Formula fr_f{Rat(-1),
                              {{1, 0, 1, 0}, {0, 2, 1, 0}, {1, -2, -2, 0}, {1, -1, -2, 0}, {1, 1, 1, 0},
                               {1, 1, 1, 0}, {2, 1, 1, 0}, {1, 2, 1, 0}, {2, 2, 1, 0}, {2, -1, 2, 0},
                               {1, 1, 2, 0}, {2, 1, 2, 0}, {1, 2, 2, 0}},
                              {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0},
                               {0, 0, 1, 0}, {0, 0, 1, 0}, {1, -1, 0, 0}, {1, -1, 0, 0}, {2, -1, 0, 0},
                               {1, 0, -1, 0}, {1, 0, -1, 0}, {0, 1, -1, 0}}};
    static const Formula fr_i{Rat(-1, 2),
                              {{1, 1, 1, 0}, {1, 2, 1, 0}, {2, 2, 1, 0}, {1, 1, 2, 0}, {2, 1, 2, 0}},
                              {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0},
                               {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}, {1, -3, 0, 0}, {1, -2, 0, 0},
                               {1, -1, 0, 0}, {1, 0, -3, 0}, {1, 0, -2, 0}, {1, 0, -1, 0}, {1, -1, -1, 0}},
                              true};
    static const Formula fr_one{Rat(1), {}, {}};

    switch (base) {
        case Base::One: return fr_one;
        case Base::g: return fr_g;
        case Base::X2: return fr_x2;
        case Base::X3fam: return fr_x3;  // plain X3; variants handled by callers
        case Base::X4: return fr_x4;
        case Base::Y2: return prov == Provenance::as_printed ? fr_y2_printed : fr_y2;
        case Base::Y3: return fr_y3;
        case Base::Y4: return fr_y4;
        case Base::B: return fr_b;
        case Base::C: return fr_c;
        case Base::J: return fr_j;
        case Base::D: return fr_d;
        case Base::E: return fr_e;
        case Base::H: return fr_h;
        case Base::G: return fr_g2;
        case Base::F: return fr_f;
        case Base::I: return fr_i;
    }
    throw std::logic_error("unreachable base");
}

const Formula& diff_formula() {
    static const Formula fr{Rat(-16),
                            {{1, 1, 0, 0}, {2, 1, 0, 0}, {1, 2, 0, 0}, {1, 0, 1, 0}, {2, 0, 1, 0},
                             {1, 0, 2, 0}, {0, 1, 1, 0}, {0, 2, 1, 0}, {0, 1, 2, 0}, {1, -2, -2, 0},
                             {2, 2, -1, 0}, {2, 2, 1, 0}, {2, -1, 2, 0}, {2, 1, 2, 0}, {1, 2, 2, 0}},
                            {{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                             {0, 0, 1, 0}, {1, -2, 0, 0}, {2, -1, 0, 0}, {1, 0, -2, 0}, {2, 0, -1, 0},
                             {0, 1, -2, 0}, {0, 2, -1, 0}, {1, -1, -1, 0}, {1, 1, -1, 0}, {1, -1, 1, 0}}};
    return fr;
}

Rat eval_dim_g(const VogelPoint& p) { return eval_formula(base_formula(Base::g, Provenance::corrected), p); }

// ---------------------------------------------------------------------------
// labels
// ---------------------------------------------------------------------------

const char* base_name(Base b) {
    switch (b) {
        case Base::One: return "1";
        case Base::g: return "g";
        case Base::X2: return "X2";
        case Base::X3fam: return "X3";
        case Base::X4: return "X4";
        case Base::Y2: return "Y2";
        case Base::Y3: return "Y3";
        case Base::Y4: return "Y4";
        case Base::B: return "B";
        case Base::C: return "C";
        case Base::J: return "J";
        case Base::D: return "D";
        case Base::E: return "E";
        case Base::H: return "H";
        case Base::G: return "G";
        case Base::F: return "F";
        case Base::I: return "I";
    }
    return "?";
}

int orbit_size(Base b) {
    switch (b) {
        case Base::One: case Base::g: case Base::X2: case Base::X3fam: case Base::X4:
            return 1;
        case Base::D: case Base::F:
            return 6;
        default:
            return 3;
    }
}

}  // namespace

std::string Label::str() const {
    std::string s;
    if (base == Base::X3fam) {
        switch (var) {
            case X3Variant::X3: s = "X3"; break;
            case X3Variant::Z3sym: case X3Variant::Z3win: s = "Z3"; break;
            case X3Variant::K3: s = "K3"; break;
            case X3Variant::L3: s = "L3"; break;
        }
    } else {
        s = base_name(base);
    }
    for (int i = 0; i < perm; ++i) s += '\'';
    return s;
}

Label parse_label(const std::string& s) {
    size_t primes = 0;
    while (primes < s.size() && s[s.size() - 1 - primes] == '\'') ++primes;
    std::string stem = s.substr(0, s.size() - primes);
    static const std::map<std::string, Base> bases{
        {"1", Base::One}, {"g", Base::g}, {"X2", Base::X2}, {"X4", Base::X4},
        {"Y2", Base::Y2}, {"Y3", Base::Y3}, {"Y4", Base::Y4}, {"B", Base::B},
        {"C", Base::C}, {"J", Base::J}, {"D", Base::D}, {"E", Base::E},
        {"H", Base::H}, {"G", Base::G}, {"F", Base::F}, {"I", Base::I}};
    Label l;
    if (stem == "X3" || stem == "Z3" || stem == "K3" || stem == "L3") {
        l.base = Base::X3fam;
        l.var = stem == "X3" ? X3Variant::X3
              : stem == "Z3" ? X3Variant::Z3sym
              : stem == "K3" ? X3Variant::K3 : X3Variant::L3;
    } else {
        auto it = bases.find(stem);
        if (it == bases.end()) throw std::invalid_argument("unknown eigenspace label: " + s);
        l.base = it->second;
    }
    l.perm = static_cast<int>(primes);
    if (l.perm >= orbit_size(l.base))
        throw std::invalid_argument("label " + s + " has too many primes");
    return l;
}

std::vector<Label> catalog_labels() {
    std::vector<Label> out;
    for (Base b : {Base::One, Base::g, Base::X2, Base::X4, Base::Y2, Base::Y3, Base::Y4,
                   Base::B, Base::C, Base::J, Base::D, Base::E, Base::H, Base::G, Base::F, Base::I})
        for (int p = 0; p < orbit_size(b); ++p) out.push_back({b, p});
    for (X3Variant v : {X3Variant::X3, X3Variant::Z3sym, X3Variant::K3, X3Variant::L3})
        out.push_back({Base::X3fam, 0, v});
    return out;
}

// ---------------------------------------------------------------------------
// dimension evaluation
// ---------------------------------------------------------------------------

namespace {

VogelPoint permuted(const Label& l, const VogelPoint& pt) {
    return apply_permutation(PermutationS3::all()[l.perm], pt);
}

// The as-printed variant applies only to the directly printed formula
// instance (identity permutation); primed labels are defined in the paper by
// parameter permutations of the (covariant, hence corrected) base formula.
Provenance effective_prov(const Label& l, Provenance prov) {
    return (prov == Provenance::as_printed && l.perm != 0) ? Provenance::corrected : prov;
}

Rat dim_simple(const Label& l, const VogelPoint& pt, Provenance prov) {
    return eval_formula(base_formula(l.base, effective_prov(l, prov)), permuted(l, pt));
}

// (dim g + 3)/2 * (B B' B'')/(Y2 Y2' Y2'')
Rat ratio_term(const VogelPoint& pt, Provenance prov) {
    Rat den(1);
    for (int p = 0; p < 3; ++p) {
        Rat y = dim_simple({Base::Y2, p}, pt, prov);
        if (y == 0) throw PoleError("Y2 ratio undefined: dim" + Label{Base::Y2, p}.str() + " = 0 at point",
                                    "dim" + Label{Base::Y2, p}.str());
        den *= y;
    }
    Rat num(1);
    for (int p = 0; p < 3; ++p) num *= dim_simple({Base::B, p}, pt, prov);
    Rat r = Rat(1, 2) * (eval_dim_g(pt) + 3) * num / den;
    r.canonicalize();
    return r;
}

std::array<RatFun, 3> line_coords(Family fam, const PermutationS3& s) {
    FamilyLine fl = family_line(fam);
    std::array<RatFun, 3> v{fl.a, fl.b, fl.c};
    return {v[s.p[0]], v[s.p[1]], v[s.p[2]]};
}

RatFun dim_simple_line(const Label& l, Family fam, Provenance prov) {
    auto co = line_coords(fam, PermutationS3::all()[l.perm]);
    return eval_formula_line(base_formula(l.base, effective_prov(l, prov)), co[0], co[1], co[2]);
}

RatFun ratio_term_line(Family fam, Provenance prov) {
    auto co = line_coords(fam, PermutationS3::identity());
    RatFun num(Rat(1)), den(Rat(1));
    for (int p = 0; p < 3; ++p) {
        num = num * dim_simple_line({Base::B, p}, fam, prov);
        den = den * dim_simple_line({Base::Y2, p}, fam, prov);
    }
    if (den.is_zero()) throw std::domain_error("Y2 ratio undefined identically on line");
    RatFun d = dim_simple_line({Base::g, 0}, fam, prov);
    return RatFun(Rat(1, 2)) * (d + RatFun(Rat(3))) * num / den;
}

RatFun diff_line_fun(Family fam) {
    auto co = line_coords(fam, PermutationS3::identity());
    return eval_formula_line(diff_formula(), co[0], co[1], co[2]);
}

RatFun x3fam_line(X3Variant var, Family fam, Provenance prov);

RatFun dim_line_fun(const Label& l, Family fam, Provenance prov) {
    if (l.base == Base::X3fam) return x3fam_line(l.var, fam, prov);
    return dim_simple_line(l, fam, prov);
}

}  // namespace

Rat dim_g(const VogelPoint& pt) { return eval_dim_g(pt); }

Rat diff_value(const VogelPoint& pt) { return eval_formula(diff_formula(), pt); }

Rat diff_on_line(Family fam, long N) { return diff_line_fun(fam)(Rat(N)); }

Rat dim(const Label& label, const VogelPoint& pt, Provenance prov) {
    if (label.base != Base::X3fam) return dim_simple(label, pt, prov);
    Rat x3 = dim_simple({Base::X3fam, 0}, pt, prov);
    switch (label.var) {
        case X3Variant::X3:
            return x3;
        case X3Variant::Z3sym:
            return x3 + ratio_term(pt, prov) + diff_value(pt);
        case X3Variant::Z3win:
            return Rat(2) * x3 + ratio_term(pt, prov) + diff_value(pt);
        case X3Variant::K3: {
            DecompositionTable t = module_table("31", prov);
            Rat rest(0);
            for (const TableEntry& e : t.entries)
                if (e.label.base != Base::X3fam) rest += Rat(e.mult) * dim(e.label, pt, prov);
            Rat r = t.total_at(eval_dim_g(pt)) - rest;
            r.canonicalize();
            return r;
        }
        case X3Variant::L3: {
            Rat r = dim({Base::X3fam, 0, X3Variant::K3}, pt, prov) - ratio_term(pt, prov) - diff_value(pt);
            r.canonicalize();
            return r;
        }
    }
    throw std::logic_error("unreachable X3 variant");
}

namespace {

RatFun x3fam_line(X3Variant var, Family fam, Provenance prov) {
    RatFun x3 = dim_simple_line({Base::X3fam, 0}, fam, prov);
    switch (var) {
        case X3Variant::X3:
            return x3;
        case X3Variant::Z3sym:
            return x3 + ratio_term_line(fam, prov) + diff_line_fun(fam);
        case X3Variant::Z3win:
            return RatFun(Rat(2)) * x3 + ratio_term_line(fam, prov) + diff_line_fun(fam);
        case X3Variant::K3: {
            DecompositionTable t = module_table("31", prov);
            RatFun d = dim_simple_line({Base::g, 0}, fam, prov);
            RatFun total(t.total_prefactor);
            for (const Rat& s : t.total_shifts) total = total * (d - RatFun(s));
            RatFun rest(Rat(0));
            for (const TableEntry& e : t.entries)
                if (e.label.base != Base::X3fam)
                    rest = rest + RatFun(Rat(e.mult)) * dim_line_fun(e.label, fam, prov);
            return total - rest;
        }
        case X3Variant::L3:
            return x3fam_line(X3Variant::K3, fam, prov) - ratio_term_line(fam, prov) - diff_line_fun(fam);
    }
    throw std::logic_error("unreachable X3 variant");
}

}  // namespace

Rat dim_on_line(const Label& label, Family fam, long N, Provenance prov) {
    return dim_line_fun(label, fam, prov)(Rat(N));
}

Rat dim_x3_hat_on_line(Family fam, long N) {
    Rat n(N);
    if (fam == Family::sl) return Rat(1, 9) * (n * n - 1) * (n * n - 1) * (n * n - 9);
    if (fam == Family::so) return Rat(1, 72) * (n * n - 16) * (n - 3) * (n * n - 1) * n;
    throw std::invalid_argument("X3-hat content available for sl/so lines only");
}

Rat dim_x3_tilde_on_line(Family fam, long N) {
    Rat n(N);
    if (fam == Family::sl) return Rat(1, 18) * (n * n - 1) * (n * n - 4) * (n * n - 9);
    if (fam == Family::so) return Rat(1, 144) * (n - 5) * (n * n - 1) * n * n * (n + 2);
    throw std::invalid_argument("X3-tilde content available for sl/so lines only");
}

std::optional<std::pair<int, int>> x3_variant_content(X3Variant var, Family fam) {
    // Pairs are (hat, tilde) multiplicities.
    if (fam == Family::sl) {
        switch (var) {
            case X3Variant::X3: return {{1, 1}};
            case X3Variant::Z3sym: return {{2, 0}};
            case X3Variant::Z3win: return {{3, 1}};
            case X3Variant::K3: return {{3, 1}};
            case X3Variant::L3: return {{2, 2}};
        }
    }
    if (fam == Family::so) {
        switch (var) {
            case X3Variant::X3: return {{1, 1}};
            case X3Variant::Z3sym: return {{1, 1}};
            case X3Variant::Z3win: return {{2, 2}};
            case X3Variant::K3: return {{2, 1}};
            case X3Variant::L3: return {{2, 1}};
        }
    }
    return std::nullopt;
}

Rat dim_at_algebra(const Label& label, const AlgebraId& id, Provenance prov, bool* line_used) {
    if (line_used) *line_used = false;
    VogelPoint pt = algebra_point(id);
    if (label.base == Base::X3fam && label.var != X3Variant::X3) {
        // Use the per-family content data: the universal Z3/K3/L3 expressions
        // have genuinely singular B/Y2 ratios at several algebra points.
        if (id.family == Family::exc) {
            int mult = label.var == X3Variant::Z3win ? 2 : 1;
            return Rat(mult) * dim({Base::X3fam, 0, X3Variant::X3}, pt, prov);
        }
        if (auto content = x3_variant_content(label.var, id.family)) {
            if (line_used) *line_used = true;
            return Rat(content->first) * dim_x3_hat_on_line(id.family, id.N) +
                   Rat(content->second) * dim_x3_tilde_on_line(id.family, id.N);
        }
        // sp: fall through to universal evaluation (point, then line).
    }
    try {
        return dim(label, pt, prov);
    } catch (const std::domain_error&) {
        if (line_used) *line_used = true;
        return dim_on_line(label, id.family, id.N, prov);
    }
}

// ---------------------------------------------------------------------------
// decomposition tables
// ---------------------------------------------------------------------------

namespace {

std::vector<TableEntry> orbit(Base b, int mult) {
    std::vector<TableEntry> out;
    for (int p = 0; p < orbit_size(b); ++p) out.push_back({{b, p}, mult});
    return out;
}

void append(std::vector<TableEntry>& v, std::vector<TableEntry> more) {
    v.insert(v.end(), more.begin(), more.end());
}

}  // namespace

std::vector<std::string> module_names() {
    return {"sym2", "asym2", "asym3", "4", "31", "22", "211", "1111"};
}

std::string canonical_module(const std::string& name) {
    static const std::map<std::string, std::string> alias{
        {"4", "4"}, {"31", "31"}, {"22", "22"}, {"211", "211"}, {"1111", "1111"},
        {"sym2", "sym2"}, {"asym2", "asym2"}, {"asym3", "asym3"}};
    auto it = alias.find(name);
    if (it == alias.end()) throw std::invalid_argument("unknown module label: " + name);
    return it->second;
}

DecompositionTable module_table(const std::string& name, Provenance prov) {
    std::string m = canonical_module(name);
    DecompositionTable t;
    t.module = m;
    if (m == "sym2") {
        t.n = 2; t.sn_irrep_dim = 1;
        t.entries = {{{Base::One, 0}, 1}};
        append(t.entries, orbit(Base::Y2, 1));
        t.total_prefactor = Rat(1, 2);
        t.total_shifts = {Rat(0), Rat(-1)};
    } else if (m == "asym2") {
        t.n = 2; t.sn_irrep_dim = 1;
        t.entries = {{{Base::g, 0}, 1}, {{Base::X2, 0}, 1}};
        t.total_prefactor = Rat(1, 2);
        t.total_shifts = {Rat(0), Rat(1)};
    } else if (m == "asym3") {
        t.n = 3; t.sn_irrep_dim = 1;
        t.entries = {{{Base::One, 0}, 1}, {{Base::X2, 0}, 1}};
        append(t.entries, orbit(Base::Y2, 1));
        t.entries.push_back({{Base::X3fam, 0, X3Variant::X3}, 1});
        t.total_prefactor = Rat(1, 6);
        t.total_shifts = {Rat(0), Rat(1), Rat(2)};
    } else if (m == "4") {
        t.n = 4; t.sn_irrep_dim = 1;
        t.entries = {{{Base::One, 0}, 2}};
        append(t.entries, orbit(Base::J, 1));
        t.entries.push_back({{Base::X2, 0}, 1});
        t.entries.push_back({{Base::X3fam, 0, X3Variant::Z3sym}, 1});
        append(t.entries, orbit(Base::Y2, 3));
        append(t.entries, orbit(Base::C, 1));
        append(t.entries, orbit(Base::Y4, 1));
        append(t.entries, orbit(Base::D, 1));
        t.total_prefactor = Rat(1, 24);
        t.total_shifts = {Rat(0), Rat(-1), Rat(-2), Rat(-3)};
    } else if (m == "31") {
        t.n = 4; t.sn_irrep_dim = 3;
        t.entries = {{{Base::g, 0}, 3}};
        append(t.entries, orbit(Base::E, 1));
        t.entries.push_back({{Base::X3fam, 0, X3Variant::K3}, 1});
        t.entries.push_back({{Base::X2, 0}, 6});
        append(t.entries, orbit(Base::G, 1));
        append(t.entries, orbit(Base::F, 1));
        append(t.entries, orbit(Base::Y2, 3));
        append(t.entries, orbit(Base::B, 3));
        append(t.entries, orbit(Base::C, 3));
        append(t.entries, orbit(Base::Y3, 1));
        append(t.entries, orbit(Base::D, 1));
        t.total_prefactor = Rat(1, 8);
        t.total_shifts = {Rat(0), Rat(1), Rat(-1), Rat(-2)};
    } else if (m == "22") {
        t.n = 4; t.sn_irrep_dim = 2;
        t.entries = {{{Base::One, 0}, 2}};
        append(t.entries, orbit(Base::E, 1));
        append(t.entries, orbit(Base::J, 1));
        if (prov == Provenance::as_printed)
            t.entries.push_back({{Base::X3fam, 0, X3Variant::X3}, 1});
        t.entries.push_back({{Base::X3fam, 0, X3Variant::Z3win}, 1});
        t.entries.push_back({{Base::X2, 0}, 2});
        append(t.entries, orbit(Base::H, 1));
        append(t.entries, orbit(Base::Y2, 4));
        append(t.entries, orbit(Base::B, 1));
        append(t.entries, orbit(Base::C, 2));
        append(t.entries, orbit(Base::D, 1));
        t.total_prefactor = Rat(1, 12);
        t.total_shifts = {Rat(0), Rat(0), Rat(1), Rat(-1)};
    } else if (m == "211") {
        t.n = 4; t.sn_irrep_dim = 3;
        t.entries = {{{Base::g, 0}, 4}};
        append(t.entries, orbit(Base::E, 1));
        t.entries.push_back({{Base::X3fam, 0, X3Variant::L3}, 1});
        t.entries.push_back({{Base::X2, 0}, 7});
        append(t.entries, orbit(Base::I, 1));
        append(t.entries, orbit(Base::F, 1));
        append(t.entries, orbit(Base::Y2, 1));
        append(t.entries, orbit(Base::B, 4));
        append(t.entries, orbit(Base::C, 3));
        append(t.entries, orbit(Base::Y3, 1));
        t.total_prefactor = Rat(1, 8);
        t.total_shifts = {Rat(2), Rat(1), Rat(0), Rat(-1)};
    } else {  // 1111
        t.n = 4; t.sn_irrep_dim = 1;
        t.entries = {{{Base::g, 0}, 1}, {{Base::X2, 0}, 1},
                     {{Base::X3fam, 0, X3Variant::X3}, 1}, {{Base::X4, 0}, 1}};
        append(t.entries, orbit(Base::C, 1));
        append(t.entries, orbit(Base::B, 1));
        append(t.entries, orbit(Base::Y2, 1));
        t.total_prefactor = Rat(1, 24);
        t.total_shifts = {Rat(0), Rat(1), Rat(2), Rat(3)};
    }
    return t;
}

std::vector<Rat> DecompositionTable::total_poly() const {
    std::vector<Rat> coeffs{total_prefactor};
    for (const Rat& s : total_shifts) {
        // multiply by (d - s)
        std::vector<Rat> next(coeffs.size() + 1, Rat(0));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * s;
        }
        coeffs = std::move(next);
    }
    for (auto& c : coeffs) c.canonicalize();
    return coeffs;
}

Rat DecompositionTable::total_at(const Rat& d) const {
    Rat acc = total_prefactor;
    for (const Rat& s : total_shifts) acc *= (d - s);
    acc.canonicalize();
    return acc;
}

SumIdentityReport check_sum_identity(const std::string& module, const VogelPoint& pt, Provenance prov) {
    DecompositionTable t = module_table(module, prov);
    Rat lhs(0);
    for (const TableEntry& e : t.entries) lhs += Rat(e.mult) * dim(e.label, pt, prov);
    lhs.canonicalize();
    Rat rhs = t.total_at(eval_dim_g(pt));
    return {t.module, lhs, rhs, lhs == rhs};
}

// ---------------------------------------------------------------------------
// eigenvalues
// ---------------------------------------------------------------------------

Rat casimir_c2(const Label& label, const VogelPoint& pt, Provenance prov) {
    VogelPoint q = permuted(label, pt);
    Rat eig4;
    switch (label.base) {
        case Base::One: eig4 = prov == Provenance::as_printed ? Rat(1) : Rat(-2); break;
        case Base::g: eig4 = Rat(-3, 2); break;
        case Base::X2: eig4 = Rat(-1); break;
        case Base::X3fam: eig4 = Rat(-1, 2); break;
        case Base::X4: eig4 = Rat(0); break;
        case Base::Y2: eig4 = Rat(-1) - q.a; break;
        case Base::Y3: eig4 = Rat(-1, 2) - Rat(3) * q.a; break;
        case Base::Y4: eig4 = Rat(-6) * q.a; break;
        case Base::B: eig4 = Rat(-1) + q.a; break;
        case Base::C: eig4 = Rat(-1, 2) - Rat(3, 2) * q.a; break;
        case Base::J: eig4 = Rat(-2) * (q.b + q.c); break;
        case Base::D: eig4 = Rat(-3) * q.a - q.b; break;
        case Base::E: eig4 = Rat(-3, 2) * (q.b + q.c); break;
        case Base::H: eig4 = Rat(-3) * q.a; break;
        case Base::G: eig4 = Rat(-4) * q.a; break;
        case Base::I: eig4 = Rat(-2) * q.a; break;
        case Base::F: eig4 = Rat(-2) * q.a - q.b; break;
        default: throw std::logic_error("unreachable");
    }
    Rat c2 = Rat(4) + Rat(2) * eig4;
    c2.canonicalize();
    return c2;
}

Rat casimir_eigenvalue(const Label& label, const VogelPoint& pt, int n, Provenance prov) {
    if (n < 2 || n > 4) throw std::invalid_argument("tensor power n must be 2..4");
    Rat r = (casimir_c2(label, pt, prov) - Rat(n)) / Rat(2);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// exceptional relations and reduced tables
// ---------------------------------------------------------------------------

std::vector<RelationCheck> exceptional_relations(const std::string& algebra) {
    AlgebraId id = parse_algebra(algebra);
    if (id.family != Family::exc)
        throw std::invalid_argument("relations only asserted on exceptional points: " + algebra);

    auto D = [&](const std::string& lab) { return dim_at_algebra(parse_label(lab), id); };
    std::vector<RelationCheck> out;
    auto rel = [&](const std::string& desc, Rat lhs, Rat rhs) {
        lhs.canonicalize();
        rhs.canonicalize();
        out.push_back({desc, lhs, rhs, lhs == rhs});
    };
    // ex1
    rel("dimB = 0", D("B"), Rat(0));
    rel("dimB' = 0", D("B'"), Rat(0));
    rel("dimY2'' = 0", D("Y2''"), Rat(0));
    rel("dimC'' = -dimX2", D("C''"), -D("X2"));
    // ex2
    rel("dimJ = 0", D("J"), Rat(0));
    rel("dimJ' = 0", D("J'"), Rat(0));
    rel("dimD''' = 0", D("D'''"), Rat(0));
    rel("dimD'''' = 0", D("D''''"), Rat(0));
    // ex3
    rel("dimY4'' = -1", D("Y4''"), Rat(-1));
    rel("dimD''''' = -dimY2", D("D'''''"), -D("Y2"));
    rel("dimD'' = -dimY2'", D("D''"), -D("Y2'"));
    // ex4
    rel("dimH'' = dimX2", D("H''"), D("X2"));
    rel("dimE' = -dimC", D("E'"), -D("C"));
    rel("dimE = -dimC'", D("E"), -D("C'"));
    // ex5
    rel("dimG'' = 0", D("G''"), Rat(0));
    rel("dimF'' = 0", D("F''"), Rat(0));
    rel("dimF''' = 0", D("F'''"), Rat(0));
    rel("dimF'''' = 0", D("F''''"), Rat(0));
    rel("dimF''''' = 0", D("F'''''"), Rat(0));
    rel("dim g + dimY3'' = 0", D("g") + D("Y3''"), Rat(0));
    // ex6
    rel("dimI'' + dimB'' = 0", D("I''"), -D("B''"));
    return out;
}

std::vector<TableEntry> reduced_exceptional_table(const std::string& module, Provenance prov) {
    std::string m = canonical_module(module);
    auto L = [](const std::string& s, int mult) { return TableEntry{parse_label(s), mult}; };
    if (m == "1111")
        return {L("g", 1), L("X3", 1), L("X4", 1), L("C", 1), L("C'", 1),
                L("B''", 1), L("Y2", 1), L("Y2'", 1)};
    if (m == "4")
        return {L("1", 1), L("Y2", 2), L("Y2'", 2), L("C", 1), L("C'", 1), L("X3", 1),
                L("D", 1), L("D'", 1), L("J''", 1), L("Y4", 1), L("Y4'", 1)};
    if (m == "31")
        return {L("g", 2), L("E''", 1), L("X3", 1), L("X2", 3), L("G", 1), L("G'", 1),
                L("F", 1), L("F'", 1), L("Y2", 2), L("Y2'", 2), L("B''", 3),
                L("C", 2), L("C'", 2), L("Y3", 1), L("Y3'", 1), L("D", 1), L("D'", 1)};
    if (m == "211")
        return {L("g", 3), L("E''", 1), L("X3", 1), L("X2", 4), L("I", 1), L("I'", 1),
                L("F", 1), L("F'", 1), L("Y2", 1), L("Y2'", 1), L("B''", 3),
                L("C", 2), L("C'", 2), L("Y3", 1), L("Y3'", 1)};
    if (m == "22") {
        if (prov == Provenance::as_printed)
            return {L("1", 2), L("E''", 1), L("J''", 1), L("X3", 1), L("X2", 1), L("H", 1),
                    L("H'", 1), L("Y2", 2), L("Y2'", 2), L("B''", 1), L("C", 1), L("C'", 1),
                    L("D", 1), L("D'", 1)};
        // Consistent cancellation bookkeeping from the full table: the X3-family
        // content is the single eigenspace Z3 (= 2 X3 here), and one more Y2 and
        // Y2' copy survive than the printed list shows (see erratum_log).
        return {L("1", 2), L("E''", 1), L("J''", 1), L("X3", 2), L("X2", 1), L("H", 1),
                L("H'", 1), L("Y2", 3), L("Y2'", 3), L("B''", 1), L("C", 1), L("C'", 1),
                L("D", 1), L("D'", 1)};
    }
    throw std::invalid_argument("no reduced exceptional table for module " + module);
}

const std::vector<Erratum>& erratum_log() {
    static const std::vector<Erratum> log{
        {"Y2-denominator",
         "printed dimY2 has denominator factor (a-1); the corrected factor is (a-b)",
         "the printed form breaks dimY2' = (dimY2)_{a<->b} covariance and gives dimY2(sl3)=27/2; "
         "the corrected form gives 27, matching the measured Sym^2 eigenspace of sl(3), and closes "
         "all sum identities at random points"},
        {"window-X3-double-count",
         "the printed window table lists a standalone X3 eigenspace next to Z3 although "
         "dim Z3 = 2 dim X3 + ratio + diff already carries the full X3-family content",
         "summing the printed window entries exceeds d^2(d^2-1)/12 by exactly dim X3 at every "
         "generic point; an exact tensor measurement of sl(4) confirms the -1/2 eigenspace of the "
         "(2,2) module is 595 = dim Z3(win), not 595 + dim X3"},
        {"singlet-eigenvalue",
         "the eigenvalue table prints 1 for the singlet; the 4-split eigenvalue is (0-4)/2 = -2",
         "the measured (4) and (2,2) modules of sl(4) each carry multiplicity 2 at eigenvalue -2, "
         "exactly the two singlet copies"},
        {"window-reduced-list",
         "the printed reduced window decomposition at exceptional points omits one X3, one Y2 and "
         "one Y2' relative to consistent cancellation bookkeeping",
         "mechanical cancellation of the (corrected) full window table under relations ex1-ex6 "
         "leaves Z3 (= 2 X3), 3 Y2 and 3 Y2'; confirmed against the measured g2 spectra"},
    };
    return log;
}

}  // namespace ug4
