// Exact rational arithmetic helpers on top of GMP's mpq_class.
//
// Conventions used throughout the project:
//   * rationals are always kept canonical (lowest terms, sign on numerator);
//   * text form is "p/q", or just "p" when the denominator is 1.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ug4 {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p/q" (or "p") rendering.
inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parse "p", "p/q", with optional leading '-'. Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
        if (!ok) throw std::invalid_argument("bad rational literal: " + s);
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline long rat_to_long(const Rat& r) {
    if (r.get_den() != 1) throw std::domain_error("rational " + rat_str(r) + " is not an integer");
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer out of range: " + rat_str(r));
    return r.get_num().get_si();
}

}  // namespace ug4
