// Univariate polynomials and rational functions over the exact rationals.
//
// Used for evaluating catalog formulas along one-parameter family lines:
// substituting alpha(N), beta(N), gamma(N) into a formula gives a univariate
// rational function of N whose removable singularities cancel under polynomial
// GCD reduction.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ug4/rational.hpp"

namespace ug4 {

class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& v) const {  // Horner evaluation
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * v + *it;
            acc.canonicalize();
        }
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rat& s, const Poly& a) {
        if (s == 0) return Poly();
        std::vector<Rat> r = a.c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division; returns {quotient, remainder}.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly rem = a;
        std::vector<Rat> q(std::max<int>(a.degree() - b.degree() + 1, 0), Rat(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            Rat factor = rem.leading() / b.leading();
            factor.canonicalize();
            std::vector<Rat> sub(shift + 1, Rat(0));
            sub[shift] = factor;
            rem = rem - Poly(sub) * b;
            q[shift] = factor;
        }
        return {Poly(std::move(q)), rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Rat inv = Rat(1) / leading();
        inv.canonicalize();
        return inv * *this;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;  // c_[k] is the coefficient of x^k
};

// Reduced quotient of two polynomials.
class RatFun {
  public:
    RatFun() : num_(Rat(0)), den_(Rat(1)) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit RatFun(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
    static RatFun x() { return RatFun(Poly::x(), Poly(Rat(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Exact evaluation; throws if v is a (non-removable) pole.
    Rat operator()(const Rat& v) const {
        Rat d = den_(v);
        if (d == 0) throw std::domain_error("non-removable pole in rational function");
        Rat r = num_(v) / d;
        r.canonicalize();
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return (a - b).is_zero();
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator polynomial");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
        // Normalize so the denominator is monic.
        Rat lead = den_.leading();
        Rat inv = Rat(1) / lead;
        inv.canonicalize();
        num_ = inv * num_;
        den_ = inv * den_;
    }
    Poly num_, den_;
};

}  // namespace ug4
