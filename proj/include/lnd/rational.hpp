#ifndef LND_RATIONAL_HPP
#define LND_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "lnd/errors.hpp"

namespace lnd {

// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0,
// zero stored as 0/1. Backed by GMP, so overflow cannot happen.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
    Rational(long num, long den) {
        if (den == 0) throw DivisionError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Accepts "a", "-a", "a/b".
    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw InputError("bad rational literal: '" + s + "'");
        if (v.get_den() == 0) throw DivisionError("rational with zero denominator");
        v.canonicalize();
        return Rational(v, already_canonical_tag{});
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical_tag{}); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_)), already_canonical_tag{}); }
    Rational inverse() const {
        if (is_zero()) throw DivisionError("inverse of zero");
        return Rational(mpq_class(1) / v_, already_canonical_tag{});
    }

    // "a" for integers, "a/b" otherwise; matches the expression grammar.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    struct already_canonical_tag {};
    Rational(mpq_class v, already_canonical_tag) : v_(std::move(v)) {}
    mpq_class v_;  // canonical at all times
};

inline Rational rational_gcd(const Rational& a, const Rational& b) {
    // gcd on numerators over lcm on denominators; gcd(0, x) = |x|.
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    mpq_class q(gn, ld);
    q.canonicalize();
    return Rational(q);
}

}  // namespace lnd

#endif
