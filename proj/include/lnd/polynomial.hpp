#ifndef LND_POLYNOMIAL_HPP
#define LND_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "lnd/monomial.hpp"
#include "lnd/rational.hpp"
#include "lnd/ring.hpp"

namespace lnd {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse exact polynomial. Terms are kept in canonical form: sorted strictly
// descending under the ring order, no zero coefficients. Structural equality
// of canonical forms is semantic equality. Immutable in spirit; all
// operations return fresh values.
class Polynomial {
  public:
    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, Rational c);
    static Polynomial one(RingPtr ring) { return constant(std::move(ring), Rational(1)); }
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial term(RingPtr ring, Monomial m, Rational c);
    // Accepts terms in any order, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
    std::size_t term_count() const { return terms_.size(); }

    // Leading data under the ring order; throws on zero.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    std::uint64_t degree_in(std::size_t var) const;
    Rational constant_coeff() const;

    // Variables actually appearing.
    std::vector<std::size_t> support() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Rational& c, const Monomial& m) const;
    // this - c * m * g, the reduction workhorse.
    Polynomial fma_sub(const Rational& c, const Monomial& m, const Polynomial& g) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial monic() const;  // leading coefficient 1; zero stays zero
    // Multiply by the rational that makes coefficients integral with gcd 1;
    // sign fixed so the leading coefficient is positive.
    Polynomial primitive_normalized() const;

    // Same variables, another order: re-sorts the canonical form.
    Polynomial in_ring(const RingPtr& target) const;
    // Rename/embed by variable name into a ring containing all support vars.
    Polynomial embedded(const RingPtr& target) const;

    std::string render() const;

  private:
    Polynomial(RingPtr ring, std::vector<Term> sorted)
        : ring_(std::move(ring)), terms_(std::move(sorted)) {}
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, std::uint64_t e);
Polynomial partial_derivative(const Polynomial& p, std::size_t var);
Polynomial partial_derivative(const Polynomial& p, const std::string& var);

// Ring homomorphism determined by images of all variables of p's ring;
// every image must live in the same target ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

// Returns p / q; throws DivisionError if q = 0 or q does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);
bool divides(const Polynomial& q, const Polynomial& p);

// Monic gcd of two effectively univariate polynomials in a common variable.
Polynomial univariate_gcd(const Polynomial& p, const Polynomial& q);

void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace lnd

#endif
