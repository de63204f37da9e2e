#ifndef LND_GROEBNER_HPP
#define LND_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

struct BuchbergerOptions {
    // Cap on S-pair reductions. Exceeding it raises BudgetExceededError,
    // never a wrong answer.
    std::uint64_t step_budget = 1'000'000;
};

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;  // zero generators dropped

    static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
};

// Reduced Groebner basis: auto-reduced, monic, sorted descending by leading
// monomial. Deterministic function of (generators, order).
class GroebnerBasis {
  public:
    GroebnerBasis(Ideal ideal, RingPtr gb_ring, std::vector<Polynomial> basis)
        : ideal_(std::move(ideal)), gb_ring_(std::move(gb_ring)), basis_(std::move(basis)) {}

    const Ideal& ideal() const { return ideal_; }
    const RingPtr& gb_ring() const { return gb_ring_; }
    const MonomialOrder& order() const { return gb_ring_->order(); }
    const std::vector<Polynomial>& basis() const { return basis_; }
    bool is_trivial() const {  // the whole ring
        return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
    }

  private:
    Ideal ideal_;
    RingPtr gb_ring_;
    std::vector<Polynomial> basis_;
};

// Buchberger with normal pair selection, coprime-lead and chain criteria,
// full S-polynomial reduction and a final inter-reduction pass.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts = {});

// Unique remainder of p modulo the basis; idempotent; p - nf(p) lies in the
// ideal. Result is returned in p's own ring.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb);
bool ideal_membership(const Polynomial& p, const Ideal& ideal,
                      const BuchbergerOptions& opts = {});

// Generators of ideal ∩ k[keep], returned in the ring k[keep]. Uses a block
// order with the eliminated variables in the leading block.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep,
                        const BuchbergerOptions& opts = {});

}  // namespace lnd

#endif
