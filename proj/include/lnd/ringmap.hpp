#ifndef LND_RINGMAP_HPP
#define LND_RINGMAP_HPP

#include <optional>

#include "lnd/groebner.hpp"

namespace lnd {

// A k-algebra homomorphism between polynomial rings, given by the images of
// the source variables.
struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<Polynomial> images;  // one per source variable

    static RingMap make(RingPtr source, RingPtr target, std::vector<Polynomial> images);
    Polynomial apply(const Polynomial& p) const;
};

// Kernel {p in source : map(p) = 0}, computed from the graph ideal
// (tag_i - image_i) by eliminating the target variables. The returned
// generators form a reduced Groebner basis of the kernel.
Ideal ringmap_kernel(const RingMap& map, const BuchbergerOptions& opts = {});

// Kernel of the composite source -> target -> target/(modulo): the graph
// ideal is enlarged by the modulo generators before elimination.
Ideal ringmap_kernel_mod(const RingMap& map, const std::vector<Polynomial>& modulo,
                         const BuchbergerOptions& opts = {});

// Decides p ∈ k[gens]. On success returns the witness: a polynomial in the
// tag ring k[T1..Tr] that evaluates to p under Ti -> gens[i].
struct SubalgebraResult {
    std::optional<Polynomial> witness;  // in tag_ring
    RingPtr tag_ring;
    bool member() const { return witness.has_value(); }
};
SubalgebraResult subalgebra_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                                       const BuchbergerOptions& opts = {});

// Decides p ∈ k[gens][1/c] for c a nonzero member of k[gens], by adjoining
// an inverse tag w with relation c*w = 1.
bool localized_subalgebra_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                                     const Polynomial& c, const BuchbergerOptions& opts = {});

}  // namespace lnd

#endif
