#ifndef LND_CONSTRUCTION_HPP
#define LND_CONSTRUCTION_HPP

#include "lnd/derivation.hpp"

namespace lnd {

// A parametrized plane curve w -> (alpha(w), beta(w)).
struct CurveParam {
    RingPtr ring;  // univariate k[W]
    Polynomial alpha;
    Polynomial beta;

    static CurveParam make(Polynomial alpha, Polynomial beta);
    const std::string& parameter_name() const { return ring->variable(0); }
};

// Defining equation of the parametrized curve: the single generator of the
// kernel of Z -> alpha, T -> beta, with integer content 1 and positive
// leading coefficient under grevlex(Z > T). Lives in a fresh ring k[Z,T].
Polynomial implicitize(const CurveParam& param, const BuchbergerOptions& opts = {});

// Degree of the parametrization onto its image; 1 means birational.
std::uint64_t map_degree(const CurveParam& param, const BuchbergerOptions& opts = {});

// Jacobian criterion on the affine plane curve F = 0:
// smooth iff 1 ∈ (F, dF/dZ, dF/dT).
bool is_smooth_curve(const Polynomial& F, const BuchbergerOptions& opts = {});

struct BundleFlags {
    bool fixed_point_free = false;
    bool curve_singular = false;
    bool kernel_certified = false;
};

// The constructed data: on B = k[X1,X2,X3,X4],
//   z = alpha(X2) - X1^m X3,  t = beta(X2) - X1^m X4,  y = F(z,t)/X1^m,
//   D = X1^m d/dX2 + alpha'(X2) d/dX3 + beta'(X2) d/dX4,
// together with the verification record that ker(D) = k[x1,z,t,y].
struct CounterexampleBundle {
    unsigned m = 1;
    CurveParam param;
    Polynomial F;   // in k[Z,T]
    Derivation D;   // on k[X1..X4]
    Polynomial x1, z, t, y;
    std::uint64_t map_deg = 1;
    BundleFlags flags;
    VerificationReport report;
};

CounterexampleBundle build_counterexample(unsigned m, const CurveParam& param,
                                          const BuchbergerOptions& opts = {});

// The built-in family alpha = W^n, beta = W(W^n + 1), F = Z(Z+1)^n - T^n,
// n >= 2: a fixed point free derivation whose kernel has exactly one
// singular point. Asserts the closed form
// D = X1 d2 + n X2^(n-1) d3 + ((n+1) X2^n + 1) d4.
CounterexampleBundle standard_family(unsigned n, const BuchbergerOptions& opts = {});

// Winkelmann's derivation on k[X,Y,U,V,Z]:
//   D(X) = D(Y) = 0, D(U) = Y, D(V) = X, D(Z) = 1 + XU - YV.
// Checks that f = XU-YV, g = YZ-(1+f)U, h = XZ-(1+f)V are killed by D, that
// Y*h - X*g - (1+f)*f vanishes identically, and that D is fixed point free.
VerificationReport winkelmann_check(const BuchbergerOptions& opts = {});

// One step of the generator tower: adjoin h/t to k[base_gens]. Accepted iff
// t and h lie in k[base_gens], t divides h in the ambient ring, and
// h is not in t*k[base_gens] (the degenerate case). Returns the presentation
// k[tags, V]/(base relations, t_tag * V - h_tag).
struct TowerStep {
    bool accepted = false;
    std::string reason;                       // set when rejected
    std::optional<Polynomial> new_generator;  // h/t in the ambient ring
    RingPtr presentation_ring;                // k[T1..Tr, V]
    std::vector<Polynomial> base_relations;   // presentation ideal of k[base_gens]
    std::optional<Polynomial> relation;       // t_tag * V - h_tag
};

TowerStep tower_step(const std::vector<Polynomial>& base_gens, const Polynomial& t,
                     const Polynomial& h, const BuchbergerOptions& opts = {});

}  // namespace lnd

#endif
