#include "lnd/construction.hpp"

namespace lnd {

CurveParam CurveParam::make(Polynomial alpha, Polynomial beta) {
    require_same_ring(alpha, beta);
    if (alpha.ring()->arity() != 1) throw InputError("curve parametrization must be univariate");
    if (alpha.is_constant() && beta.is_constant())
        throw InputError("alpha and beta cannot both be constant");
    return CurveParam{alpha.ring(), std::move(alpha), std::move(beta)};
}

Polynomial implicitize(const CurveParam& param, const BuchbergerOptions& opts) {
    RingPtr zt = PolyRing::make({"Z", "T"});
    RingMap map = RingMap::make(zt, param.ring, {param.alpha, param.beta});
    Ideal kernel = ringmap_kernel(map, opts);
    if (kernel.generators.size() != 1)
        throw LogicError("implicitization kernel is not principal (" +
                         std::to_string(kernel.generators.size()) + " generators)");
    Polynomial F = kernel.generators[0].primitive_normalized();
    if (!map.apply(F).is_zero())
        throw LogicError("implicit equation does not vanish on the parametrization");
    return F;
}

namespace {

// deg of the parametrization onto its image; uses whichever coordinate is
// nonconstant.
std::uint64_t map_degree_impl(const CurveParam& param, const Polynomial& F) {
    bool use_alpha = !param.alpha.is_constant();
    std::uint64_t num = (use_alpha ? param.alpha : param.beta).total_degree();
    std::uint64_t den = F.degree_in(F.ring()->require_index(use_alpha ? "T" : "Z"));
    if (den == 0 || num % den != 0)
        throw LogicError("map degree is not an exact quotient");
    return num / den;
}

}  // namespace

std::uint64_t map_degree(const CurveParam& param, const BuchbergerOptions& opts) {
    if (param.alpha.is_constant()) throw InputError("map_degree needs a nonconstant alpha");
    return map_degree_impl(param, implicitize(param, opts));
}

bool is_smooth_curve(const Polynomial& F, const BuchbergerOptions& opts) {
    if (F.is_constant()) throw InputError("smoothness test needs a nonconstant polynomial");
    std::vector<Polynomial> gens{F};
    for (std::size_t v = 0; v < F.ring()->arity(); ++v)
        gens.push_back(partial_derivative(F, v));
    return ideal_membership(Polynomial::one(F.ring()), Ideal::make(F.ring(), std::move(gens)),
                            opts);
}

CounterexampleBundle build_counterexample(unsigned m, const CurveParam& param,
                                          const BuchbergerOptions& opts) {
    if (m < 1) throw InputError("m must be positive");
    RingPtr B = PolyRing::make({"X1", "X2", "X3", "X4"});
    Polynomial X1 = Polynomial::variable(B, 0), X2 = Polynomial::variable(B, 1);
    Polynomial X3 = Polynomial::variable(B, 2), X4 = Polynomial::variable(B, 3);
    Polynomial x1m = pow(X1, m);

    Polynomial F = implicitize(param, opts);

    Polynomial z = substitute(param.alpha, {X2}) - x1m * X3;
    Polynomial t = substitute(param.beta, {X2}) - x1m * X4;
    Polynomial F_zt = substitute(F, {z, t});
    if (!divides(x1m, F_zt))
        throw LogicError("F(z,t) is not divisible by X1^m");  // contradicts the construction
    Polynomial y = exact_divide(F_zt, x1m);

    Polynomial alpha_d = partial_derivative(param.alpha, 0);
    Polynomial beta_d = partial_derivative(param.beta, 0);
    Derivation D = Derivation::make(
        B, {Polynomial::zero(B), x1m, substitute(alpha_d, {X2}), substitute(beta_d, {X2})});

    CounterexampleBundle bundle{m,  param, F, D, X1, z, t, y, 1, {}, {}};
    VerificationReport& rep = bundle.report;

    rep.add("curve-annihilation", true, "F(alpha, beta) = 0");
    rep.add("division-identity", x1m * y == F_zt, "X1^m * y = F(z, t)");
    {
        bool ann = kernel_membership(D, X1) && kernel_membership(D, z) &&
                   kernel_membership(D, t) && kernel_membership(D, y);
        rep.add("derivation-annihilates-generators", ann, "D(x1) = D(z) = D(t) = D(y) = 0");
    }

    bundle.map_deg = map_degree_impl(param, F);
    if (bundle.map_deg == 1)
        rep.add("parametrization-birational", true, "map degree 1");
    else
        rep.skip("parametrization-birational",
                 "warning: map degree " + std::to_string(bundle.map_deg) +
                     ", parametrization is not injective");

    bool fpf_gcd = univariate_gcd(alpha_d, beta_d) == Polynomial::one(param.ring);
    bool fpf_ideal = fixed_point_free(D, opts);
    bundle.flags.fixed_point_free = fpf_ideal;
    rep.add("fpf-cross-validation", fpf_gcd == fpf_ideal,
            std::string("gcd test: ") + (fpf_gcd ? "free" : "not free") +
                ", ideal test: " + (fpf_ideal ? "free" : "not free"));

    bundle.flags.curve_singular = !is_smooth_curve(F, opts);

    VerificationReport kernel_rep = verify_kernel_presentation(D, {X1, z, t, y}, X1, opts);
    for (auto& check : kernel_rep.checks) rep.checks.push_back(std::move(check));
    bundle.flags.kernel_certified = kernel_rep.overall();

    return bundle;
}

CounterexampleBundle standard_family(unsigned n, const BuchbergerOptions& opts) {
    if (n < 2) throw InputError("the family needs n >= 2");
    RingPtr kw = PolyRing::make({"W"});
    Polynomial W = Polynomial::variable(kw, 0);
    Polynomial alpha = pow(W, n);
    Polynomial beta = W * (pow(W, n) + Polynomial::one(kw));
    CurveParam param = CurveParam::make(alpha, beta);

    // alpha(alpha + 1)^n = beta^n, so (alpha, beta) lies on Z(Z+1)^n = T^n
    Polynomial one = Polynomial::one(kw);
    if (alpha * pow(alpha + one, n) != pow(beta, n))
        throw LogicError("family identity alpha(alpha+1)^n = beta^n failed");

    CounterexampleBundle bundle = build_counterexample(1, param, opts);

    const RingPtr& B = bundle.D.ring();
    Polynomial X1 = Polynomial::variable(B, 0), X2 = Polynomial::variable(B, 1);
    Polynomial nl = Polynomial::constant(B, Rational(static_cast<long>(n)));
    Polynomial n1 = Polynomial::constant(B, Rational(static_cast<long>(n) + 1));
    bool closed_form = bundle.D.image(0).is_zero() && bundle.D.image(1) == X1 &&
                       bundle.D.image(2) == nl * pow(X2, n - 1) &&
                       bundle.D.image(3) == n1 * pow(X2, n) + Polynomial::one(B);
    if (!closed_form) throw LogicError("derivation does not match its closed form");
    bundle.report.add("closed-form-derivation", true,
                      "D = X1 d2 + n X2^(n-1) d3 + ((n+1) X2^n + 1) d4");
    return bundle;
}

VerificationReport winkelmann_check(const BuchbergerOptions& opts) {
    RingPtr ring = PolyRing::make({"X", "Y", "U", "V", "Z"});
    Polynomial X = Polynomial::variable(ring, 0), Y = Polynomial::variable(ring, 1);
    Polynomial U = Polynomial::variable(ring, 2), V = Polynomial::variable(ring, 3);
    Polynomial Z = Polynomial::variable(ring, 4);
    Polynomial one = Polynomial::one(ring);

    Polynomial f = X * U - Y * V;
    Derivation D = Derivation::make(
        ring, {Polynomial::zero(ring), Polynomial::zero(ring), Y, X, one + f});
    Polynomial g = Y * Z - (one + f) * U;
    Polynomial h = X * Z - (one + f) * V;

    VerificationReport rep;
    rep.add("annihilates-f", kernel_membership(D, f), "D(XU - YV) = 0");
    rep.add("annihilates-g", kernel_membership(D, g), "D(YZ - (1+f)U) = 0");
    rep.add("annihilates-h", kernel_membership(D, h), "D(XZ - (1+f)V) = 0");
    Polynomial residual = Y * h - X * g - (one + f) * f;
    rep.add("relation-residual", residual.is_zero(), residual.render());
    rep.add("fixed-point-free", fixed_point_free(D, opts), "1 in (X, Y, 1 + XU - YV)");
    return rep;
}

TowerStep tower_step(const std::vector<Polynomial>& base_gens, const Polynomial& t,
                     const Polynomial& h, const BuchbergerOptions& opts) {
    if (base_gens.empty()) throw InputError("tower step needs base generators");
    const RingPtr& ambient = base_gens[0].ring();
    if (t.is_zero()) throw InputError("tower step needs t != 0");

    SubalgebraResult wt = subalgebra_membership(t, base_gens, opts);
    if (!wt.member()) throw InputError("t is not in the base subalgebra");
    SubalgebraResult wh = subalgebra_membership(h, base_gens, opts);
    if (!wh.member()) throw InputError("h is not in the base subalgebra");

    TowerStep step;
    // degenerate iff h = t*a for some a already in the subalgebra; the new
    // generator h/t need not exist in the ambient ring (formal adjunction)
    if (divides(t, h)) {
        Polynomial quotient = exact_divide(h, t);
        if (subalgebra_membership(quotient, base_gens, opts).member()) {
            step.reason = "degenerate step: h lies in t * k[base]";
            return step;
        }
        step.new_generator = quotient;
    }

    std::vector<std::string> names = wt.tag_ring->variables();
    names.push_back("V");
    RingPtr pres = PolyRing::make(names);

    RingMap base_map = RingMap::make(wt.tag_ring, ambient, base_gens);
    Ideal base_rel = ringmap_kernel(base_map, opts);

    step.accepted = true;
    step.presentation_ring = pres;
    for (const auto& r : base_rel.generators) step.base_relations.push_back(r.embedded(pres));
    Polynomial V = Polynomial::variable(pres, pres->arity() - 1);
    step.relation = wt.witness->embedded(pres) * V - wh.witness->embedded(pres);
    return step;
}

}  // namespace lnd
