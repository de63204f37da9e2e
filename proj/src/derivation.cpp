#include "lnd/derivation.hpp"

#include <algorithm>

namespace lnd {

Derivation Derivation::make(RingPtr ring, std::vector<Polynomial> images) {
    if (images.size() != ring->arity())
        throw InputError("derivation needs one image per variable");
    for (const auto& im : images)
        if (!im.ring()->same_ring(*ring)) throw RingMismatchError("derivation image in wrong ring");
    return Derivation(std::move(ring), std::move(images));
}

bool Derivation::is_zero() const {
    for (const auto& im : images_)
        if (!im.is_zero()) return false;
    return true;
}

Polynomial apply(const Derivation& D, const Polynomial& p) {
    if (!p.ring()->same_ring(*D.ring())) throw RingMismatchError("apply: ring mismatch");
    Polynomial acc = Polynomial::zero(p.ring());
    for (std::size_t v = 0; v < D.ring()->arity(); ++v) {
        if (D.image(v).is_zero()) continue;
        Polynomial dp = partial_derivative(p, v);
        if (!dp.is_zero()) acc = acc + dp * D.image(v);
    }
    return acc;
}

std::optional<std::uint64_t> nilpotency_index(const Derivation& D, const Polynomial& p,
                                              std::uint64_t cap) {
    if (cap < 1) throw InputError("nilpotency cap must be positive");
    Polynomial q = p;
    std::uint64_t s = 0;
    while (!q.is_zero()) {
        if (s >= cap) return std::nullopt;
        q = apply(D, q);
        ++s;
    }
    return s;
}

std::uint64_t NilpotencyCertificate::max_variable_index() const {
    std::uint64_t m = 1;
    for (auto v : variable_indices) m = std::max(m, v);
    return m;
}

std::uint64_t NilpotencyCertificate::bound_for_degree(std::uint64_t d) const {
    // D^n is a degree function on monomials: index(x^a y^b ...) =
    // 1 + a(index(x)-1) + b(index(y)-1) + ...
    return 1 + d * (max_variable_index() - 1);
}

std::optional<NilpotencyCertificate> certify_triangular(const Derivation& D) {
    const std::size_t n = D.ring()->arity();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    // greedy topological sort of the dependency graph; deterministic because
    // candidates are scanned in ring sequence
    while (order.size() < n) {
        bool progress = false;
        for (std::size_t v = 0; v < n && !progress; ++v) {
            if (placed[v]) continue;
            bool ok = true;
            for (auto dep : D.image(v).support())
                if (!placed[dep]) {
                    ok = false;
                    break;
                }
            if (ok) {
                placed[v] = true;
                order.push_back(v);
                progress = true;
            }
        }
        if (!progress) return std::nullopt;  // cyclic dependency
    }
    NilpotencyCertificate cert;
    cert.order = std::move(order);
    cert.variable_indices.assign(n, 0);
    // triangular implies finite indices; walk in triangular order so each is
    // cheap to compute
    for (auto v : cert.order) {
        auto idx = nilpotency_index(D, Polynomial::variable(D.ring(), v), 1u << 20);
        if (!idx) throw LogicError("triangular derivation with unbounded variable iterate");
        cert.variable_indices[v] = std::max<std::uint64_t>(*idx, 1);
    }
    return cert;
}

Polynomial exp_map(const Derivation& D, const NilpotencyCertificate& cert,
                   const std::string& parameter, const Polynomial& p) {
    if (cert.variable_indices.size() != D.ring()->arity())
        throw CertificateError("certificate arity mismatch");
    if (D.ring()->index_of(parameter))
        throw InputError("parameter '" + parameter + "' already a ring variable");
    std::vector<std::string> names = D.ring()->variables();
    names.push_back(parameter);
    RingPtr ext = PolyRing::make(names);
    std::size_t s_idx = ext->arity() - 1;

    std::uint64_t bound = cert.bound_for_degree(p.total_degree());
    Polynomial acc = Polynomial::zero(ext);
    Polynomial iterate = p;
    Rational inv_factorial(1);
    Polynomial s_power = Polynomial::one(ext);
    Polynomial s_var = Polynomial::variable(ext, s_idx);
    for (std::uint64_t i = 0; !iterate.is_zero(); ++i) {
        if (i > bound)
            throw CertificateError("iteration exceeded the certified nilpotency bound");
        acc = acc + iterate.embedded(ext).scaled(inv_factorial) * s_power;
        iterate = apply(D, iterate);
        s_power = s_power * s_var;
        inv_factorial /= Rational(static_cast<long>(i) + 1);
    }
    return acc;
}

bool kernel_membership(const Derivation& D, const Polynomial& p) {
    return apply(D, p).is_zero();
}

bool fixed_point_free(const Derivation& D, const BuchbergerOptions& opts) {
    std::vector<Polynomial> gens;
    for (const auto& im : D.images())
        if (!im.is_zero()) gens.push_back(im);
    if (gens.empty()) return false;
    return ideal_membership(Polynomial::one(D.ring()), Ideal::make(D.ring(), std::move(gens)),
                            opts);
}

LocalizedPoly LocalizedPoly::reduced() const {
    LocalizedPoly r = *this;
    while (r.power > 0 && divides(r.base, r.numerator)) {
        r.numerator = exact_divide(r.numerator, r.base);
        --r.power;
    }
    if (r.numerator.is_zero()) r.power = 0;
    return r;
}

LocalizedPoly dixmier_map(const Derivation& D, const NilpotencyCertificate& cert,
                          const std::string& slice_var, const Polynomial& p) {
    std::size_t s_idx = D.ring()->require_index(slice_var);
    const Polynomial& c = D.image(s_idx);
    if (c.is_zero()) throw InputError("slice image is zero");
    if (!apply(D, c).is_zero()) throw InputError("slice image is not a kernel element");

    // collect D-iterates of p
    std::vector<Polynomial> iterates{p};
    std::uint64_t bound = cert.bound_for_degree(p.total_degree());
    while (!iterates.back().is_zero()) {
        if (iterates.size() > bound + 1)
            throw CertificateError("iteration exceeded the certified nilpotency bound");
        iterates.push_back(apply(D, iterates.back()));
    }
    iterates.pop_back();
    if (iterates.empty()) return LocalizedPoly{Polynomial::zero(D.ring()), c, 0};

    std::size_t top = iterates.size() - 1;  // numerator over c^top
    Polynomial s = Polynomial::variable(D.ring(), s_idx);
    Polynomial num = Polynomial::zero(D.ring());
    Polynomial s_power = Polynomial::one(D.ring());
    std::vector<Polynomial> c_powers{Polynomial::one(D.ring())};
    for (std::size_t i = 1; i <= top; ++i) c_powers.push_back(c_powers.back() * c);
    Rational coeff(1);  // (-1)^i / i!
    for (std::size_t i = 0; i <= top; ++i) {
        num = num + iterates[i].scaled(coeff) * s_power * c_powers[top - i];
        s_power = s_power * s;
        coeff = -coeff / Rational(static_cast<long>(i) + 1);
    }
    return LocalizedPoly{std::move(num), c, static_cast<std::uint32_t>(top)}.reduced();
}

void VerificationReport::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass ? CheckStatus::pass : CheckStatus::fail,
                      std::move(detail)});
}

void VerificationReport::skip(std::string name, std::string detail) {
    checks.push_back({std::move(name), CheckStatus::skipped, std::move(detail)});
}

const Check* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool VerificationReport::overall() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

namespace {

// Rewrite num/base^power over powers of c, given c^e = q * base:
// num / base^p = num * q^p / c^(e*p), then reduce.
void rebase_localized(const LocalizedPoly& lp, const Polynomial& c, std::uint64_t e,
                      const Rational& q, Polynomial& num_out, std::uint64_t& pow_out) {
    Rational scale(1);
    for (std::uint32_t i = 0; i < lp.power; ++i) scale *= q;
    Polynomial num = lp.numerator.scaled(scale);
    std::uint64_t power = e * lp.power;
    while (power > 0 && divides(c, num)) {
        num = exact_divide(num, c);
        --power;
    }
    num_out = num;
    pow_out = power;
}

}  // namespace

VerificationReport verify_kernel_presentation(const Derivation& D,
                                              const std::vector<Polynomial>& candidates,
                                              const Polynomial& c,
                                              const BuchbergerOptions& opts) {
    if (candidates.empty()) throw InputError("no candidates supplied");
    std::size_t c_index = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidates[i] == c) {
            c_index = i;
            break;
        }
    if (c_index == candidates.size())
        throw InputError("designated element is not among the candidates");
    if (!kernel_membership(D, c)) throw InputError("designated element is not in ker(D)");
    auto cert = certify_triangular(D);
    if (!cert) throw CertificateError("derivation is not triangular");

    VerificationReport report;
    const RingPtr& ring = D.ring();

    // (1) candidates lie in the kernel
    {
        std::string offenders;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (!kernel_membership(D, candidates[i]))
                offenders += (offenders.empty() ? "" : ", ") + candidates[i].render();
        report.add("candidates-in-kernel", offenders.empty(),
                   offenders.empty() ? "all candidates annihilated"
                                     : "not annihilated: " + offenders);
    }

    // (2) localized equality via the Dixmier projection
    {
        bool pass = true;
        std::string detail;
        // slice: first variable in triangular order with a nonzero image;
        // every earlier variable is then in the kernel, so D(slice) is too
        std::optional<std::size_t> slice;
        for (auto v : cert->order)
            if (!D.image(v).is_zero()) {
                slice = v;
                break;
            }
        if (!slice) {
            // zero derivation: the projection is the identity
            for (std::size_t v = 0; v < ring->arity() && pass; ++v)
                if (!subalgebra_membership(Polynomial::variable(ring, v), candidates, opts)
                         .member()) {
                    pass = false;
                    detail = ring->variable(v) + " not in k[candidates]";
                }
            if (pass) detail = "zero derivation; all variables generated";
        } else {
            const Polynomial& c0 = D.image(*slice);
            // find e, q with c^e = q * c0, so 1/c0 = q / c^e and the
            // Dixmier denominators convert to powers of c
            std::uint64_t e = 0;
            Rational q(0);
            bool compatible = false;
            if (c.is_constant()) {
                compatible = c0.is_constant();
                if (compatible) q = c0.constant_coeff().inverse();
            } else if (c0.total_degree() % c.total_degree() == 0) {
                e = c0.total_degree() / c.total_degree();
                Polynomial ce = pow(c, e);
                if (divides(c0, ce)) {
                    Polynomial quot = exact_divide(ce, c0);
                    if (quot.is_constant()) {
                        q = quot.constant_coeff();
                        compatible = true;
                    }
                }
            }
            if (!compatible) {
                pass = false;
                detail = "slice image " + c0.render() +
                         " is not a rational multiple of a power of " + c.render();
            } else {
                for (std::size_t v = 0; v < ring->arity() && pass; ++v) {
                    LocalizedPoly pi =
                        dixmier_map(D, *cert, ring->variable(*slice),
                                    Polynomial::variable(ring, v));
                    Polynomial num = pi.numerator;
                    std::uint64_t power = 0;
                    rebase_localized(pi, c, e, q, num, power);
                    bool member = subalgebra_membership(num, candidates, opts).member() ||
                                  localized_subalgebra_membership(num, candidates, c, opts);
                    if (!member) {
                        pass = false;
                        detail = "cleared projection of " + ring->variable(v) + " = " +
                                 num.render() + " not in k[candidates][1/c]";
                    }
                }
                if (pass)
                    detail = "slice " + ring->variable(*slice) +
                             "; all cleared projections generated";
            }
        }
        report.add("localized-equality", pass, detail);
    }

    // (3) injectivity of k[candidates]/(c) -> ring/(c): the kernel of the
    // candidate map composed with reduction mod c equals the plain kernel
    // plus the tag of c
    {
        std::vector<std::string> tag_names;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            tag_names.push_back("T" + std::to_string(i + 1));
        RingPtr tag_ring = PolyRing::make(tag_names);
        RingMap cand_map = RingMap::make(tag_ring, ring, candidates);

        Ideal J = ringmap_kernel(cand_map, opts);
        Ideal Jc = ringmap_kernel_mod(cand_map, {c}, opts);

        std::vector<Polynomial> j_plus = J.generators;
        j_plus.push_back(Polynomial::variable(tag_ring, c_index));
        GroebnerBasis gb_plus = buchberger(Ideal::make(tag_ring, j_plus), opts);
        GroebnerBasis gb_c = buchberger(Ideal::make(tag_ring, Jc.generators), opts);

        bool pass = true;
        std::string detail = "relations mod c equal relations plus the tag of c";
        for (const auto& g : gb_c.basis())
            if (!normal_form(g, gb_plus).is_zero()) {
                pass = false;
                detail = "extra relation mod c: " + g.render();
                break;
            }
        if (pass)
            for (const auto& g : gb_plus.basis())
                if (!normal_form(g, gb_c).is_zero()) {
                    pass = false;
                    detail = "missing relation mod c: " + g.render();
                    break;
                }
        report.add("mod-c-injectivity", pass, detail);
    }

    return report;
}

}  // namespace lnd
