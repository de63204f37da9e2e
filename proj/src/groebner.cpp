#include "lnd/groebner.hpp"

#include <algorithm>
#include <set>

namespace lnd {

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
    std::vector<Polynomial> kept;
    kept.reserve(gens.size());
    for (auto& g : gens) {
        if (!g.ring()->same_ring(*ring)) throw RingMismatchError("generator in wrong ring");
        if (!g.is_zero()) kept.push_back(std::move(g));
    }
    return Ideal{std::move(ring), std::move(kept)};
}

namespace {

// Full reduction against a list of monic polynomials; divisor = first whose
// lead divides the current lead, scanning in list order.
Polynomial reduce_full(Polynomial h, const std::vector<Polynomial>& basis) {
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(h.leading_monomial())) {
                h = h.fma_sub(h.leading_coeff() / g.leading_coeff(),
                              h.leading_monomial().divided_by(g.leading_monomial()), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(h.leading_term());
            h = h.fma_sub(h.leading_coeff(), h.leading_monomial(), Polynomial::one(h.ring()));
        }
    }
    return Polynomial::from_terms(h.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial u = f.leading_monomial().lcm(g.leading_monomial());
    Polynomial a = f.times_term(f.leading_coeff().inverse(), u.divided_by(f.leading_monomial()));
    Polynomial b = g.times_term(g.leading_coeff().inverse(), u.divided_by(g.leading_monomial()));
    return a - b;
}

struct Pair {
    std::size_t i, j;        // i < j
    Monomial lcm;
    std::uint64_t degree;
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const RingPtr& ring) {
    const auto& order = ring->order();
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto &li = basis[i].leading_monomial(), &lj = basis[j].leading_monomial();
            if (lj.divides(li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    // tail-reduce each element against the rest until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = reduce_full(minimal[i], others).monic();
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
        std::erase_if(minimal, [](const Polynomial& p) { return p.is_zero(); });
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& opts) {
    if (order.arity() != ideal.ring->arity()) throw LogicError("order arity mismatch");
    RingPtr gb_ring = ideal.ring->order() == order ? ideal.ring : ideal.ring->with_order(order);

    std::vector<Polynomial> basis;
    for (const auto& g : ideal.generators) basis.push_back(g.in_ring(gb_ring).monic());

    std::vector<Pair> pending;
    // pairs already accounted for: reduced, or skipped by the coprime
    // criterion. Only these may witness the chain criterion.
    std::set<std::pair<std::size_t, std::size_t>> done;

    auto push_pairs = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            Monomial u = basis[i].leading_monomial().lcm(basis[t].leading_monomial());
            pending.push_back({i, t, u, u.degree()});
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs(t);

    std::uint64_t steps = 0;
    while (!pending.empty()) {
        // normal strategy: minimal lcm degree, ties by pair index
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            if (a.degree < b.degree ||
                (a.degree == b.degree && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

        if (basis[pr.i].leading_monomial().coprime_with(basis[pr.j].leading_monomial())) {
            done.insert({pr.i, pr.j});
            continue;
        }
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) chained = true;
        }
        if (chained) continue;

        if (++steps > opts.step_budget)
            throw BudgetExceededError("Groebner step budget exhausted (" +
                                      std::to_string(opts.step_budget) + " pair reductions)");
        Polynomial r = reduce_full(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        done.insert({pr.i, pr.j});
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            push_pairs(basis.size() - 1);
        }
    }

    return GroebnerBasis(ideal, gb_ring, interreduce(std::move(basis), gb_ring));
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts) {
    return buchberger(ideal, ideal.ring->order(), opts);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (!p.ring()->same_variables(*gb.gb_ring()))
        throw RingMismatchError("normal_form: ring mismatch");
    Polynomial r = reduce_full(p.in_ring(gb.gb_ring()), gb.basis());
    return r.in_ring(p.ring());
}

bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

bool ideal_membership(const Polynomial& p, const Ideal& ideal, const BuchbergerOptions& opts) {
    if (!p.ring()->same_variables(*ideal.ring))
        throw RingMismatchError("ideal_membership: ring mismatch");
    return ideal_membership(p, buchberger(ideal, opts));
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep,
                        const BuchbergerOptions& opts) {
    const RingPtr& ring = ideal.ring;
    if (keep.empty()) throw InputError("elimination must keep at least one variable");
    std::vector<bool> kept(ring->arity(), false);
    for (const auto& name : keep) kept[ring->require_index(name)] = true;

    std::vector<std::size_t> perm;
    std::size_t eliminated = 0;
    for (std::size_t i = 0; i < ring->arity(); ++i)
        if (!kept[i]) {
            perm.push_back(i);
            ++eliminated;
        }
    for (std::size_t i = 0; i < ring->arity(); ++i)
        if (kept[i]) perm.push_back(i);

    MonomialOrder order = eliminated == 0
                              ? MonomialOrder::grevlex(std::move(perm))
                              : MonomialOrder::block_grevlex(std::move(perm),
                                                             {eliminated, ring->arity() - eliminated});
    GroebnerBasis gb = buchberger(ideal, order, opts);

    std::vector<std::string> kept_names;
    for (std::size_t i = 0; i < ring->arity(); ++i)
        if (kept[i]) kept_names.push_back(ring->variable(i));
    RingPtr restricted = PolyRing::make(kept_names);

    std::vector<Polynomial> gens;
    for (const auto& g : gb.basis()) {
        bool pure = true;
        for (auto v : g.support())
            if (!kept[v]) {
                pure = false;
                break;
            }
        if (pure) gens.push_back(g.embedded(restricted));
    }
    return Ideal::make(restricted, std::move(gens));
}

}  // namespace lnd
