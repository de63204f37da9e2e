#include "lnd/ringmap.hpp"

#include <algorithm>
#include <set>

namespace lnd {

namespace {

std::string uniquify(std::string name, std::set<std::string>& taken) {
    while (taken.count(name)) name += "_";
    taken.insert(name);
    return name;
}

// Combined ring [front block | tag block] under a two-block grevlex order;
// elements of the front block are eliminated.
RingPtr combined_ring(const std::vector<std::string>& front, const std::vector<std::string>& tags) {
    std::vector<std::string> names = front;
    names.insert(names.end(), tags.begin(), tags.end());
    std::vector<std::size_t> perm(names.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return PolyRing::make(names,
                          MonomialOrder::block_grevlex(std::move(perm), {front.size(), tags.size()}));
}

// Rebuild a combined-ring polynomial, whose support lies in the tag block,
// as an element of `out` (tag position i of the block -> variable i of out).
Polynomial tags_to_ring(const Polynomial& p, std::size_t tag_offset, const RingPtr& out) {
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e(out->arity(), 0);
        for (std::size_t i = 0; i < p.ring()->arity(); ++i) {
            auto exp = t.mono.exp(i);
            if (exp == 0) continue;
            if (i < tag_offset) throw LogicError("polynomial not in the tag block");
            e[i - tag_offset] = exp;
        }
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(out, std::move(terms));
}

bool in_tag_block(const Polynomial& p, std::size_t tag_offset) {
    for (auto v : p.support())
        if (v < tag_offset) return false;
    return true;
}

}  // namespace

RingMap RingMap::make(RingPtr source, RingPtr target, std::vector<Polynomial> images) {
    if (images.size() != source->arity())
        throw InputError("ring map needs one image per source variable");
    for (const auto& im : images)
        if (!im.ring()->same_ring(*target)) throw RingMismatchError("image in wrong ring");
    return RingMap{std::move(source), std::move(target), std::move(images)};
}

Polynomial RingMap::apply(const Polynomial& p) const {
    if (!p.ring()->same_variables(*source)) throw RingMismatchError("ring map: wrong source");
    return substitute(p, images);
}

namespace {

Ideal kernel_impl(const RingMap& map, const std::vector<Polynomial>* modulo,
                  const BuchbergerOptions& opts) {
    std::set<std::string> taken(map.target->variables().begin(), map.target->variables().end());
    std::vector<std::string> tags;
    for (const auto& v : map.source->variables()) tags.push_back(uniquify(v, taken));
    RingPtr comb = combined_ring(map.target->variables(), tags);
    std::size_t offset = map.target->arity();

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < map.source->arity(); ++i) {
        Polynomial tag = Polynomial::variable(comb, offset + i);
        gens.push_back(tag - map.images[i].embedded(comb));
    }
    if (modulo)
        for (const auto& m : *modulo) {
            if (!m.ring()->same_ring(*map.target))
                throw RingMismatchError("modulo generator in wrong ring");
            gens.push_back(m.embedded(comb));
        }

    GroebnerBasis gb = buchberger(Ideal::make(comb, std::move(gens)), opts);
    std::vector<Polynomial> out;
    for (const auto& g : gb.basis())
        if (in_tag_block(g, offset)) out.push_back(tags_to_ring(g, offset, map.source));
    return Ideal::make(map.source, std::move(out));
}

}  // namespace

Ideal ringmap_kernel(const RingMap& map, const BuchbergerOptions& opts) {
    return kernel_impl(map, nullptr, opts);
}

Ideal ringmap_kernel_mod(const RingMap& map, const std::vector<Polynomial>& modulo,
                         const BuchbergerOptions& opts) {
    return kernel_impl(map, &modulo, opts);
}

SubalgebraResult subalgebra_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                                       const BuchbergerOptions& opts) {
    if (gens.empty()) throw InputError("subalgebra needs at least one generator");
    const RingPtr& ambient = p.ring();
    for (const auto& g : gens)
        if (!g.ring()->same_ring(*ambient)) throw RingMismatchError("generator in wrong ring");

    std::vector<std::string> tag_names;
    for (std::size_t i = 0; i < gens.size(); ++i) tag_names.push_back("T" + std::to_string(i + 1));
    RingPtr tag_ring = PolyRing::make(tag_names);

    std::set<std::string> taken(ambient->variables().begin(), ambient->variables().end());
    std::vector<std::string> tags;
    for (const auto& n : tag_names) tags.push_back(uniquify(n, taken));
    RingPtr comb = combined_ring(ambient->variables(), tags);
    std::size_t offset = ambient->arity();

    std::vector<Polynomial> rel;
    for (std::size_t i = 0; i < gens.size(); ++i)
        rel.push_back(Polynomial::variable(comb, offset + i) - gens[i].embedded(comb));
    GroebnerBasis gb = buchberger(Ideal::make(comb, std::move(rel)), opts);

    Polynomial nf = normal_form(p.embedded(comb), gb);
    if (!in_tag_block(nf, offset)) return {std::nullopt, tag_ring};
    return {tags_to_ring(nf, offset, tag_ring), tag_ring};
}

bool localized_subalgebra_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                                     const Polynomial& c, const BuchbergerOptions& opts) {
    if (c.is_zero()) throw InputError("cannot localize at zero");
    const RingPtr& ambient = p.ring();
    if (!c.ring()->same_ring(*ambient)) throw RingMismatchError("c in wrong ring");
    if (!subalgebra_membership(c, gens, opts).member())
        throw InputError("localization element is not in the subalgebra");

    std::set<std::string> taken(ambient->variables().begin(), ambient->variables().end());
    std::string w = uniquify("w", taken);
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < gens.size(); ++i)
        tags.push_back(uniquify("T" + std::to_string(i + 1), taken));
    tags.push_back(uniquify("Tw", taken));

    std::vector<std::string> front = ambient->variables();
    front.push_back(w);
    RingPtr comb = combined_ring(front, tags);
    std::size_t w_idx = ambient->arity();
    std::size_t offset = front.size();

    std::vector<Polynomial> rel;
    Polynomial wv = Polynomial::variable(comb, w_idx);
    rel.push_back(c.embedded(comb) * wv - Polynomial::one(comb));
    for (std::size_t i = 0; i < gens.size(); ++i)
        rel.push_back(Polynomial::variable(comb, offset + i) - gens[i].embedded(comb));
    rel.push_back(Polynomial::variable(comb, offset + gens.size()) - wv);

    GroebnerBasis gb = buchberger(Ideal::make(comb, std::move(rel)), opts);
    Polynomial nf = normal_form(p.embedded(comb), gb);
    return in_tag_block(nf, offset);
}

}  // namespace lnd
