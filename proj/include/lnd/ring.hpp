#ifndef LND_RING_HPP
#define LND_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lnd/errors.hpp"
#include "lnd/ordering.hpp"

namespace lnd {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A polynomial ring over Q: named variables plus the monomial order that
// defines canonical term sequences. Immutable; shared by the polynomials
// that live in it.
class PolyRing {
  public:
    static RingPtr make(std::vector<std::string> variables) {
        auto order = MonomialOrder::grevlex(variables.size());
        return make(std::move(variables), std::move(order));
    }

    static RingPtr make(std::vector<std::string> variables, MonomialOrder order) {
        if (variables.empty()) throw InputError("ring needs at least one variable");
        if (order.arity() != variables.size()) throw LogicError("order arity mismatch");
        for (std::size_t i = 0; i < variables.size(); ++i)
            for (std::size_t j = i + 1; j < variables.size(); ++j)
                if (variables[i] == variables[j])
                    throw InputError("duplicate variable name: " + variables[i]);
        return RingPtr(new PolyRing(std::move(variables), std::move(order)));
    }

    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(std::size_t i) const { return vars_.at(i); }
    const MonomialOrder& order() const { return order_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require_index(const std::string& name) const {
        auto idx = index_of(name);
        if (!idx) throw InputError("unknown variable '" + name + "'");
        return *idx;
    }

    // Same variables in the same sequence; the order may differ.
    bool same_variables(const PolyRing& o) const { return vars_ == o.vars_; }

    // Structural identity: variables and order both agree.
    bool same_ring(const PolyRing& o) const {
        return vars_ == o.vars_ && order_ == o.order_;
    }

    RingPtr with_order(MonomialOrder order) const {
        return make(vars_, std::move(order));
    }

  private:
    PolyRing(std::vector<std::string> vars, MonomialOrder order)
        : vars_(std::move(vars)), order_(std::move(order)) {
        for (std::size_t i = 0; i < vars_.size(); ++i) index_.emplace(vars_[i], i);
    }

    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace lnd

#endif
