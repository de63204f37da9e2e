#ifndef LND_MONOMIAL_HPP
#define LND_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "lnd/errors.hpp"

namespace lnd {

// Exponent vector; length equals the arity of its ring.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const {
        for (auto e : exps_)
            if (e != 0) return false;
        return true;
    }

    Monomial times(const Monomial& o) const {
        check_same_arity(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        check_same_arity(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // this / o; requires o.divides(*this).
    Monomial divided_by(const Monomial& o) const {
        check_same_arity(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (o.exps_[i] > exps_[i]) throw LogicError("monomial division not exact");
            r.exps_[i] -= o.exps_[i];
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        check_same_arity(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (o.exps_[i] > r.exps_[i]) r.exps_[i] = o.exps_[i];
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        check_same_arity(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && o.exps_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  private:
    void check_same_arity(const Monomial& o) const {
        if (exps_.size() != o.exps_.size()) throw LogicError("monomial arity mismatch");
    }
    std::vector<std::uint32_t> exps_;
};

}  // namespace lnd

#endif
