#ifndef LND_ORDERING_HPP
#define LND_ORDERING_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lnd/monomial.hpp"

namespace lnd {

enum class OrderKind { lex, grlex, grevlex, block_grevlex };

// Total multiplicative well-order on monomials, with 1 minimal. The variable
// permutation lists variable indices from most to least significant. A
// block_grevlex order compares consecutive blocks (grevlex inside each);
// with the eliminated variables in the leading block it is an elimination
// order for them.
class MonomialOrder {
  public:
    static MonomialOrder lex(std::vector<std::size_t> perm) {
        return MonomialOrder(OrderKind::lex, std::move(perm), {});
    }
    static MonomialOrder grlex(std::vector<std::size_t> perm) {
        return MonomialOrder(OrderKind::grlex, std::move(perm), {});
    }
    static MonomialOrder grevlex(std::vector<std::size_t> perm) {
        return MonomialOrder(OrderKind::grevlex, std::move(perm), {});
    }
    // blocks: most significant first; sizes must sum to the permutation length.
    static MonomialOrder block_grevlex(std::vector<std::size_t> perm,
                                       std::vector<std::size_t> block_sizes) {
        std::size_t total = 0;
        for (auto s : block_sizes) total += s;
        if (total != perm.size()) throw LogicError("block sizes do not cover the permutation");
        return MonomialOrder(OrderKind::block_grevlex, std::move(perm), std::move(block_sizes));
    }
    // Default orders on 0..n-1 in natural significance.
    static MonomialOrder lex(std::size_t n) { return lex(iota(n)); }
    static MonomialOrder grlex(std::size_t n) { return grlex(iota(n)); }
    static MonomialOrder grevlex(std::size_t n) { return grevlex(iota(n)); }

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }
    std::size_t arity() const { return perm_.size(); }

    // three-way: >0 iff a > b, 0 iff equal.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::lex:
                return cmp_lex(a, b, 0, perm_.size());
            case OrderKind::grlex: {
                if (int c = cmp_deg(a, b, 0, perm_.size())) return c;
                return cmp_lex(a, b, 0, perm_.size());
            }
            case OrderKind::grevlex:
                return cmp_grevlex(a, b, 0, perm_.size());
            case OrderKind::block_grevlex: {
                std::size_t begin = 0;
                for (auto size : blocks_) {
                    if (int c = cmp_grevlex(a, b, begin, begin + size)) return c;
                    begin += size;
                }
                return 0;
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.perm_ == b.perm_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

    std::string kind_name() const {
        switch (kind_) {
            case OrderKind::lex: return "lex";
            case OrderKind::grlex: return "grlex";
            case OrderKind::grevlex: return "grevlex";
            case OrderKind::block_grevlex: return "block_grevlex";
        }
        return "?";
    }

  private:
    MonomialOrder(OrderKind k, std::vector<std::size_t> perm, std::vector<std::size_t> blocks)
        : kind_(k), perm_(std::move(perm)), blocks_(std::move(blocks)) {}

    static std::vector<std::size_t> iota(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), std::size_t{0});
        return v;
    }

    int cmp_deg(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = from; i < to; ++i) {
            da += a.exp(perm_[i]);
            db += b.exp(perm_[i]);
        }
        return da < db ? -1 : da > db ? 1 : 0;
    }

    int cmp_lex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
        for (std::size_t i = from; i < to; ++i) {
            auto ea = a.exp(perm_[i]), eb = b.exp(perm_[i]);
            if (ea != eb) return ea > eb ? 1 : -1;
        }
        return 0;
    }

    int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
        if (int c = cmp_deg(a, b, from, to)) return c;
        // ties broken by the last differing variable, smaller exponent wins
        for (std::size_t i = to; i-- > from;) {
            auto ea = a.exp(perm_[i]), eb = b.exp(perm_[i]);
            if (ea != eb) return ea < eb ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_;
    std::vector<std::size_t> perm_;
    std::vector<std::size_t> blocks_;
};

}  // namespace lnd

#endif
