#include "lnd/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace lnd {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring()->same_ring(*b.ring()))
        throw RingMismatchError("operands live in different rings");
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
    if (c.is_zero()) return zero(std::move(ring));
    Monomial one(ring->arity());
    std::vector<Term> t{{std::move(one), std::move(c)}};
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->arity()) throw InputError("variable index out of range");
    Monomial m(ring->arity());
    std::vector<std::uint32_t> e(ring->arity(), 0);
    e[index] = 1;
    std::vector<Term> t{{Monomial(std::move(e)), Rational(1)}};
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    auto idx = ring->require_index(name);
    return variable(std::move(ring), idx);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational c) {
    if (m.arity() != ring->arity()) throw LogicError("monomial arity mismatch");
    if (c.is_zero()) return zero(std::move(ring));
    std::vector<Term> t{{std::move(m), std::move(c)}};
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.arity() != ring->arity()) throw LogicError("monomial arity mismatch");
    const auto& order = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return order.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ring), std::move(out));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw LogicError("leading term of zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::uint64_t Polynomial::degree_in(std::size_t var) const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max<std::uint64_t>(d, t.mono.exp(var));
    return d;
}

Rational Polynomial::constant_coeff() const {
    for (const auto& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return Rational(0);
}

std::vector<std::size_t> Polynomial::support() const {
    std::vector<bool> seen(ring_->arity(), false);
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < ring_->arity(); ++i)
            if (t.mono.exp(i) != 0) seen[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = -x.coeff;
    return Polynomial(ring_, std::move(t));
}

namespace {

// Merge two canonical term lists: c1*a + c2*m2*b where m2 may be the unit.
std::vector<Term> merge_terms(const MonomialOrder& order, const std::vector<Term>& a,
                              const std::vector<Term>& b, const Rational& cb,
                              const Monomial* mb) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto bterm = [&](std::size_t k) -> Term {
        const Term& t = b[k];
        return {mb ? t.mono.times(*mb) : t.mono, t.coeff * cb};
    };
    while (i < a.size() && j < b.size()) {
        Term tb = bterm(j);
        int c = order.compare(a[i].mono, tb.mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(std::move(tb));
            ++j;
        } else {
            Rational s = a[i].coeff + tb.coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(bterm(j));
    return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    return Polynomial(a.ring_, merge_terms(a.ring_->order(), a.terms_, b.terms_,
                                           Rational(1), nullptr));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    return Polynomial(a.ring_, merge_terms(a.ring_->order(), a.terms_, b.terms_,
                                           Rational(-1), nullptr));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff *= c;
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) {
        x.mono = x.mono.times(m);
        x.coeff *= c;
    }
    // multiplying by a fixed monomial preserves the order of terms
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::fma_sub(const Rational& c, const Monomial& m, const Polynomial& g) const {
    require_same_ring(*this, g);
    return Polynomial(ring_, merge_terms(ring_->order(), terms_, g.terms_, -c, &m));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring_);
    const auto& order = a.ring_->order();
    auto cmp = [&](const Monomial& x, const Monomial& y) { return order.compare(x, y) > 0; };
    std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mono.times(tb.mono);
            auto [it, fresh] = acc.try_emplace(std::move(m), Rational(0));
            it->second += ta.coeff * tb.coeff;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back({m, std::move(c)});
    return Polynomial(a.ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_->same_variables(*b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.ring_->same_ring(*b.ring_)) return a == b.in_ring(a.ring_);
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::primitive_normalized() const {
    if (is_zero()) return *this;
    Rational content(0);
    for (const auto& t : terms_) content = rational_gcd(content, t.coeff);
    Polynomial r = scaled(content.inverse());
    if (r.leading_coeff().sign() < 0) r = r.scaled(Rational(-1));
    return r;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
    if (!ring_->same_variables(*target)) throw RingMismatchError("variable lists differ");
    return from_terms(target, terms_);
}

Polynomial Polynomial::embedded(const RingPtr& target) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    std::vector<std::size_t> where(ring_->arity());
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
        auto idx = target->index_of(ring_->variable(i));
        if (!idx) {
            if (degree_in(i) > 0)
                throw RingMismatchError("target ring lacks variable " + ring_->variable(i));
            where[i] = 0;
        } else {
            where[i] = *idx;
        }
    }
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(target->arity(), 0);
        for (std::size_t i = 0; i < ring_->arity(); ++i) e[where[i]] += t.mono.exp(i);
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(target, std::move(out));
}

std::string Polynomial::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        bool printed = false;
        if (!c.is_one() || t.mono.is_one()) {
            os << c.str();
            printed = true;
        }
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            auto e = t.mono.exp(i);
            if (e == 0) continue;
            if (printed) os << "*";
            os << ring_->variable(i);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

Polynomial pow(const Polynomial& p, std::uint64_t e) {
    Polynomial r = Polynomial::one(p.ring());
    Polynomial base = p;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.ring()->arity()) throw InputError("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        auto e = t.mono.exp(var);
        if (e == 0) continue;
        std::vector<std::uint32_t> m = t.mono.exponents();
        m[var] -= 1;
        out.push_back({Monomial(std::move(m)), t.coeff * Rational(static_cast<long>(e))});
    }
    return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& p, const std::string& var) {
    return partial_derivative(p, p.ring()->require_index(var));
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (images.size() != p.ring()->arity())
        throw InputError("substitute needs an image for every variable");
    RingPtr target = images.front().ring();
    for (const auto& im : images)
        if (!im.ring()->same_ring(*target)) throw RingMismatchError("images in different rings");
    // cache powers per variable
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::one(target));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : p.terms()) {
        Polynomial m = Polynomial::constant(target, t.coeff);
        for (std::size_t v = 0; v < images.size(); ++v) {
            auto e = t.mono.exp(v);
            if (e > 0) m = m * power_of(v, e);
        }
        acc = acc + m;
    }
    return acc;
}

bool divides(const Polynomial& q, const Polynomial& p) {
    if (q.is_zero()) return p.is_zero();
    Polynomial r = p;
    const auto& ql = q.leading_term();
    while (!r.is_zero()) {
        if (!ql.mono.divides(r.leading_monomial())) return false;
        r = r.fma_sub(r.leading_coeff() / ql.coeff,
                      r.leading_monomial().divided_by(ql.mono), q);
    }
    return true;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw DivisionError("exact_divide by zero");
    std::vector<Term> quot;
    Polynomial r = p;
    const auto& ql = q.leading_term();
    while (!r.is_zero()) {
        if (!ql.mono.divides(r.leading_monomial()))
            throw DivisionError("exact_divide: not divisible");
        Rational c = r.leading_coeff() / ql.coeff;
        Monomial m = r.leading_monomial().divided_by(ql.mono);
        quot.push_back({m, c});
        r = r.fma_sub(c, m, q);
    }
    return Polynomial::from_terms(p.ring(), std::move(quot));
}

namespace {

// Coefficient list of an effectively univariate polynomial, low to high.
std::vector<Rational> univariate_coeffs(const Polynomial& p, std::size_t var) {
    std::vector<Rational> c(p.degree_in(var) + 1, Rational(0));
    for (const auto& t : p.terms()) c[t.mono.exp(var)] = t.coeff;
    return c;
}

std::vector<Rational> euclid_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    auto deg = [](const std::vector<Rational>& v) -> long {
        for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i)
            if (!v[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    };
    long db = deg(b);
    while (true) {
        long da = deg(a);
        if (da < db) break;
        Rational f = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        for (long i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
    }
    return a;
}

}  // namespace

Polynomial univariate_gcd(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q);
    std::vector<std::size_t> vars = p.support();
    for (auto v : q.support())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    if (vars.size() > 1) throw InputError("univariate_gcd: multivariate input");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (vars.empty()) return Polynomial::one(p.ring());
    std::size_t var = vars[0];
    std::vector<Rational> a = univariate_coeffs(p, var);
    std::vector<Rational> b = univariate_coeffs(q, var);
    auto is_null = [](const std::vector<Rational>& v) {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    };
    while (!is_null(b)) {
        auto r = euclid_rem(a, b);
        a = b;
        b = r;
    }
    std::vector<Term> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        std::vector<std::uint32_t> e(p.ring()->arity(), 0);
        e[var] = static_cast<std::uint32_t>(i);
        out.push_back({Monomial(std::move(e)), a[i]});
    }
    return Polynomial::from_terms(p.ring(), std::move(out)).monic();
}

}  // namespace lnd
