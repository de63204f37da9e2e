#include <doctest.h>

#include "lnd/groebner.hpp"
#include "lnd/parse.hpp"
#include "lnd/ringmap.hpp"
#include "support/cofactor_oracle.hpp"
#include "support/random_values.hpp"

using namespace lnd;
using lnd::testing::Rng;
using lnd::testing::cofactor_membership;
using lnd::testing::random_poly;

namespace {

std::string basis_fingerprint(const GroebnerBasis& gb) {
    std::string s;
    for (const auto& g : gb.basis()) s += g.render() + ";";
    return s;
}

}  // namespace

TEST_CASE("buchberger: principal, unit, and elimination bases") {
    auto rx = PolyRing::make({"X"});
    auto gb1 = buchberger(Ideal::make(rx, {parse("X", rx)}));
    CHECK(gb1.basis().size() == 1);
    CHECK(gb1.basis()[0] == parse("X", rx));

    // 1 = X - (X - 1)
    auto gb2 = buchberger(Ideal::make(rx, {parse("X", rx), parse("X - 1", rx)}));
    CHECK(gb2.is_trivial());
    CHECK(gb2.basis()[0] == Polynomial::one(rx));

    // lex with W first eliminates W; the only W-free generator is Z^3 - T^2
    auto r = PolyRing::make({"W", "Z", "T"});
    auto ideal = Ideal::make(r, {parse("Z - W^2", r), parse("T - W^3", r)});
    auto gb3 = buchberger(ideal, MonomialOrder::lex(3));
    bool found = false;
    for (const auto& g : gb3.basis())
        if (g == parse("Z^3 - T^2", r)) found = true;
    CHECK(found);
}

TEST_CASE("buchberger: deterministic, and independent of generator order") {
    auto r = PolyRing::make({"X", "Y"});
    std::vector<Polynomial> gens{parse("X^2 + Y", r), parse("X*Y - 1", r), parse("Y^3 + X", r)};
    auto a = buchberger(Ideal::make(r, gens));
    auto b = buchberger(Ideal::make(r, gens));
    CHECK(basis_fingerprint(a) == basis_fingerprint(b));

    std::reverse(gens.begin(), gens.end());
    auto c = buchberger(Ideal::make(r, gens));  // reduced basis is unique
    CHECK(basis_fingerprint(a) == basis_fingerprint(c));
}

TEST_CASE("buchberger: budget exhaustion is an error, not an answer") {
    auto r = PolyRing::make({"X", "Y", "Z"});
    auto ideal = Ideal::make(
        r, {parse("X^3 - 2*X*Y", r), parse("X^2*Y - 2*Y^2 + X", r), parse("Z^2 - X*Y", r)});
    CHECK_THROWS_AS(buchberger(ideal, BuchbergerOptions{1}), BudgetExceededError);
    CHECK_NOTHROW(buchberger(ideal));
}

TEST_CASE("normal form: members, units, untouched variables, idempotence") {
    auto r = PolyRing::make({"X", "Z", "T"});
    auto ideal = Ideal::make(r, {parse("X^2 - Z", r), parse("X*Z - T", r)});
    auto gb = buchberger(ideal);
    for (const auto& g : ideal.generators) CHECK(normal_form(g, gb).is_zero());

    auto rx = PolyRing::make({"X"});
    auto unit = buchberger(Ideal::make(rx, {parse("X", rx), parse("X - 1", rx)}));
    CHECK(normal_form(Polynomial::one(rx), unit).is_zero());

    auto rzt = PolyRing::make({"Z", "T"});
    auto gbt = buchberger(Ideal::make(rzt, {parse("T", rzt)}));
    CHECK(normal_form(parse("Z", rzt), gbt) == parse("Z", rzt));

    Rng rng(7171);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(rng, r, 4, 5);
        Polynomial nf = normal_form(p, gb);
        CHECK(normal_form(nf, gb) == nf);
        CHECK(ideal_membership(p - nf, gb));
    }
}

TEST_CASE("ideal membership") {
    // 1 lies in (X1, 2*X2, 3*X2^2 + 1): the fixed-point-freeness instance
    auto B = PolyRing::make({"X1", "X2", "X3", "X4"});
    auto I = Ideal::make(B, {parse("X1", B), parse("2*X2", B), parse("3*X2^2 + 1", B)});
    CHECK(ideal_membership(Polynomial::one(B), I));

    CHECK(ideal_membership(Polynomial::zero(B), I));

    auto rzt = PolyRing::make({"Z", "T"});
    CHECK_FALSE(ideal_membership(parse("Z", rzt),
                                 Ideal::make(rzt, {parse("Z^3 - T^2", rzt)})));
}

TEST_CASE("membership consistency: ideals absorb combinations") {
    auto r = PolyRing::make({"X", "Y"});
    auto ideal = Ideal::make(r, {parse("X^2 - Y", r), parse("X*Y + 1", r)});
    auto gb = buchberger(ideal);
    Rng rng(424242);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = ideal.generators[rng.below(2)];
        Polynomial q = ideal.generators[rng.below(2)];
        Polynomial s = random_poly(rng, r, 3, 3);
        CHECK(ideal_membership(p + s * q, gb));
    }
}

TEST_CASE("elimination ideals") {
    auto r = PolyRing::make({"W", "Z", "T"});
    auto ideal = Ideal::make(r, {parse("Z - W^2", r), parse("T - W^3", r)});
    auto elim = elimination_ideal(ideal, {"Z", "T"});
    REQUIRE(elim.generators.size() == 1);
    auto rzt = elim.ring;
    CHECK(elim.generators[0] == parse("Z^3 - T^2", rzt));
    // double membership: the eliminant is in the original ideal, and the
    // parametrization annihilates it
    auto gb = buchberger(ideal);
    CHECK(ideal_membership(elim.generators[0].embedded(r), gb));
    auto rw = PolyRing::make({"W"});
    Polynomial W = Polynomial::variable(rw, 0);
    CHECK(substitute(elim.generators[0], {pow(W, 2), pow(W, 3)}).is_zero());

    // eliminating nothing returns the same ideal, up to its Groebner basis
    auto full = elimination_ideal(ideal, {"W", "Z", "T"});
    auto gb_full = buchberger(ideal);
    CHECK(basis_fingerprint(buchberger(full)) == basis_fingerprint(gb_full));

    // surjective coordinate: nothing survives
    auto r2 = PolyRing::make({"W", "Z"});
    auto none = elimination_ideal(Ideal::make(r2, {parse("Z - W", r2)}), {"Z"});
    CHECK(none.generators.empty());

    // output is contained in the input ideal
    auto r3 = PolyRing::make({"A", "B", "C"});
    auto ideal3 = Ideal::make(r3, {parse("A^2 - B*C", r3), parse("A*B - C^2 + 1", r3)});
    auto elim3 = elimination_ideal(ideal3, {"B", "C"});
    auto gb3 = buchberger(ideal3);
    for (const auto& g : elim3.generators) CHECK(ideal_membership(g.embedded(r3), gb3));
}

TEST_CASE("ring map kernels") {
    auto rw = PolyRing::make({"W"});
    Polynomial W = Polynomial::variable(rw, 0);

    // injective map has kernel (0)
    auto ry = PolyRing::make({"Y"});
    auto inj = ringmap_kernel(RingMap::make(ry, rw, {pow(W, 2)}));
    CHECK(inj.generators.empty());

    // the cuspidal parametrization
    auto rzt = PolyRing::make({"Z", "T"});
    auto cusp = ringmap_kernel(RingMap::make(rzt, rw, {pow(W, 2), pow(W, 3)}));
    REQUIRE(cusp.generators.size() == 1);
    CHECK(cusp.generators[0] == parse("Z^3 - T^2", rzt));

    // soundness on random maps: returned generators do map to zero
    Rng rng(99);
    auto src = PolyRing::make({"A", "B", "C"});
    for (int i = 0; i < 10; ++i) {
        std::vector<Polynomial> images;
        for (int k = 0; k < 3; ++k) images.push_back(random_poly(rng, rw, 3, 3));
        RingMap map = RingMap::make(src, rw, images);
        Ideal ker = ringmap_kernel(map);
        for (const auto& g : ker.generators) CHECK(map.apply(g).is_zero());
    }
}

TEST_CASE("ring map kernel reproduces the defining relation of the threefold") {
    // the n = 2, m = 1 family member: k[X1,Y,Z,T] -> k[X1..X4]
    auto B = PolyRing::make({"X1", "X2", "X3", "X4"});
    Polynomial z = parse("X2^2 - X1*X3", B);
    Polynomial t = parse("X2^3 + X2 - X1*X4", B);
    auto rzt = PolyRing::make({"Z", "T"});
    Polynomial F = parse("Z*(Z+1)^2 - T^2", rzt);
    Polynomial y = exact_divide(substitute(F, {z, t}), parse("X1", B));

    auto src = PolyRing::make({"X1", "Y", "Z", "T"});
    Ideal ker = ringmap_kernel(RingMap::make(src, B, {parse("X1", B), y, z, t}));
    REQUIRE(ker.generators.size() == 1);
    Polynomial expected = parse("X1*Y - (Z*(Z+1)^2 - T^2)", src).monic();
    CHECK(ker.generators[0].monic() == expected);
}

TEST_CASE("kernel of a map into a quotient") {
    // composite k[Z,T] -> k[W] -> k[W]/(W) has kernel (Z, T) when the images
    // vanish at the origin
    auto rw = PolyRing::make({"W"});
    auto rzt = PolyRing::make({"Z", "T"});
    Polynomial W = Polynomial::variable(rw, 0);
    RingMap map = RingMap::make(rzt, rw, {pow(W, 2), pow(W, 3)});
    Ideal ker = ringmap_kernel_mod(map, {W});
    auto gb = buchberger(Ideal::make(rzt, ker.generators));
    CHECK(ideal_membership(parse("Z", rzt), gb));
    CHECK(ideal_membership(parse("T", rzt), gb));
    CHECK_FALSE(ideal_membership(Polynomial::one(rzt), gb));
}

TEST_CASE("subalgebra membership with witnesses") {
    auto B = PolyRing::make({"X1", "X2", "X3", "X4"});
    Polynomial x1 = parse("X1", B);
    Polynomial z = parse("X2^2 - X1*X3", B);
    Polynomial t = parse("X2^3 + X2 - X1*X4", B);
    auto rzt = PolyRing::make({"Z", "T"});
    Polynomial Fzt = substitute(parse("Z*(Z+1)^2 - T^2", rzt), {z, t});
    Polynomial y = exact_divide(Fzt, x1);

    auto self = subalgebra_membership(x1, {x1});
    REQUIRE(self.member());
    CHECK(self.witness->render() == "T1");

    // x1^m * y = F(z,t) with m = 1, so the witness is T1*T2
    auto fz = subalgebra_membership(Fzt, {x1, y});
    REQUIRE(fz.member());
    CHECK(fz.witness->render() == "T1*T2");
    CHECK(substitute(*fz.witness, {x1, y}) == Fzt);

    // X2 is moved by the derivation, so it cannot lie in the kernel algebra
    CHECK_FALSE(subalgebra_membership(parse("X2", B), {x1, z, t, y}).member());

    // witness evaluation is sound on random members
    Rng rng(5150);
    auto tag_ring = PolyRing::make({"T1", "T2", "T3"});
    for (int i = 0; i < 10; ++i) {
        Polynomial expr = random_poly(rng, tag_ring, 3, 4);
        Polynomial member = substitute(expr, {x1, z, t});
        auto res = subalgebra_membership(member, {x1, z, t});
        REQUIRE(res.member());
        CHECK(substitute(*res.witness, {x1, z, t}) == member);
    }
}

TEST_CASE("localized subalgebra membership") {
    auto B = PolyRing::make({"X1", "X2", "X3", "X4"});
    Polynomial x1 = parse("X1", B);
    Polynomial X2 = parse("X2", B);
    Polynomial X3 = parse("X3", B);
    Polynomial z = parse("X2^2 - X1*X3", B);
    Polynomial t = parse("X2^3 + X2 - X1*X4", B);
    auto rzt = PolyRing::make({"Z", "T"});
    Polynomial y = exact_divide(substitute(parse("Z*(Z+1)^2 - T^2", rzt), {z, t}), x1);

    // plain membership extends to the localization
    CHECK(localized_subalgebra_membership(z, {x1, z, t}, x1));

    // y = F(z,t)/x1 is recovered once x1 is inverted
    CHECK(localized_subalgebra_membership(y, {x1, z, t}, x1));

    // X3 = (X2^2 - z)/x1 needs the slice X2 as well
    CHECK_FALSE(localized_subalgebra_membership(X3, {x1, z, t}, x1));
    CHECK(localized_subalgebra_membership(X3, {x1, z, t, X2}, x1));

    // X2 is transcendental over k(X1)
    CHECK_FALSE(localized_subalgebra_membership(X2, {x1}, x1));

    CHECK_THROWS_AS(localized_subalgebra_membership(X2, {x1}, Polynomial::zero(B)), InputError);
    CHECK_THROWS_AS(localized_subalgebra_membership(X2, {z, t}, x1), InputError);

    // cross-check under a permuted ambient variable sequence
    auto B2 = PolyRing::make({"X4", "X3", "X2", "X1"});
    auto re = [&](const Polynomial& p) { return p.embedded(B2); };
    CHECK(localized_subalgebra_membership(re(y), {re(x1), re(z), re(t)}, re(x1)));
    CHECK_FALSE(localized_subalgebra_membership(re(X3), {re(x1), re(z), re(t)}, re(x1)));
}

TEST_CASE("membership agrees with the bounded-degree cofactor oracle") {
    auto r = PolyRing::make({"X", "Y"});
    Rng rng(31337);
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        auto count = 1 + rng.below(3);
        for (std::uint64_t g = 0; g < count; ++g) {
            Polynomial p = random_poly(rng, r, 3, 3, false);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        auto gb = buchberger(Ideal::make(r, gens));

        // a known member, with cofactors of degree <= 2
        Polynomial member = Polynomial::zero(r);
        for (const auto& g : gens) member = member + random_poly(rng, r, 2, 2) * g;
        // and an arbitrary probe
        Polynomial probe = random_poly(rng, r, 3, 4);

        for (const Polynomial& p : {member, probe}) {
            bool gb_says = ideal_membership(p, gb);
            bool oracle_says = false;
            for (unsigned bound : {3u, 6u, 9u, 12u}) {
                oracle_says = cofactor_membership(p, gens, bound);
                if (oracle_says) break;
            }
            CHECK(gb_says == oracle_says);
            ++checked;
        }
    }
    CHECK(checked >= 40);
}
