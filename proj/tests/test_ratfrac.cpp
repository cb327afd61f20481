#include <doctest.h>

#include "ffgenus/ratfrac.hpp"
#include "ffgenus/residue.hpp"
#include "gen.hpp"

using namespace ffgenus;
using gen::P;

namespace {

RatFn wp(const RatFn& w) { return w.frobenius() - w; }

}  // namespace

TEST_CASE("pf_decompose examples") {
    auto F2 = GroundField::make(2, 1);
    auto T = P(F2, {0, 1}), T1 = P(F2, {1, 1});
    auto one = P(F2, {1});

    auto pf = pf_decompose(RatFn(one, T * T1));
    REQUIRE(pf.parts.size() == 2);
    CHECK(pf.parts[0] == PartialFractionPart{T, 1, one});
    CHECK(pf.parts[1] == PartialFractionPart{T1, 1, one});
    CHECK(pf.polypart.is_zero());

    auto pf2 = pf_decompose(RatFn(P(F2, {1, 0, 0, 1}), T * T));
    REQUIRE(pf2.parts.size() == 1);
    CHECK(pf2.parts[0] == PartialFractionPart{T, 2, one});
    CHECK(pf2.polypart == T);

    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto F = GroundField::make(p, 1);
        auto f = P(F, {1, p - 1});  // 1 - T
        auto pf3 = pf_decompose(RatFn(f));
        CHECK(pf3.parts.empty());
        CHECK(pf3.polypart == f);
    }
    CHECK(pf_decompose(RatFn(F2)).parts.empty());
    CHECK(pf_decompose(RatFn(F2)).polypart.is_zero());
}

TEST_CASE("pf_decompose recombines exactly") {
    for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(31 * p + l);
        for (int it = 0; it < 300; ++it) {
            RatFn a = rng.ratfn(F, 10, 8);
            auto pf = pf_decompose(a);
            REQUIRE(pf.recombine() == a);
            for (std::size_t i = 0; i < pf.parts.size(); ++i) {
                const auto& part = pf.parts[i];
                REQUIRE(gcd(part.Q, part.P).is_one());
                REQUIRE(part.Q.degree() < part.P.pow(part.e).degree());
                if (i > 0) REQUIRE(poly_less(pf.parts[i - 1].P, part.P));
            }
        }
    }
}

TEST_CASE("v_infinity examples and multiplicativity") {
    auto F2 = GroundField::make(2, 1);
    auto T = P(F2, {0, 1});
    CHECK(v_infinity(RatFn(T)) == Valuation::of(-1));
    CHECK(v_infinity(RatFn(P(F2, {1}), T * T)) == Valuation::of(2));
    CHECK(v_infinity(RatFn(P(F2, {1, 1}), T)) == Valuation::of(0));
    CHECK(v_infinity(RatFn(F2)).is_infinite());

    for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {3u, 2u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(5 + p + l);
        for (int it = 0; it < 1000; ++it) {
            RatFn a = rng.ratfn(F, 6, 6), b = rng.ratfn(F, 6, 6);
            if (a.is_zero() || b.is_zero()) continue;
            REQUIRE(v_infinity(a * b) == v_infinity(a) + v_infinity(b));
            auto Q = rng.irreducible(F, 1);
            REQUIRE(v_P(a * b, Q) == v_P(a, Q) + v_P(b, Q));
        }
    }
}

TEST_CASE("as_reduce_at examples") {
    auto F2 = GroundField::make(2, 1);
    auto F3 = GroundField::make(3, 1);
    auto T = P(F2, {0, 1});
    auto one = P(F2, {1});

    auto r = as_reduce_at(RatFn(one, T * T), T);
    CHECK(r.reduced == RatFn(one, T));
    CHECK(r.witness == RatFn(one, T));

    auto T3 = P(F3, {0, 1});
    auto r3 = as_reduce_at(RatFn(P(F3, {1}), T3), T3);
    CHECK(r3.reduced == RatFn(P(F3, {1}), T3));
    CHECK(r3.witness.is_zero());

    auto a4 = RatFn(one, T.pow(4));
    auto r4 = as_reduce_at(a4, T);
    CHECK(v_P(r4.reduced, T) == Valuation::of(-1));
    CHECK(a4 - r4.reduced == wp(r4.witness));
}

TEST_CASE("as_reduce_at postconditions and idempotence") {
    for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(77 * p + l);
        for (int it = 0; it < 300; ++it) {
            RatFn a = rng.ratfn(F, 12, 10);
            if (a.is_polynomial()) continue;
            auto Q = a.den();
            auto fac = poly_factor(Q).factors;
            auto Pp = fac[rng.below(fac.size())].first;
            auto r = as_reduce_at(a, Pp);
            REQUIRE(r.reduced == a - wp(r.witness));
            auto v = v_P(r.reduced, Pp);
            REQUIRE((v.is_infinite() || v.value() >= 0 || (-v.value()) % p != 0));
            if (r.reduced != a) REQUIRE(v >= v_P(a, Pp));
            auto again = as_reduce_at(r.reduced, Pp);
            REQUIRE(again.reduced == r.reduced);
            REQUIRE(again.witness.is_zero());

            auto ri = as_reduce_at_infinity(a);
            REQUIRE(ri.reduced == a - wp(ri.witness));
            auto vi = v_infinity(ri.reduced);
            REQUIRE((vi.is_infinite() || vi.value() >= 0 || (-vi.value()) % p != 0));
        }
    }
}

TEST_CASE("as_canonical_form is a class invariant") {
    for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(1000 + p + l);
        for (int it = 0; it < 200; ++it) {
            RatFn a = rng.ratfn(F, 6, 5);
            RatFn w = rng.ratfn(F, 3, 3);
            auto ca = as_canonical_form(a);
            REQUIRE(as_canonical_form(a + wp(w)) == ca);
            REQUIRE(as_canonical_form(ca) == ca);
            // the difference lies in the image of x^p - x: constants carry only their trace
            auto diff = a - ca;
            auto pf = pf_decompose(diff);
            for (const auto& part : pf.parts) REQUIRE(part.e % p == 0);
        }
    }
    auto F2 = GroundField::make(2, 1);
    auto T = P(F2, {0, 1});
    // T^2 ~ T, 1 is not in the image over F_2
    CHECK(as_canonical_form(RatFn(T * T)) == RatFn(T));
    CHECK(as_canonical_form(RatFn(P(F2, {1}))) == RatFn(P(F2, {1})));
    auto F4 = GroundField::make(2, 2);
    CHECK(as_canonical_form(RatFn(P(F4, {1}))).is_zero());
}

TEST_CASE("residue fields") {
    auto F2 = GroundField::make(2, 1);
    auto ctx = ResidueField::make(P(F2, {1, 1, 1}));
    CHECK(ctx->size() == 4);
    auto x = Residue(ctx, P(F2, {0, 1}));
    CHECK(x.pow(3) == Residue::one(ctx));
    CHECK(x.pth_root().frobenius() == x);
    // x^2 - x = 1 has a solution in F_4 (x itself), 1 has trace 0
    CHECK(solve_artin_schreier(Residue::one(ctx)).has_value());
    CHECK(residue_trace(Residue::one(ctx)) == 0);
    CHECK(residue_trace(x) == 1);
    CHECK(!solve_artin_schreier(x).has_value());

    auto F3 = GroundField::make(3, 1);
    auto ctx3 = ResidueField::make(P(F3, {0, 1}));
    CHECK(!solve_artin_schreier(Residue::one(ctx3)).has_value());
    CHECK(solve_artin_schreier(Residue::zero(ctx3)).has_value());
    gen::Rng rng(3);
    auto F9 = GroundField::make(3, 2);
    for (int it = 0; it < 50; ++it) {
        auto Pq = rng.irreducible(F9, 2);
        auto c9 = ResidueField::make(Pq);
        auto c = Residue(c9, rng.poly(F9, 1));
        auto s = solve_artin_schreier(c);
        REQUIRE(s.has_value() == (residue_trace(c) == 0));
        if (s) REQUIRE(s->frobenius() - *s == c);
    }
}

TEST_CASE("as_solve returns a witness exactly on the image") {
    for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {3u, 2u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(2000 + p + l);
        for (int it = 0; it < 200; ++it) {
            RatFn w = rng.ratfn(F, 5, 4);
            RatFn a = wp(w);
            auto s = as_solve(a);
            REQUIRE(s.has_value());
            REQUIRE(wp(*s) == a);
            RatFn b = rng.ratfn(F, 5, 4);
            auto sb = as_solve(b);
            REQUIRE(sb.has_value() == as_canonical_form(b).is_zero());
            if (sb) REQUIRE(wp(*sb) == b);
        }
    }
}
