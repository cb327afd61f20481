#include <doctest.h>

#include "ffgenus/extdesc.hpp"
#include "ffgenus/witt_classes.hpp"
#include "gen.hpp"

using namespace ffgenus;
using gen::P;

namespace {

WittRF wv(std::uint32_t p, std::vector<RatFn> c) { return WittRF(p, std::move(c)); }

WittRF rand_wv(gen::Rng& rng, GroundField F, unsigned v, int nd = 3, int dd = 3) {
    std::vector<RatFn> c;
    for (unsigned i = 0; i < v; ++i) c.push_back(rng.ratfn(F, nd, dd, 1));
    return WittRF(F.p(), c);
}

}  // namespace

TEST_CASE("one-coordinate class examples") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto F = GroundField::make(p, 1);
        auto xi = wv(p, {RatFn(P(F, {1, p - 1}))});  // 1 - T
        WittClassGroup A({xi});
        CHECK(A.order() == p);
        CHECK(A.at(Place::infinity(F)) == PlaceData{p, 1, 1});
        CHECK(A.at(Place::finite(P(F, {0, 1}))) == PlaceData{1, p, 1});  // 1 - T = 1 at T: inert
        CHECK(A.at(Place::finite(P(F, {p - 1, 1}))) == PlaceData{1, 1, p});  // value 0 at T = 1
        CHECK(witt_ramification_index(xi, Place::infinity(F)) == p);
    }
    auto F2 = GroundField::make(2, 1);
    auto c = wv(2, {RatFn(P(F2, {1}))});
    WittClassGroup C({c});
    CHECK(C.order() == 2);
    CHECK(C.at(Place::infinity(F2)) == PlaceData{1, 2, 1});
    // T^2 + T is trivial
    CHECK(witt_is_trivial(wv(2, {RatFn(P(F2, {0, 1, 1}))})));
    CHECK(!witt_is_trivial(wv(2, {RatFn(P(F2, {0, 1}))})));
}

TEST_CASE("Witt length two ramification") {
    auto F2 = GroundField::make(2, 1);
    auto T = P(F2, {0, 1}), one = P(F2, {1});
    auto inv = RatFn(one, T);
    auto zero = RatFn(F2);
    auto place = Place::finite(T);
    CHECK(witt_ramification_index(wv(2, {inv, zero}), place) == 4);
    CHECK(witt_ramification_index(wv(2, {zero, inv}), place) == 2);
    // 1/T^2 ~ 1/T in the first coordinate
    CHECK(witt_ramification_index(wv(2, {RatFn(one, T * T), zero}), place) == 4);
    WittClassGroup A({wv(2, {inv, zero})});
    CHECK(A.order() == 4);
    CHECK(A.at(place).e == 4);
    // (1, 0) over F_2 generates the degree 4 constant extension
    WittClassGroup C({wv(2, {RatFn(one), zero})});
    CHECK(C.order() == 4);
    CHECK(C.at(Place::infinity(F2)) == PlaceData{1, 4, 1});
}

TEST_CASE("constant class order agrees with the engine at infinity") {
    for (auto [p, l] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {3u, 2u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(p * 10 + l);
        for (unsigned v = 1; v <= 2; ++v)
            for (int it = 0; it < 8; ++it) {
                std::vector<Fq> c;
                std::vector<RatFn> cr;
                for (unsigned i = 0; i < v; ++i) {
                    c.push_back(rng.elem(F));
                    cr.push_back(RatFn::constant(c.back()));
                }
                auto ord = constant_class_order(WittVec<Fq>(p, c), 1);
                WittClassGroup A({WittRF(p, cr)});
                REQUIRE(A.order() == ord);
                REQUIRE(A.at(Place::infinity(F)) == PlaceData{1, ord, 1});
            }
    }
}

TEST_CASE("place data multiplies to the degree") {
    for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(500 + p + l);
        for (unsigned v = 1; v <= 2; ++v)
            for (int it = 0; it < 12; ++it) {
                auto x = rand_wv(rng, F, v);
                WittClassGroup A({x});
                auto N = A.order();
                std::vector<Place> places{Place::infinity(F)};
                for (const auto& Q : A.support()) places.push_back(Place::finite(Q));
                places.push_back(Place::finite(rng.irreducible(F, 1)));
                for (const auto& pl : places) {
                    auto d = A.at(pl);
                    REQUIRE(d.e * d.f * d.h == N);
                    auto red = witt_reduce_at(x, pl);
                    // a cyclic group: the index of the first surviving pole gives e, unless x is trivial
                    if (N > 1 && red.ramified_at) REQUIRE(d.e == witt_ramification_index(x, pl));
                    if (!red.ramified_at) REQUIRE(d.e == 1);
                }
            }
    }
}

TEST_CASE("asw_decompose examples and identity") {
    auto F2 = GroundField::make(2, 1);
    auto T = P(F2, {0, 1}), T1 = P(F2, {1, 1}), one = P(F2, {1});
    auto dec = asw_decompose(wv(2, {RatFn(one, T), RatFn(one, T1)}));
    REQUIRE(dec.deltas.size() == 2);
    CHECK(dec.deltas[0].first == T);
    CHECK(dec.deltas[0].second == wv(2, {RatFn(one, T), RatFn(F2)}));
    CHECK(dec.deltas[1].second == wv(2, {RatFn(F2), RatFn(one, T1)}));
    CHECK(dec.gamma.is_zero());

    for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(900 + p + l);
        for (unsigned v = 1; v <= 3; ++v) {
            if (v == 3 && p == 3) continue;
            for (int it = 0; it < 20; ++it) {
                auto x = rand_wv(rng, F, v, 4, 4);
                auto d = asw_decompose(x);
                WittRF sum = d.gamma;
                for (const auto& [Q, delta] : d.deltas) {
                    sum = witt_add(sum, delta);
                    for (const auto& a : delta.coords()) {
                        REQUIRE((a.is_zero() || v_infinity(a).value() > 0));
                        if (!a.is_zero()) REQUIRE(poly_factor(a.den()).factors.size() == 1);
                    }
                }
                REQUIRE(sum == x);
                for (const auto& a : d.gamma.coords()) REQUIRE(a.is_polynomial());
            }
        }
    }
}

TEST_CASE("Kummer normalisation") {
    auto F3 = GroundField::make(3, 1);
    auto T = P(F3, {0, 1}), T1 = P(F3, {1, 1});
    auto K = kummer_normalize(2, T.pow(3) * T1.pow(2));
    CHECK(K.D == T);
    CHECK(K.factors.size() == 1);
    CHECK(K.gamma == -F3.one());
    CHECK_THROWS_AS(kummer_normalize(3, T), schema_error);
    CHECK_THROWS_AS(kummer_normalize(2, T.scaled(F3.from_int(2))), schema_error);
}

TEST_CASE("cyclic split") {
    auto F4 = GroundField::make(2, 2);
    auto T = P(F4, {0, 1}), one = P(F4, {1});
    auto x = wv(2, {RatFn(one, T)});
    ASWExt K{2, 1, x, {}};
    CHECK(asw_cyclic_split(K).size() == 1);
    auto gens = asw_generators(K);
    REQUIRE(gens.size() == 2);
    WittClassGroup A(gens);
    CHECK(A.order() == 4);
    CHECK(A.at(Place::finite(T)).e == 4);

    ASWExt K2{2, 2, wv(2, {RatFn(one, T), RatFn(F4)}), {}};
    CHECK_THROWS_AS(asw_cyclic_split(K2), schema_error);
    K2.factors = asw_generators(ASWExt{2, 2, K2.xi, {}});
    CHECK(asw_cyclic_split(K2).size() == 2);
    K2.factors.pop_back();
    CHECK_THROWS_AS(asw_cyclic_split(K2), consistency_error);
    CHECK_THROWS_AS(asw_validate(ASWExt{3, 1, x, {}}), schema_error);
}

TEST_CASE("Kummer normalisation examples") {
    auto F5 = GroundField::make(5, 1);
    auto T = P(F5, {0, 1}), T1 = P(F5, {1, 1});
    auto K = kummer_normalize(2, T.pow(3));
    CHECK(K.D == T);
    CHECK(K.gamma == -F5.one());
    auto K4 = kummer_normalize(4, T * T * T1);
    REQUIRE(K4.factors.size() == 2);
    CHECK(K4.factors[0] == std::pair{T, 2u});
    CHECK(K4.factors[1] == std::pair{T1, 1u});
    CHECK(K4.gamma == -F5.one());
    auto again = kummer_normalize(4, K4.D);
    CHECK(again.D == K4.D);
    CHECK(again.factors == K4.factors);
    auto F3 = GroundField::make(3, 1);
    CHECK_THROWS_AS(kummer_normalize(2, P(F3, {0, 0, 1})), trivial_extension);
    CHECK_THROWS_AS(kummer_normalize(2, P(F3, {1})), schema_error);
}
