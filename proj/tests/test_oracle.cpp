#include <doctest.h>

#include "ffgenus/oracle.hpp"
#include "gen.hpp"

using namespace ffgenus;
using gen::P;

namespace {

WittVec<Fq> rand_witt(gen::Rng& rng, GroundField F, unsigned v) {
    std::vector<Fq> c;
    for (unsigned i = 0; i < v; ++i) c.push_back(rng.elem(F));
    return WittVec<Fq>(F.p(), std::move(c));
}

}  // namespace

TEST_CASE("ghost oracle") {
    auto F2 = GroundField::make(2, 1);
    auto z = WittVec<Fq>::zero(2, 2, F2.zero());
    CHECK(oracle_witt_ghost(z, z).pass);

    for (auto [p, l] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {3u, 2u}, {5u, 1u}}) {
        auto F = GroundField::make(p, l);
        gen::Rng rng(40 + p * 3 + l);
        for (unsigned v = 1; v <= 3; ++v)
            for (int it = 0; it < 30; ++it) {
                auto x = rand_witt(rng, F, v), y = rand_witt(rng, F, v);
                CHECK(oracle_witt_ghost(x, y).pass);
            }
    }
}

TEST_CASE("ghost oracle rejects a corrupted sum") {
    // coordinatewise addition forgets the carry: (1,0) + (1,0) = (0,1) over F_2
    auto F2 = GroundField::make(2, 1);
    WittVec<Fq> x(2, {F2.one(), F2.zero()});
    WittVec<Fq> wrong(2, {F2.zero(), F2.zero()});
    CHECK(witt_add(x, x) == WittVec<Fq>(2, {F2.zero(), F2.one()}));
    CHECK_FALSE(oracle_witt_ghost(x, x, wrong).pass);

    gen::Rng rng(77);
    auto F9 = GroundField::make(3, 2);
    for (int it = 0; it < 20; ++it) {
        auto a = rand_witt(rng, F9, 2), b = rand_witt(rng, F9, 2);
        auto s = witt_add(a, b);
        std::vector<Fq> c = s.coords();
        c[1] += F9.one();
        CHECK_FALSE(oracle_witt_ghost(a, b, WittVec<Fq>(3, c)).pass);
    }
}

TEST_CASE("Artin-Schreier reduction oracle") {
    auto F2 = GroundField::make(2, 1);
    auto T = P(F2, {0, 1});
    RatFn one = RatFn::constant(F2.one());
    auto v1 = oracle_as_different(one / RatFn(T));
    CHECK(v1.pass);
    CHECK(v1.expected.find("T:e=2") != std::string::npos);
    auto v2 = oracle_as_different(one / RatFn(T * T));
    CHECK(v2.pass);
    CHECK(v2.expected.find("T:e=2") != std::string::npos);
    auto v3 = oracle_as_different(RatFn(T * T));
    CHECK(v3.pass);
    CHECK(v3.expected.find("inf:e=2") != std::string::npos);

    // corrupted claim
    auto r = asw_ramify(ASWExt{1, 1, WittRF(2, {one / RatFn(T)}), {}});
    r.finite.clear();
    CHECK_FALSE(oracle_as_different(one / RatFn(T), r).pass);
}

TEST_CASE("unramifiedness oracle rejects an extra ramified generator") {
    auto F3 = GroundField::make(3, 1);
    auto T = P(F3, {0, 1}), T1 = P(F3, {1, 1}), T2 = P(F3, {2, 1});
    RatFn one = RatFn::constant(F3.one());

    ASWExt K{1, 1, WittRF(3, {one / RatFn(T) + one / RatFn(T1) + RatFn(T)}), {}};
    auto r = genus_asw(K);
    CHECK(oracle_genus_unramified(K, r).pass);
    auto bad = r;
    bad.generators.push_back(WittEquation{"extra", 1, WittRF(3, {one / RatFn(T2)}), T2});
    CHECK_FALSE(oracle_genus_unramified(K, bad).pass);
    // dropping a generator loses K
    auto short_ = r;
    short_.generators.pop_back();
    CHECK_FALSE(oracle_genus_unramified(K, short_).pass);

    auto Kk = kummer_normalize(2, T * T1);
    auto rk = genus_kummer(Kk);
    CHECK(oracle_genus_unramified(Kk, rk).pass);
    auto badk = rk;
    badk.generators.push_back(RadicalEquation{"extra", 2, -F3.one(), T2});
    CHECK_FALSE(oracle_genus_unramified(Kk, badk).pass);
    // L itself is not a valid candidate: infinity does not split in L / K
    auto amb = rk;
    amb.generators = rk.ambient;
    CHECK_FALSE(oracle_genus_unramified(Kk, amb).pass);
}

TEST_CASE("radical characters") {
    auto F3 = GroundField::make(3, 1);
    auto T = P(F3, {0, 1}), T1 = P(F3, {1, 1});
    auto G = UnitGroup::make(T * T1);
    std::vector<Poly> primes{T, T1};
    // -T: log(-1) = 1 mod 2, one factor of degree 1
    auto chi = radical_character({1, 1, 0}, 2, primes, G);
    CHECK(chi == kummer_character(kummer_normalize(2, T), G));
    CHECK_THROWS_AS(radical_character({0, 1, 0}, 2, primes, G), schema_error);
    CHECK(radical_character({0, 0, 0}, 2, primes, G).is_trivial());
}
