// Small random generators shared by the property tests.
#pragma once

#include <algorithm>
#include <random>

#include "ffgenus/ffalg.hpp"
#include "ffgenus/ratfrac.hpp"

namespace gen {

using namespace ffgenus;

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_); }
    long long range(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(eng_); }
    bool coin() { return below(2) == 1; }

    Fq elem(GroundField F) { return F.elem(static_cast<std::uint32_t>(below(F.q()))); }
    Fq nonzero(GroundField F) { return F.elem(1 + static_cast<std::uint32_t>(below(F.q() - 1))); }

    // degree uniform in [-1, max_deg]; -1 gives the zero polynomial
    Poly poly(GroundField F, int max_deg) {
        auto d = range(-1, max_deg);
        std::vector<std::uint32_t> c(static_cast<std::size_t>(d + 1));
        for (auto& x : c) x = static_cast<std::uint32_t>(below(F.q()));
        if (!c.empty() && c.back() == 0) c.back() = 1;
        return Poly(F, std::move(c));
    }

    Poly nonzero_poly(GroundField F, int max_deg) {
        for (;;) {
            auto f = poly(F, max_deg);
            if (!f.is_zero()) return f;
        }
    }

    Poly monic(GroundField F, int deg) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(deg + 1));
        for (auto& x : c) x = static_cast<std::uint32_t>(below(F.q()));
        c.back() = 1;
        return Poly(F, std::move(c));
    }

    Poly irreducible(GroundField F, int deg) {
        for (;;) {
            auto f = monic(F, deg);
            if (poly_is_irreducible(f)) return f;
        }
    }

    // denominator built from powers of small irreducibles so repeated poles are common
    Poly denominator(GroundField F, int max_deg, int max_prime_deg = 2) {
        Poly d = Poly::constant(F.one());
        int budget = static_cast<int>(range(0, max_deg));
        while (budget > 0) {
            int pd = static_cast<int>(range(1, std::min(max_prime_deg, budget)));
            auto P = irreducible(F, pd);
            int e = static_cast<int>(range(1, budget / pd));
            d *= P.pow(static_cast<std::uint64_t>(e));
            budget -= pd * e;
        }
        return d;
    }

    RatFn ratfn(GroundField F, int max_num_deg, int max_den_deg, int max_prime_deg = 2) {
        return RatFn(poly(F, max_num_deg), denominator(F, max_den_deg, max_prime_deg));
    }

    std::mt19937_64& engine() { return eng_; }

   private:
    std::mt19937_64 eng_;
};

inline Poly P(GroundField F, std::vector<std::uint32_t> c) { return Poly(F, std::move(c)); }

}  // namespace gen
