#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>

#include "ffgenus/errors.hpp"
#include "ffgenus/ffalg.hpp"

namespace ffgenus {

namespace {

std::uint64_t fnv1a(const Poly& f) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 4; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(f.field().p());
    mix(f.field().l());
    for (auto c : f.coeffs()) mix(c);
    return h;
}

// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with f = prod g_i^i.
void squarefree(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
    if (f.is_constant()) return;
    const auto p = f.field().p();
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.emplace_back(z, i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) squarefree(c.pth_root(), mult * p, out);
}

struct DegreePart {
    Poly g;
    unsigned d;
};

std::vector<DegreePart> distinct_degree(Poly f) {
    std::vector<DegreePart> out;
    const auto F = f.field();
    const Poly X = Poly::T(F);
    Poly h = X % f;
    for (unsigned d = 1; !f.is_one(); ++d) {
        if (f.degree().value() < 2 * static_cast<long long>(d)) {
            out.push_back({f, static_cast<unsigned>(f.degree().value())});
            break;
        }
        h = powmod(h, F.q(), f);
        Poly g = gcd(h - X, f);
        if (!g.is_one()) {
            out.push_back({g, d});
            f = f / g;
            h = h % f;
        }
    }
    return out;
}

Poly random_poly(GroundField F, std::size_t below_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
    std::vector<std::uint32_t> c(below_deg);
    for (auto& x : c) x = dist(rng);
    return Poly(F, std::move(c));
}

// Splits a squarefree f whose irreducible factors all have degree d.
void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const auto n = static_cast<unsigned>(f.degree().value());
    if (n == d) {
        out.push_back(f);
        return;
    }
    const auto F = f.field();
    const auto q = F.q();
    for (;;) {
        Poly a = random_poly(F, n, rng);
        if (a.is_constant()) continue;
        Poly b(F);
        if (F.p() == 2) {
            // absolute trace from F_{q^d} to F_2 splits the residue algebra
            Poly t = a % f;
            b = t;
            for (unsigned i = 1; i < F.l() * d; ++i) {
                t = (t * t) % f;
                b += t;
            }
        } else {
            // norm-like product a^{1+q+...+q^{d-1}}, then the quadratic character
            Poly t = a % f, prod = t;
            for (unsigned i = 1; i < d; ++i) {
                t = powmod(t, q, f);
                prod = (prod * t) % f;
            }
            b = powmod(prod, (q - 1) / 2, f) - Poly::constant(F.one());
        }
        Poly g = gcd(b, f);
        if (!g.is_one() && g != f) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

std::atomic<std::uint64_t> default_seed{0};

}  // namespace

void set_default_factor_seed(std::uint64_t seed) { default_seed.store(seed); }

Factorization poly_factor(const Poly& f, std::optional<std::uint64_t> seed) {
    if (f.is_zero()) throw schema_error("cannot factor the zero polynomial");
    Factorization result{f.lead(), {}};
    Poly m = f.monic();
    std::mt19937_64 rng(fnv1a(m) ^ seed.value_or(default_seed.load()));
    std::vector<std::pair<Poly, unsigned>> sqf;
    squarefree(m, 1, sqf);
    for (auto& [g, mult] : sqf) {
        for (auto& part : distinct_degree(g)) {
            std::vector<Poly> irr;
            equal_degree(part.g, part.d, rng, irr);
            for (auto& h : irr) result.factors.emplace_back(std::move(h), mult);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    // squarefree parts of different multiplicity are coprime, so no merging is needed
    return result;
}

bool poly_is_irreducible(const Poly& f) {
    if (f.is_constant()) throw schema_error("irreducibility of a constant polynomial is undefined");
    const auto F = f.field();
    const Poly m = f.monic();
    const auto n = static_cast<std::uint64_t>(m.degree().value());
    if (n == 1) return true;
    const Poly X = Poly::T(F);
    // x^{q^k} mod m for all k <= n
    std::vector<Poly> frob{X % m};
    for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), F.q(), m));
    if (frob[n] != X % m) return false;
    for (auto r : prime_divisors(n))
        if (!gcd(frob[n / r] - X, m).is_one()) return false;
    return true;
}

}  // namespace ffgenus
