#include "ffgenus/extdesc.hpp"

#include <algorithm>
#include <numeric>

#include "ffgenus/errors.hpp"

namespace ffgenus {

KummerExt kummer_normalize(unsigned t, const Poly& D) {
    const auto F = D.field();
    if (t < 2) throw schema_error("Kummer exponent t must be at least 2");
    if ((F.q() - 1) % t != 0) throw schema_error("Kummer exponent t must divide q - 1");
    if (D.is_constant() || !D.is_monic()) throw schema_error("Kummer radicand D must be monic and nonconstant");
    KummerExt K{t, Poly::constant(F.one()), {}, F.one()};
    for (auto& [P, e] : poly_factor(D).factors) {
        unsigned a = e % t;
        if (a == 0) continue;
        K.factors.emplace_back(P, a);
        K.D *= P.pow(a);
    }
    if (K.factors.empty()) throw trivial_extension("every exponent of D is divisible by t");
    if (K.D.degree().value() % 2 == 1) K.gamma = -F.one();
    return K;
}

GroundField ASWExt::field() const {
    if (xi) return (*xi)[0].field();
    if (factors.empty()) throw schema_error("Artin-Schreier-Witt descriptor without xi or factors");
    return factors[0][0].field();
}

std::uint32_t ASWExt::p() const { return field().p(); }

void asw_validate(const ASWExt& K) {
    const auto F = K.field();
    if (K.v < 1) throw schema_error("Witt length v must be positive");
    if (K.u < 1 || F.l() % K.u != 0) throw schema_error("u must divide l");
    auto check = [&](const WittRF& x) {
        if (x.length() != K.v) throw schema_error("Witt vector length differs from v");
        if (x.p() != F.p()) throw schema_error("Witt vector characteristic differs from the field");
        for (const auto& a : x.coords())
            if (!(a.field() == F)) throw schema_error("Witt coordinates over a different field");
    };
    if (K.xi) check(*K.xi);
    for (const auto& f : K.factors) check(f);
}

std::vector<WittRF> asw_generators(const ASWExt& K) {
    asw_validate(K);
    if (!K.factors.empty()) return K.factors;
    const auto F = K.field();
    if (K.u == 1) return {*K.xi};
    std::uint64_t pu = 1;
    for (unsigned i = 0; i < K.u; ++i) pu *= F.p();
    Fq omega = F.primitive().pow((F.q() - 1) / (pu - 1));
    std::vector<WittRF> out;
    Fq b = F.one();
    for (unsigned j = 0; j < K.u; ++j) {
        out.push_back(teichmuller_mul(b, *K.xi));
        b *= omega;
    }
    return out;
}

ASWDecomposition asw_decompose(const WittRF& xi) {
    const auto F = xi[0].field();
    const auto p = xi.p();
    const auto v = xi.length();
    std::vector<Poly> primes;
    for (const auto& a : xi.coords()) {
        if (a.is_polynomial()) continue;
        for (auto& [P, e] : poly_factor(a.den()).factors) {
            (void)e;
            if (std::find(primes.begin(), primes.end(), P) == primes.end()) primes.push_back(P);
        }
    }
    std::sort(primes.begin(), primes.end(), PolyLess{});

    ASWDecomposition out{{}, WittRF::zero(p, v, RatFn(F))};
    WittRF cur = xi;
    for (const auto& P : primes) {
        std::vector<RatFn> d(v, RatFn(F));
        WittRF rest = cur;
        // coordinate j of cur - delta is affine in delta_j, so taking delta_j to be the
        // current pole part makes it P-integral without touching earlier coordinates
        for (unsigned j = 0; j < v; ++j) {
            d[j] = pole_part(rest[j], P);
            rest = witt_sub(cur, WittRF(p, d));
        }
        cur = rest;
        out.deltas.emplace_back(P, WittRF(p, std::move(d)));
    }
    for (const auto& a : cur.coords())
        if (!a.is_polynomial()) throw consistency_error("decomposition left a pole in the polynomial part");
    out.gamma = cur;
    return out;
}

std::vector<ASWExt> asw_cyclic_split(const ASWExt& K) {
    asw_validate(K);
    if (K.factors.empty()) {
        if (K.v == 1 || K.u == 1) return {K};
        throw schema_error("u > 1 and v > 1 need an explicit list of cyclic factors");
    }
    if (K.xi) {
        WittClassGroup given(asw_generators(ASWExt{K.u, K.v, K.xi, {}}));
        WittClassGroup fac(K.factors);
        for (const auto& g : K.factors)
            if (!given.contains(g)) throw consistency_error("cyclic factor outside the field given by xi");
        for (const auto& g : given.generators())
            if (!fac.contains(g)) throw consistency_error("xi outside the compositum of the cyclic factors");
    }
    std::vector<ASWExt> out;
    for (const auto& f : K.factors) out.push_back(ASWExt{1, K.v, f, {}});
    return out;
}

Fraction Fraction::make(long long num, long long den) {
    if (den <= 0) throw schema_error("character exponent needs a positive denominator");
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g == 0) g = den;
    return {num / g, den / g};
}

GroundField descriptor_field(const Descriptor& d) {
    return std::visit(
        [](const auto& x) -> GroundField {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, KummerExt>) return x.D.field();
            else if constexpr (std::is_same_v<T, ASWExt>) return x.field();
            else if constexpr (std::is_same_v<T, CyclotomicSubfield>) return x.N.field();
            else if constexpr (std::is_same_v<T, CompositeExt>) return x.p_part.field();
            else return x.F;
        },
        d);
}

}  // namespace ffgenus
