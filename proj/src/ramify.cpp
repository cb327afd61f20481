#include "ffgenus/ramify.hpp"

#include <algorithm>
#include <numeric>

#include "ffgenus/errors.hpp"

namespace ffgenus {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void sort_places(std::vector<FinitePlace>& v) {
    std::sort(v.begin(), v.end(), [](const FinitePlace& a, const FinitePlace& b) { return poly_less(a.P, b.P); });
}

// Order of the class of log-value L in Z/g.
std::uint64_t order_mod(std::uint64_t L, std::uint64_t g) { return g / std::gcd(g, L % g); }

}  // namespace

std::uint64_t RamificationReport::e_at(const Poly& P) const {
    for (const auto& fp : finite)
        if (fp.P == P) return fp.e;
    return 1;
}

RadicalGroup kummer_radical_group(const KummerExt& K) {
    const auto F = K.D.field();
    std::vector<Poly> primes;
    for (const auto& [P, a] : K.factors) primes.push_back(P);
    RadicalGroup probe(F, K.t, primes, {});
    return RadicalGroup(F, K.t, primes, {probe.element_of(K.gamma, K.D)});
}

RamificationReport kummer_ramify(const KummerExt& K) {
    const auto F = K.D.field();
    const std::uint64_t t = K.t;
    RamificationReport r;
    r.family = "kummer";
    std::uint64_t g0 = t;
    for (const auto& [P, a] : K.factors) {
        g0 = std::gcd<std::uint64_t>(g0, a);
        r.finite.push_back({P, t / std::gcd<std::uint64_t>(a, t), std::nullopt, std::nullopt});
    }
    r.degree = t / g0;
    const auto degD = static_cast<std::uint64_t>(K.D.degree().value());
    const std::uint64_t g = std::gcd(t, degD);
    r.infinity.e = t / g;
    // residue extension at infinity: g-th root of the leading coefficient of gamma D
    r.infinity.f = order_mod(F.log(K.gamma.code()), g);
    r.infinity.h = r.degree / (r.infinity.e * r.infinity.f);
    r.t = r.infinity.f;
    r.constant_field_degree = r.t;
    r.f_infinity_oracle_verified = true;
    sort_places(r.finite);
    return r;
}

unsigned witt_trivial_prefix(const WittRF& x) {
    unsigned m = 0;
    while (m < x.length() && witt_is_trivial(witt_truncate(x, m + 1))) ++m;
    return m;
}

RamificationReport asw_ramify(const ASWExt& K, const CapConfig& caps) {
    auto gens = asw_generators(K);
    const auto F = K.field();
    const auto p = F.p();
    RamificationReport r;
    r.family = "asw";
    if (gens.size() == 1) {
        // cyclic: first surviving pole index at each delta and at gamma
        const auto& xi = gens[0];
        const unsigned v = xi.length();
        auto dec = asw_decompose(xi);
        for (const auto& [P, delta] : dec.deltas) {
            auto e = witt_ramification_index(delta, Place::finite(P));
            if (e > 1) r.finite.push_back({P, e, std::nullopt, std::nullopt});
        }
        auto inf = Place::infinity(F);
        auto red = witt_reduce_at(dec.gamma, inf);
        unsigned j = red.ramified_at.value_or(v);
        r.infinity.e = ipow(p, v - j);
        std::uint64_t f = 1;
        if (j > 0) {
            std::vector<Fq> c;
            for (unsigned i = 0; i < j; ++i) c.push_back(residue_at(red.reduced[i], inf).lift().coeff(0));
            f = constant_class_order(WittVec<Fq>(p, c), 1);
        }
        r.infinity.f = f;
        r.degree = ipow(p, v - witt_trivial_prefix(xi));
        r.infinity.h = r.degree / (r.infinity.e * r.infinity.f);
    } else {
        WittClassGroup A(gens, caps.witt_classes);
        r.degree = A.order();
        for (const auto& P : A.support()) {
            auto d = A.at(Place::finite(P));
            if (d.e > 1) r.finite.push_back({P, d.e, d.f, d.h});
        }
        r.infinity = A.at(Place::infinity(F));
    }
    r.t = r.infinity.f;
    r.constant_field_degree = r.t;
    sort_places(r.finite);
    return r;
}

RamificationReport cyclotomic_ramify(const CyclotomicSubfield& K, const CapConfig& caps) {
    auto X = cyclotomic_chars(K, caps.unit_group);
    RamificationReport r;
    r.family = "cyclotomic";
    r.degree = X.size();
    for (const auto& [P, a] : X.units()->factorization()) {
        (void)a;
        auto e = local_component(X, P).size();
        if (e == 1) continue;
        auto d = cyclotomic_place_data(X, Place::finite(P));
        if (d.e != e) throw consistency_error("|X_P| differs from the inertia image at " + P.to_string());
        r.finite.push_back({P, e, d.f, d.h});
    }
    r.infinity = cyclotomic_place_data(X, Place::infinity(K.N.field()));
    r.t = r.infinity.f;
    r.constant_field_degree = r.t;
    sort_places(r.finite);
    return r;
}

CharGroup composite_tame_chars(const CompositeExt& K, const CapConfig& caps) {
    const auto F = K.p_part.field();
    Poly N = Poly::constant(F.one());
    for (const auto& c : K.cyclic_parts) {
        if (!(c.N.field() == F)) throw schema_error("tame part over a different field");
        N = N / gcd(N, c.N) * c.N;
    }
    if (N.is_one()) N = Poly::T(F);
    auto G = UnitGroup::make(N, caps.unit_group);
    std::vector<DirichletChar> gens;
    for (const auto& c : K.cyclic_parts) {
        auto Xc = cyclotomic_chars(c, caps.unit_group);
        for (const auto& chi : Xc.generators()) gens.push_back(lift_character(chi, G));
    }
    return CharGroup(G, gens);
}

void composite_validate(const CompositeExt& K, const CapConfig& caps) {
    asw_validate(K.p_part);
    const auto F = K.p_part.field();
    std::uint64_t total = 1;
    for (const auto& c : K.cyclic_parts) {
        auto X = cyclotomic_chars(c, caps.unit_group);
        std::uint64_t expo = 1;
        for (auto id : X.ids()) expo = std::lcm(expo, X.member(id).order());
        if (expo != X.size()) throw schema_error("tame part is not cyclic");
        if (std::gcd<std::uint64_t>(X.size(), std::uint64_t{F.p()} * (F.q() - 1)) != 1)
            throw schema_error("tame part degree must be prime to p(q - 1)");
        total *= X.size();
    }
    if (std::gcd<std::uint64_t>(total, F.q() - 1) != 1) throw schema_error("total tame degree must be prime to q - 1");
}

RamificationReport composite_ramify(const CompositeExt& K, const CapConfig& caps) {
    composite_validate(K, caps);
    auto r = asw_ramify(K.p_part, caps);
    r.family = "composite";
    if (K.cyclic_parts.empty()) return r;
    auto X = composite_tame_chars(K, caps);
    // coprime degrees: every local invariant multiplies
    r.degree *= X.size();
    for (const auto& [P, a] : X.units()->factorization()) {
        (void)a;
        auto d = cyclotomic_place_data(X, Place::finite(P));
        if (d.e == 1) continue;
        auto it = std::find_if(r.finite.begin(), r.finite.end(), [&](const auto& fp) { return fp.P == P; });
        if (it == r.finite.end()) r.finite.push_back({P, d.e, std::nullopt, std::nullopt});
        else {
            it->e *= d.e;
            it->f.reset();
            it->h.reset();
        }
    }
    auto di = cyclotomic_place_data(X, Place::infinity(K.p_part.field()));
    r.infinity.e *= di.e;
    r.infinity.f *= di.f;
    r.infinity.h *= di.h;
    r.t = r.infinity.f;
    r.constant_field_degree = r.t;
    sort_places(r.finite);
    return r;
}

std::uint64_t infinite_constant_class(const WittVec<Fq>& c, unsigned u) { return constant_class_order(c, u); }

RamificationReport constant_ramify(const ConstantExt& K) {
    if (K.m < 1) throw schema_error("constant extension degree must be positive");
    RamificationReport r;
    r.family = "constant";
    r.degree = K.m;
    r.infinity = {1, K.m, 1};
    r.t = K.m;
    r.constant_field_degree = K.m;
    return r;
}

RamificationReport ramify(const Descriptor& d, const CapConfig& caps) {
    return std::visit(
        [&](const auto& x) -> RamificationReport {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, KummerExt>) return kummer_ramify(x);
            else if constexpr (std::is_same_v<T, ASWExt>) return asw_ramify(x, caps);
            else if constexpr (std::is_same_v<T, CyclotomicSubfield>) return cyclotomic_ramify(x, caps);
            else if constexpr (std::is_same_v<T, CompositeExt>) return composite_ramify(x, caps);
            else return constant_ramify(x);
        },
        d);
}

}  // namespace ffgenus
