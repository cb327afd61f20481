#include "ffgenus/genus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ffgenus/errors.hpp"
#include "ffgenus/linalg.hpp"

namespace ffgenus {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::string indexed(const std::string& base, std::size_t i) { return base + "_" + std::to_string(i); }

CyclotomicSubfield as_subfield(const CharGroup& X) {
    CyclotomicSubfield out{X.units()->modulus(), {}};
    for (const auto& chi : X.generators()) out.chars.push_back(chi.fractions());
    return out;
}

std::vector<WittRF> nontrivial(const std::vector<WittRF>& gens) {
    std::vector<WittRF> out;
    for (const auto& g : gens)
        if (!witt_is_trivial(g)) out.push_back(g);
    return out;
}

std::uint64_t checked_quotient(std::uint64_t a, std::uint64_t b, const char* what) {
    if (b == 0 || a % b) throw consistency_error(std::string(what) + ": degree does not divide");
    return a / b;
}

}  // namespace

std::vector<WittRF> witt_equation_generators(const WittEquation& eq) {
    if (eq.u == 1) return {eq.rhs};
    return asw_generators(ASWExt{eq.u, eq.rhs.length(), eq.rhs, {}});
}

std::vector<WittRF> report_witt_generators(const GenusFieldReport& r) {
    std::vector<WittRF> out;
    for (const auto& g : r.generators)
        if (auto* eq = std::get_if<WittEquation>(&g))
            for (auto& x : witt_equation_generators(*eq)) out.push_back(std::move(x));
    return out;
}

RadicalElem radical_equation_element(const RadicalEquation& eq, unsigned t, const std::vector<Poly>& primes) {
    if (eq.n == 0 || t % eq.n) throw schema_error("radical degree must divide t");
    RadicalGroup probe(eq.c.field(), t, primes, {});
    auto b = probe.element_of(eq.c, eq.radicand);
    for (auto& x : b) x = static_cast<unsigned>(std::uint64_t{x} * (t / eq.n) % t);
    return b;
}

std::uint64_t asw_f_infinity(const std::vector<WittRF>& gens, const CapConfig& caps) {
    auto g = nontrivial(gens);
    if (g.empty()) return 1;
    if (g.size() == 1) return asw_ramify(ASWExt{1, g[0].length(), g[0], {}}, caps).t;
    return WittClassGroup(g, caps.witt_classes).at(Place::infinity(g[0][0].field())).f;
}

// ---------------------------------------------------------------------------
// Artin-Schreier-Witt

GenusFieldReport genus_asw(const ASWExt& K, const CapConfig& caps) {
    asw_validate(K);
    const auto F = K.field();
    const auto p = F.p();
    auto kr = asw_ramify(K, caps);
    const bool factored = !K.factors.empty();
    std::vector<WittRF> sources = factored ? K.factors : std::vector<WittRF>{*K.xi};
    const unsigned u = factored ? 1 : K.u;

    GenusFieldReport r;
    r.family = "asw";
    std::vector<WittRF> z_gens;
    std::uint64_t product = 1;  // prod e_P * [k(z):k] in the cyclic case
    for (std::size_t i = 0; i < sources.size(); ++i) {
        auto dec = asw_decompose(sources[i]);
        std::size_t j = 0;
        for (const auto& [P, delta] : dec.deltas) {
            auto e = witt_ramification_index(delta, Place::finite(P));
            if (e == 1) continue;
            ++j;
            product *= e;
            std::string name = factored ? "w_" + std::to_string(i + 1) + "," + std::to_string(j) : indexed("y", j);
            r.generators.push_back(WittEquation{name, u, delta, P});
        }
        WittEquation z{factored ? indexed("z", i + 1) : "z", u, dec.gamma, std::nullopt};
        auto zg = nontrivial(witt_equation_generators(z));
        if (zg.empty()) continue;
        product *= ipow(p, K.v - witt_trivial_prefix(dec.gamma));
        z_gens.insert(z_gens.end(), zg.begin(), zg.end());
        r.generators.push_back(std::move(z));
    }

    auto all = report_witt_generators(r);
    if (all.empty()) r.degree_over_k = 1;
    else if (!factored && u == 1) r.degree_over_k = product;
    else r.degree_over_k = WittClassGroup(all, caps.witt_classes).order();
    r.degree_over_K = checked_quotient(r.degree_over_k, kr.degree, "genus field over K");
    // terms supported at a finite prime are proper fractions and split at infinity
    r.constant_field_degree = asw_f_infinity(z_gens, caps);
    return r;
}

// ---------------------------------------------------------------------------
// Kummer

GenusFieldReport genus_kummer(const KummerExt& K, const CapConfig& caps) {
    const auto F = K.D.field();
    const unsigned t = K.t;
    std::vector<Poly> primes;
    for (const auto& [P, a] : K.factors) primes.push_back(P);
    const std::size_t r_count = primes.size();
    RadicalGroup probe(F, t, primes, {});

    GenusFieldReport r;
    r.family = "kummer";
    SubgroupDescription D;
    std::vector<RadicalElem> b;  // b_i = xi_i^t
    std::vector<unsigned> d;
    std::uint64_t L_order = 1;
    for (std::size_t i = 0; i < r_count; ++i) {
        const auto& [P, a] = K.factors[i];
        const unsigned di = std::gcd(a, t);
        const unsigned ti = t / di;
        const auto degP = static_cast<std::uint64_t>(P.degree().value());
        const Fq gi = ((a / di) * degP) % 2 ? -F.one() : F.one();
        r.ambient.push_back(RadicalEquation{indexed("xi", i + 1), ti, gi, P.pow(a / di)});
        b.push_back(probe.element_of(gi.pow(di), P.pow(a)));
        d.push_back(di);
        D.moduli.push_back(ti);
        L_order *= ti;
        if (L_order > caps.unit_group) throw cap_exceeded("Galois group of the Kummer ambient field too large");
    }

    // coordinates over the b_i of every element of B_L
    std::map<RadicalElem, std::vector<std::uint64_t>> coords;
    for (std::uint64_t n = 0; n < L_order; ++n) {
        std::vector<std::uint64_t> c(r_count);
        RadicalElem x(r_count + 1, 0);
        std::uint64_t m = n;
        for (std::size_t i = 0; i < r_count; ++i) {
            c[i] = m % D.moduli[i];
            m /= D.moduli[i];
            for (std::size_t k = 0; k <= r_count; ++k) x[k] = static_cast<unsigned>((x[k] + c[i] * b[i][k]) % t);
        }
        coords.emplace(std::move(x), std::move(c));
    }
    if (coords.size() != L_order) throw consistency_error("radicals of the ambient field are dependent");

    auto BK = kummer_radical_group(K);
    for (const auto& x : BK.members())
        if (!coords.count(x)) throw consistency_error("K is not contained in the ambient field");

    // elements of B_L that are t-th powers at infinity, together with B_K
    std::vector<RadicalElem> ge_gens = BK.members();
    for (const auto& [x, c] : coords) {
        (void)c;
        std::uint64_t deg = 0;
        for (std::size_t i = 0; i < r_count; ++i) deg += std::uint64_t{x[i + 1]} * primes[i].degree().value();
        if (x[0] % t == 0 && deg % t == 0) ge_gens.push_back(x);
    }
    RadicalGroup Bge(F, t, primes, ge_gens);

    // decomposition group: Galois vectors s with sum_i s_i c_i d_i = 0 mod t on B_ge
    D.order = 0;
    for (std::uint64_t n = 0; n < L_order; ++n) {
        std::vector<std::uint64_t> s(r_count);
        std::uint64_t m = n;
        for (std::size_t i = 0; i < r_count; ++i) {
            s[i] = m % D.moduli[i];
            m /= D.moduli[i];
        }
        bool fixes = true;
        for (const auto& x : Bge.members()) {
            const auto& c = coords.at(x);
            std::uint64_t pair = 0;
            for (std::size_t i = 0; i < r_count; ++i) pair += s[i] * c[i] * d[i];
            if (pair % t) {
                fixes = false;
                break;
            }
        }
        if (!fixes) continue;
        ++D.order;
        D.generators.push_back(std::move(s));
    }
    {
        // keep a generating subset: scan in order, drop vectors already generated
        std::vector<std::vector<std::uint64_t>> kept;
        std::set<std::vector<std::uint64_t>> span{std::vector<std::uint64_t>(r_count, 0)};
        for (const auto& s : D.generators) {
            if (span.count(s)) continue;
            kept.push_back(s);
            std::vector<std::vector<std::uint64_t>> frontier(span.begin(), span.end());
            while (!frontier.empty()) {
                std::vector<std::vector<std::uint64_t>> next;
                for (const auto& x : frontier)
                    for (const auto& g : kept) {
                        std::vector<std::uint64_t> y(r_count);
                        for (std::size_t i = 0; i < r_count; ++i) y[i] = (x[i] + g[i]) % D.moduli[i];
                        if (span.insert(y).second) next.push_back(std::move(y));
                    }
                frontier = std::move(next);
            }
        }
        D.generators = std::move(kept);
    }

    // radical generators of K_ge: a generating subset of B_ge, each written with the
    // smallest root degree
    std::vector<RadicalElem> kept;
    for (const auto& x : Bge.members()) {
        if (std::all_of(x.begin(), x.end(), [](unsigned a) { return a == 0; })) continue;
        if (!kept.empty() && RadicalGroup(F, t, primes, kept).contains(x)) continue;
        kept.push_back(x);
    }
    for (std::size_t j = 0; j < kept.size(); ++j) {
        const auto& x = kept[j];
        unsigned g = t;
        for (auto a : x) g = std::gcd(g, a);
        Poly rad = Poly::constant(F.one());
        for (std::size_t i = 0; i < r_count; ++i) rad *= primes[i].pow(x[i + 1] / g);
        r.generators.push_back(RadicalEquation{indexed("eta", j + 1), t / g, F.primitive().pow(x[0] / g), rad});
    }

    const std::uint64_t K_order = BK.order();
    r.degree_over_k = Bge.order();
    r.degree_over_K = checked_quotient(Bge.order(), K_order, "Kummer genus field over K");
    if (r.degree_over_K * D.order != L_order / K_order)
        throw consistency_error("[K_ge:K] |D| differs from [L:K]");
    r.d_subgroup = std::move(D);
    r.constant_field_degree = Bge.at(Place::infinity(F)).f;
    return r;
}

// ---------------------------------------------------------------------------
// cyclotomic, composite, constant

GenusFieldReport genus_cyclotomic(const CyclotomicSubfield& K, const CapConfig& caps) {
    auto cg = genus_char_bruteforce(K, caps.unit_group);
    GenusFieldReport r;
    r.family = "cyclotomic";
    r.generators.push_back(CharacterField{"K_ge", as_subfield(cg.genus)});
    r.ambient.push_back(CharacterField{"L", as_subfield(cg.Y)});
    const auto& G = cg.X.units();
    r.d_subgroup = SubgroupDescription{cg.d_order, G->orders(), {G->exponents(cg.d_generator)}};
    r.degree_over_k = cg.genus.size();
    r.degree_over_K = checked_quotient(cg.genus.size(), cg.X.size(), "cyclotomic genus field over K");
    r.constant_field_degree = cyclotomic_place_data(cg.genus, Place::infinity(K.N.field())).f;
    return r;
}

GenusFieldReport genus_composite(const CompositeExt& K, const CapConfig& caps) {
    composite_validate(K, caps);
    auto r = genus_asw(K.p_part, caps);
    r.family = "composite";
    if (K.cyclic_parts.empty()) return r;
    auto X = composite_tame_chars(K, caps);
    std::uint64_t tame = 1;
    std::size_t j = 0;
    for (const auto& [P, a] : X.units()->factorization()) {
        (void)a;
        auto b = local_component(X, P).size();
        if (b == 1) continue;
        r.generators.push_back(CyclotomicPiece{indexed("F", ++j), P, b});
        tame *= b;
    }
    r.degree_over_k *= tame;
    r.degree_over_K = checked_quotient(r.degree_over_k, composite_ramify(K, caps).degree, "composite genus field over K");
    return r;
}

GenusFieldReport genus_constant(const ConstantExt& K) {
    if (K.m < 1) throw schema_error("constant extension degree must be positive");
    GenusFieldReport r;
    r.family = "constant";
    r.generators.push_back(ConstantField{"k_" + std::to_string(K.m), K.m});
    r.degree_over_k = K.m;
    r.constant_field_degree = K.m;
    return r;
}

GenusFieldReport genus(const Descriptor& d, const CapConfig& caps) {
    return std::visit(
        [&](const auto& x) -> GenusFieldReport {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, KummerExt>) return genus_kummer(x, caps);
            else if constexpr (std::is_same_v<T, ASWExt>) return genus_asw(x, caps);
            else if constexpr (std::is_same_v<T, CyclotomicSubfield>) return genus_cyclotomic(x, caps);
            else if constexpr (std::is_same_v<T, CompositeExt>) return genus_composite(x, caps);
            else return genus_constant(x);
        },
        d);
}

// ---------------------------------------------------------------------------
// field equality

std::vector<RatFn> as_span_basis(const std::vector<RatFn>& gens) {
    if (gens.empty()) return {};
    const auto F = gens[0].field();
    const auto p = F.p();
    const auto l = F.l();
    std::vector<RatFn> canon;
    Poly D = Poly::constant(F.one());
    for (const auto& g : gens) {
        canon.push_back(as_canonical_form(g));
        D = D / gcd(D, canon.back().den()) * canon.back().den();
    }
    std::vector<Poly> nums;
    std::size_t width = 0;
    for (const auto& c : canon) {
        nums.push_back(c.num() * (D / c.den()));
        width = std::max(width, nums.back().size());
    }
    FpMatrix A;
    for (const auto& n : nums) {
        std::vector<std::uint32_t> row(width * l, 0);
        for (std::size_t k = 0; k < n.size(); ++k) {
            auto dg = F.digits(n.coeff(k).code());
            for (std::size_t i = 0; i < dg.size() && i < l; ++i) row[k * l + i] = dg[i];
        }
        A.push_back(std::move(row));
    }
    std::vector<RatFn> out;
    for (const auto& row : fp_rref(A, p)) {
        std::vector<std::uint32_t> coeffs(width, 0);
        for (std::size_t k = 0; k < width; ++k) {
            std::uint32_t code = 0, base = 1;
            for (std::size_t i = 0; i < l; ++i, base *= p) code += row[k * l + i] * base;
            coeffs[k] = code;
        }
        out.push_back(RatFn(Poly(F, std::move(coeffs)), D));
    }
    return out;
}

bool asw_same_field(const std::vector<WittRF>& a, const std::vector<WittRF>& b, const CapConfig& caps) {
    auto na = nontrivial(a), nb = nontrivial(b);
    if (na.empty() || nb.empty()) return na.empty() && nb.empty();
    if (na[0].length() == 1 && nb[0].length() == 1) {
        std::vector<RatFn> ra, rb;
        for (const auto& x : na) ra.push_back(x[0]);
        for (const auto& x : nb) rb.push_back(x[0]);
        return as_span_basis(ra) == as_span_basis(rb);
    }
    WittClassGroup A(na, caps.witt_classes), B(nb, caps.witt_classes);
    for (const auto& x : na)
        if (!B.contains(x)) return false;
    for (const auto& x : nb)
        if (!A.contains(x)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// conductor of constants

std::vector<WittVec<Fq>> asw_constant_parts(const ASWExt& K) {
    std::vector<WittVec<Fq>> out;
    for (const auto& g : asw_generators(K)) {
        auto dec = asw_decompose(g);
        out.push_back(witt_map<Fq>(dec.gamma, [](const RatFn& a) { return a.num().coeff(0); }));
    }
    return out;
}

namespace {

ConductorReport asw_conductor(const ASWExt& K, const CapConfig& caps) {
    const auto F = K.field();
    const auto p = F.p();
    auto gens = asw_generators(K);
    const std::uint64_t t = asw_ramify(K, caps).t;

    // m = t d p^s: m is the order of the constant classes, d the residue degree of
    // the polynomial parts over t
    std::uint64_t m1 = 1;
    std::vector<WittRF> gammas, with_constants = gens;
    for (const auto& g : gens) {
        auto dec = asw_decompose(g);
        gammas.push_back(dec.gamma);
        auto c = witt_map<Fq>(dec.gamma, [](const RatFn& a) { return a.num().coeff(0); });
        m1 = std::max(m1, constant_class_order(c, 1));
        with_constants.push_back(witt_map<RatFn>(c, [](const Fq& a) { return RatFn::constant(a); }));
    }
    ConductorReport r;
    r.t = t;
    const auto fE = asw_f_infinity(gammas, caps);
    r.d = checked_quotient(fE, t, "residue degree of the polynomial part");
    if ((F.q() - 1) % r.d) throw consistency_error("d does not divide q - 1");
    auto ps = checked_quotient(m1, t * r.d, "order of the constant classes");
    while (ps % p == 0) {
        ps /= p;
        ++r.s;
    }
    if (ps != 1) throw consistency_error("m / (t d) is not a power of p");
    r.m = m1;

    // m = t d*: the residue degree at infinity of K times its constant part
    const auto fR = asw_f_infinity(with_constants, caps);
    r.d_star = checked_quotient(fR, t, "residue degree of K with its constants");
    if (t * r.d_star != r.m)
        throw consistency_error("conductor routes disagree: t d p^s = " + std::to_string(r.m) +
                                " but t d* = " + std::to_string(t * r.d_star));
    if (r.s == 0 && (F.q() - 1) % r.d_star) throw consistency_error("d* does not divide q - 1");
    return r;
}

ConductorReport inside_cyclotomic(std::uint64_t t) {
    if (t != 1) throw consistency_error("a subfield of a cyclotomic field with inert infinity");
    return ConductorReport{};
}

}  // namespace

ConductorReport conductor_of_constants(const Descriptor& d, const CapConfig& caps) {
    return std::visit(
        [&](const auto& x) -> ConductorReport {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, KummerExt>) return inside_cyclotomic(kummer_ramify(x).t);
            else if constexpr (std::is_same_v<T, CyclotomicSubfield>) return inside_cyclotomic(cyclotomic_ramify(x, caps).t);
            else if constexpr (std::is_same_v<T, ASWExt>) return asw_conductor(x, caps);
            else if constexpr (std::is_same_v<T, CompositeExt>) {
                auto r = asw_conductor(x.p_part, caps);
                if (composite_ramify(x, caps).t != r.t) throw consistency_error("tame parts changed f_infinity");
                return r;
            } else {
                if (x.m < 1) throw schema_error("constant extension degree must be positive");
                return ConductorReport{x.m, x.m, 1, 1, 0};
            }
        },
        d);
}

}  // namespace ffgenus
