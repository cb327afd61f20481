#include "ffgenus/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ffgenus/errors.hpp"
#include "ffgenus/residue.hpp"

namespace ffgenus {

namespace {

// ---------------------------------------------------------------------------
// (Z/p^n)[x] / (lift of the modulus of F_q): the ring W_n(F_q) in ghost form

struct LiftRing {
    std::uint64_t mod;                 // p^n
    std::vector<std::uint64_t> modulus;  // monic, degree l
    std::size_t l;

    using Elem = std::vector<std::uint64_t>;

    Elem lift(const Fq& a) const {
        auto d = a.field().digits(a.code());
        Elem out(l, 0);
        for (std::size_t i = 0; i < d.size() && i < l; ++i) out[i] = d[i];
        return out;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem out(l);
        for (std::size_t i = 0; i < l; ++i) out[i] = (a[i] + b[i]) % mod;
        return out;
    }
    Elem scale(const Elem& a, std::uint64_t c) const {
        Elem out(l);
        for (std::size_t i = 0; i < l; ++i) out[i] = a[i] * (c % mod) % mod;
        return out;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<std::uint64_t> prod(2 * l, 0);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % mod;
        for (std::size_t k = 2 * l - 1; k >= l; --k) {
            auto c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            // x^l = -(m_0 + ... + m_{l-1} x^{l-1})
            for (std::size_t i = 0; i < l; ++i) prod[k - l + i] = (prod[k - l + i] + (mod - c) * modulus[i]) % mod;
        }
        prod.resize(l);
        return prod;
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r(l, 0);
        r[0] = 1 % mod;
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }
    Elem reduce(const Elem& a, std::uint64_t m) const {
        Elem out = a;
        for (auto& x : out) x %= m;
        return out;
    }
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
    return out;
}

std::string elem_str(const LiftRing::Elem& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + "]";
}

OracleVerdict verdict(std::string claim, std::string expected, std::string observed, std::string instance) {
    OracleVerdict v{std::move(claim), std::move(expected), std::move(observed), false, std::move(instance)};
    v.pass = v.expected == v.observed;
    return v;
}

std::string place_line(const Poly& P, std::uint64_t e) { return P.to_string() + ":e=" + std::to_string(e); }

std::string inf_line(const PlaceData& d) { return "inf:e=" + std::to_string(d.e) + ",f=" + std::to_string(d.f); }

void add_prime(std::vector<Poly>& primes, const Poly& P) {
    if (std::find(primes.begin(), primes.end(), P) == primes.end()) primes.push_back(P);
}

void add_primes_of(std::vector<Poly>& primes, const Poly& f) {
    if (f.is_constant()) return;
    for (auto& [P, e] : poly_factor(f.monic()).factors) {
        (void)e;
        add_prime(primes, P);
    }
}

Poly lcm_poly(const Poly& a, const Poly& b) { return a / gcd(a, b) * b; }

Poly first_irreducible(GroundField F, unsigned m) {
    std::vector<std::uint32_t> c(m + 1, 0);
    c[m] = 1;
    for (;;) {
        Poly f(F, c);
        if (poly_is_irreducible(f)) return f;
        std::size_t i = 0;
        while (i < m && ++c[i] == F.q()) c[i++] = 0;
        if (i == m) throw consistency_error("no irreducible polynomial of the requested degree");
    }
}

// The character group of the F_j pieces and tame characters, all lifted to one modulus.
CharGroup tame_candidate(const CharGroup& X, const std::vector<CyclotomicPiece>& pieces, const CapConfig& caps) {
    Poly N = X.units()->modulus();
    for (const auto& pc : pieces) N = lcm_poly(N, pc.P);
    auto G = UnitGroup::make(N, caps.unit_group);
    std::vector<DirichletChar> gens;
    for (const auto& chi : X.generators()) gens.push_back(lift_character(chi, G));
    for (const auto& pc : pieces) {
        auto GP = UnitGroup::make(pc.P, caps.unit_group);
        // (F_q[T]/P)^* is cyclic: any character of the right order generates
        std::optional<DirichletChar> chi;
        for (std::uint64_t id = 0; id < GP->size() && !chi; ++id) {
            DirichletChar c{GP, GP->exponents(id)};
            if (c.order() == pc.degree) chi = c;
        }
        if (!chi) throw schema_error("no character of degree " + std::to_string(pc.degree) + " modulo " + pc.P.to_string());
        gens.push_back(lift_character(*chi, G));
    }
    return CharGroup(G, gens);
}

OracleVerdict unramified_witt(const std::vector<WittRF>& Kgens, const std::vector<WittRF>& cand,
                              const RamificationReport& kr, const CapConfig& caps, const std::string& instance) {
    std::vector<std::string> exp, obs;
    if (cand.empty()) {
        exp.push_back("degree=" + std::to_string(kr.degree));
        obs.push_back("degree=1");
        return verdict("genus candidate unramified over K", join(exp), join(obs), instance);
    }
    WittClassGroup A(cand, caps.witt_classes);
    bool inside = true;
    for (const auto& g : Kgens) inside = inside && A.contains(g);
    exp.push_back("K_inside=1");
    obs.push_back("K_inside=" + std::to_string(inside));
    std::vector<Poly> primes = A.support();
    for (const auto& fp : kr.finite) add_prime(primes, fp.P);
    std::sort(primes.begin(), primes.end(), PolyLess{});
    for (const auto& P : primes) {
        exp.push_back(place_line(P, kr.e_at(P)));
        obs.push_back(place_line(P, A.at(Place::finite(P)).e));
    }
    exp.push_back(inf_line(kr.infinity));
    obs.push_back(inf_line(A.at(Place::infinity(cand[0][0].field()))));
    return verdict("genus candidate unramified over K", join(exp), join(obs), instance);
}

}  // namespace

// ---------------------------------------------------------------------------

OracleVerdict oracle_witt_ghost(const WittVec<Fq>& x, const WittVec<Fq>& y, const WittVec<Fq>& s) {
    const auto F = x[0].field();
    const std::uint64_t p = F.p();
    const unsigned v = x.length();
    std::uint64_t pv = 1;
    for (unsigned i = 0; i < v; ++i) pv *= p;
    LiftRing R{pv, {}, F.l()};
    for (std::size_t i = 0; i < R.l; ++i) R.modulus.push_back(F.modulus()[i]);

    auto ghost = [&](const WittVec<Fq>& a, unsigned j) {
        LiftRing::Elem acc(R.l, 0);
        std::uint64_t pi = 1, pe = 1;
        for (unsigned k = 0; k < j; ++k) pe *= p;  // p^{j-i}, starting at i = 0
        for (unsigned i = 0; i <= j; ++i) {
            acc = R.add(acc, R.scale(R.pow(R.lift(a[i]), pe), pi));
            pi *= p;
            pe /= p;
        }
        return acc;
    };
    std::vector<std::string> exp, obs;
    std::uint64_t pj = 1;
    for (unsigned j = 0; j < v; ++j) {
        pj *= p;
        exp.push_back(elem_str(R.reduce(R.add(ghost(x, j), ghost(y, j)), pj)));
        obs.push_back(elem_str(R.reduce(ghost(s, j), pj)));
    }
    return verdict("ghost components are additive", join(exp), join(obs),
                   "x=" + witt_to_string(x) + " y=" + witt_to_string(y) + " sum=" + witt_to_string(s));
}

OracleVerdict oracle_witt_ghost(const WittVec<Fq>& x, const WittVec<Fq>& y) {
    return oracle_witt_ghost(x, y, witt_add(x, y));
}

OracleVerdict oracle_as_different(const RatFn& alpha, const RamificationReport& claimed) {
    const auto F = alpha.field();
    const std::uint64_t p = F.p();
    std::vector<Poly> primes;
    add_primes_of(primes, alpha.den());
    std::sort(primes.begin(), primes.end(), PolyLess{});
    std::vector<std::string> exp, obs;
    for (const auto& P : primes) {
        auto red = as_reduce_at(alpha, P).reduced;
        auto v = valuation_at(red, Place::finite(P));
        exp.push_back(place_line(P, !v.is_infinite() && v.value() < 0 ? p : 1));
        obs.push_back(place_line(P, claimed.e_at(P)));
    }
    auto red = as_reduce_at_infinity(alpha).reduced;
    auto v = valuation_at(red, Place::infinity(F));
    exp.push_back("inf:e=" + std::to_string(!v.is_infinite() && v.value() < 0 ? p : 1));
    obs.push_back("inf:e=" + std::to_string(claimed.infinity.e));
    return verdict("Artin-Schreier ramification by pole reduction", join(exp), join(obs), "alpha=" + alpha.to_string());
}

OracleVerdict oracle_as_different(const RatFn& alpha) {
    const auto p = alpha.field().p();
    return oracle_as_different(alpha, asw_ramify(ASWExt{1, 1, WittRF(p, {alpha}), {}}));
}

OracleVerdict oracle_ramification(const Descriptor& K, const RamificationReport& claimed, const CapConfig& caps) {
    std::vector<std::string> exp, obs;
    std::vector<Poly> primes;
    for (const auto& fp : claimed.finite) add_prime(primes, fp.P);
    auto finish = [&](const std::string& family) {
        return verdict("ramification data by an independent route", join(exp), join(obs), "family=" + family);
    };
    auto compare = [&](auto&& e_of, const PlaceData& inf) {
        std::sort(primes.begin(), primes.end(), PolyLess{});
        for (const auto& P : primes) {
            exp.push_back(place_line(P, e_of(P)));
            obs.push_back(place_line(P, claimed.e_at(P)));
        }
        exp.push_back(inf_line(inf));
        obs.push_back(inf_line(claimed.infinity));
    };
    return std::visit(
        [&](const auto& x) -> OracleVerdict {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, KummerExt>) {
                auto B = kummer_radical_group(x);
                for (const auto& [P, a] : x.factors) add_prime(primes, P);
                compare([&](const Poly& P) { return B.at(Place::finite(P)).e; }, B.at(Place::infinity(x.D.field())));
                return finish("kummer");
            } else if constexpr (std::is_same_v<T, ASWExt>) {
                auto gens = asw_generators(x);
                if (x.u == 1 && x.v == 1 && gens.size() == 1) return oracle_as_different(gens[0][0], claimed);
                WittClassGroup A(gens, caps.witt_classes);
                for (const auto& P : A.support()) add_prime(primes, P);
                compare([&](const Poly& P) { return A.at(Place::finite(P)).e; }, A.at(Place::infinity(x.field())));
                return finish("asw");
            } else if constexpr (std::is_same_v<T, CyclotomicSubfield>) {
                auto X = cyclotomic_chars(x, caps.unit_group);
                for (const auto& [P, a] : X.units()->factorization()) add_prime(primes, P);
                compare([&](const Poly& P) { return std::uint64_t(local_component(X, P).size()); },
                        cyclotomic_place_data(X, Place::infinity(x.N.field())));
                return finish("cyclotomic");
            } else if constexpr (std::is_same_v<T, CompositeExt>) {
                const auto F = x.p_part.field();
                auto gens = asw_generators(x.p_part);
                std::optional<WittClassGroup> A;
                if (!gens.empty()) A.emplace(gens, caps.witt_classes);
                auto X = composite_tame_chars(x, caps);
                if (A)
                    for (const auto& P : A->support()) add_prime(primes, P);
                for (const auto& [P, a] : X.units()->factorization()) add_prime(primes, P);
                auto inf = Place::infinity(F);
                PlaceData w = A ? A->at(inf) : PlaceData{}, c = cyclotomic_place_data(X, inf);
                compare(
                    [&](const Poly& P) {
                        std::uint64_t tame =
                            (X.units()->modulus() % P).is_zero() ? local_component(X, P).size() : 1;
                        return (A ? A->at(Place::finite(P)).e : 1) * tame;
                    },
                    PlaceData{w.e * c.e, w.f * c.f, w.h * c.h});
                return finish("composite");
            } else {
                compare([](const Poly&) { return std::uint64_t{1}; }, PlaceData{1, x.m, 1});
                return finish("constant");
            }
        },
        K);
}

OracleVerdict oracle_genus_unramified(const Descriptor& K, const GenusFieldReport& cand, const CapConfig& caps) {
    return std::visit(
        [&](const auto& x) -> OracleVerdict {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ASWExt>) {
                return unramified_witt(asw_generators(x), report_witt_generators(cand), asw_ramify(x, caps), caps,
                                       "family=asw");
            } else if constexpr (std::is_same_v<T, KummerExt>) {
                const auto F = x.D.field();
                auto kr = kummer_ramify(x);
                std::vector<Poly> primes;
                for (const auto& [P, a] : x.factors) add_prime(primes, P);
                std::vector<const RadicalEquation*> eqs;
                for (const auto& g : cand.generators)
                    if (auto* eq = std::get_if<RadicalEquation>(&g)) {
                        add_primes_of(primes, eq->radicand);
                        eqs.push_back(eq);
                    }
                std::sort(primes.begin(), primes.end(), PolyLess{});
                std::vector<RadicalElem> elems;
                for (auto* eq : eqs) elems.push_back(radical_equation_element(*eq, x.t, primes));
                RadicalGroup B(F, x.t, primes, elems);
                RadicalGroup probe(F, x.t, primes, {});
                std::vector<std::string> exp{"K_inside=1"}, obs;
                obs.push_back("K_inside=" + std::to_string(B.contains(probe.element_of(x.gamma, x.D))));
                for (const auto& P : primes) {
                    exp.push_back(place_line(P, kr.e_at(P)));
                    obs.push_back(place_line(P, B.at(Place::finite(P)).e));
                }
                exp.push_back(inf_line(kr.infinity));
                obs.push_back(inf_line(B.at(Place::infinity(F))));
                return verdict("genus candidate unramified over K", join(exp), join(obs), "family=kummer");
            } else if constexpr (std::is_same_v<T, CyclotomicSubfield>) {
                auto XK = cyclotomic_chars(x, caps.unit_group);
                Poly N = x.N;
                std::vector<const CyclotomicSubfield*> fields;
                for (const auto& g : cand.generators)
                    if (auto* cf = std::get_if<CharacterField>(&g)) {
                        N = lcm_poly(N, cf->field.N);
                        fields.push_back(&cf->field);
                    }
                auto G = UnitGroup::make(N, caps.unit_group);
                std::vector<DirichletChar> gens, kgens;
                for (auto* f : fields)
                    for (const auto& chi : cyclotomic_chars(*f, caps.unit_group).generators())
                        gens.push_back(lift_character(chi, G));
                for (const auto& chi : XK.generators()) kgens.push_back(lift_character(chi, G));
                CharGroup X(G, gens), XKl(G, kgens);
                auto kr = cyclotomic_ramify(x, caps);
                std::vector<std::string> exp{"K_inside=1"}, obs{"K_inside=" + std::to_string(X.contains(XKl))};
                for (const auto& [P, a] : G->factorization()) {
                    (void)a;
                    exp.push_back(place_line(P, kr.e_at(P)));
                    obs.push_back(place_line(P, cyclotomic_place_data(X, Place::finite(P)).e));
                }
                exp.push_back(inf_line(kr.infinity));
                obs.push_back(inf_line(cyclotomic_place_data(X, Place::infinity(x.N.field()))));
                return verdict("genus candidate unramified over K", join(exp), join(obs), "family=cyclotomic");
            } else if constexpr (std::is_same_v<T, CompositeExt>) {
                const auto F = x.p_part.field();
                auto kr = composite_ramify(x, caps);
                auto wild = report_witt_generators(cand);
                std::vector<CyclotomicPiece> pieces;
                for (const auto& g : cand.generators)
                    if (auto* pc = std::get_if<CyclotomicPiece>(&g)) pieces.push_back(*pc);
                // degrees are coprime, so local data of the two parts multiply
                std::optional<WittClassGroup> A;
                if (!wild.empty()) A.emplace(wild, caps.witt_classes);
                auto XK = composite_tame_chars(x, caps);
                auto X = tame_candidate(XK, pieces, caps);
                std::vector<DirichletChar> kl;
                for (const auto& chi : XK.generators()) kl.push_back(lift_character(chi, X.units()));
                bool inside = X.contains(CharGroup(X.units(), kl));
                for (const auto& g : asw_generators(x.p_part)) inside = inside && (A ? A->contains(g) : witt_is_trivial(g));
                std::vector<Poly> primes;
                if (A)
                    for (const auto& P : A->support()) add_prime(primes, P);
                for (const auto& [P, a] : X.units()->factorization()) add_prime(primes, P);
                for (const auto& fp : kr.finite) add_prime(primes, fp.P);
                std::sort(primes.begin(), primes.end(), PolyLess{});
                std::vector<std::string> exp{"K_inside=1"}, obs{"K_inside=" + std::to_string(inside)};
                for (const auto& P : primes) {
                    auto e = (A ? A->at(Place::finite(P)).e : 1) * cyclotomic_place_data(X, Place::finite(P)).e;
                    exp.push_back(place_line(P, kr.e_at(P)));
                    obs.push_back(place_line(P, e));
                }
                auto inf = Place::infinity(F);
                PlaceData w = A ? A->at(inf) : PlaceData{}, c = cyclotomic_place_data(X, inf);
                exp.push_back(inf_line(kr.infinity));
                obs.push_back(inf_line(PlaceData{w.e * c.e, w.f * c.f, w.h * c.h}));
                return verdict("genus candidate unramified over K", join(exp), join(obs), "family=composite");
            } else {
                unsigned m = 0;
                for (const auto& g : cand.generators)
                    if (auto* cf = std::get_if<ConstantField>(&g)) m = std::max(m, cf->m);
                return verdict("genus field of a constant extension is itself", "m=" + std::to_string(x.m),
                               "m=" + std::to_string(m), "family=constant");
            }
        },
        K);
}

std::uint64_t conductor_search_bound(const Descriptor& K) {
    return std::visit(
        [](const auto& x) -> std::uint64_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ASWExt>) {
                std::uint64_t b = 2;
                for (unsigned i = 0; i < x.v; ++i) b *= x.p();
                return b;
            } else if constexpr (std::is_same_v<T, CompositeExt>) {
                std::uint64_t b = 2;
                for (unsigned i = 0; i < x.p_part.v; ++i) b *= x.p_part.p();
                return b;
            } else if constexpr (std::is_same_v<T, ConstantExt>) {
                return 2 * std::uint64_t{x.m};
            } else {
                return 2 * std::uint64_t{descriptor_field(x).p()};
            }
        },
        K);
}

OracleVerdict oracle_conductor_minimality(const Descriptor& K, std::uint64_t m_claimed, std::uint64_t bound,
                                          const CapConfig& caps) {
    if (bound < m_claimed) throw cap_exceeded("search bound " + std::to_string(bound) + " below the claimed conductor");
    const auto F = descriptor_field(K);
    // residue degree at infinity by enumeration, and the constant classes
    std::uint64_t t = 1;
    std::vector<WittVec<Fq>> consts;
    auto witt_t = [&](const ASWExt& E) {
        auto g = asw_generators(E);
        return WittClassGroup(g, caps.witt_classes).at(Place::infinity(F)).f;
    };
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ASWExt>) {
                t = witt_t(x);
                consts = asw_constant_parts(x);
            } else if constexpr (std::is_same_v<T, CompositeExt>) {
                t = witt_t(x.p_part) * cyclotomic_place_data(composite_tame_chars(x, caps), Place::infinity(F)).f;
                consts = asw_constant_parts(x.p_part);
            } else if constexpr (std::is_same_v<T, KummerExt>) {
                t = kummer_radical_group(x).at(Place::infinity(F)).f;
            } else if constexpr (std::is_same_v<T, CyclotomicSubfield>) {
                t = cyclotomic_place_data(cyclotomic_chars(x, caps.unit_group), Place::infinity(F)).f;
            } else {
                t = x.m;
            }
        },
        K);
    std::uint64_t found = 0;
    for (std::uint64_t m = 1; m <= bound && !found; ++m) {
        if (m % t) continue;
        auto ctx = ResidueField::make(first_irreducible(F, static_cast<unsigned>(m)));
        bool ok = true;
        for (const auto& c : consts) {
            auto lifted = witt_map<Residue>(c, [&](const Fq& a) { return Residue(ctx, Poly::constant(a)); });
            if (!witt_constant_trivial(lifted)) {
                ok = false;
                break;
            }
        }
        if (ok) found = m;
    }
    std::ostringstream inst;
    inst << "t=" << t << " bound=" << bound << " constants=";
    for (const auto& c : consts) inst << witt_to_string(c);
    return verdict("conductor of constants is minimal", "m=" + std::to_string(m_claimed),
                   found ? "m=" + std::to_string(found) : "m>" + std::to_string(bound), inst.str());
}

DirichletChar radical_character(const RadicalElem& b, unsigned t, const std::vector<Poly>& primes, const UnitGroupPtr& G) {
    const auto F = G->modulus().field();
    KummerExt K{t, Poly::constant(F.one()), {}, F.one()};
    std::uint64_t sign = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (b[i + 1] % t == 0) continue;
        K.factors.emplace_back(primes[i], b[i + 1] % t);
        K.D *= primes[i].pow(b[i + 1] % t);
        sign += std::uint64_t{b[i + 1] % t} * primes[i].degree().value();
    }
    const Fq c = sign % 2 ? -F.one() : F.one();
    if (F.log(c.code()) % t != b[0] % t) throw schema_error("radical element is not of cyclotomic form");
    if (K.factors.empty()) return DirichletChar::trivial(G);
    K.gamma = c;
    return kummer_character(K, G);
}

}  // namespace ffgenus
