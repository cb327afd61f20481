#include "ffgenus/serialize.hpp"

#include <sstream>

#include "ffgenus/errors.hpp"

namespace ffgenus {

namespace {

const json& field_at(const json& j, const char* key) {
    if (!j.is_object()) throw schema_error(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(std::string("missing field \"") + key + "\"");
    return *it;
}

std::uint64_t uint_at(const json& j, const char* key) {
    const auto& v = field_at(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw schema_error(std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

unsigned small_uint(const json& j, const char* key, unsigned lo, unsigned hi) {
    auto v = uint_at(j, key);
    if (v < lo || v > hi)
        throw schema_error(std::string("field \"") + key + "\" out of range [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    return static_cast<unsigned>(v);
}

const json& array_at(const json& j, const char* key) {
    const auto& v = field_at(j, key);
    if (!v.is_array()) throw schema_error(std::string("field \"") + key + "\" must be a list");
    return v;
}

std::string fraction_str(const Fraction& f) { return std::to_string(f.num) + "/" + std::to_string(f.den); }

Fraction fraction_from_json(const json& j) {
    if (j.is_number_integer()) return Fraction::make(j.get<long long>(), 1);
    if (!j.is_string()) throw schema_error("character exponent must be a string \"num/den\"");
    auto s = j.get<std::string>();
    auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(s, &used);
            if (used != s.size()) throw schema_error("bad fraction " + s);
            return Fraction::make(n, 1);
        }
        auto a = s.substr(0, slash), b = s.substr(slash + 1);
        long long n = std::stoll(a, &used);
        if (used != a.size()) throw schema_error("bad fraction " + s);
        long long d = std::stoll(b, &used);
        if (used != b.size()) throw schema_error("bad fraction " + s);
        return Fraction::make(n, d);
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const schema_error*>(&e)) throw;
        throw schema_error("bad fraction " + s);
    }
}

json cyclotomic_to_json(const CyclotomicSubfield& c) {
    json chars = json::array();
    for (const auto& row : c.chars) {
        json r = json::array();
        for (const auto& f : row) r.push_back(fraction_str(f));
        chars.push_back(std::move(r));
    }
    return json{{"kind", "cyclotomic"}, {"N", poly_to_json(c.N)}, {"chars", std::move(chars)}};
}

CyclotomicSubfield cyclotomic_from_json(const json& j, GroundField F) {
    CyclotomicSubfield c{poly_from_json(field_at(j, "N"), F), {}};
    if (c.N.is_constant() || !c.N.is_monic()) throw schema_error("cyclotomic modulus N must be monic and nonconstant");
    for (const auto& row : array_at(j, "chars")) {
        if (!row.is_array()) throw schema_error("each character is a list of fractions");
        std::vector<Fraction> r;
        for (const auto& f : row) r.push_back(fraction_from_json(f));
        c.chars.push_back(std::move(r));
    }
    return c;
}

json asw_to_json(const ASWExt& K) {
    json factors = json::array();
    for (const auto& f : K.factors) factors.push_back(witt_to_json(f));
    return json{{"kind", "asw"},
                {"u", K.u},
                {"v", K.v},
                {"xi", K.xi ? witt_to_json(*K.xi) : json(nullptr)},
                {"factors", std::move(factors)}};
}

ASWExt asw_from_json(const json& j, GroundField F) {
    ASWExt K;
    K.u = j.contains("u") ? small_uint(j, "u", 1, 64) : 1;
    if (j.contains("xi") && !j["xi"].is_null()) K.xi = witt_from_json(j["xi"], F);
    if (j.contains("factors"))
        for (const auto& f : array_at(j, "factors")) K.factors.push_back(witt_from_json(f, F));
    if (!K.xi && K.factors.empty()) throw schema_error("asw descriptor needs xi or factors");
    unsigned len = K.xi ? K.xi->length() : K.factors[0].length();
    K.v = j.contains("v") ? small_uint(j, "v", 1, 64) : len;
    asw_validate(K);
    return K;
}

std::string fq_str(const Fq& c) {
    if (c.is_one()) return "1";
    if (c == -c.field().one()) return "-1";
    return "[" + std::to_string(c.code()) + "]";
}

std::string witt_rhs_str(const WittRF& x) { return x.length() == 1 ? x[0].to_string() : witt_to_string(x); }

std::string place_key(const Poly& P) { return poly_to_json(P).dump(); }

json place_data_json(const PlaceData& d) { return json{{"e", d.e}, {"f", d.f}, {"h", d.h}}; }

json generator_json(const FieldGenerator& g) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, WittEquation>)
                return json{{"type", "witt"},
                            {"name", x.name},
                            {"u", x.u},
                            {"rhs", witt_to_json(x.rhs)},
                            {"prime", x.prime ? poly_to_json(*x.prime) : json(nullptr)}};
            else if constexpr (std::is_same_v<T, RadicalEquation>)
                return json{{"type", "radical"},
                            {"name", x.name},
                            {"n", x.n},
                            {"c", fq_to_json(x.c)},
                            {"radicand", poly_to_json(x.radicand)}};
            else if constexpr (std::is_same_v<T, CyclotomicPiece>)
                return json{{"type", "cyclotomic_piece"}, {"name", x.name}, {"P", poly_to_json(x.P)}, {"degree", x.degree}};
            else if constexpr (std::is_same_v<T, CharacterField>)
                return json{{"type", "character_field"}, {"name", x.name}, {"field", cyclotomic_to_json(x.field)}};
            else
                return json{{"type", "constant_field"}, {"name", x.name}, {"m", x.m}};
        },
        g);
}

std::string generator_text(const FieldGenerator& g) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, WittEquation>) {
                const auto p = x.rhs.p();
                std::uint64_t q = 1;
                for (unsigned i = 0; i < x.u; ++i) q *= p;
                std::string lhs = x.rhs.length() == 1 ? x.name + "^" + std::to_string(q) + " - " + x.name
                                                      : "F" + (x.u > 1 ? "^" + std::to_string(x.u) : std::string()) +
                                                            "(" + x.name + ") - " + x.name;
                return lhs + " = " + witt_rhs_str(x.rhs);
            } else if constexpr (std::is_same_v<T, RadicalEquation>) {
                std::string r = x.radicand.to_string();
                std::string rhs = x.c.is_one() ? r : fq_str(x.c) == "-1" ? "-(" + r + ")" : fq_str(x.c) + " (" + r + ")";
                return x.name + "^" + std::to_string(x.n) + " = " + rhs;
            } else if constexpr (std::is_same_v<T, CyclotomicPiece>) {
                return x.name + " = subfield of degree " + std::to_string(x.degree) + " of k(Lambda_{" + x.P.to_string() +
                       "})";
            } else if constexpr (std::is_same_v<T, CharacterField>) {
                std::string s = x.name + " = fixed field in k(Lambda_{" + x.field.N.to_string() + "}) of chars";
                for (const auto& row : x.field.chars) {
                    s += " (";
                    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + fraction_str(row[i]);
                    s += ")";
                }
                if (x.field.chars.empty()) s += " (none)";
                return s;
            } else {
                return x.name + " = k F_{q^" + std::to_string(x.m) + "}";
            }
        },
        g);
}

}  // namespace

json poly_to_json(const Poly& f) {
    json out = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.coeff(i).code());
    return out;
}

Poly poly_from_json(const json& j, GroundField F) {
    if (!j.is_array()) throw schema_error("polynomial must be a list of coefficients");
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw schema_error("polynomial coefficient must be an integer");
        auto v = x.get<long long>();
        if (v < 0 || v >= static_cast<long long>(F.q()))
            throw schema_error("polynomial coefficient " + std::to_string(v) + " outside [0, " + std::to_string(F.q()) + ")");
        c.push_back(static_cast<std::uint32_t>(v));
    }
    return Poly(F, std::move(c));
}

json fq_to_json(const Fq& a) {
    auto d = a.field().digits(a.code());
    d.resize(a.field().l(), 0);
    return json(d);
}

Fq fq_from_json(const json& j, GroundField F) {
    if (!j.is_array() || j.size() != F.l()) throw schema_error("field element must be a list of l base-p digits");
    std::uint32_t code = 0, base = 1;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= F.p())
            throw schema_error("field element digit outside [0, p)");
        code += x.get<std::uint32_t>() * base;
        base *= F.p();
    }
    return F.elem(code);
}

json ratfn_to_json(const RatFn& a) { return json{{"num", poly_to_json(a.num())}, {"den", poly_to_json(a.den())}}; }

RatFn ratfn_from_json(const json& j, GroundField F) {
    if (j.is_array()) return RatFn(poly_from_json(j, F));
    auto num = poly_from_json(field_at(j, "num"), F);
    auto den = j.contains("den") ? poly_from_json(j["den"], F) : Poly::constant(F.one());
    if (den.is_zero()) throw schema_error("rational function with zero denominator");
    return RatFn(num, den);
}

json witt_to_json(const WittRF& x) {
    json out = json::array();
    for (const auto& a : x.coords()) out.push_back(ratfn_to_json(a));
    return out;
}

WittRF witt_from_json(const json& j, GroundField F) {
    if (!j.is_array() || j.empty()) throw schema_error("Witt vector must be a nonempty list of rational functions");
    std::vector<RatFn> c;
    for (const auto& a : j) c.push_back(ratfn_from_json(a, F));
    return WittRF(F.p(), std::move(c));
}

GroundField field_from_json(const json& j) {
    auto p = small_uint(j, "p", 2, 1u << 16);
    auto l = j.contains("l") ? small_uint(j, "l", 1, 64) : 1u;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < l; ++i) {
        q *= p;
        if (q > (1u << 20)) throw schema_error("field too large: q must be at most 2^20");
    }
    return GroundField::make(p, l);
}

json field_to_json(GroundField F) { return json{{"p", F.p()}, {"l", F.l()}}; }

json descriptor_to_json(const Descriptor& d) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, KummerExt>)
                return json{{"kind", "kummer"}, {"t", x.t}, {"D", poly_to_json(x.D)}};
            else if constexpr (std::is_same_v<T, ASWExt>)
                return asw_to_json(x);
            else if constexpr (std::is_same_v<T, CyclotomicSubfield>)
                return cyclotomic_to_json(x);
            else if constexpr (std::is_same_v<T, CompositeExt>) {
                json parts = json::array();
                for (const auto& c : x.cyclic_parts) parts.push_back(cyclotomic_to_json(c));
                return json{{"kind", "composite"}, {"p_part", asw_to_json(x.p_part)}, {"cyclic_parts", std::move(parts)}};
            } else
                return json{{"kind", "constant"}, {"m", x.m}};
        },
        d);
}

Descriptor descriptor_from_json(const json& j, GroundField F) {
    const auto& kind = field_at(j, "kind");
    if (!kind.is_string()) throw schema_error("descriptor kind must be a string");
    const auto k = kind.get<std::string>();
    if (k == "kummer") {
        auto t = small_uint(j, "t", 2, F.q());
        return kummer_normalize(t, poly_from_json(field_at(j, "D"), F));
    }
    if (k == "asw") return asw_from_json(j, F);
    if (k == "cyclotomic") return cyclotomic_from_json(j, F);
    if (k == "composite") {
        CompositeExt K{asw_from_json(field_at(j, "p_part"), F), {}};
        if (j.contains("cyclic_parts"))
            for (const auto& c : array_at(j, "cyclic_parts")) K.cyclic_parts.push_back(cyclotomic_from_json(c, F));
        return K;
    }
    if (k == "constant") return ConstantExt{F, small_uint(j, "m", 1, 1u << 16)};
    throw schema_error("unknown descriptor kind \"" + k + "\"");
}

json to_json(const RamificationReport& r) {
    json finite = json::object();
    for (const auto& fp : r.finite) {
        json d{{"e", fp.e}};
        if (fp.f) d["f"] = *fp.f;
        if (fp.h) d["h"] = *fp.h;
        finite[place_key(fp.P)] = std::move(d);
    }
    return json{{"family", r.family},
                {"degree", r.degree},
                {"finite", std::move(finite)},
                {"infinity", place_data_json(r.infinity)},
                {"t", r.t},
                {"constant_field_degree", r.constant_field_degree},
                {"f_infinity_oracle_verified", r.f_infinity_oracle_verified}};
}

json to_json(const GenusFieldReport& r) {
    json gens = json::array(), amb = json::array();
    for (const auto& g : r.generators) gens.push_back(generator_json(g));
    for (const auto& g : r.ambient) amb.push_back(generator_json(g));
    json D = nullptr;
    if (r.d_subgroup)
        D = json{{"order", r.d_subgroup->order}, {"moduli", r.d_subgroup->moduli}, {"generators", r.d_subgroup->generators}};
    return json{{"family", r.family},
                {"generators", std::move(gens)},
                {"ambient", std::move(amb)},
                {"D_subgroup", std::move(D)},
                {"degree_over_K", r.degree_over_K},
                {"degree_over_k", r.degree_over_k},
                {"constant_field_degree", r.constant_field_degree}};
}

json to_json(const ConductorReport& r) {
    return json{{"m", r.m}, {"t", r.t}, {"d", r.d}, {"d_star", r.d_star}, {"s", r.s}};
}

json to_json(const OracleVerdict& v) {
    return json{{"claim", v.claim}, {"expected", v.expected}, {"observed", v.observed}, {"pass", v.pass}, {"instance", v.instance}};
}

json to_json(const UnitGroup& G) {
    json gens = json::array();
    for (const auto& g : G.generators()) gens.push_back(poly_to_json(g));
    json fac = json::array();
    for (const auto& [P, a] : G.factorization()) fac.push_back(json{{"P", poly_to_json(P)}, {"a", a}});
    return json{{"N", poly_to_json(G.modulus())},
                {"factorization", std::move(fac)},
                {"size", G.size()},
                {"exponent", G.exponent()},
                {"generators", std::move(gens)},
                {"orders", G.orders()}};
}

std::string to_text(const RamificationReport& r) {
    std::ostringstream os;
    os << "family " << r.family << ", [K:k] = " << r.degree << "\n";
    for (const auto& fp : r.finite) {
        os << "  P = " << fp.P.to_string() << ": e = " << fp.e;
        if (fp.f) os << ", f = " << *fp.f;
        if (fp.h) os << ", h = " << *fp.h;
        os << "\n";
    }
    os << "  P_inf: e = " << r.infinity.e << ", f = " << r.infinity.f << ", h = " << r.infinity.h << "\n";
    os << "  t = " << r.t << (r.f_infinity_oracle_verified ? " (oracle-verified rule)" : "") << "\n";
    return os.str();
}

std::string to_text(const GenusFieldReport& r) {
    std::ostringstream os;
    os << "genus field (" << r.family << "): [K_ge:K] = " << r.degree_over_K << ", [K_ge:k] = " << r.degree_over_k
       << ", constant field F_{q^" << r.constant_field_degree << "}\n";
    if (r.generators.empty()) os << "  K_ge = K\n";
    else os << "  K_ge = " << (r.family == "composite" ? "K " : "k") << "(generators):\n";
    for (const auto& g : r.generators) os << "    " << generator_text(g) << "\n";
    if (!r.ambient.empty()) {
        os << "  L:\n";
        for (const auto& g : r.ambient) os << "    " << generator_text(g) << "\n";
    }
    if (r.d_subgroup) {
        os << "  D: order " << r.d_subgroup->order << " in";
        for (auto m : r.d_subgroup->moduli) os << " Z/" << m;
        for (const auto& g : r.d_subgroup->generators) {
            os << " <";
            for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
            os << ">";
        }
        os << "\n";
    }
    return os.str();
}

std::string to_text(const ConductorReport& r) {
    std::ostringstream os;
    os << "conductor of constants m = " << r.m << " = t d p^s with t = " << r.t << ", d = " << r.d << ", s = " << r.s
       << "; d* = " << r.d_star << "\n";
    return os.str();
}

std::string to_text(const OracleVerdict& v) {
    std::ostringstream os;
    os << (v.pass ? "PASS " : "FAIL ") << v.claim << "\n";
    if (!v.pass) os << "  expected: " << v.expected << "\n  observed: " << v.observed << "\n  instance: " << v.instance << "\n";
    return os.str();
}

std::string to_text(const UnitGroup& G) {
    std::ostringstream os;
    os << "(F_q[T]/(" << G.modulus().to_string() << "))^*: order " << G.size() << ", exponent " << G.exponent() << "\n";
    for (std::size_t i = 0; i < G.generators().size(); ++i)
        os << "  g_" << i + 1 << " = " << G.generators()[i].to_string() << " of order " << G.orders()[i] << "\n";
    return os.str();
}

}  // namespace ffgenus
