#include "ffgenus/chars.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "ffgenus/errors.hpp"

namespace ffgenus {

namespace {

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    while (e--) {
        if (r > limit / b) return limit + 1;
        r *= b;
    }
    return r;
}

Poly one_of(GroundField F) { return Poly::constant(F.one()); }

// z = u mod A, z = w mod B for coprime A, B.
Poly crt2(const Poly& u, const Poly& A, const Poly& w, const Poly& B) {
    if (B.is_one()) return u % A;
    if (A.is_one()) return w % B;
    // z = w + B * ((u - w) * B^{-1} mod A)
    Poly k = ((u - w) % A * invmod(B % A, A)) % A;
    return (w + B * k) % (A * B);
}

}  // namespace

std::uint64_t UnitGroup::code(const Poly& r) const {
    const auto q = N_.field().q();
    std::uint64_t c = 0;
    for (std::size_t i = r.size(); i-- > 0;) c = c * q + r.coeffs()[i];
    return c;
}

std::shared_ptr<const UnitGroup> UnitGroup::make(const Poly& N, std::uint64_t cap) {
    const auto F = N.field();
    const std::uint64_t q = F.q();
    if (N.is_constant() || !N.is_monic()) throw schema_error("unit group modulus must be monic and nonconstant");
    auto fac = poly_factor(N).factors;
    std::uint64_t phi = 1;
    for (const auto& [P, a] : fac) {
        const auto d = static_cast<std::uint64_t>(P.degree().value());
        std::uint64_t top = checked_pow(q, d * a, cap * q), low = checked_pow(q, d * (a - 1), cap * q);
        if (top > cap * q) throw cap_exceeded("unit group larger than the cap");
        phi *= top - low;
        if (phi > cap) throw cap_exceeded("unit group of order " + std::to_string(phi) + " exceeds the cap " +
                                          std::to_string(cap));
    }
    const auto n = static_cast<std::uint64_t>(N.degree().value());
    const std::uint64_t total = checked_pow(q, n, 64 * cap);
    if (total > 64 * cap) throw cap_exceeded("residue ring too large to enumerate");

    std::shared_ptr<UnitGroup> G(new UnitGroup());
    G->N_ = N;
    G->fac_ = fac;
    auto mulmod = [&](const Poly& a, const Poly& b) { return (a * b) % N; };

    std::vector<Poly> units;
    std::vector<std::uint32_t> c(n);
    for (std::uint64_t k = 0; k < total; ++k) {
        std::uint64_t m = k;
        for (auto& x : c) {
            x = static_cast<std::uint32_t>(m % q);
            m /= q;
        }
        Poly r(F, c);
        if (!r.is_zero() && gcd(r, N).is_one()) units.push_back(std::move(r));
    }
    if (units.size() != phi) throw consistency_error("unit count disagrees with the totient formula");

    // Sylow by Sylow greedy basis: pick an element of largest order modulo the span so
    // far, then correct it so its span meets the previous one trivially.
    for (auto ell : prime_divisors(phi)) {
        std::uint64_t nl = 1, rest = phi;
        while (rest % ell == 0) {
            nl *= ell;
            rest /= ell;
        }
        std::vector<Poly> S;
        for (const auto& u : units)
            if (powmod(u, nl, N).is_one()) S.push_back(u);
        std::vector<Poly> basis;
        std::vector<std::uint64_t> ords;
        std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> H;  // code -> exponents
        H[G->code(one_of(F))] = {};
        while (H.size() < S.size()) {
            std::size_t best = 0;
            unsigned bestk = 0;
            for (std::size_t i = 0; i < S.size(); ++i) {
                Poly y = S[i];
                unsigned k = 0;
                while (!H.count(G->code(y))) {
                    y = powmod(y, ell, N);
                    ++k;
                }
                if (k > bestk) bestk = k, best = i;
            }
            std::uint64_t ok = 1;
            for (unsigned i = 0; i < bestk; ++i) ok *= ell;
            Poly x = S[best];
            auto cexp = H.at(G->code(powmod(x, ok, N)));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (cexp[i] % ok) throw consistency_error("unit group basis correction failed");
                std::uint64_t e = (ords[i] - cexp[i] / ok) % ords[i];
                x = mulmod(x, powmod(basis[i], e, N));
            }
            if (!powmod(x, ok, N).is_one()) throw consistency_error("corrected basis element has wrong order");
            basis.push_back(x);
            ords.push_back(ok);
            std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> H2;
            for (const auto& [code, ex] : H) {
                (void)code;
                Poly h = one_of(F);
                for (std::size_t i = 0; i < ex.size(); ++i) h = mulmod(h, powmod(basis[i], ex[i], N));
                Poly y = h;
                for (std::uint64_t e = 0; e < ok; ++e) {
                    auto ex2 = ex;
                    ex2.push_back(e);
                    H2[G->code(y)] = std::move(ex2);
                    y = mulmod(y, x);
                }
            }
            H = std::move(H2);
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            G->gens_.push_back(basis[i]);
            G->orders_.push_back(ords[i]);
        }
    }
    for (auto o : G->orders_) G->exponent_ = std::lcm(G->exponent_, o);

    G->elems_.assign(phi, Poly(F));
    for (std::uint64_t id = 0; id < phi; ++id) {
        auto e = G->exponents(id);
        Poly u = one_of(F);
        for (std::size_t i = 0; i < e.size(); ++i) u = mulmod(u, powmod(G->gens_[i], e[i], N));
        if (!G->id_by_code_.emplace(G->code(u), id).second) throw consistency_error("unit group basis is not independent");
        G->elems_[id] = std::move(u);
    }
    return G;
}

std::uint64_t UnitGroup::id_of(const Poly& u) const {
    auto it = id_by_code_.find(code(u % N_));
    if (it == id_by_code_.end()) throw std::domain_error("not a unit modulo " + N_.to_string());
    return it->second;
}

std::vector<std::uint64_t> UnitGroup::exponents(std::uint64_t id) const {
    std::vector<std::uint64_t> e(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        e[i] = id % orders_[i];
        id /= orders_[i];
    }
    return e;
}

std::uint64_t UnitGroup::id_from_exponents(const std::vector<std::uint64_t>& e) const {
    std::uint64_t id = 0;
    for (std::size_t i = orders_.size(); i-- > 0;) id = id * orders_[i] + e[i] % orders_[i];
    return id;
}

std::uint64_t UnitGroup::mul(std::uint64_t a, std::uint64_t b) const {
    auto ea = exponents(a), eb = exponents(b);
    for (std::size_t i = 0; i < ea.size(); ++i) ea[i] = (ea[i] + eb[i]) % orders_[i];
    return id_from_exponents(ea);
}

std::vector<std::uint64_t> UnitGroup::constants() const {
    const auto F = N_.field();
    std::vector<std::uint64_t> out;
    for (std::uint32_t c = 1; c < F.q(); ++c) out.push_back(id_of(Poly::constant(F.elem(c))));
    std::sort(out.begin(), out.end());
    return out;
}

DirichletChar DirichletChar::trivial(UnitGroupPtr G) {
    auto n = G->orders().size();
    return {std::move(G), std::vector<std::uint64_t>(n, 0)};
}

DirichletChar DirichletChar::from_fractions(UnitGroupPtr G, const std::vector<Fraction>& f) {
    const auto& ord = G->orders();
    if (f.size() != ord.size())
        throw schema_error("character needs " + std::to_string(ord.size()) + " exponents, got " +
                           std::to_string(f.size()));
    DirichletChar chi{G, {}};
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto fr = Fraction::make(f[i].num, f[i].den);
        if (ord[i] % static_cast<std::uint64_t>(fr.den))
            throw schema_error("character exponent " + std::to_string(fr.num) + "/" + std::to_string(fr.den) +
                               " is not a value on a generator of order " + std::to_string(ord[i]));
        chi.a.push_back(static_cast<std::uint64_t>(fr.num) * (ord[i] / static_cast<std::uint64_t>(fr.den)));
    }
    return chi;
}

std::vector<Fraction> DirichletChar::fractions() const {
    std::vector<Fraction> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(Fraction::make(static_cast<long long>(a[i]), static_cast<long long>(G->orders()[i])));
    return out;
}

std::uint64_t DirichletChar::value(std::uint64_t unit_id) const {
    const auto M = G->exponent();
    auto e = G->exponents(unit_id);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) v = (v + a[i] * e[i] % G->orders()[i] * (M / G->orders()[i])) % M;
    return v;
}

std::uint64_t DirichletChar::order() const {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto n = G->orders()[i];
        o = std::lcm(o, n / std::gcd(a[i], n));
    }
    return o;
}

bool DirichletChar::is_trivial() const {
    return std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; });
}

std::uint64_t DirichletChar::id() const { return G->id_from_exponents(a); }

DirichletChar char_local_component(const DirichletChar& chi, const Poly& P) {
    const auto& G = chi.G;
    const auto& N = G->modulus();
    auto it = std::find_if(G->factorization().begin(), G->factorization().end(),
                           [&](const auto& pe) { return pe.first == P; });
    if (it == G->factorization().end()) return DirichletChar::trivial(G);
    Poly Pa = P.pow(it->second);
    Poly M = N / Pa;
    const auto F = N.field();
    const auto Mexp = G->exponent();
    DirichletChar out{G, {}};
    for (std::size_t i = 0; i < G->generators().size(); ++i) {
        Poly z = crt2(G->generators()[i], Pa, one_of(F), M);
        auto v = chi.value(G->id_of(z));
        auto n = G->orders()[i];
        if (v * n % Mexp) throw consistency_error("local component is not a character");
        out.a.push_back(v * n / Mexp);
    }
    return out;
}

DirichletChar lift_character(const DirichletChar& chi, const UnitGroupPtr& G) {
    const auto& Gc = chi.G;
    if (!(G->modulus() % Gc->modulus()).is_zero()) throw schema_error("lift to a modulus that is not a multiple");
    DirichletChar out{G, {}};
    for (std::size_t i = 0; i < G->generators().size(); ++i) {
        auto v = chi.value(Gc->id_of(G->generators()[i]));  // in Z/Gc->exponent()
        auto n = G->orders()[i];
        auto num = v * n;
        if (num % Gc->exponent()) throw consistency_error("lifted character is not well defined");
        out.a.push_back(num / Gc->exponent() % n);
    }
    return out;
}

CharGroup::CharGroup(UnitGroupPtr G, const std::vector<DirichletChar>& generators) : G_(std::move(G)) {
    for (const auto& g : generators)
        if (!g.is_trivial()) gens_.push_back(g);
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto id : frontier)
            for (const auto& g : gens_) {
                auto s = G_->mul(id, g.id());  // characters share the mixed radix of the units
                if (seen.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    ids_.assign(seen.begin(), seen.end());
    std::sort(ids_.begin(), ids_.end());
}

bool CharGroup::contains(const DirichletChar& chi) const { return std::binary_search(ids_.begin(), ids_.end(), chi.id()); }

bool CharGroup::contains(const CharGroup& other) const {
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

DirichletChar CharGroup::member(std::uint64_t id) const { return {G_, G_->exponents(id)}; }

std::vector<DirichletChar> CharGroup::generators() const {
    std::vector<DirichletChar> out;
    std::uint64_t reached = 1;
    for (auto id : ids_) {
        if (id == 0) continue;
        auto chi = member(id);
        CharGroup cur(G_, out);
        if (cur.contains(chi)) continue;
        out.push_back(chi);
        reached = CharGroup(G_, out).size();
        if (reached == ids_.size()) break;
    }
    return out;
}

std::vector<std::uint64_t> CharGroup::kernel() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 0; u < G_->size(); ++u)
        if (std::all_of(gens_.begin(), gens_.end(), [&](const auto& g) { return g.value(u) == 0; })) out.push_back(u);
    return out;
}

namespace {

// Subgroup of units generated by the given ids.
std::vector<std::uint64_t> unit_closure(const UnitGroup& G, const std::vector<std::uint64_t>& gens) {
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto id : frontier)
            for (auto g : gens) {
                auto s = G.mul(id, g);
                if (seen.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> reduce_generators(const UnitGroup& G, const std::vector<std::uint64_t>& units) {
    std::vector<std::uint64_t> gens;
    std::vector<std::uint64_t> span{0};
    for (auto u : units) {
        if (std::binary_search(span.begin(), span.end(), u)) continue;
        gens.push_back(u);
        span = unit_closure(G, gens);
    }
    return gens;
}

}  // namespace

CharGroup annihilator(const UnitGroupPtr& G, const std::vector<std::uint64_t>& units) {
    auto gens = reduce_generators(*G, units);
    std::vector<DirichletChar> members;
    for (std::uint64_t id = 0; id < G->size(); ++id) {
        DirichletChar chi{G, G->exponents(id)};
        if (std::all_of(gens.begin(), gens.end(), [&](auto u) { return chi.value(u) == 0; })) members.push_back(chi);
    }
    return CharGroup(G, members);
}

CharGroup local_component(const CharGroup& X, const Poly& P) {
    std::vector<DirichletChar> gens;
    for (const auto& g : X.generators()) gens.push_back(char_local_component(g, P));
    return CharGroup(X.units(), gens);
}

CharGroup cyclotomic_chars(const CyclotomicSubfield& K, std::uint64_t cap) {
    auto G = UnitGroup::make(K.N, cap);
    std::vector<DirichletChar> gens;
    for (const auto& f : K.chars) gens.push_back(DirichletChar::from_fractions(G, f));
    return CharGroup(G, gens);
}

PlaceData cyclotomic_place_data(const CharGroup& X, const Place& place) {
    const auto& G = *X.units();
    const auto& N = G.modulus();
    const auto F = N.field();
    auto H = X.kernel();
    auto image = [&](const std::vector<std::uint64_t>& S) {
        auto gens = reduce_generators(G, H);
        gens.insert(gens.end(), S.begin(), S.end());
        return unit_closure(G, gens).size() / H.size();
    };
    const std::uint64_t deg = X.size();
    if (place.is_infinite()) {
        auto e = image(G.constants());
        return {e, 1, deg / e};
    }
    const auto& P = place.prime();
    std::vector<std::uint64_t> I, Dgen;
    auto it = std::find_if(G.factorization().begin(), G.factorization().end(),
                           [&](const auto& pe) { return pe.first == P; });
    if (it == G.factorization().end()) {
        Dgen.push_back(G.id_of(P));
    } else {
        Poly Pa = P.pow(it->second);
        Poly M = N / Pa;
        for (std::uint64_t u = 0; u < G.size(); ++u)
            if ((G.element(u) % M) == (one_of(F) % M)) I.push_back(u);
        Dgen = I;
        if (!M.is_one()) Dgen.push_back(G.id_of(crt2(one_of(F), Pa, P, M)));
    }
    auto e = I.empty() ? 1 : image(I);
    auto ef = image(Dgen);
    if (ef % e || deg % ef) throw consistency_error("decomposition and inertia images do not nest");
    return {e, ef / e, deg / ef};
}

DirichletChar kummer_character(const KummerExt& K, const UnitGroupPtr& G) {
    const auto F = K.D.field();
    const std::uint64_t q = F.q();
    const std::uint64_t step = (q - 1) / K.t;  // log of zeta
    const auto& N = G->modulus();
    for (const auto& [P, a] : K.factors) {
        (void)a;
        if (!(N % P).is_zero()) throw schema_error("Kummer radicand not supported on the modulus");
    }
    DirichletChar chi{G, {}};
    for (std::size_t i = 0; i < G->generators().size(); ++i) {
        const auto& g = G->generators()[i];
        std::uint64_t val = 0;
        for (const auto& [P, alpha] : K.factors) {
            std::uint64_t norm = 1;
            for (long long j = 0; j < P.degree().value(); ++j) norm *= q;
            Poly s = powmod(g % P, (norm - 1) / K.t, P);  // (g/P)_t, a t-th root of unity
            if (!s.is_constant() || s.is_zero()) throw consistency_error("power residue symbol is not a constant");
            auto lg = F.log(s.coeff(0).code());
            if (lg % step) throw consistency_error("power residue symbol outside mu_t");
            val = (val + alpha * (lg / step)) % K.t;
        }
        auto n = G->orders()[i];
        if (val * n % K.t) throw consistency_error("Kummer character does not factor through the unit group");
        chi.a.push_back(val * n / K.t);
    }
    return chi;
}

CharGenus genus_char_bruteforce(const CyclotomicSubfield& K, std::uint64_t cap) {
    CharGroup X = cyclotomic_chars(K, cap);
    const auto& G = X.units();
    std::vector<DirichletChar> ygens;
    for (const auto& [P, a] : G->factorization()) {
        (void)a;
        for (const auto& g : X.generators()) ygens.push_back(char_local_component(g, P));
    }
    CharGroup Y(G, ygens);
    if (!Y.contains(X)) throw consistency_error("product of local components does not contain X");

    const auto gprim = G->id_of(Poly::constant(K.N.field().primitive()));
    std::vector<DirichletChar> plus;
    for (auto id : Y.ids()) {
        auto chi = Y.member(id);
        if (chi.value(gprim) == 0) plus.push_back(chi);
    }
    CharGroup Yplus(G, plus);
    auto xg = X.generators();
    auto pg = Yplus.generators();
    xg.insert(xg.end(), pg.begin(), pg.end());
    CharGroup genus(G, xg);

    // group side: (F_q^* H_L) cap H_K, dual to X Y^+
    auto HL = Y.kernel();
    auto HK = X.kernel();
    auto cgens = reduce_generators(*G, HL);
    cgens.push_back(gprim);
    auto CHL = unit_closure(*G, cgens);
    std::vector<std::uint64_t> Hge;
    std::set_intersection(CHL.begin(), CHL.end(), HK.begin(), HK.end(), std::back_inserter(Hge));
    if (!(annihilator(G, Hge) == genus)) throw consistency_error("genus character group is not dual to its fixed group");

    // D is generated by the least power of the primitive constant lying in H_K
    const std::uint64_t q1 = K.N.field().q() - 1;
    std::uint64_t k = 1, c = gprim;
    while (!std::binary_search(HK.begin(), HK.end(), c)) {
        c = G->mul(c, gprim);
        ++k;
    }
    std::uint64_t d = 1, y = c;
    while (!std::binary_search(HL.begin(), HL.end(), y)) {
        y = G->mul(y, c);
        ++d;
    }
    if (d != Hge.size() / HL.size()) throw consistency_error("decomposition group order mismatch");
    if (q1 % d) throw consistency_error("decomposition group order does not divide q - 1");
    if ((genus.size() / X.size()) * d != Y.size() / X.size())
        throw consistency_error("[K_ge:K] |D| differs from [L:K]");
    return {X, Y, Yplus, genus, d, c};
}

}  // namespace ffgenus
