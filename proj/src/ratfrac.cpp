#include "ffgenus/ratfrac.hpp"

#include <sstream>
#include <stdexcept>

#include "ffgenus/residue.hpp"

namespace ffgenus {

long long Valuation::value() const {
    if (inf_) throw std::domain_error("valuation of zero is infinite");
    return v_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.is_infinite()) return os << "+inf";
    return os << v.value();
}

RatFn::RatFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(num.field().one());
        return;
    }
    Poly g = gcd(num, den);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (!den_.is_monic()) {
        auto c = den_.lead().inv();
        num_ = num_.scaled(c);
        den_ = den_.scaled(c);
    }
}

RatFn RatFn::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    // numerator and denominator stay coprime under powers
    return RatFn(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)), Canonical{});
}

RatFn RatFn::frobenius() const { return RatFn(num_.frobenius(), den_.frobenius(), Canonical{}); }

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn RatFn::operator-() const { return RatFn(-num_, den_, Canonical{}); }

RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }

RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inv(); }

std::string RatFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::ostringstream os;
    if (num_.size() > 1) os << '(' << num_ << ')';
    else os << num_;
    os << '/';
    if (den_.size() > 2 || (den_.size() == 2 && den_.coeff(0).code() != 0)) os << '(' << den_ << ')';
    else os << den_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFn& a) { return os << a.to_string(); }

long long multiplicity(const Poly& f, const Poly& P) {
    if (f.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    long long m = 0;
    Poly g = f;
    for (;;) {
        auto [qt, r] = divmod(g, P);
        if (!r.is_zero()) return m;
        g = std::move(qt);
        ++m;
    }
}

Valuation v_P(const RatFn& a, const Poly& P) {
    if (a.is_zero()) return Valuation::infinity();
    return Valuation::of(multiplicity(a.num(), P) - multiplicity(a.den(), P));
}

Valuation v_infinity(const RatFn& a) {
    if (a.is_zero()) return Valuation::infinity();
    return Valuation::of(a.den().degree().value() - a.num().degree().value());
}

RatFn PartialFraction::recombine() const {
    RatFn s(polypart);
    for (const auto& part : parts) s += RatFn(part.Q, part.P.pow(part.e));
    return s;
}

PartialFraction pf_decompose(const RatFn& a) {
    const auto F = a.field();
    PartialFraction out{{}, Poly(F)};
    if (a.is_polynomial()) {
        out.polypart = a.num();
        return out;
    }
    const auto& N = a.num();
    const auto& D = a.den();
    Poly rest = N;
    for (auto& [P, e] : poly_factor(D).factors) {
        Poly Pe = P.pow(e);
        Poly cof = D / Pe;
        Poly Q = (N * invmod(cof % Pe, Pe)) % Pe;
        rest -= Q * cof;
        out.parts.push_back({P, e, Q});
    }
    auto [qt, r] = divmod(rest, D);
    if (!r.is_zero()) throw std::logic_error("partial fraction remainder not divisible by denominator");
    out.polypart = qt;
    return out;
}

RatFn pole_part(const RatFn& a, const Poly& P) {
    const auto F = a.field();
    if (a.is_zero()) return RatFn(F);
    long long e = multiplicity(a.den(), P);
    if (e == 0) return RatFn(F);
    Poly Pe = P.pow(static_cast<std::uint64_t>(e));
    Poly cof = a.den() / Pe;
    Poly Q = (a.num() * invmod(cof % Pe, Pe)) % Pe;
    return RatFn(Q, Pe);
}

std::vector<Poly> padic_digits(const Poly& f, const Poly& P) {
    std::vector<Poly> out;
    Poly g = f;
    while (!g.is_zero()) {
        auto [qt, r] = divmod(g, P);
        out.push_back(std::move(r));
        g = std::move(qt);
    }
    return out;
}

namespace {

// p-th root of c modulo the irreducible P, as a polynomial of degree < deg P.
Poly residue_pth_root(const Poly& c, const Poly& P) {
    auto ctx = ResidueField::make(P);
    return Residue(ctx, c).pth_root().lift();
}

// One reduction step at P: finds the highest pole order divisible by p carrying a
// nonzero digit (only the leading order when leading_only) and returns the witness
// term for it, or the zero function when there is none.
RatFn pole_step(const RatFn& a, const Poly& P, bool leading_only) {
    const auto F = a.field();
    const auto p = F.p();
    RatFn part = pole_part(a, P);
    if (part.is_zero()) return RatFn(F);
    const auto e = static_cast<long long>(multiplicity(part.den(), P));
    auto digits = padic_digits(part.num(), P);  // digit j sits at pole order e - j
    for (long long j = 0; j < static_cast<long long>(digits.size()) && j < e; ++j) {
        const long long order = e - j;
        if (digits[j].is_zero()) continue;
        if (order % p == 0) {
            Poly b = residue_pth_root(digits[j], P);
            return RatFn(b, P.pow(static_cast<std::uint64_t>(order / p)));
        }
        if (leading_only) break;
    }
    return RatFn(F);
}

// Same at infinity on the polynomial part: highest degree divisible by p.
RatFn infinity_step(const RatFn& a, bool leading_only) {
    const auto F = a.field();
    const auto p = F.p();
    auto v = v_infinity(a);
    if (v.is_infinite() || v.value() >= 0) return RatFn(F);
    Poly poly = divmod(a.num(), a.den()).quot;
    for (long long n = poly.degree().value(); n > 0; --n) {
        auto c = poly.coeff(static_cast<std::size_t>(n));
        if (c.is_zero()) continue;
        if (n % p == 0) return RatFn(Poly::monomial(F.elem(F.pth_root(c.code())), static_cast<std::size_t>(n / p)));
        if (leading_only) break;
    }
    return RatFn(F);
}

RatFn wp(const RatFn& w) { return w.frobenius() - w; }

}  // namespace

ASReduction as_reduce_at(const RatFn& a, const Poly& P) {
    ASReduction r{a, RatFn(a.field())};
    for (;;) {
        RatFn w = pole_step(r.reduced, P, true);
        if (w.is_zero()) return r;
        r.reduced -= wp(w);
        r.witness += w;
    }
}

ASReduction as_reduce_at_infinity(const RatFn& a) {
    ASReduction r{a, RatFn(a.field())};
    for (;;) {
        RatFn w = infinity_step(r.reduced, true);
        if (w.is_zero()) return r;
        r.reduced -= wp(w);
        r.witness += w;
    }
}

namespace {

struct CanonicalWithWitness {
    RatFn canon;
    RatFn witness;  // a - canon = witness^p - witness
};

CanonicalWithWitness canonical_with_witness(const RatFn& a) {
    const auto F = a.field();
    RatFn x = a, W(F);
    if (!x.is_polynomial()) {
        for (auto& [P, e] : poly_factor(x.den()).factors) {
            (void)e;
            for (;;) {
                RatFn w = pole_step(x, P, false);
                if (w.is_zero()) break;
                x -= wp(w);
                W += w;
            }
        }
    }
    for (;;) {
        RatFn w = infinity_step(x, false);
        if (w.is_zero()) break;
        x -= wp(w);
        W += w;
    }
    // constant term: only its trace survives modulo x^p - x on F_q
    Fq c = divmod(x.num(), x.den()).quot.coeff(0);
    std::uint32_t c0 = 1;
    while (F.trace(c0) != 1) ++c0;
    Fq target = F.elem(c0) * F.from_int(F.trace(c.code()));
    if (c != target) {
        auto ctx = ResidueField::make(Poly::T(F));
        auto b = solve_artin_schreier(Residue(ctx, Poly::constant(c - target)));
        if (!b) throw std::logic_error("trace-zero constant without Artin-Schreier solution");
        Fq bc = b->lift().coeff(0);
        x -= RatFn::constant(c - target);
        W += RatFn::constant(bc);
    }
    return {x, W};
}

}  // namespace

RatFn as_canonical_form(const RatFn& a) { return canonical_with_witness(a).canon; }

std::optional<RatFn> as_solve(const RatFn& a) {
    auto r = canonical_with_witness(a);
    if (!r.canon.is_zero()) return std::nullopt;
    return r.witness;
}

Valuation valuation_at(const RatFn& a, const Place& place) {
    return place.is_infinite() ? v_infinity(a) : v_P(a, place.prime());
}

}  // namespace ffgenus
