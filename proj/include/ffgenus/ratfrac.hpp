#ifndef FFGENUS_RATFRAC_HPP
#define FFGENUS_RATFRAC_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ffgenus/ffalg.hpp"

namespace ffgenus {

/// Discrete valuation value: an integer or +infinity (valuation of 0).
class Valuation {
   public:
    static Valuation infinity() noexcept { return Valuation(); }
    static Valuation of(long long v) noexcept { return Valuation(v); }
    bool is_infinite() const noexcept { return inf_; }
    long long value() const;
    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
        if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
        return a.v_ <=> b.v_;
    }
    friend Valuation operator+(Valuation a, Valuation b) noexcept {
        if (a.inf_ || b.inf_) return infinity();
        return of(a.v_ + b.v_);
    }

   private:
    Valuation() : inf_(true), v_(0) {}
    explicit Valuation(long long v) : inf_(false), v_(v) {}
    bool inf_;
    long long v_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Element of F_q(T) in lowest terms with monic denominator.
class RatFn {
   public:
    explicit RatFn(GroundField F) : num_(F), den_(Poly::constant(F.one())) {}
    RatFn(const Poly& f) : num_(f), den_(Poly::constant(f.field().one())) {}  // NOLINT: implicit by design
    RatFn(const Poly& num, const Poly& den);
    static RatFn constant(Fq c) { return RatFn(Poly::constant(c)); }

    GroundField field() const noexcept { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool is_constant() const noexcept { return den_.is_one() && num_.is_constant(); }

    RatFn inv() const;
    RatFn pow(long long e) const;
    RatFn frobenius() const;  // a^p

    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn operator-() const;
    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
    RatFn& operator*=(const RatFn& b) { return *this = *this * b; }
    friend bool operator==(const RatFn& a, const RatFn& b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const;

   private:
    struct Canonical {};
    RatFn(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFn& a);

/// Multiplicity of the monic irreducible P in a nonzero polynomial.
long long multiplicity(const Poly& f, const Poly& P);

Valuation v_P(const RatFn& a, const Poly& P);
Valuation v_infinity(const RatFn& a);

struct PartialFractionPart {
    Poly P;  // monic irreducible
    unsigned e;
    Poly Q;  // gcd(Q, P) = 1, deg Q < e deg P
    friend bool operator==(const PartialFractionPart&, const PartialFractionPart&) = default;
};

struct PartialFraction {
    std::vector<PartialFractionPart> parts;  // sorted by poly_less on P
    Poly polypart;
    RatFn recombine() const;
};

PartialFraction pf_decompose(const RatFn& a);

/// The P-pole part Q/P^e of a (zero if a is P-integral).
RatFn pole_part(const RatFn& a, const Poly& P);

/// Base-P digits of a polynomial: f = sum_j c_j P^j with deg c_j < deg P.
std::vector<Poly> padic_digits(const Poly& f, const Poly& P);

struct ASReduction {
    RatFn reduced;
    RatFn witness;  // reduced = a - (witness^p - witness)
};

/// Lowers the pole order of a at P while it is divisible by p = char F_q.
ASReduction as_reduce_at(const RatFn& a, const Poly& P);

/// Same at the infinite place: while -v_infinity(a) is positive and divisible by p.
ASReduction as_reduce_at_infinity(const RatFn& a);

/// Some w with w^p - w = a, or nullopt when a is not in the image.
std::optional<RatFn> as_solve(const RatFn& a);

/// A place of k: a monic irreducible finite prime or the infinite place.
class Place {
   public:
    static Place infinity(GroundField F) { return Place(F, std::nullopt); }
    static Place finite(const Poly& P) { return Place(P.field(), P); }
    bool is_infinite() const noexcept { return !P_.has_value(); }
    const Poly& prime() const { return P_.value(); }
    GroundField field() const noexcept { return F_; }
    /// Residue field degree over F_q (1 at infinity).
    unsigned degree() const { return is_infinite() ? 1u : static_cast<unsigned>(P_->degree().value()); }
    std::string to_string() const { return is_infinite() ? "inf" : P_->to_string(); }
    friend bool operator==(const Place& a, const Place& b) noexcept { return a.P_ == b.P_; }

   private:
    Place(GroundField F, std::optional<Poly> P) : F_(F), P_(std::move(P)) {}
    GroundField F_;
    std::optional<Poly> P_;
};

Valuation valuation_at(const RatFn& a, const Place& place);

/// Distinguished representative of the class of a in F_q(T)/{x^p - x}: at every
/// pole (finite or infinite) no Laurent digit at an order divisible by p survives,
/// and the constant term is Tr(c) times the least element of trace one.
/// a - b has the form x^p - x with x in F_q(T) iff the two forms are equal.
RatFn as_canonical_form(const RatFn& a);

}  // namespace ffgenus

#endif
