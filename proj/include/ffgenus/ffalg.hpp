#ifndef FFGENUS_FFALG_HPP
#define FFGENUS_FFALG_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ffgenus {

namespace detail {
struct FieldData;
}

class Fq;

/// Handle to the finite field F_q, q = p^l.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the code
/// are the coefficients (ascending) of the element as a polynomial in the
/// generator x of F_p[x]/(modulus). Field data is interned per (p, l) and
/// immutable, so handles are trivially copyable and compare by identity.
class GroundField {
   public:
    /// Builds F_{p^l} with the lexicographically least monic irreducible
    /// modulus of degree l (ascending coefficient list read as a base-p integer).
    static GroundField make(std::uint32_t p, std::uint32_t l);

    std::uint32_t p() const noexcept;
    std::uint32_t l() const noexcept;
    std::uint32_t q() const noexcept;
    /// Coefficients over F_p of the modulus, ascending, length l + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Fq zero() const;
    Fq one() const;
    Fq elem(std::uint32_t code) const;
    Fq from_int(long long n) const;
    /// A fixed generator of the cyclic group F_q^*.
    Fq primitive() const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg(std::uint32_t a) const noexcept;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Unique b with b^p = a.
    std::uint32_t pth_root(std::uint32_t a) const noexcept;
    /// Absolute trace F_q -> F_p, returned as an integer in [0, p).
    std::uint32_t trace(std::uint32_t a) const noexcept;
    /// Discrete logarithm to the base primitive(); a must be nonzero.
    std::uint32_t log(std::uint32_t a) const;
    std::uint32_t from_int_code(long long n) const noexcept;

    std::vector<std::uint32_t> digits(std::uint32_t a) const;
    std::uint32_t from_digits(std::span<const std::uint32_t> d) const;

    friend bool operator==(GroundField a, GroundField b) noexcept { return a.d_ == b.d_; }

   private:
    explicit GroundField(const detail::FieldData* d) : d_(d) {}
    const detail::FieldData* d_;
};

/// An element of F_q.
class Fq {
   public:
    Fq(GroundField F, std::uint32_t code) : F_(F), v_(code) {}

    GroundField field() const noexcept { return F_; }
    std::uint32_t code() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Fq inv() const { return {F_, F_.inv(v_)}; }
    Fq pow(std::uint64_t e) const { return {F_, F_.pow(v_, e)}; }

    friend Fq operator+(Fq a, Fq b) { return {a.F_, a.F_.add(a.v_, b.v_)}; }
    friend Fq operator-(Fq a, Fq b) { return {a.F_, a.F_.sub(a.v_, b.v_)}; }
    friend Fq operator*(Fq a, Fq b) { return {a.F_, a.F_.mul(a.v_, b.v_)}; }
    friend Fq operator/(Fq a, Fq b) { return {a.F_, a.F_.mul(a.v_, a.F_.inv(b.v_))}; }
    Fq operator-() const { return {F_, F_.neg(v_)}; }
    Fq& operator+=(Fq b) { return *this = *this + b; }
    Fq& operator-=(Fq b) { return *this = *this - b; }
    Fq& operator*=(Fq b) { return *this = *this * b; }
    friend bool operator==(Fq a, Fq b) noexcept { return a.v_ == b.v_ && a.F_ == b.F_; }

   private:
    GroundField F_;
    std::uint32_t v_;
};

/// Degree of a polynomial. The zero polynomial has degree -infinity, which is
/// a distinct state rather than a negative integer.
class Degree {
   public:
    static Degree neg_inf() noexcept { return Degree(); }
    static Degree of(long long d) noexcept { return Degree(d); }
    bool is_neg_inf() const noexcept { return inf_; }
    /// Finite value; precondition !is_neg_inf().
    long long value() const;
    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
        if (a.inf_ || b.inf_) return b.inf_ <=> a.inf_;
        return a.d_ <=> b.d_;
    }
    friend Degree operator+(Degree a, Degree b) noexcept {
        if (a.inf_ || b.inf_) return neg_inf();
        return of(a.d_ + b.d_);
    }

   private:
    Degree() : inf_(true), d_(0) {}
    explicit Degree(long long d) : inf_(false), d_(d) {}
    bool inf_;
    long long d_;
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

/// Univariate polynomial over F_q in the variable T.
class Poly {
   public:
    explicit Poly(GroundField F) : F_(F) {}
    Poly(GroundField F, std::vector<std::uint32_t> coeffs);
    static Poly constant(Fq c);
    static Poly monomial(Fq c, std::size_t deg);
    static Poly T(GroundField F) { return monomial(F.one(), 1); }

    GroundField field() const noexcept { return F_; }
    Degree degree() const noexcept {
        return c_.empty() ? Degree::neg_inf() : Degree::of(static_cast<long long>(c_.size()) - 1);
    }
    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
    Fq coeff(std::size_t i) const { return F_.elem(i < c_.size() ? c_[i] : 0); }
    Fq lead() const { return F_.elem(c_.empty() ? 0 : c_.back()); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    Poly monic() const;
    Poly derivative() const;
    /// Raises every coefficient to the p-th power and T to T^p.
    Poly frobenius() const;
    /// Inverse of frobenius(); requires derivative() == 0.
    Poly pth_root() const;
    Fq eval(Fq x) const;
    Poly pow(std::uint64_t e) const;
    Poly scaled(Fq c) const;
    Poly shifted(std::size_t k) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.F_ == b.F_ && a.c_ == b.c_; }

    std::string to_string(const char* var = "T") const;

   private:
    void trim() noexcept;
    GroundField F_;
    std::vector<std::uint32_t> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

/// Canonical total order: by degree, then coefficients from the top down.
bool poly_less(const Poly& a, const Poly& b) noexcept;
struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const noexcept { return poly_less(a, b); }
};

struct DivMod {
    Poly quot;
    Poly rem;
};
DivMod divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct XGcd {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // s*a + t*b == g
};
XGcd xgcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Poly invmod(const Poly& a, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);

struct Factorization {
    Fq lead;
    /// Monic irreducible factors with multiplicities, sorted by poly_less.
    std::vector<std::pair<Poly, unsigned>> factors;
};

/// Complete factorization over F_q. The seed only perturbs the random
/// splitting choices; the sorted result does not depend on it.
Factorization poly_factor(const Poly& f, std::optional<std::uint64_t> seed = std::nullopt);
/// Seed used when poly_factor gets none (0 unless overridden, e.g. by --seed).
void set_default_factor_seed(std::uint64_t seed);
bool poly_is_irreducible(const Poly& f);

/// Monic irreducible polynomials of exactly the given degree, in poly_less order.
std::vector<Poly> monic_irreducibles(GroundField F, unsigned degree);

/// All monic polynomials of the given degree, in poly_less order.
std::vector<Poly> monic_polys(GroundField F, unsigned degree);

/// Prime factors of n in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

}  // namespace ffgenus

#endif
