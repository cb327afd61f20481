#ifndef FFGENUS_RESIDUE_HPP
#define FFGENUS_RESIDUE_HPP

#include <memory>
#include <optional>

#include "ffgenus/ffalg.hpp"

namespace ffgenus {

/// The finite field F_q[T]/(P) for a monic irreducible P, of size q^{deg P}.
/// Used both as the residue field at a finite prime and, with P of degree m,
/// as a model of the constant extension F_{q^m}.
class ResidueField {
   public:
    /// P must be monic irreducible (checked).
    static std::shared_ptr<const ResidueField> make(const Poly& P);

    GroundField base() const noexcept { return F_; }
    const Poly& modulus() const noexcept { return P_; }
    unsigned degree() const noexcept { return d_; }
    /// Degree over the prime field, l * deg P.
    unsigned prime_degree() const noexcept { return F_.l() * d_; }
    std::uint32_t p() const noexcept { return F_.p(); }
    /// Field size; throws cap_exceeded when it does not fit in 64 bits.
    std::uint64_t size() const;

   private:
    ResidueField(GroundField F, Poly P) : F_(F), P_(std::move(P)), d_(static_cast<unsigned>(P_.degree().value())) {}
    GroundField F_;
    Poly P_;
    unsigned d_;
};

using ResidueCtx = std::shared_ptr<const ResidueField>;

/// Element of a ResidueField, stored as its reduced polynomial representative.
class Residue {
   public:
    Residue(ResidueCtx ctx, const Poly& v);
    static Residue zero(const ResidueCtx& ctx) { return Residue(ctx, Poly(ctx->base())); }
    static Residue one(const ResidueCtx& ctx) { return Residue(ctx, Poly::constant(ctx->base().one())); }

    const ResidueCtx& ctx() const noexcept { return ctx_; }
    const Poly& lift() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_.is_zero(); }

    Residue inv() const;
    Residue pow(std::uint64_t e) const;
    Residue frobenius() const;  // x^p
    Residue pth_root() const;

    /// Coordinates over F_p: for each coefficient of the representative (degree < deg P)
    /// its l base-p digits, concatenated. Length prime_degree().
    std::vector<std::uint32_t> fp_coords() const;
    static Residue from_fp_coords(const ResidueCtx& ctx, const std::vector<std::uint32_t>& c);

    friend Residue operator+(const Residue& a, const Residue& b) { return Residue(a.ctx_, a.v_ + b.v_, true); }
    friend Residue operator-(const Residue& a, const Residue& b) { return Residue(a.ctx_, a.v_ - b.v_, true); }
    friend Residue operator*(const Residue& a, const Residue& b) {
        return Residue(a.ctx_, (a.v_ * b.v_) % a.ctx_->modulus(), true);
    }
    Residue operator-() const { return Residue(ctx_, -v_, true); }
    friend bool operator==(const Residue& a, const Residue& b) noexcept { return a.v_ == b.v_; }

   private:
    Residue(ResidueCtx ctx, Poly v, bool) : ctx_(std::move(ctx)), v_(std::move(v)) {}
    ResidueCtx ctx_;
    Poly v_;
};

/// Some b with b^p - b = c, or nullopt (solved by linear algebra over F_p).
std::optional<Residue> solve_artin_schreier(const Residue& c);

/// Absolute trace to F_p as an integer in [0, p).
std::uint32_t residue_trace(const Residue& c);

}  // namespace ffgenus

#endif
