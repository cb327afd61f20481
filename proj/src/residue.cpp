#include "ffgenus/residue.hpp"

#include "ffgenus/errors.hpp"
#include "ffgenus/linalg.hpp"

namespace ffgenus {

std::shared_ptr<const ResidueField> ResidueField::make(const Poly& P) {
    if (P.is_constant() || !P.is_monic() || !poly_is_irreducible(P))
        throw schema_error("residue field modulus must be monic irreducible: " + P.to_string());
    return std::shared_ptr<const ResidueField>(new ResidueField(P.field(), P));
}

std::uint64_t ResidueField::size() const {
    unsigned __int128 s = 1;
    for (unsigned i = 0; i < d_; ++i) {
        s *= F_.q();
        if (s > (unsigned __int128)UINT64_MAX) throw cap_exceeded("residue field too large");
    }
    return static_cast<std::uint64_t>(s);
}

Residue::Residue(ResidueCtx ctx, const Poly& v) : ctx_(std::move(ctx)), v_(v % ctx_->modulus()) {}

Residue Residue::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero residue");
    return Residue(ctx_, invmod(v_, ctx_->modulus()), true);
}

Residue Residue::pow(std::uint64_t e) const { return Residue(ctx_, powmod(v_, e, ctx_->modulus()), true); }

Residue Residue::frobenius() const { return Residue(ctx_, v_.frobenius() % ctx_->modulus(), true); }

Residue Residue::pth_root() const {
    // x -> x^p has order prime_degree on the field, so the root is x^{p^{n-1}}
    Residue r = *this;
    for (unsigned i = 1; i < ctx_->prime_degree(); ++i) r = r.frobenius();
    return r;
}

std::vector<std::uint32_t> Residue::fp_coords() const {
    const auto F = ctx_->base();
    std::vector<std::uint32_t> out;
    out.reserve(ctx_->prime_degree());
    for (unsigned i = 0; i < ctx_->degree(); ++i) {
        auto d = F.digits(v_.coeff(i).code());
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

Residue Residue::from_fp_coords(const ResidueCtx& ctx, const std::vector<std::uint32_t>& c) {
    const auto F = ctx->base();
    const auto l = F.l();
    std::vector<std::uint32_t> coeffs(ctx->degree());
    for (unsigned i = 0; i < ctx->degree(); ++i)
        coeffs[i] = F.from_digits(std::span<const std::uint32_t>(c.data() + i * l, l));
    return Residue(ctx, Poly(F, std::move(coeffs)), true);
}

std::optional<Residue> solve_artin_schreier(const Residue& c) {
    const auto& ctx = c.ctx();
    const auto n = ctx->prime_degree();
    const auto p = ctx->p();
    // column j of the matrix is the image of the j-th basis vector under x^p - x
    FpMatrix A(n, std::vector<std::uint32_t>(n, 0));
    for (unsigned j = 0; j < n; ++j) {
        std::vector<std::uint32_t> e(n, 0);
        e[j] = 1;
        auto x = Residue::from_fp_coords(ctx, e);
        auto img = (x.frobenius() - x).fp_coords();
        for (unsigned i = 0; i < n; ++i) A[i][j] = img[i];
    }
    auto sol = fp_solve(std::move(A), c.fp_coords(), n, p);
    if (!sol) return std::nullopt;
    return Residue::from_fp_coords(ctx, *sol);
}

std::uint32_t residue_trace(const Residue& c) {
    Residue s = c, x = c;
    for (unsigned i = 1; i < c.ctx()->prime_degree(); ++i) {
        x = x.frobenius();
        s = s + x;
    }
    // the trace lies in F_p, i.e. it is a constant whose code is < p
    return s.lift().coeff(0).code();
}

}  // namespace ffgenus
