#ifndef FFGENUS_EXTDESC_HPP
#define FFGENUS_EXTDESC_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ffgenus/ffalg.hpp"
#include "ffgenus/ratfrac.hpp"
#include "ffgenus/witt_classes.hpp"

namespace ffgenus {

/// K = k(y), y^t = gamma * D with D = prod P_i^{alpha_i} monic, 0 < alpha_i < t,
/// t | q - 1 and gamma = (-1)^{deg D}.
struct KummerExt {
    unsigned t;
    Poly D;
    std::vector<std::pair<Poly, unsigned>> factors;  // sorted by prime
    Fq gamma;
    friend bool operator==(const KummerExt&, const KummerExt&) = default;
};

/// Reduces exponents mod t and fixes gamma. D must be monic and nonconstant;
/// throws trivial_extension when every exponent is a multiple of t.
KummerExt kummer_normalize(unsigned t, const Poly& D);

/// K = k(y), F^u(y) - y = xi in W_v(k), u | l. Alternatively (or additionally) the
/// compositum of the cyclic fields F(w_i) - w_i = factors[i].
struct ASWExt {
    unsigned u = 1;
    unsigned v = 1;
    std::optional<WittRF> xi;
    std::vector<WittRF> factors;

    GroundField field() const;
    std::uint32_t p() const;
    friend bool operator==(const ASWExt&, const ASWExt&) = default;
};

/// Throws schema_error on malformed data (length mismatch, u not dividing l, ...).
void asw_validate(const ASWExt& K);

/// Generators of the dual group of K for the operator F - 1: the factors when
/// given, otherwise [omega^j] xi for j < u where omega generates F_{p^u}^*.
std::vector<WittRF> asw_generators(const ASWExt& K);

struct ASWDecomposition {
    /// One term per prime in the support; coordinates are proper fractions with
    /// poles only at that prime.
    std::vector<std::pair<Poly, WittRF>> deltas;
    WittRF gamma;  // polynomial coordinates
};

/// xi = delta_1 + ... + delta_r + gamma in Witt arithmetic (an identity, not just
/// an equality of classes).
ASWDecomposition asw_decompose(const WittRF& xi);

/// Cyclic factors with u = 1. A field given with v = 1, or with u = 1, is returned
/// as the single entry; otherwise the factor list must be present.
std::vector<ASWExt> asw_cyclic_split(const ASWExt& K);

/// Exponent of a character value: num/den in Q/Z, stored reduced with 0 <= num < den.
struct Fraction {
    long long num = 0;
    long long den = 1;
    static Fraction make(long long num, long long den);
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// The subfield of k(Lambda_N) fixed by the common kernel of the given characters.
/// Each character lists chi(g_i) = exp(2 pi i * frac_i) on the deterministic
/// generators g_i of (F_q[T]/N)^* returned by the unit group.
struct CyclotomicSubfield {
    Poly N;
    std::vector<std::vector<Fraction>> chars;
    friend bool operator==(const CyclotomicSubfield&, const CyclotomicSubfield&) = default;
};

/// E0 * F_1 * ... * F_s with E0 a p-extension and the F_j tame cyclotomic subfields.
struct CompositeExt {
    ASWExt p_part;
    std::vector<CyclotomicSubfield> cyclic_parts;
    friend bool operator==(const CompositeExt&, const CompositeExt&) = default;
};

/// The constant field extension k F_{q^m}.
struct ConstantExt {
    GroundField F;
    unsigned m;
    friend bool operator==(const ConstantExt&, const ConstantExt&) = default;
};

using Descriptor = std::variant<KummerExt, ASWExt, CyclotomicSubfield, CompositeExt, ConstantExt>;

GroundField descriptor_field(const Descriptor& d);

}  // namespace ffgenus

#endif
