#ifndef FFGENUS_GENUS_HPP
#define FFGENUS_GENUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ffgenus/chars.hpp"
#include "ffgenus/extdesc.hpp"
#include "ffgenus/kummer.hpp"
#include "ffgenus/ramify.hpp"

namespace ffgenus {

/// name^{p^u} - name = rhs in Witt arithmetic. prime is set for a term supported at
/// one finite prime.
struct WittEquation {
    std::string name;
    unsigned u = 1;
    WittRF rhs;
    std::optional<Poly> prime;
};

/// name^n = c * radicand, radicand monic.
struct RadicalEquation {
    std::string name;
    unsigned n;
    Fq c;
    Poly radicand;
};

/// The subfield of degree `degree` of k(Lambda_P), P monic irreducible.
struct CyclotomicPiece {
    std::string name;
    Poly P;
    std::uint64_t degree;
};

/// A subfield of k(Lambda_N) given by characters.
struct CharacterField {
    std::string name;
    CyclotomicSubfield field;
};

/// k F_{q^m}.
struct ConstantField {
    std::string name;
    unsigned m;
};

using FieldGenerator = std::variant<WittEquation, RadicalEquation, CyclotomicPiece, CharacterField, ConstantField>;

/// A subgroup of Z/moduli[0] x ... listed by generators.
struct SubgroupDescription {
    std::uint64_t order = 1;
    std::vector<std::uint64_t> moduli;
    std::vector<std::vector<std::uint64_t>> generators;
};

struct GenusFieldReport {
    std::string family;
    /// K_ge = k(generators) (together with K itself for composites).
    std::vector<FieldGenerator> generators;
    /// L when K_ge is presented as the fixed field L^D.
    std::vector<FieldGenerator> ambient;
    std::optional<SubgroupDescription> d_subgroup;
    std::uint64_t degree_over_K = 1;
    std::uint64_t degree_over_k = 1;
    std::uint64_t constant_field_degree = 1;
};

GenusFieldReport genus_kummer(const KummerExt& K, const CapConfig& caps = {});
GenusFieldReport genus_asw(const ASWExt& K, const CapConfig& caps = {});
GenusFieldReport genus_cyclotomic(const CyclotomicSubfield& K, const CapConfig& caps = {});
GenusFieldReport genus_composite(const CompositeExt& K, const CapConfig& caps = {});
GenusFieldReport genus_constant(const ConstantExt& K);
GenusFieldReport genus(const Descriptor& d, const CapConfig& caps = {});

/// Dual generators of k(y) for an equation, one per Teichmuller multiple when u > 1.
std::vector<WittRF> witt_equation_generators(const WittEquation& eq);

/// All Witt generators of the Witt equations in a report.
std::vector<WittRF> report_witt_generators(const GenusFieldReport& r);

/// Element of k^* / k^{*t} whose t-th root generates the same field as the equation
/// (n must divide t), over the given prime list.
RadicalElem radical_equation_element(const RadicalEquation& eq, unsigned t, const std::vector<Poly>& primes);

/// Reduced echelon basis over F_p of the span of the classes of the gens in
/// k / (F - 1)k. Two lists give the same Artin-Schreier field iff these agree.
std::vector<RatFn> as_span_basis(const std::vector<RatFn>& gens);

/// Do the two generator lists give the same field? Span bases for length one,
/// mutual class-group containment otherwise.
bool asw_same_field(const std::vector<WittRF>& a, const std::vector<WittRF>& b, const CapConfig& caps = {});

/// f_infinity of the field generated by the Witt vectors (1 for an empty list).
std::uint64_t asw_f_infinity(const std::vector<WittRF>& gens, const CapConfig& caps = {});

/// Conductor of constants m = t d p^s = t d*.
struct ConductorReport {
    std::uint64_t m = 1;
    std::uint64_t t = 1;
    std::uint64_t d = 1;
    std::uint64_t d_star = 1;
    unsigned s = 0;
};

/// Constant parts of the generators: the value at T = 0 of the polynomial part.
std::vector<WittVec<Fq>> asw_constant_parts(const ASWExt& K);

ConductorReport conductor_of_constants(const Descriptor& d, const CapConfig& caps = {});

}  // namespace ffgenus

#endif
