#ifndef FFGENUS_RAMIFY_HPP
#define FFGENUS_RAMIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffgenus/chars.hpp"
#include "ffgenus/extdesc.hpp"
#include "ffgenus/kummer.hpp"
#include "ffgenus/witt_classes.hpp"

namespace ffgenus {

struct FinitePlace {
    Poly P;
    std::uint64_t e;
    std::optional<std::uint64_t> f;  // filled when the method determines it
    std::optional<std::uint64_t> h;
};

struct RamificationReport {
    std::string family;
    std::uint64_t degree = 1;        // [K:k]
    std::vector<FinitePlace> finite;  // ramified primes, sorted
    PlaceData infinity;
    std::uint64_t t = 1;  // f_infinity: the infinite primes have degree t
    std::uint64_t constant_field_degree = 1;
    /// Set when f_infinity came from a rule checked only against an independent
    /// brute-force route rather than derived in closed form.
    bool f_infinity_oracle_verified = false;

    std::uint64_t e_at(const Poly& P) const;  // 1 for unlisted primes
};

struct CapConfig {
    std::uint64_t unit_group = UnitGroup::default_cap;
    std::size_t witt_classes = WittClassGroup::default_cap;
};

RamificationReport kummer_ramify(const KummerExt& K);
RamificationReport asw_ramify(const ASWExt& K, const CapConfig& caps = {});
RamificationReport cyclotomic_ramify(const CyclotomicSubfield& K, const CapConfig& caps = {});
RamificationReport composite_ramify(const CompositeExt& K, const CapConfig& caps = {});
RamificationReport constant_ramify(const ConstantExt& K);
RamificationReport ramify(const Descriptor& d, const CapConfig& caps = {});

/// Radical group <gamma D> of a Kummer descriptor, over its own primes.
RadicalGroup kummer_radical_group(const KummerExt& K);

/// Characters of the tame parts of a composite, lifted to the lcm of their moduli.
CharGroup composite_tame_chars(const CompositeExt& K, const CapConfig& caps = {});

/// Checks the tame-degree conditions of a composite descriptor.
void composite_validate(const CompositeExt& K, const CapConfig& caps = {});

/// f_infinity of k(F^u(y) - y = c) for a constant Witt vector c: the order of its
/// class in W_v(F_q) / (F^u - 1) W_v(F_q).
std::uint64_t infinite_constant_class(const WittVec<Fq>& c, unsigned u = 1);

/// Largest m such that the first m coordinates of x form a trivial class; the cyclic
/// field k(F(y) - y = x) then has degree p^{v - m}.
unsigned witt_trivial_prefix(const WittRF& x);

}  // namespace ffgenus

#endif
