#ifndef FFGENUS_WITT_CLASSES_HPP
#define FFGENUS_WITT_CLASSES_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "ffgenus/ratfrac.hpp"
#include "ffgenus/residue.hpp"
#include "ffgenus/witt.hpp"

namespace ffgenus {

using WittRF = WittVec<RatFn>;

/// Local data at one place of an abelian extension: ramification index, inertia
/// degree and number of places above.
struct PlaceData {
    std::uint64_t e = 1;
    std::uint64_t f = 1;
    std::uint64_t h = 1;
    friend bool operator==(const PlaceData&, const PlaceData&) = default;
};

struct LocalReduction {
    WittRF reduced;                       // class-equivalent to the input
    std::optional<unsigned> ramified_at;  // first coordinate keeping a pole of order prime to p
};

/// Removes, coordinate by coordinate, poles of order divisible by p at the place.
/// When nothing is ramified the result is integral there.
LocalReduction witt_reduce_at(const WittRF& x, const Place& place);

/// Ramification index of k(y), y^p - y = x in Witt arithmetic, at the place.
std::uint64_t witt_ramification_index(const WittRF& x, const Place& place);

/// Value of an integral function at the place, in its residue field.
Residue residue_at(const RatFn& a, const Place& place);
ResidueCtx residue_field_at(const Place& place);

/// For x integral at the place: is x = F(w) - w locally solvable in the residue field,
/// i.e. does the place split completely in k(y)?
bool witt_splits_at(const WittRF& x_integral, const Place& place);

/// Is x = F(w) - w for some Witt vector w over F_q(T)?
bool witt_is_trivial(const WittRF& x);

/// Is c = F(w) - w over the finite field of c's coordinates?
bool witt_constant_trivial(const WittVec<Residue>& c);

/// Order of the class of c in W_v(F_q) / (F^u - 1) W_v(F_q).
std::uint64_t constant_class_order(const WittVec<Fq>& c, unsigned u = 1);

/// The finite group A = <generators> + (F-1)W_v(k) / (F-1)W_v(k), i.e. the
/// Artin-Schreier-Witt dual of the compositum of the k(F(y) - y = g). All counts are
/// obtained by enumerating the integer combinations of the generators.
class WittClassGroup {
   public:
    static constexpr std::size_t default_cap = 4096;

    WittClassGroup(std::vector<WittRF> generators, std::size_t cap = default_cap);

    const std::vector<WittRF>& generators() const noexcept { return gens_; }
    /// Degree of the field over k.
    std::uint64_t order() const;
    PlaceData at(const Place& place) const;
    /// Is the class of x in the group?
    bool contains(const WittRF& x) const;
    /// Monic primes dividing some coordinate denominator (the only possible ramification).
    std::vector<Poly> support() const;

   private:
    std::vector<WittRF> gens_;
    std::vector<WittRF> elems_;
    mutable std::once_flag zero_once_;
    mutable std::vector<char> zero_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<std::uint32_t>, PlaceData> place_cache_;
    void compute_zero() const;
};

}  // namespace ffgenus

#endif
