#ifndef FFGENUS_KUMMER_HPP
#define FFGENUS_KUMMER_HPP

#include <cstdint>
#include <vector>

#include "ffgenus/ffalg.hpp"
#include "ffgenus/ratfrac.hpp"
#include "ffgenus/witt_classes.hpp"

namespace ffgenus {

/// Element c * prod P_i^{e_i} of k^* / k^{*t} over a fixed prime list, stored as
/// [log_g c mod t, e_1 mod t, ..., e_r mod t].
using RadicalElem = std::vector<unsigned>;

/// A finite subgroup B of k^* / k^{*t} (t | q - 1); its field k(B^{1/t}) has degree |B|.
class RadicalGroup {
   public:
    static constexpr std::size_t default_cap = 1u << 16;

    RadicalGroup(GroundField F, unsigned t, std::vector<Poly> primes, const std::vector<RadicalElem>& generators,
                 std::size_t cap = default_cap);

    unsigned t() const noexcept { return t_; }
    const std::vector<Poly>& primes() const noexcept { return primes_; }
    const std::vector<RadicalElem>& members() const noexcept { return members_; }
    std::uint64_t order() const noexcept { return members_.size(); }
    bool contains(const RadicalElem& b) const;
    PlaceData at(const Place& place) const;

    /// c * prod P_i^{e_i} as a polynomial (exponents taken in [0, t)).
    Poly value(const RadicalElem& b) const;
    /// Factors a monic-times-constant polynomial over the prime list.
    RadicalElem element_of(Fq c, const Poly& monic) const;

   private:
    bool is_tth_power_at(const RadicalElem& b, const Place& place) const;
    GroundField F_;
    unsigned t_;
    std::vector<Poly> primes_;
    std::vector<RadicalElem> members_;  // sorted
};

}  // namespace ffgenus

#endif
