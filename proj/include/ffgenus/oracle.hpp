#ifndef FFGENUS_ORACLE_HPP
#define FFGENUS_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffgenus/chars.hpp"
#include "ffgenus/extdesc.hpp"
#include "ffgenus/genus.hpp"
#include "ffgenus/kummer.hpp"
#include "ffgenus/ramify.hpp"
#include "ffgenus/witt.hpp"

namespace ffgenus {

/// Outcome of one brute-force check. pass is exactly expected == observed.
struct OracleVerdict {
    std::string claim;
    std::string expected;
    std::string observed;
    bool pass = false;
    std::string instance;
};

/// Lifts the coordinates of x, y and the claimed sum s to W(F_q) and checks
/// w_j(s) = w_j(x) + w_j(y) mod p^{j+1} for every ghost component j.
OracleVerdict oracle_witt_ghost(const WittVec<Fq>& x, const WittVec<Fq>& y, const WittVec<Fq>& s);
OracleVerdict oracle_witt_ghost(const WittVec<Fq>& x, const WittVec<Fq>& y);

/// y^p - y = alpha: at every pole and at infinity, P ramifies (e = p) iff the fully
/// reduced alpha keeps a pole there. Compared with the claimed report.
OracleVerdict oracle_as_different(const RatFn& alpha, const RamificationReport& claimed);
OracleVerdict oracle_as_different(const RatFn& alpha);

/// Ramification indices at every finite prime and e, f at infinity recomputed by a
/// second route: the radical group for Kummer, pole reduction for cyclic
/// Artin-Schreier, the class-group engine for Witt vectors, local character
/// components for the tame parts.
OracleVerdict oracle_ramification(const Descriptor& K, const RamificationReport& claimed, const CapConfig& caps = {});

/// K_ge / K is unramified at every finite prime and the infinite primes of K split:
/// the ramification indices over k and the data at infinity of the candidate equal
/// those of K, and K lies in the candidate. Class groups, radical groups or
/// character groups are rebuilt from the report's generators.
OracleVerdict oracle_genus_unramified(const Descriptor& K, const GenusFieldReport& candidate, const CapConfig& caps = {});

/// Smallest m' <= bound with t | m' and every constant class trivial over F_{q^m'}.
/// Throws cap_exceeded when bound < m_claimed.
OracleVerdict oracle_conductor_minimality(const Descriptor& K, std::uint64_t m_claimed, std::uint64_t bound,
                                          const CapConfig& caps = {});

/// The default search bound 2 p^v (2 p for non-Witt families, at least m_claimed for constants).
std::uint64_t conductor_search_bound(const Descriptor& K);

/// Character of k(b^{1/t}) in k(Lambda_N) for b = prod ((-1)^{deg P_i} P_i)^{e_i};
/// throws schema_error when the constant of b has another form.
DirichletChar radical_character(const RadicalElem& b, unsigned t, const std::vector<Poly>& primes, const UnitGroupPtr& G);

}  // namespace ffgenus

#endif
