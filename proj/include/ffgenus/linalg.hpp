#ifndef FFGENUS_LINALG_HPP
#define FFGENUS_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace ffgenus {

/// Dense matrix over F_p stored by rows; entries in [0, p).
using FpMatrix = std::vector<std::vector<std::uint32_t>>;

/// Some x with A x = b over F_p, or nullopt if the system is inconsistent.
/// A has rows.size() equations and cols unknowns.
std::optional<std::vector<std::uint32_t>> fp_solve(FpMatrix A, std::vector<std::uint32_t> b, std::size_t cols,
                                                   std::uint32_t p);

std::size_t fp_rank(FpMatrix A, std::uint32_t p);

/// Nonzero rows of the reduced row echelon form (pivots scanned left to right).
FpMatrix fp_rref(FpMatrix A, std::uint32_t p);

/// Modular inverse of a in Z/p, p prime, a != 0 mod p.
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

}  // namespace ffgenus

#endif
