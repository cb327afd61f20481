#include "ffgenus/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ffgenus {

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

namespace {

// Reduces [A | b] to row echelon form in place, returns pivot columns per row.
std::vector<std::size_t> echelon(FpMatrix& A, std::vector<std::uint32_t>* b, std::size_t cols, std::uint32_t p) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < A.size(); ++c) {
        std::size_t sel = row;
        while (sel < A.size() && A[sel][c] == 0) ++sel;
        if (sel == A.size()) continue;
        std::swap(A[sel], A[row]);
        if (b) std::swap((*b)[sel], (*b)[row]);
        const std::uint64_t inv = fp_inv(A[row][c], p);
        for (auto& x : A[row]) x = static_cast<std::uint32_t>(x * inv % p);
        if (b) (*b)[row] = static_cast<std::uint32_t>((*b)[row] * inv % p);
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == row || A[r][c] == 0) continue;
            const std::uint64_t f = A[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                A[r][k] = static_cast<std::uint32_t>((A[r][k] + (p - f) * A[row][k]) % p);
            if (b) (*b)[r] = static_cast<std::uint32_t>(((*b)[r] + (p - f) * (*b)[row]) % p);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> fp_solve(FpMatrix A, std::vector<std::uint32_t> b, std::size_t cols,
                                                   std::uint32_t p) {
    if (A.size() != b.size()) throw std::invalid_argument("fp_solve: row count mismatch");
    auto pivots = echelon(A, &b, cols, p);
    for (std::size_t r = pivots.size(); r < A.size(); ++r)
        if (b[r] != 0) return std::nullopt;
    std::vector<std::uint32_t> x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
    return x;
}

std::size_t fp_rank(FpMatrix A, std::uint32_t p) {
    if (A.empty()) return 0;
    return echelon(A, nullptr, A[0].size(), p).size();
}

FpMatrix fp_rref(FpMatrix A, std::uint32_t p) {
    if (A.empty()) return A;
    auto r = echelon(A, nullptr, A[0].size(), p).size();
    A.resize(r);
    return A;
}

}  // namespace ffgenus
