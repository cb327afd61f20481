#ifndef FFGENUS_CHARS_HPP
#define FFGENUS_CHARS_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ffgenus/extdesc.hpp"
#include "ffgenus/ffalg.hpp"
#include "ffgenus/witt_classes.hpp"

namespace ffgenus {

/// (F_q[T]/N)^* by enumeration: a basis g_1..g_k with orders n_1..n_k (within each
/// prime, non-increasing; primes ascending) and a complete discrete-log table.
/// Unit ids are the mixed-radix encodings of exponent vectors.
class UnitGroup {
   public:
    static constexpr std::uint64_t default_cap = 100000;

    /// Throws cap_exceeded when the number of units exceeds cap.
    static std::shared_ptr<const UnitGroup> make(const Poly& N, std::uint64_t cap = default_cap);

    const Poly& modulus() const noexcept { return N_; }
    const std::vector<std::pair<Poly, unsigned>>& factorization() const noexcept { return fac_; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }
    const std::vector<std::uint64_t>& orders() const noexcept { return orders_; }
    std::uint64_t size() const noexcept { return elems_.size(); }
    /// lcm of the orders; character values live in Z/exponent().
    std::uint64_t exponent() const noexcept { return exponent_; }

    /// Id of a unit (any representative); throws domain_error on non-units.
    std::uint64_t id_of(const Poly& u) const;
    const Poly& element(std::uint64_t id) const { return elems_.at(id); }
    std::vector<std::uint64_t> exponents(std::uint64_t id) const;
    std::uint64_t id_from_exponents(const std::vector<std::uint64_t>& e) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    /// Ids of the image of F_q^* (the inertia group at infinity).
    std::vector<std::uint64_t> constants() const;

   private:
    UnitGroup() = default;
    std::uint64_t code(const Poly& r) const;
    Poly N_{GroundField::make(2, 1)};
    std::vector<std::pair<Poly, unsigned>> fac_;
    std::vector<Poly> gens_;
    std::vector<std::uint64_t> orders_;
    std::uint64_t exponent_ = 1;
    std::vector<Poly> elems_;
    std::unordered_map<std::uint64_t, std::uint64_t> id_by_code_;
};

using UnitGroupPtr = std::shared_ptr<const UnitGroup>;

/// A Dirichlet character chi(g_i) = exp(2 pi i a_i / n_i).
struct DirichletChar {
    UnitGroupPtr G;
    std::vector<std::uint64_t> a;

    static DirichletChar trivial(UnitGroupPtr G);
    /// Validates that each fraction has denominator dividing n_i.
    static DirichletChar from_fractions(UnitGroupPtr G, const std::vector<Fraction>& f);
    std::vector<Fraction> fractions() const;
    /// Value as an element of Z/G->exponent().
    std::uint64_t value(std::uint64_t unit_id) const;
    std::uint64_t order() const;
    bool is_trivial() const;
    std::uint64_t id() const;  // mixed radix over the a_i
    friend bool operator==(const DirichletChar& x, const DirichletChar& y) { return x.a == y.a; }
};

/// chi restricted to the (F_q[T]/P^a)^* factor through the CRT embedding, viewed
/// again as a character mod N. Trivial when P does not divide N.
DirichletChar char_local_component(const DirichletChar& chi, const Poly& P);

/// chi composed with the projection (F_q[T]/M)^* -> (F_q[T]/N)^*, where N = chi.G's
/// modulus divides M = G's modulus.
DirichletChar lift_character(const DirichletChar& chi, const UnitGroupPtr& G);

/// A subgroup of the character group, stored as the sorted list of member ids.
class CharGroup {
   public:
    CharGroup(UnitGroupPtr G, const std::vector<DirichletChar>& generators);
    const UnitGroupPtr& units() const noexcept { return G_; }
    std::uint64_t size() const noexcept { return ids_.size(); }
    bool contains(const DirichletChar& chi) const;
    bool contains(const CharGroup& other) const;
    const std::vector<std::uint64_t>& ids() const noexcept { return ids_; }
    DirichletChar member(std::uint64_t id) const;
    /// Deterministic generating set: scan members by id, keep those not yet generated.
    std::vector<DirichletChar> generators() const;
    /// Common kernel (sorted unit ids).
    std::vector<std::uint64_t> kernel() const;
    friend bool operator==(const CharGroup& x, const CharGroup& y) { return x.ids_ == y.ids_; }

   private:
    UnitGroupPtr G_;
    std::vector<DirichletChar> gens_;
    std::vector<std::uint64_t> ids_;
};

/// Characters trivial on the given units.
CharGroup annihilator(const UnitGroupPtr& G, const std::vector<std::uint64_t>& units);

/// The local component X_P = {chi_P : chi in X}.
CharGroup local_component(const CharGroup& X, const Poly& P);

/// Validated character group of a cyclotomic descriptor.
CharGroup cyclotomic_chars(const CyclotomicSubfield& K, std::uint64_t cap = UnitGroup::default_cap);

/// e, f, h of the fixed field of ker X at a place, read off inertia and
/// decomposition groups inside (F_q[T]/N)^*. At infinity both are the constants.
PlaceData cyclotomic_place_data(const CharGroup& X, const Place& place);

/// The character of k((gamma D)^{1/t}) inside k(Lambda_N), N divisible by every
/// prime of D: the product of t-th power residue symbols (./P_i)_t^{alpha_i}, with
/// mu_t identified with Z/t through g^{(q-1)/t}.
DirichletChar kummer_character(const KummerExt& K, const UnitGroupPtr& G);

struct CharGenus {
    CharGroup X;   // K
    CharGroup Y;   // L: generated by the local components
    CharGroup Yplus;  // characters of Y trivial on the constants
    CharGroup genus;  // X * Y^+
    std::uint64_t d_order;  // |decomposition group of infinity in Gal(L/K)|
    std::uint64_t d_generator;  // unit id generating it (image of a constant)
};

/// Genus field of a subfield of k(Lambda_N) computed on both sides: the character
/// group X Y^+ and the fixed group (F_q^* H_L) cap H_K, which must be dual.
CharGenus genus_char_bruteforce(const CyclotomicSubfield& K, std::uint64_t cap = UnitGroup::default_cap);

}  // namespace ffgenus

#endif
