#ifndef FFGENUS_WITT_HPP
#define FFGENUS_WITT_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "ffgenus/errors.hpp"
#include "ffgenus/ffalg.hpp"
#include "ffgenus/ratfrac.hpp"
#include "ffgenus/residue.hpp"

namespace ffgenus {

/// Size limits for the universal Witt polynomials.
struct WittLimits {
    unsigned max_length = 4;
    std::uint64_t max_pv = 128;  // bound on p^v
};

/// Process-wide limits (atomic); the CLI sets them once from --cap-wittlen.
WittLimits witt_limits();
void set_witt_limits(WittLimits lim);

struct WittTerm {
    std::uint32_t coef;                // in [1, p)
    std::vector<std::uint16_t> exps;  // one exponent per variable
};
using WittPoly = std::vector<WittTerm>;

/// Addition polynomials S_0..S_{v-1} in X_0..X_{v-1}, Y_0..Y_{v-1} and negation
/// polynomials N_0..N_{v-1} in X_0..X_{v-1}, reduced mod p.
struct WittPolys {
    std::uint32_t p;
    unsigned v;
    std::vector<WittPoly> add;
    std::vector<WittPoly> neg;
};

/// Cached per (p, v); throws cap_exceeded beyond witt_limits().
const WittPolys& witt_polys(std::uint32_t p, unsigned v);

/// Ring hooks used by WittVec for each supported coordinate domain.
namespace ring {
inline Fq zero_like(const Fq& a) { return a.field().zero(); }
inline Poly zero_like(const Poly& a) { return Poly(a.field()); }
inline RatFn zero_like(const RatFn& a) { return RatFn(a.field()); }
inline Residue zero_like(const Residue& a) { return Residue::zero(a.ctx()); }

inline Fq one_like(const Fq& a) { return a.field().one(); }
inline Poly one_like(const Poly& a) { return Poly::constant(a.field().one()); }
inline RatFn one_like(const RatFn& a) { return RatFn::constant(a.field().one()); }
inline Residue one_like(const Residue& a) { return Residue::one(a.ctx()); }

inline Fq scale(const Fq& a, Fq c) { return a * c; }
inline Poly scale(const Poly& a, Fq c) { return a.scaled(c); }
inline RatFn scale(const RatFn& a, Fq c) { return RatFn(a.num().scaled(c), a.den()); }
inline Residue scale(const Residue& a, Fq c) { return Residue(a.ctx(), a.lift().scaled(c)); }

inline GroundField field_of(const Fq& a) { return a.field(); }
inline GroundField field_of(const Poly& a) { return a.field(); }
inline GroundField field_of(const RatFn& a) { return a.field(); }
inline GroundField field_of(const Residue& a) { return a.ctx()->base(); }

inline bool is_zero(const Fq& a) { return a.is_zero(); }
inline bool is_zero(const Poly& a) { return a.is_zero(); }
inline bool is_zero(const RatFn& a) { return a.is_zero(); }
inline bool is_zero(const Residue& a) { return a.is_zero(); }

inline Fq power(const Fq& a, std::uint64_t e) { return a.pow(e); }
inline Poly power(const Poly& a, std::uint64_t e) { return a.pow(e); }
inline RatFn power(const RatFn& a, std::uint64_t e) { return a.pow(static_cast<long long>(e)); }
inline Residue power(const Residue& a, std::uint64_t e) { return a.pow(e); }

inline Fq frobenius(const Fq& a) { return a.pow(a.field().p()); }
inline Poly frobenius(const Poly& a) { return a.frobenius(); }
inline RatFn frobenius(const RatFn& a) { return a.frobenius(); }
inline Residue frobenius(const Residue& a) { return a.frobenius(); }
}  // namespace ring

/// Witt vector of length v >= 1 over a ring of characteristic p.
template <class R>
class WittVec {
   public:
    WittVec(std::uint32_t p, std::vector<R> coords) : p_(p), c_(std::move(coords)) {
        if (c_.empty()) throw schema_error("Witt vectors need length at least 1");
    }
    static WittVec zero(std::uint32_t p, unsigned v, const R& like) {
        return WittVec(p, std::vector<R>(v, ring::zero_like(like)));
    }
    /// (a, 0, ..., 0)
    static WittVec lead(std::uint32_t p, unsigned v, const R& a) {
        std::vector<R> c(v, ring::zero_like(a));
        c[0] = a;
        return WittVec(p, std::move(c));
    }

    std::uint32_t p() const noexcept { return p_; }
    unsigned length() const noexcept { return static_cast<unsigned>(c_.size()); }
    const std::vector<R>& coords() const noexcept { return c_; }
    const R& operator[](std::size_t i) const { return c_.at(i); }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!ring::is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const WittVec& a, const WittVec& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

   private:
    std::uint32_t p_;
    std::vector<R> c_;
};

namespace detail {

template <class R>
void check_compatible(const WittVec<R>& x, const WittVec<R>& y) {
    if (x.p() != y.p() || x.length() != y.length())
        throw schema_error("Witt vectors of different length or characteristic");
    if (!(ring::field_of(x[0]) == ring::field_of(y[0]))) throw schema_error("Witt vectors over different fields");
}

template <class R>
R eval_witt_poly(const WittPoly& f, const std::vector<std::vector<R>>& powers, const R& like) {
    const auto F = ring::field_of(like);
    R acc = ring::zero_like(like);
    for (const auto& t : f) {
        R prod = ring::one_like(like);
        bool zero = false;
        for (std::size_t j = 0; j < t.exps.size() && !zero; ++j) {
            if (t.exps[j] == 0) continue;
            const auto& pw = powers[j];
            if (ring::is_zero(pw[1])) zero = true;
            else prod = prod * pw[t.exps[j]];
        }
        if (!zero) acc = acc + ring::scale(prod, F.from_int(t.coef));
    }
    return acc;
}

// powers[j][e] = vars[j]^e for e up to the largest exponent used on variable j
template <class R>
std::vector<std::vector<R>> power_table(const std::vector<R>& vars, const std::vector<WittPoly>& polys) {
    std::vector<unsigned> maxe(vars.size(), 1);
    for (const auto& f : polys)
        for (const auto& t : f)
            for (std::size_t j = 0; j < t.exps.size(); ++j) maxe[j] = std::max<unsigned>(maxe[j], t.exps[j]);
    std::vector<std::vector<R>> pw(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) {
        pw[j].reserve(maxe[j] + 1);
        pw[j].push_back(ring::one_like(vars[j]));
        for (unsigned e = 1; e <= maxe[j]; ++e) pw[j].push_back(pw[j].back() * vars[j]);
    }
    return pw;
}

template <class R>
std::vector<R> eval_all(const std::vector<WittPoly>& polys, const std::vector<R>& vars) {
    auto pw = power_table(vars, polys);
    std::vector<R> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(eval_witt_poly(f, pw, vars[0]));
    return out;
}

// Rational coordinates: clear a common denominator D using isobaric weights
// (X_i has weight p^i), evaluate over polynomials, then divide by D^{p^n}.
std::vector<RatFn> eval_all_ratfn(const std::vector<WittPoly>& polys, const std::vector<RatFn>& vars,
                                  std::uint32_t p, unsigned v);

template <class R>
std::vector<R> eval_dispatch(const std::vector<WittPoly>& polys, const std::vector<R>& vars, std::uint32_t p,
                             unsigned v) {
    if constexpr (std::is_same_v<R, RatFn>) return eval_all_ratfn(polys, vars, p, v);
    else return eval_all(polys, vars);
}

}  // namespace detail

template <class R>
WittVec<R> witt_add(const WittVec<R>& x, const WittVec<R>& y) {
    detail::check_compatible(x, y);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const auto v = x.length();
    const auto& U = witt_polys(x.p(), v);
    std::vector<R> vars = x.coords();
    vars.insert(vars.end(), y.coords().begin(), y.coords().end());
    return WittVec<R>(x.p(), detail::eval_dispatch(U.add, vars, x.p(), v));
}

template <class R>
WittVec<R> witt_neg(const WittVec<R>& x) {
    if (x.is_zero()) return x;
    const auto& U = witt_polys(x.p(), x.length());
    return WittVec<R>(x.p(), detail::eval_dispatch(U.neg, x.coords(), x.p(), x.length()));
}

template <class R>
WittVec<R> witt_sub(const WittVec<R>& x, const WittVec<R>& y) {
    return witt_add(x, witt_neg(y));
}

/// Coordinatewise p^u-th power.
template <class R>
WittVec<R> witt_frob_power(const WittVec<R>& x, unsigned u) {
    std::vector<R> c = x.coords();
    for (auto& a : c)
        for (unsigned i = 0; i < u; ++i) a = ring::frobenius(a);
    return WittVec<R>(x.p(), std::move(c));
}

/// y^{p^u} - y in Witt arithmetic.
template <class R>
WittVec<R> asw_operator(const WittVec<R>& y, unsigned u) {
    return witt_sub(witt_frob_power(y, u), y);
}

/// n * x for an integer n (reduced mod p^v), by double and add.
template <class R>
WittVec<R> witt_scale(const WittVec<R>& x, long long n) {
    long long mod = 1;
    for (unsigned i = 0; i < x.length(); ++i) mod *= x.p();
    n %= mod;
    if (n < 0) n += mod;
    WittVec<R> acc = WittVec<R>::zero(x.p(), x.length(), x[0]);
    WittVec<R> base = x;
    while (n) {
        if (n & 1) acc = witt_add(acc, base);
        n >>= 1;
        if (n) base = witt_add(base, base);
    }
    return acc;
}

/// [beta] * x, where [beta] is the Teichmuller representative of a constant:
/// coordinate i is multiplied by beta^{p^i}.
template <class R>
WittVec<R> teichmuller_mul(Fq beta, const WittVec<R>& x) {
    std::vector<R> c = x.coords();
    Fq b = beta;
    for (auto& a : c) {
        a = ring::scale(a, b);
        b = b.pow(x.p());
    }
    return WittVec<R>(x.p(), std::move(c));
}

/// Verschiebung: (x_0, ..., x_{v-1}) -> (0, x_0, ..., x_{v-2}), applied k times.
template <class R>
WittVec<R> witt_shift(const WittVec<R>& x, unsigned k = 1) {
    std::vector<R> c(x.length(), ring::zero_like(x[0]));
    for (unsigned i = 0; i + k < x.length(); ++i) c[i + k] = x[i];
    return WittVec<R>(x.p(), std::move(c));
}

/// First k coordinates (the image in W_k).
template <class R>
WittVec<R> witt_truncate(const WittVec<R>& x, unsigned k) {
    std::vector<R> c(x.coords().begin(), x.coords().begin() + k);
    return WittVec<R>(x.p(), std::move(c));
}

/// Applies f to each coordinate.
template <class S, class R, class Fn>
WittVec<S> witt_map(const WittVec<R>& x, Fn f) {
    std::vector<S> c;
    c.reserve(x.length());
    for (const auto& a : x.coords()) c.push_back(f(a));
    return WittVec<S>(x.p(), std::move(c));
}

template <class R>
std::string witt_to_string(const WittVec<R>& x) {
    std::string s = "(";
    for (unsigned i = 0; i < x.length(); ++i) {
        if (i) s += ", ";
        if constexpr (std::is_same_v<R, Fq>) s += std::to_string(x[i].code());
        else if constexpr (std::is_same_v<R, Residue>) s += x[i].lift().to_string();
        else s += x[i].to_string();
    }
    return s + ")";
}

}  // namespace ffgenus

#endif
