#include "ffgenus/witt_classes.hpp"

#include <algorithm>
#include <set>

#include "ffgenus/errors.hpp"

namespace ffgenus {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// F(V^j [w]) - V^j [w] as a Witt vector of the same length as like.
template <class R>
WittVec<R> wp_at(const WittVec<R>& like, unsigned j, const R& w) {
    std::vector<R> c(like.length(), ring::zero_like(w));
    c[j] = w;
    return asw_operator(WittVec<R>(like.p(), std::move(c)), 1);
}

}  // namespace

LocalReduction witt_reduce_at(const WittRF& x, const Place& place) {
    LocalReduction out{x, std::nullopt};
    for (unsigned j = 0; j < x.length(); ++j) {
        const RatFn& a = out.reduced[j];
        auto v = valuation_at(a, place);
        if (v.is_infinite() || v.value() >= 0) continue;
        auto r = place.is_infinite() ? as_reduce_at_infinity(a) : as_reduce_at(a, place.prime());
        auto vr = valuation_at(r.reduced, place);
        if (!vr.is_infinite() && vr.value() < 0) {
            out.ramified_at = j;
            return out;
        }
        out.reduced = witt_sub(out.reduced, wp_at(out.reduced, j, r.witness));
    }
    return out;
}

std::uint64_t witt_ramification_index(const WittRF& x, const Place& place) {
    auto r = witt_reduce_at(x, place);
    if (!r.ramified_at) return 1;
    return ipow(x.p(), x.length() - *r.ramified_at);
}

ResidueCtx residue_field_at(const Place& place) {
    return ResidueField::make(place.is_infinite() ? Poly::T(place.field()) : place.prime());
}

Residue residue_at(const RatFn& a, const Place& place) {
    auto ctx = residue_field_at(place);
    auto v = valuation_at(a, place);
    if (!v.is_infinite() && v.value() < 0) throw std::domain_error("residue of a function with a pole");
    if (place.is_infinite()) {
        if (v.is_infinite() || v.value() > 0) return Residue::zero(ctx);
        return Residue(ctx, Poly::constant(a.num().lead() / a.den().lead()));
    }
    const auto& P = place.prime();
    return Residue(ctx, (a.num() % P) * invmod(a.den() % P, P));
}

bool witt_constant_trivial(const WittVec<Residue>& c) {
    WittVec<Residue> x = c;
    for (unsigned j = 0; j < x.length(); ++j) {
        if (x[j].is_zero()) continue;
        auto b = solve_artin_schreier(x[j]);
        if (!b) return false;
        x = witt_sub(x, wp_at(x, j, *b));
    }
    return true;
}

bool witt_splits_at(const WittRF& x_integral, const Place& place) {
    auto ctx = residue_field_at(place);
    std::vector<Residue> c;
    for (const auto& a : x_integral.coords()) c.push_back(residue_at(a, place));
    return witt_constant_trivial(WittVec<Residue>(x_integral.p(), std::move(c)));
}

bool witt_is_trivial(const WittRF& x) {
    WittRF y = x;
    for (unsigned j = 0; j < y.length(); ++j) {
        if (y[j].is_zero()) continue;
        auto w = as_solve(y[j]);
        if (!w) return false;
        y = witt_sub(y, wp_at(y, j, *w));
    }
    return true;
}

std::uint64_t constant_class_order(const WittVec<Fq>& c, unsigned u) {
    const auto F = c[0].field();
    const unsigned v = c.length();
    const std::uint64_t total = ipow(F.q(), v);
    if (total > (1u << 20)) throw cap_exceeded("W_v(F_q) too large to enumerate");
    auto key = [](const WittVec<Fq>& x) {
        std::vector<std::uint32_t> k;
        for (const auto& a : x.coords()) k.push_back(a.code());
        return k;
    };
    std::set<std::vector<std::uint32_t>> image;
    std::vector<Fq> cur(v, F.zero());
    for (std::uint64_t n = 0; n < total; ++n) {
        std::uint64_t m = n;
        for (unsigned i = 0; i < v; ++i) {
            cur[i] = F.elem(static_cast<std::uint32_t>(m % F.q()));
            m /= F.q();
        }
        image.insert(key(asw_operator(WittVec<Fq>(c.p(), cur), u)));
    }
    WittVec<Fq> acc = c;
    std::uint64_t d = 1;
    while (!image.count(key(acc))) {
        acc = witt_add(acc, c);
        ++d;
    }
    return d;
}

WittClassGroup::WittClassGroup(std::vector<WittRF> generators, std::size_t cap) : gens_(std::move(generators)) {
    if (gens_.empty()) throw schema_error("a Witt class group needs at least one generator");
    const auto p = gens_[0].p();
    const auto v = gens_[0].length();
    for (const auto& g : gens_)
        if (g.p() != p || g.length() != v) throw schema_error("generators of different Witt length");
    const std::uint64_t pv = ipow(p, v);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        total *= pv;
        if (total > cap) throw cap_exceeded("Witt class enumeration exceeds " + std::to_string(cap) + " combinations");
    }
    // multiples[i][k] = k * g_i
    std::vector<std::vector<WittRF>> mult;
    for (const auto& g : gens_) {
        std::vector<WittRF> row{WittRF::zero(p, v, g[0])};
        for (std::uint64_t k = 1; k < pv; ++k) row.push_back(witt_add(row.back(), g));
        mult.push_back(std::move(row));
    }
    elems_.reserve(total);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::uint64_t m = n;
        WittRF acc = mult[0][m % pv];
        m /= pv;
        for (std::size_t i = 1; i < gens_.size(); ++i) {
            acc = witt_add(acc, mult[i][m % pv]);
            m /= pv;
        }
        elems_.push_back(std::move(acc));
    }
}

void WittClassGroup::compute_zero() const {
    std::call_once(zero_once_, [&] {
        zero_.resize(elems_.size());
        for (std::size_t i = 0; i < elems_.size(); ++i) zero_[i] = witt_is_trivial(elems_[i]) ? 1 : 0;
    });
}

std::uint64_t WittClassGroup::order() const {
    compute_zero();
    auto z = static_cast<std::uint64_t>(std::count(zero_.begin(), zero_.end(), 1));
    return elems_.size() / z;
}

PlaceData WittClassGroup::at(const Place& place) const {
    std::vector<std::uint32_t> key;
    if (!place.is_infinite()) key = place.prime().coeffs();
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = place_cache_.find(key); it != place_cache_.end()) return it->second;
    }
    compute_zero();
    std::uint64_t nz = 0, nunr = 0, nsplit = 0;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (zero_[i]) {
            ++nz, ++nunr, ++nsplit;
            continue;
        }
        auto r = witt_reduce_at(elems_[i], place);
        if (r.ramified_at) continue;
        ++nunr;
        if (witt_splits_at(r.reduced, place)) ++nsplit;
    }
    const std::uint64_t N = elems_.size();
    if (N % nunr || nunr % nsplit || nsplit % nz)
        throw consistency_error("local Witt class counts do not form a subgroup chain");
    PlaceData d{N / nunr, nunr / nsplit, nsplit / nz};
    std::lock_guard<std::mutex> lock(mu_);
    place_cache_[key] = d;
    return d;
}

bool WittClassGroup::contains(const WittRF& x) const {
    for (const auto& e : elems_)
        if (witt_is_trivial(witt_sub(e, x))) return true;
    return false;
}

std::vector<Poly> WittClassGroup::support() const {
    std::vector<Poly> out;
    for (const auto& g : gens_)
        for (const auto& a : g.coords()) {
            if (a.is_polynomial()) continue;
            for (auto& [P, e] : poly_factor(a.den()).factors) {
                (void)e;
                if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
            }
        }
    std::sort(out.begin(), out.end(), PolyLess{});
    return out;
}

}  // namespace ffgenus
