#include <gmpxx.h>

#include <atomic>
#include <map>
#include <memory>
#include <mutex>

#include "ffgenus/witt.hpp"

namespace ffgenus {

namespace {

std::atomic<unsigned> g_max_length{4};
std::atomic<std::uint64_t> g_max_pv{128};

// Multivariate polynomial over Z: exponent vector -> coefficient.
using ZPoly = std::map<std::vector<std::uint16_t>, mpz_class>;

ZPoly zvar(std::size_t nvars, std::size_t j) {
    std::vector<std::uint16_t> e(nvars, 0);
    e[j] = 1;
    return ZPoly{{e, 1}};
}

void add_into(ZPoly& a, const ZPoly& b, const mpz_class& scale) {
    for (const auto& [e, c] : b) {
        auto& slot = a[e];
        slot += scale * c;
        if (slot == 0) a.erase(e);
    }
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto e = ea;
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = static_cast<std::uint16_t>(e[j] + eb[j]);
            r[e] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

ZPoly zpow(ZPoly base, std::uint64_t e, std::size_t nvars) {
    ZPoly r{{std::vector<std::uint16_t>(nvars, 0), 1}};
    while (e) {
        if (e & 1) r = zmul(r, base);
        e >>= 1;
        if (e) base = zmul(base, base);
    }
    return r;
}

WittPoly reduce_mod_p(const ZPoly& f, std::uint32_t p) {
    WittPoly out;
    mpz_class P = p;
    for (const auto& [e, c] : f) {
        mpz_class r = c % P;
        if (r < 0) r += P;
        if (r != 0) out.push_back({static_cast<std::uint32_t>(r.get_ui()), e});
    }
    return out;
}

// Solves w_n(Z) = target_n for Z_n, where w_n(Z) = sum_i p^i Z_i^{p^{n-i}}:
// Z_n = (target_n - sum_{i<n} p^i Z_i^{p^{n-i}}) / p^n, exactly.
std::vector<ZPoly> ghost_solve(std::uint32_t p, unsigned v, std::size_t nvars,
                               const std::vector<ZPoly>& target) {
    std::vector<ZPoly> Z;
    mpz_class pn = 1;
    for (unsigned n = 0; n < v; ++n) {
        ZPoly num = target[n];
        mpz_class pi = 1;
        for (unsigned i = 0; i < n; ++i) {
            std::uint64_t ex = 1;
            for (unsigned k = i; k < n; ++k) ex *= p;
            add_into(num, zpow(Z[i], ex, nvars), -pi);
            pi *= p;
        }
        for (auto& [e, c] : num) {
            if (!mpz_divisible_p(c.get_mpz_t(), pn.get_mpz_t()))
                throw consistency_error("ghost recursion: coefficient not divisible by p^" + std::to_string(n));
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pn.get_mpz_t());
        }
        Z.push_back(std::move(num));
        pn *= p;
    }
    return Z;
}

// Ghost components sum_{i<=n} p^i X_{off+i}^{p^{n-i}} of a block of variables.
std::vector<ZPoly> ghost_of_vars(std::uint32_t p, unsigned v, std::size_t nvars, std::size_t off) {
    std::vector<ZPoly> w(v);
    for (unsigned n = 0; n < v; ++n) {
        mpz_class pi = 1;
        for (unsigned i = 0; i <= n; ++i) {
            std::uint64_t ex = 1;
            for (unsigned k = i; k < n; ++k) ex *= p;
            add_into(w[n], zpow(zvar(nvars, off + i), ex, nvars), pi);
            pi *= p;
        }
    }
    return w;
}

std::unique_ptr<WittPolys> build(std::uint32_t p, unsigned v) {
    auto out = std::make_unique<WittPolys>();
    out->p = p;
    out->v = v;
    {
        const std::size_t nv = 2 * v;
        auto wx = ghost_of_vars(p, v, nv, 0), wy = ghost_of_vars(p, v, nv, v);
        for (unsigned n = 0; n < v; ++n) add_into(wx[n], wy[n], 1);
        for (const auto& s : ghost_solve(p, v, nv, wx)) out->add.push_back(reduce_mod_p(s, p));
    }
    {
        auto wx = ghost_of_vars(p, v, v, 0);
        for (auto& f : wx)
            for (auto& [e, c] : f) c = -c;
        for (const auto& s : ghost_solve(p, v, v, wx)) out->neg.push_back(reduce_mod_p(s, p));
    }
    return out;
}

}  // namespace

WittLimits witt_limits() { return {g_max_length.load(), g_max_pv.load()}; }

void set_witt_limits(WittLimits lim) {
    g_max_length.store(lim.max_length);
    g_max_pv.store(lim.max_pv);
}

const WittPolys& witt_polys(std::uint32_t p, unsigned v) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<WittPolys>> cache;
    const auto lim = witt_limits();
    std::uint64_t pv = 1;
    for (unsigned i = 0; i < v; ++i) pv *= p;
    if (v == 0) throw schema_error("Witt length must be positive");
    if (v > lim.max_length || pv > lim.max_pv)
        throw cap_exceeded("Witt length " + std::to_string(v) + " over p=" + std::to_string(p) + " exceeds the cap");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, v}];
    if (!slot) slot = build(p, v);
    return *slot;
}

namespace detail {

std::vector<RatFn> eval_all_ratfn(const std::vector<WittPoly>& polys, const std::vector<RatFn>& vars,
                                  std::uint32_t p, unsigned v) {
    const auto F = vars[0].field();
    Poly D = Poly::constant(F.one());
    for (const auto& x : vars) D = D / gcd(D, x.den()) * x.den();
    if (D.is_one()) {
        std::vector<Poly> pv;
        for (const auto& x : vars) pv.push_back(x.num());
        std::vector<RatFn> out;
        for (auto& f : eval_all(polys, pv)) out.emplace_back(f);
        return out;
    }
    std::vector<Poly> Dpow{D};  // Dpow[i] = D^{p^i}
    for (unsigned i = 1; i < v; ++i) Dpow.push_back(Dpow.back().pow(p));
    std::vector<Poly> X;
    X.reserve(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) {
        const auto& x = vars[j];
        X.push_back(x.num() * (Dpow[j % v] / x.den()));
    }
    std::vector<RatFn> out;
    auto vals = eval_all(polys, X);
    for (std::size_t n = 0; n < vals.size(); ++n) out.emplace_back(vals[n], Dpow[n]);
    return out;
}

}  // namespace detail

}  // namespace ffgenus
