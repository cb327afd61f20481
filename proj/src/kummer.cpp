#include "ffgenus/kummer.hpp"

#include <algorithm>
#include <set>

#include "ffgenus/errors.hpp"
#include "ffgenus/residue.hpp"

namespace ffgenus {

RadicalGroup::RadicalGroup(GroundField F, unsigned t, std::vector<Poly> primes,
                           const std::vector<RadicalElem>& generators, std::size_t cap)
    : F_(F), t_(t), primes_(std::move(primes)) {
    if (t < 1 || (F.q() - 1) % t) throw schema_error("radical exponent must divide q - 1");
    const std::size_t w = primes_.size() + 1;
    for (const auto& g : generators)
        if (g.size() != w) throw schema_error("radical element of the wrong width");
    std::set<RadicalElem> seen{RadicalElem(w, 0)};
    std::vector<RadicalElem> frontier{RadicalElem(w, 0)};
    while (!frontier.empty()) {
        std::vector<RadicalElem> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                RadicalElem s(w);
                for (std::size_t i = 0; i < w; ++i) s[i] = (x[i] + g[i]) % t;
                if (seen.insert(s).second) {
                    if (seen.size() > cap) throw cap_exceeded("radical group larger than the cap");
                    next.push_back(std::move(s));
                }
            }
        frontier = std::move(next);
    }
    members_.assign(seen.begin(), seen.end());
}

bool RadicalGroup::contains(const RadicalElem& b) const {
    RadicalElem r = b;
    for (auto& x : r) x %= t_;
    return std::binary_search(members_.begin(), members_.end(), r);
}

Poly RadicalGroup::value(const RadicalElem& b) const {
    Poly out = Poly::constant(F_.primitive().pow(b[0]));
    for (std::size_t i = 0; i < primes_.size(); ++i) out *= primes_[i].pow(b[i + 1]);
    return out;
}

RadicalElem RadicalGroup::element_of(Fq c, const Poly& monic) const {
    if (c.is_zero() || !monic.is_monic()) throw schema_error("radical element must be a nonzero constant times a monic");
    RadicalElem out{F_.log(c.code()) % t_};
    Poly rest = monic;
    for (const auto& P : primes_) {
        auto m = multiplicity(rest, P);
        for (long long i = 0; i < m; ++i) rest = rest / P;
        out.push_back(static_cast<unsigned>(m % t_));
    }
    if (!rest.is_one()) throw schema_error("radical element has a prime outside the list");
    return out;
}

bool RadicalGroup::is_tth_power_at(const RadicalElem& b, const Place& place) const {
    if (place.is_infinite()) return b[0] % t_ == 0;  // primes are monic: the unit part at infinity is c
    const auto& P = place.prime();
    // unit part at P, assuming its exponent there is divisible by t
    Poly u = Poly::constant(F_.primitive().pow(b[0]));
    for (std::size_t i = 0; i < primes_.size(); ++i)
        if (!(primes_[i] == P)) u = (u * powmod(primes_[i] % P, b[i + 1], P)) % P;
    std::uint64_t norm = 1;
    for (long long i = 0; i < P.degree().value(); ++i) norm *= F_.q();
    return powmod(u, (norm - 1) / t_, P).is_one();
}

PlaceData RadicalGroup::at(const Place& place) const {
    std::ptrdiff_t idx = -1;
    if (!place.is_infinite()) {
        auto it = std::find(primes_.begin(), primes_.end(), place.prime());
        if (it != primes_.end()) idx = it - primes_.begin();
    }
    std::uint64_t nunr = 0, nsplit = 0;
    for (const auto& b : members_) {
        long long v = 0;
        if (place.is_infinite()) {
            for (std::size_t i = 0; i < primes_.size(); ++i) v -= static_cast<long long>(b[i + 1]) * primes_[i].degree().value();
        } else if (idx >= 0) {
            v = b[static_cast<std::size_t>(idx) + 1];
        }
        if (((v % static_cast<long long>(t_)) + t_) % t_ != 0) continue;
        ++nunr;
        if (is_tth_power_at(b, place)) ++nsplit;
    }
    const std::uint64_t N = members_.size();
    if (N % nunr || nunr % nsplit) throw consistency_error("radical place counts do not form a subgroup chain");
    return {N / nunr, nunr / nsplit, nsplit};
}

}  // namespace ffgenus
