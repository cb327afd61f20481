#include "ffgenus/ffalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ffgenus/errors.hpp"

namespace ffgenus {

namespace detail {

struct FieldData {
    std::uint32_t p = 0, l = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::uint32_t prim = 0;
    // exp_ has length 2(q-1) so that log a + log b never needs reduction
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> pw;  // pw[i] = p^i, i <= l
};

}  // namespace detail

namespace {

constexpr std::uint32_t kMaxQ = 1u << 20;

using detail::FieldData;

std::vector<std::uint32_t> to_digits(std::uint32_t a, std::uint32_t p, std::uint32_t l) {
    std::vector<std::uint32_t> d(l);
    for (std::uint32_t i = 0; i < l; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

std::uint32_t from_digits_raw(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

// Product of two elements given as digit vectors, reduced by the monic modulus.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, const FieldData& f) {
    const auto p = f.p, l = f.l;
    auto da = to_digits(a, p, l), db = to_digits(b, p, l);
    std::vector<std::uint64_t> prod(2 * l, 0);
    for (std::uint32_t i = 0; i < l; ++i)
        for (std::uint32_t j = 0; j < l; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
    for (std::size_t k = 2 * l - 1; k >= l; --k) {
        auto c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t i = 0; i < l; ++i)
            prod[k - l + i] = (prod[k - l + i] + (p - c) * f.modulus[i]) % p;
    }
    std::vector<std::uint32_t> r(l);
    for (std::uint32_t i = 0; i < l; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits_raw(r, p);
}

void build_tables(FieldData& f) {
    const auto q = f.q;
    f.log_.assign(q, 0);
    f.exp_.assign(2 * (q - 1), 0);
    if (q == 2) {
        f.prim = 1;
        f.exp_ = {1, 1};
        return;
    }
    for (std::uint32_t g = 2; g < q; ++g) {
        std::uint32_t x = 1, n = 0;
        do {
            f.exp_[n++] = x;
            x = slow_mul(x, g, f);
        } while (x != 1 && n < q - 1);
        if (x == 1 && n == q - 1) {
            f.prim = g;
            break;
        }
    }
    if (f.prim == 0) throw consistency_error("no primitive element found");
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        f.exp_[i + q - 1] = f.exp_[i];
        f.log_[f.exp_[i]] = i;
    }
}

std::unique_ptr<FieldData> build_field(std::uint32_t p, std::uint32_t l);

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldData>>& registry() {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldData>> r;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> r;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r.push_back(n);
    return r;
}

namespace {

std::unique_ptr<FieldData> build_field(std::uint32_t p, std::uint32_t l) {
    auto f = std::make_unique<FieldData>();
    f->p = p;
    f->l = l;
    std::uint64_t q = 1;
    f->pw.push_back(1);
    for (std::uint32_t i = 0; i < l; ++i) {
        q *= p;
        if (q > kMaxQ) throw cap_exceeded("field size exceeds 2^20");
        f->pw.push_back(static_cast<std::uint32_t>(q));
    }
    f->q = static_cast<std::uint32_t>(q);
    if (l == 1) {
        f->modulus = {0, 1};
    } else {
        // search monic irreducibles of degree l over F_p in poly_less order
        GroundField Fp = GroundField::make(p, 1);
        const std::uint64_t count = q;
        for (std::uint64_t code = 0; code < count; ++code) {
            auto low = to_digits(static_cast<std::uint32_t>(code), p, l);
            if (low[0] == 0) continue;
            low.push_back(1);
            if (poly_is_irreducible(Poly(Fp, low))) {
                f->modulus = low;
                break;
            }
        }
    }
    build_tables(*f);
    return f;
}

}  // namespace

GroundField GroundField::make(std::uint32_t p, std::uint32_t l) {
    if (!is_prime(p)) throw schema_error("field characteristic " + std::to_string(p) + " is not prime");
    if (l == 0) throw schema_error("field degree must be positive");
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        auto it = registry().find({p, l});
        if (it != registry().end()) return GroundField(it->second.get());
    }
    auto data = build_field(p, l);
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto [it, inserted] = registry().emplace(std::make_pair(p, l), std::move(data));
    return GroundField(it->second.get());
}

std::uint32_t GroundField::p() const noexcept { return d_->p; }
std::uint32_t GroundField::l() const noexcept { return d_->l; }
std::uint32_t GroundField::q() const noexcept { return d_->q; }
const std::vector<std::uint32_t>& GroundField::modulus() const noexcept { return d_->modulus; }

Fq GroundField::zero() const { return Fq(*this, 0); }
Fq GroundField::one() const { return Fq(*this, 1); }
Fq GroundField::elem(std::uint32_t code) const {
    if (code >= d_->q) throw schema_error("field element code " + std::to_string(code) + " out of range");
    return Fq(*this, code);
}
Fq GroundField::from_int(long long n) const { return Fq(*this, from_int_code(n)); }
Fq GroundField::primitive() const { return Fq(*this, d_->prim); }

std::uint32_t GroundField::from_int_code(long long n) const noexcept {
    long long r = n % static_cast<long long>(d_->p);
    if (r < 0) r += d_->p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t GroundField::add(std::uint32_t a, std::uint32_t b) const noexcept {
    const auto p = d_->p;
    if (p == 2) return a ^ b;
    if (d_->l == 1) {
        auto s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t r = 0, m = 1;
    while (a || b) {
        auto s = a % p + b % p;
        if (s >= p) s -= p;
        r += s * m;
        m *= p;
        a /= p;
        b /= p;
    }
    return r;
}

std::uint32_t GroundField::neg(std::uint32_t a) const noexcept {
    const auto p = d_->p;
    if (p == 2) return a;
    if (d_->l == 1) return a == 0 ? 0 : p - a;
    std::uint32_t r = 0, m = 1;
    while (a) {
        auto d = a % p;
        r += (d == 0 ? 0 : p - d) * m;
        m *= p;
        a /= p;
    }
    return r;
}

std::uint32_t GroundField::sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }

std::uint32_t GroundField::mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return d_->exp_[d_->log_[a] + d_->log_[b]];
}

std::uint32_t GroundField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    auto lg = d_->log_[a];
    return d_->exp_[lg == 0 ? 0 : d_->q - 1 - lg];
}

std::uint32_t GroundField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return d_->exp_[(std::uint64_t(d_->log_[a]) * (e % (d_->q - 1))) % (d_->q - 1)];
}

std::uint32_t GroundField::pth_root(std::uint32_t a) const noexcept { return pow(a, d_->q / d_->p); }

std::uint32_t GroundField::trace(std::uint32_t a) const noexcept {
    std::uint32_t s = 0, x = a;
    for (std::uint32_t i = 0; i < d_->l; ++i) {
        s = add(s, x);
        x = pow(x, d_->p);
    }
    return s;
}

std::uint32_t GroundField::log(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("discrete log of zero");
    return d_->log_[a];
}

std::vector<std::uint32_t> GroundField::digits(std::uint32_t a) const { return to_digits(a, d_->p, d_->l); }

std::uint32_t GroundField::from_digits(std::span<const std::uint32_t> d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * d_->p + d[i] % d_->p;
    return a;
}

long long Degree::value() const {
    if (inf_) throw std::domain_error("degree of the zero polynomial");
    return d_;
}

std::ostream& operator<<(std::ostream& os, const Degree& d) {
    if (d.is_neg_inf()) return os << "-inf";
    return os << d.value();
}

Poly::Poly(GroundField F, std::vector<std::uint32_t> coeffs) : F_(F), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= F.q()) throw schema_error("coefficient " + std::to_string(c) + " out of range for F_" + std::to_string(F.q()));
    trim();
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Fq c) { return Poly(c.field(), {c.code()}); }

Poly Poly::monomial(Fq c, std::size_t deg) {
    Poly r(c.field());
    if (c.is_zero()) return r;
    r.c_.assign(deg + 1, 0);
    r.c_[deg] = c.code();
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(lead().inv());
}

Poly Poly::scaled(Fq c) const {
    Poly r(F_);
    if (c.is_zero()) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_.mul(c_[i], c.code());
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    Poly r(F_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::derivative() const {
    Poly r(F_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = F_.mul(c_[i], F_.from_int_code(static_cast<long long>(i)));
    r.trim();
    return r;
}

Poly Poly::frobenius() const {
    Poly r(F_);
    if (is_zero()) return r;
    const auto p = F_.p();
    r.c_.assign((c_.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * p] = F_.pow(c_[i], p);
    return r;
}

Poly Poly::pth_root() const {
    Poly r(F_);
    if (is_zero()) return r;
    const auto p = F_.p();
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (i % p != 0 && c_[i] != 0) throw std::domain_error("polynomial is not a p-th power");
    r.c_.resize((c_.size() - 1) / p + 1);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_.pth_root(c_[i * p]);
    return r;
}

Fq Poly::eval(Fq x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = F_.add(F_.mul(acc, x.code()), c_[i]);
    return F_.elem(acc);
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = constant(F_.one()), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& F = a.F_;
    Poly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = F.add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(F_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_.neg(c_[i]);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    const auto& F = a.F_;
    Poly r(F);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j]) r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto F = a.field();
    if (a.size() < b.size()) return {Poly(F), a};
    auto rem = a.coeffs();
    const auto& bc = b.coeffs();
    const auto n = bc.size();
    const auto inv_lead = F.inv(bc.back());
    std::vector<std::uint32_t> quot(rem.size() - n + 1, 0);
    for (std::size_t k = rem.size(); k-- > n - 1;) {
        auto c = rem[k];
        if (c != 0) {
            auto m = F.mul(c, inv_lead);
            quot[k - n + 1] = m;
            for (std::size_t i = 0; i < n; ++i) rem[k - n + 1 + i] = F.sub(rem[k - n + 1 + i], F.mul(m, bc[i]));
        }
    }
    rem.resize(n - 1);
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

bool poly_less(const Poly& a, const Poly& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
    const auto F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F.one()), s1(F);
    Poly t0(F), t1 = Poly::constant(F.one());
    while (!r1.is_zero()) {
        auto [qt, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - qt * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - qt * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto c = r0.lead().inv();
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

Poly invmod(const Poly& a, const Poly& m) {
    auto [g, s, t] = xgcd(a % m, m);
    if (!g.is_one()) throw std::domain_error("polynomial not invertible modulo " + m.to_string());
    return s % m;
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(a.field().one()) % m, base = a % m;
    while (e) {
        if (e & 1) result = (result * base) % m;
        e >>= 1;
        if (e) base = (base * base) % m;
    }
    return result;
}

std::string Poly::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c_[i] != 1 || i == 0) {
            if (F_.l() > 1 && c_[i] != 1) os << '[' << c_[i] << ']';
            else os << c_[i];
        }
        if (i > 0) {
            if (c_[i] != 1) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

std::vector<Poly> monic_polys(GroundField F, unsigned degree) {
    const std::uint64_t q = F.q();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        count *= q;
        if (count > 10'000'000) throw cap_exceeded("too many monic polynomials to enumerate");
    }
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> c(degree + 1);
        auto x = code;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = static_cast<std::uint32_t>(x % q);
            x /= q;
        }
        c[degree] = 1;
        out.emplace_back(F, std::move(c));
    }
    return out;
}

std::vector<Poly> monic_irreducibles(GroundField F, unsigned degree) {
    std::vector<Poly> out;
    if (degree == 0) return out;
    for (auto& f : monic_polys(F, degree))
        if (poly_is_irreducible(f)) out.push_back(std::move(f));
    return out;
}

}  // namespace ffgenus
