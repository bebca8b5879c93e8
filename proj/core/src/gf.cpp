#include "tricode/gf.hpp"

#include "tricode/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

namespace tricode {

namespace {

int mod_p(long v, int p) {
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Dense polynomials over F_p, low-to-high, trimmed of leading zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw InconsistencyError("no inverse mod p");
}

Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const int factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod_p(a[shift + i] - factor * b[i], p);
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

FieldContext FieldContext::create(int p, int m) {
    if (!is_prime(p))
        throw ConfigurationError("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1 || m > kMaxBaseDegree)
        throw ConfigurationError("unsupported (p, m) = (" + std::to_string(p) + ", " + std::to_string(m) +
                                 "): m must lie in [1, " + std::to_string(kMaxBaseDegree) + "]");
    auto modulus = builtin_modulus(p, m);
    try {
        return from_modulus(p, std::move(modulus));
    } catch (const IntegrityError& e) {
        throw IntegrityError(std::string("modulus table entry is corrupted: ") + e.what());
    }
}

FieldContext FieldContext::from_modulus(int p, std::vector<std::uint8_t> modulus) {
    if (!is_prime(p)) throw ConfigurationError("field characteristic must be prime");
    if (modulus.size() < 2 || modulus.size() > static_cast<std::size_t>(kMaxDegree) + 1)
        throw ConfigurationError("modulus degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    for (auto c : modulus)
        if (c >= p) throw IntegrityError("modulus coefficient out of range");
    if (modulus.back() != 1) throw IntegrityError("modulus must be monic");

    FieldContext ctx;
    ctx.p_ = p;
    ctx.m_ = static_cast<int>(modulus.size()) - 1;
    ctx.q_ = saturating_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(ctx.m_));
    if (ctx.q_ == UINT64_MAX) throw ConfigurationError("field too large");
    ctx.modulus_ = std::move(modulus);
    if (ctx.m_ == 1) {
        // x = -modulus[0] in F_p.
        ctx.pi_.coeffs[0] = static_cast<std::uint8_t>(mod_p(-static_cast<long>(ctx.modulus_[0]), p));
    } else {
        ctx.pi_.coeffs[1] = 1;
    }
    ctx.verify_primitive();

    FieldElement basis;
    for (int k = 0; k < ctx.m_; ++k) {
        basis = FieldElement{};
        basis.coeffs[static_cast<std::size_t>(k)] = 1;
        ctx.basis_trace_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(trace_by_definition(ctx, basis));
    }
    return ctx;
}

void FieldContext::verify_primitive() const {
    const Poly f(modulus_.begin(), modulus_.end());
    if (modulus_[0] == 0) throw IntegrityError("modulus has root 0");

    // No factor of degree k <= m/2: gcd(x^{p^k} - x, f) = 1.
    FieldElement xk = pi_;
    for (int k = 1; k <= m_ / 2; ++k) {
        xk = frobenius(xk);
        Poly g(xk.coeffs.begin(), xk.coeffs.begin() + m_);
        if (m_ > 1) g[1] = mod_p(g[1] - 1, p_);
        const Poly d = poly_gcd(f, g, p_);
        if (d.size() > 1)
            throw IntegrityError("modulus is reducible (factor of degree " + std::to_string(k) + ")");
    }

    const std::uint64_t n = q_ - 1;
    if (pow(pi_, n) != one()) throw IntegrityError("pi^(q-1) != 1");
    for (auto r : prime_factors(n))
        if (pow(pi_, n / r) == one())
            throw IntegrityError("pi has order dividing (q-1)/" + std::to_string(r));
}

FieldElement FieldContext::constant(long c) const noexcept {
    FieldElement r;
    r.coeffs[0] = static_cast<std::uint8_t>(mod_p(c, p_));
    return r;
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const noexcept {
    FieldElement r;
    for (int k = 0; k < m_; ++k) {
        int s = a.coeffs[k] + b.coeffs[k];
        if (s >= p_) s -= p_;
        r.coeffs[k] = static_cast<std::uint8_t>(s);
    }
    return r;
}

FieldElement FieldContext::neg(const FieldElement& a) const noexcept {
    FieldElement r;
    for (int k = 0; k < m_; ++k) r.coeffs[k] = static_cast<std::uint8_t>(a.coeffs[k] ? p_ - a.coeffs[k] : 0);
    return r;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const noexcept { return add(a, neg(b)); }

FieldElement FieldContext::scale(long c, const FieldElement& a) const noexcept {
    const int s = mod_p(c, p_);
    FieldElement r;
    for (int k = 0; k < m_; ++k) r.coeffs[k] = static_cast<std::uint8_t>((s * a.coeffs[k]) % p_);
    return r;
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const noexcept {
    std::array<int, 2 * kMaxDegree> acc{};
    for (int i = 0; i < m_; ++i) {
        if (!a.coeffs[i]) continue;
        for (int j = 0; j < m_; ++j) acc[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    for (int k = 2 * m_ - 2; k >= m_; --k) {
        const int c = acc[k] % p_;
        if (!c) continue;
        // x^m = -(modulus[0] + ... + modulus[m-1] x^{m-1})
        for (int i = 0; i < m_; ++i) acc[k - m_ + i] += (p_ - modulus_[i]) * c;
        acc[k] = 0;
    }
    FieldElement r;
    for (int k = 0; k < m_; ++k) r.coeffs[k] = static_cast<std::uint8_t>(acc[k] % p_);
    return r;
}

FieldElement FieldContext::pow(FieldElement base, std::uint64_t e) const noexcept {
    FieldElement r = one();
    while (e) {
        if (e & 1U) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement FieldContext::inverse(const FieldElement& a) const {
    if (is_zero(a)) throw ConfigurationError("inverse of zero");
    return pow(a, q_ - 2);
}

int FieldContext::trace(const FieldElement& a) const noexcept {
    int s = 0;
    for (int k = 0; k < m_; ++k) s += a.coeffs[k] * basis_trace_[k];
    return s % p_;
}

FieldElement FieldContext::primitive_power(std::int64_t i) const noexcept {
    const auto n = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = i % n;
    if (r < 0) r += n;
    return pow(pi_, static_cast<std::uint64_t>(r));
}

std::optional<FieldElement> FieldContext::sqrt(const FieldElement& a) const {
    if (is_zero(a)) return zero();
    const std::uint64_t n = q_ - 1;
    if (pow(a, n / 2) != one()) return std::nullopt;
    std::uint64_t t = n;
    int s = 0;
    while ((t & 1U) == 0) {
        t >>= 1;
        ++s;
    }
    FieldElement c = pow(pi_, t);
    FieldElement r = pow(a, (t + 1) / 2);
    FieldElement tt = pow(a, t);
    int big_m = s;
    while (tt != one()) {
        int i = 0;
        FieldElement probe = tt;
        while (probe != one()) {
            probe = mul(probe, probe);
            ++i;
        }
        FieldElement b = c;
        for (int k = 0; k < big_m - i - 1; ++k) b = mul(b, b);
        r = mul(r, b);
        c = mul(b, b);
        tt = mul(tt, c);
        big_m = i;
    }
    return r;
}

bool FieldContext::is_valid(const FieldElement& a) const noexcept {
    for (int k = 0; k < kMaxDegree; ++k) {
        if (k >= m_ && a.coeffs[k] != 0) return false;
        if (a.coeffs[k] >= p_) return false;
    }
    return true;
}

std::uint64_t FieldContext::to_index(const FieldElement& a) const noexcept {
    std::uint64_t idx = 0;
    for (int k = m_ - 1; k >= 0; --k) idx = idx * static_cast<std::uint64_t>(p_) + a.coeffs[k];
    return idx;
}

FieldElement FieldContext::from_index(std::uint64_t index) const noexcept {
    FieldElement r;
    for (int k = 0; k < m_; ++k) {
        r.coeffs[k] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(p_));
        index /= static_cast<std::uint64_t>(p_);
    }
    return r;
}

std::string FieldContext::to_string(const FieldElement& a) const {
    std::ostringstream os;
    os << '[';
    for (int k = 0; k < m_; ++k) os << (k ? "," : "") << int{a.coeffs[k]};
    os << ']';
    return os.str();
}

int trace_by_definition(const FieldContext& ctx, const FieldElement& a) {
    FieldElement acc = a;
    FieldElement y = a;
    for (int k = 1; k < ctx.m(); ++k) {
        y = ctx.frobenius(y);
        acc = ctx.add(acc, y);
    }
    for (int k = 1; k < ctx.m(); ++k)
        if (acc.coeffs[k] != 0) throw InconsistencyError("trace left F_p");
    return acc.coeffs[0];
}

// ---------------------------------------------------------------------------

QuadraticExtension::QuadraticExtension(const FieldContext& base)
    : base_(base), field_(FieldContext::from_modulus(base.p(), builtin_modulus(base.p(), 2 * base.m()))) {
    const int m = base_.m();
    const std::uint64_t q = base_.q();
    const FieldElement omega = field_.pow(field_.pi(), q + 1);

    // Minimal polynomial of omega over F_p: prod_k (X - omega^{p^k}), coefficients in F_{q^2}.
    std::vector<FieldElement> minpoly{field_.one()};
    FieldElement conj = omega;
    for (int k = 0; k < m; ++k) {
        std::vector<FieldElement> next(minpoly.size() + 1, field_.zero());
        for (std::size_t i = 0; i < minpoly.size(); ++i) {
            next[i + 1] = field_.add(next[i + 1], minpoly[i]);
            next[i] = field_.sub(next[i], field_.mul(conj, minpoly[i]));
        }
        minpoly = std::move(next);
        conj = field_.frobenius(conj);
    }
    std::vector<int> coeffs;
    for (const auto& c : minpoly) {
        for (int k = 1; k < field_.m(); ++k)
            if (c.coeffs[k]) throw InconsistencyError("minimal polynomial of subfield generator not over F_p");
        coeffs.push_back(c.coeffs[0]);
    }

    // Find pi^i in the base field that is a root of that polynomial.
    std::uint64_t root_log = 0;
    bool found = false;
    FieldElement z = base_.one();
    for (std::uint64_t i = 0; i < q - 1 && !found; ++i) {
        FieldElement acc = base_.zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = base_.add(base_.mul(acc, z), base_.constant(*it));
        if (base_.is_zero(acc)) {
            root_log = i;
            found = true;
        }
        z = base_.mul(z, base_.pi());
    }
    if (!found) throw InconsistencyError("subfield embedding not found");

    // pi^i -> omega, hence pi -> omega^{i^{-1} mod (q-1)}.
    const auto n = static_cast<std::int64_t>(q - 1);
    std::int64_t old_r = n, r = static_cast<std::int64_t>(root_log), old_s = 0, s = 1;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
    }
    if (old_r != 1) throw InconsistencyError("subfield root is not primitive");
    std::int64_t inv = old_s % n;
    if (inv < 0) inv += n;
    const FieldElement pi_image = field_.pow(omega, static_cast<std::uint64_t>(inv));

    FieldElement power = field_.one();
    for (int k = 0; k < m; ++k) {
        basis_images_.push_back(power);
        power = field_.mul(power, pi_image);
    }
}

FieldElement QuadraticExtension::embed(const FieldElement& x) const noexcept {
    FieldElement r = field_.zero();
    for (int k = 0; k < base_.m(); ++k)
        if (x.coeffs[k]) r = field_.add(r, field_.scale(x.coeffs[k], basis_images_[k]));
    return r;
}

QuadraticExtension quadratic_extension(const FieldContext& ctx) { return QuadraticExtension(ctx); }

// ---------------------------------------------------------------------------

namespace {

// 6 ternary lanes (18 bits) -> base-3 value.
const std::vector<std::uint32_t>& unpack_table() {
    static const std::vector<std::uint32_t> table = [] {
        std::vector<std::uint32_t> t(std::size_t{1} << 18, 0);
        for (std::uint32_t v = 0; v < 729; ++v) {
            std::uint32_t packed = 0, x = v;
            for (int k = 0; k < 6; ++k) {
                packed |= (x % 3) << (3 * k);
                x /= 3;
            }
            t[packed] = v;
        }
        return t;
    }();
    return table;
}

} // namespace

IndexTables::IndexTables(const FieldContext& ctx) : ctx_(ctx) {
    if (ctx.p() != 3 || ctx.m() > kMaxBaseDegree)
        throw ConfigurationError("index tables require p = 3 and m <= 12");
    q_ = static_cast<std::uint32_t>(ctx.q());
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    trace_.resize(q_);
    packed_.resize(q_);
    for (std::uint32_t idx = 0; idx < q_; ++idx) {
        const FieldElement e = ctx.from_index(idx);
        trace_[idx] = static_cast<std::uint8_t>(ctx.trace(e));
        std::uint64_t packed = 0;
        for (int k = 0; k < ctx.m(); ++k) packed |= std::uint64_t{e.coeffs[k]} << (3 * k);
        packed_[idx] = packed;
    }
    FieldElement x = ctx.one();
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        const auto idx = static_cast<std::uint32_t>(ctx.to_index(x));
        exp_[i] = idx;
        log_[idx] = i;
        x = ctx.mul(x, ctx.pi());
    }
    unpack_table();
}

std::uint32_t IndexTables::unpack(std::uint64_t packed) const noexcept {
    const auto& t = unpack_table();
    return t[packed & 0x3FFFF] + 729U * t[(packed >> 18) & 0x3FFFF];
}

} // namespace tricode
