#include "tricode/expsum.hpp"

#include "tricode/errors.hpp"

#include <sstream>

namespace tricode {

EisensteinInteger EisensteinInteger::zeta_power(int k) {
    switch (((k % 3) + 3) % 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
    }
}

EisensteinInteger& EisensteinInteger::operator*=(const EisensteinInteger& o) {
    // (a0 + a1 z)(b0 + b1 z) with z^2 = -1 - z.
    const Integer t = a1_ * o.a1_;
    Integer c0 = a0_ * o.a0_ - t;
    Integer c1 = a0_ * o.a1_ + a1_ * o.a0_ - t;
    a0_ = std::move(c0);
    a1_ = std::move(c1);
    return *this;
}

EisensteinInteger EisensteinInteger::pow(unsigned k) const {
    EisensteinInteger r(1);
    EisensteinInteger b = *this;
    while (k) {
        if (k & 1U) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

std::string EisensteinInteger::to_string() const {
    std::ostringstream os;
    os << a0_.get_str();
    if (a1_ >= 0) os << '+';
    os << a1_.get_str() << "z";
    return os.str();
}

FieldElement evaluate_f(const FieldContext& ctx, const Triple& t, const FieldElement& x) {
    const auto p = static_cast<std::uint64_t>(ctx.p());
    const FieldElement x2 = ctx.mul(x, x);
    const FieldElement xp1 = ctx.mul(ctx.pow(x, p), x);
    const FieldElement xp21 = ctx.mul(ctx.pow(x, p * p), x);
    return ctx.add(ctx.add(ctx.mul(t.alpha, x2), ctx.mul(t.beta, xp1)), ctx.mul(t.gamma, xp21));
}

std::array<std::uint64_t, 3> trace_tally(const FieldContext& ctx, const Triple& t) {
    if (ctx.p() != 3) throw ConfigurationError("trace tally is ternary-specific (p = 3)");
    std::array<std::uint64_t, 3> tally{};
    for (std::uint64_t idx = 0; idx < ctx.q(); ++idx) {
        const FieldElement x = ctx.from_index(idx);
        ++tally[static_cast<std::size_t>(ctx.trace(evaluate_f(ctx, t, x)))];
    }
    return tally;
}

EisensteinInteger tally_to_eisenstein(const std::array<std::uint64_t, 3>& tally) {
    const Integer n0 = from_u64(tally[0]);
    const Integer n1 = from_u64(tally[1]);
    const Integer n2 = from_u64(tally[2]);
    return {n0 - n2, n1 - n2};
}

EisensteinInteger direct_sum(const FieldContext& ctx, const Triple& t) {
    return tally_to_eisenstein(trace_tally(ctx, t));
}

std::string to_string(const ExpSumClass& c) {
    std::ostringstream os;
    switch (c.kind) {
    case SumKind::ZeroTriple: os << "zero-triple"; break;
    case SumKind::EvenRank: os << "even-rank"; break;
    case SumKind::OddRank: os << "odd-rank"; break;
    }
    os << "(eps=" << c.epsilon << ",r=" << c.rank << ",j=" << c.j << ")";
    return os.str();
}

namespace {

// Exponent k with |v| = 3^k, or -1.
int log3_exact(Integer v) {
    if (v < 0) v = -v;
    if (v == 0) return -1;
    int k = 0;
    while (v % 3 == 0) {
        v /= 3;
        ++k;
    }
    return v == 1 ? k : -1;
}

[[noreturn]] void no_family(const EisensteinInteger& s, int m) {
    throw InconsistencyError("exponential sum " + s.to_string() + " matches no family for m=" + std::to_string(m));
}

} // namespace

ExpSumClass classify(const EisensteinInteger& s, int m) {
    if (m <= 0 || m % 2 != 0) throw ConfigurationError("classify requires even m, got m=" + std::to_string(m));
    const Integer q = ipow(3, static_cast<unsigned long>(m));
    if (s.a0() == q && s.a1() == 0) return {SumKind::ZeroTriple, 1, 0, m};

    if (s.is_rational()) {
        const int k = log3_exact(s.a0());
        if (k < 0) no_family(s, m);
        const int r = 2 * (m - k);
        if (r <= 0 || r > m) no_family(s, m);
        return {SumKind::EvenRank, s.a0() > 0 ? 1 : -1, r, m - r};
    }
    if (s.a1() != 2 * s.a0()) no_family(s, m);
    const int e = log3_exact(s.a0());
    if (e < 0) no_family(s, m);
    const int r = 2 * (m - e) - 1;
    if (r < 1 || r > m) no_family(s, m);
    return {SumKind::OddRank, s.a0() > 0 ? 1 : -1, r, m - r};
}

EisensteinInteger class_value(const ExpSumClass& c, int m) {
    switch (c.kind) {
    case SumKind::ZeroTriple: return ipow(3, static_cast<unsigned long>(m));
    case SumKind::EvenRank:
        return EisensteinInteger(c.epsilon * ipow(3, static_cast<unsigned long>(m - c.rank / 2)));
    case SumKind::OddRank:
        return EisensteinInteger(c.epsilon * ipow(3, static_cast<unsigned long>(m - (c.rank + 1) / 2))) *
               EisensteinInteger::sqrt_minus_three();
    }
    throw InconsistencyError("unknown class kind");
}

int class_slot(const ExpSumClass& c) noexcept {
    if (c.kind == SumKind::ZeroTriple) return 0;
    return 1 + 2 * c.j + (c.epsilon < 0 ? 1 : 0);
}

ExpSumClass class_from_slot(int slot, int m) {
    if (slot == 0) return {SumKind::ZeroTriple, 1, 0, m};
    const int j = (slot - 1) / 2;
    const int eps = ((slot - 1) % 2) ? -1 : 1;
    const int r = m - j;
    return {(r % 2 == 0) ? SumKind::EvenRank : SumKind::OddRank, eps, r, j};
}

Integer r_sum(const FieldContext& ctx, const Triple& t) {
    EisensteinInteger total;
    for (int a = 1; a < ctx.p(); ++a) {
        const Triple scaled{ctx.scale(a, t.alpha), ctx.scale(a, t.beta), ctx.scale(a, t.gamma)};
        total += direct_sum(ctx, scaled);
    }
    if (!total.is_rational())
        throw InconsistencyError("R-sum has nonzero zeta component: " + total.to_string());
    return total.a0();
}

Integer r_from_class(const ExpSumClass& c, int p, int m) {
    switch (c.kind) {
    case SumKind::ZeroTriple: return (p - 1) * ipow(p, static_cast<unsigned long>(m));
    case SumKind::OddRank: return 0;
    case SumKind::EvenRank:
        return c.epsilon * (p - 1) * ipow(p, static_cast<unsigned long>(m - c.rank / 2));
    }
    throw InconsistencyError("unknown class kind");
}

TraceRows::TraceRows(const IndexTables& tables) : q_(tables.q()), length_(tables.order()) {
    if (tables.context().m() > 8) throw ConfigurationError("trace rows are limited to m <= 8");
    for (int e = 0; e < kExponents; ++e) {
        auto& rows = rows_[static_cast<std::size_t>(e)];
        rows.assign(static_cast<std::size_t>(q_) * length_, 0);
        const std::uint64_t s = kPowers[static_cast<std::size_t>(e)];
        for (std::uint32_t c = 1; c < q_; ++c) {
            const std::uint64_t lc = tables.log(c);
            std::uint8_t* out = rows.data() + static_cast<std::size_t>(c) * length_;
            for (std::uint32_t i = 0; i < length_; ++i)
                out[i] = tables.trace(tables.exp(static_cast<std::uint32_t>((lc + s * i) % length_)));
        }
    }
}

std::array<std::uint64_t, 3> tally_rows(const TraceRows& rows, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    const std::uint8_t* ra = rows.row(0, a);
    const std::uint8_t* rb = rows.row(1, b);
    const std::uint8_t* rc = rows.row(2, c);
    std::array<std::uint64_t, 3> tally{1, 0, 0};  // x = 0
    static constexpr std::uint8_t kMod3[7] = {0, 1, 2, 0, 1, 2, 0};
    for (std::uint32_t i = 0; i < rows.length(); ++i) ++tally[kMod3[ra[i] + rb[i] + rc[i]]];
    return tally;
}

} // namespace tricode
