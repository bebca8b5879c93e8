#include "tricode/identities.hpp"

#include <sstream>

namespace tricode {

namespace {

Integer pw(long p, long e) { return ipow(p, static_cast<unsigned long>(e)); }

void require_theorem_range(int p, int m, const char* what) {
    if (p != 3 || m < 6 || m % 2 != 0)
        throw HypothesisError(std::string(what) + ": theorem hypothesis m>=6 even (p=3) not met, got p=" +
                              std::to_string(p) + ", m=" + std::to_string(m));
}

Integer falling(const Integer& x, int r) {
    Integer out = 1;
    for (int i = 0; i < r; ++i) out *= x - i;
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

WeightLevels weight_levels(int p, int m) {
    if (m < 2 || m % 2 != 0) throw ConfigurationError("weight levels need even m >= 2");
    WeightLevels w;
    w.r00 = (p - 1) * pw(p, m - 1);
    w.r0 = (p - 1) * pw(p, m / 2 - 1);
    w.r2 = (p - 1) * pw(p, m / 2);
    w.r4 = (p - 1) * pw(p, m / 2 + 1);
    return w;
}

WeightDistribution macwilliams_transform(const WeightDistribution& a, std::uint64_t l, int k_dim, int p) {
    if (l < 1) throw ConfigurationError("code length must be positive");
    if (a.total() != pw(p, k_dim))
        throw InconsistencyError("not a linear-code distribution: total " + a.total().get_str() + " != p^k");
    const Integer c = p - 1;
    const Integer n = from_u64(l);
    std::vector<Integer> acc(l + 1, 0);
    std::vector<Integer> k(l + 1);
    for (const auto& [i, ai] : a.counts) {
        if (i > l) throw ConfigurationError("weight exceeds code length");
        if (ai == 0) continue;
        // Coefficients of (1 + c y)^{l-i} (1 - y)^i by the Krawtchouk three-term recurrence.
        const Integer ii = from_u64(i);
        k[0] = 1;
        if (l >= 1) k[1] = c * (n - ii) - ii;
        for (std::uint64_t j = 1; j < l; ++j) {
            const Integer jj = from_u64(j);
            k[j + 1] = exact_div((c * (n - ii) - ii - (c - 1) * jj) * k[j] - c * (n - jj + 1) * k[j - 1], jj + 1);
        }
        for (std::uint64_t j = 0; j <= l; ++j) acc[j] += ai * k[j];
    }
    const Integer size = pw(p, k_dim);
    WeightDistribution out{l, {}};
    for (std::uint64_t j = 0; j <= l; ++j) {
        if (acc[j] % size != 0 || acc[j] < 0)
            throw InconsistencyError("not a linear-code distribution: dual coefficient " + std::to_string(j) +
                                     " is " + acc[j].get_str() + "/p^" + std::to_string(k_dim));
        if (acc[j] != 0) out.counts[j] = acc[j] / size;
    }
    return out;
}

std::vector<IdentityCheck> power_moments(const WeightDistribution& a, std::uint64_t l, int k_dim, int p,
                                         const std::array<Integer, 5>& dual_low) {
    std::vector<IdentityCheck> out;
    const Integer n = from_u64(l);
    for (int r = 1; r <= 4; ++r) {
        Integer lhs = 0;
        for (const auto& [i, ai] : a.counts) lhs += falling(from_u64(i), r) * ai;
        Integer inner = 0;
        for (int j = 0; j <= r; ++j) {
            Integer term = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(j)) * falling(Integer(j), j) *
                           falling(n - j, r - j) * pw(p - 1, r - j) * dual_low[static_cast<std::size_t>(j)];
            inner += (j % 2) ? -term : term;
        }
        // p^{k-r} may be fractional for tiny codes.
        const Rational rhs_q = Rational(inner) * (k_dim >= r ? Rational(pw(p, k_dim - r)) : Rational(1, pw(p, r - k_dim)));
        IdentityCheck check;
        check.name = "moment_" + std::to_string(r);
        check.lhs = lhs;
        check.rhs = rhs_q.get_den() == 1 ? rhs_q.get_num() : Integer(0);
        check.match = rhs_q.get_den() == 1 && lhs == check.rhs;
        out.push_back(std::move(check));
    }
    return out;
}

DualLowWeights dual_low_weights_closed(int p, int m) {
    if (p != 3) throw HypothesisError("dual low-weight formulas are proved for p = 3");
    if (m < 1) throw ConfigurationError("m must be positive");
    const Integer q = pw(p, m);
    DualLowWeights d;
    d.counts = {1, 0, q - 1, 0, exact_div((q - 1) * (2 * q - p - 3), 3) + exact_div((q - 1) * (q - 3), 2)};
    d.within_hypothesis = m >= 6 && m % 2 == 0;
    return d;
}

std::array<Integer, 5> dual_low_weights_bruteforce(const FieldContext& ctx, std::uint64_t budget) {
    if (ctx.p() != 3) throw ConfigurationError("dual search requires p = 3");
    const IndexTables tables(ctx);
    const std::uint64_t l = tables.order();
    const std::uint64_t required = saturating_mul(binomial(l, 4).fits_ulong_p() ? binomial(l, 4).get_ui() : UINT64_MAX, 16);
    if (required > budget) throw BudgetExceeded(required, budget);

    // Column i of the parity check: (pi^{2i}, pi^{4i}, pi^{10i}) as packed vectors, with its negation.
    std::vector<std::array<std::uint64_t, 3>> col(l), neg(l);
    static constexpr std::array<std::uint64_t, 3> kExp{2, 4, 10};
    for (std::uint64_t i = 0; i < l; ++i)
        for (std::size_t e = 0; e < 3; ++e) {
            col[i][e] = tables.packed(tables.exp(static_cast<std::uint32_t>((kExp[e] * i) % l)));
            neg[i][e] = packed3::neg(col[i][e]);
        }
    auto term = [&](std::uint64_t i, int v) -> const std::array<std::uint64_t, 3>& { return v == 1 ? col[i] : neg[i]; };
    auto add = [](const std::array<std::uint64_t, 3>& x, const std::array<std::uint64_t, 3>& y) {
        return std::array<std::uint64_t, 3>{packed3::add(x[0], y[0]), packed3::add(x[1], y[1]), packed3::add(x[2], y[2])};
    };
    const std::array<std::uint64_t, 3> zero{};

    std::array<std::uint64_t, 5> counts{1, 0, 0, 0, 0};
    for (std::uint64_t i1 = 0; i1 < l; ++i1)
        for (int v1 = 1; v1 <= 2; ++v1) {
            const auto s1 = term(i1, v1);
            if (s1 == zero) ++counts[1];
            for (std::uint64_t i2 = i1 + 1; i2 < l; ++i2)
                for (int v2 = 1; v2 <= 2; ++v2) {
                    const auto s2 = add(s1, term(i2, v2));
                    if (s2 == zero) ++counts[2];
                    for (std::uint64_t i3 = i2 + 1; i3 < l; ++i3)
                        for (int v3 = 1; v3 <= 2; ++v3) {
                            const auto s3 = add(s2, term(i3, v3));
                            if (s3 == zero) ++counts[3];
                            // The fourth column is determined up to membership: -s3 must be +/- a column.
                            for (std::uint64_t i4 = i3 + 1; i4 < l; ++i4) {
                                if (add(s3, col[i4]) == zero) ++counts[4];
                                if (add(s3, neg[i4]) == zero) ++counts[4];
                            }
                        }
                }
        }
    std::array<Integer, 5> out;
    for (std::size_t w = 0; w < 5; ++w) out[w] = from_u64(counts[w]);
    return out;
}

IdentityConstants constants(int p, int m, const Integer& a2p, const Integer& a4p) {
    require_theorem_range(p, m, "constants");
    const Integer q = pw(p, m);
    const Integer h = pw(p, m / 2);
    IdentityConstants k;
    k.c1 = pw(p, 3 * m) - 1;
    k.c2 = h * (pw(p, 2 * m) - 1);
    k.c3 = q * (q - 1);
    k.c4 = (p + 1) * h * h * h * (q - 1);
    k.c5 = (8 * (q - 1) * (q - 1) - q + 1) * q;
    k.c6 = (5 * (q - 1) * (8 * q - 2 * p - 10) - q * q + 1) * h;

    const long p1 = p - 1;
    const Integer a_num = pw(p, 3 * m - 2) * ((q - 1) * (q - 2) * pw(p1, 2) + 2 * a2p) -
                          pw(p, 2 * (m - 1)) * pw(p1, 2) * (pw(p, 3 * m) - 2 * pw(p, 2 * m) + 1) +
                          p1 * (q - 1) * pw(p, 3 * m - 1);
    k.a = exact_div(a_num, pw(p1, 2) * pw(p, m - 2));

    const Integer b_num =
        pw(p, 3 * m - 4) * ((q - 1) * (q - 2) * (q - 3) * (q - 4) * pw(p1, 4) + 12 * a2p * (q - 3) * (q - 4) * pw(p1, 2) + 24 * a4p) -
        pw(p1, 5) * pw(p, 3 * (m - 1)) * k.a -
        pw(p, 4 * (m - 1)) * pw(p1, 4) * (pw(p, 3 * m) - 4 * pw(p, 2 * m) - 16 * q + 19) +
        6 * (pw(p1, 3) * pw(p, 2 * (m - 1)) * k.a + pw(p, 3 * (m - 1)) * pw(p1, 3) * (pw(p, 3 * m) - pw(p, 2 * m + 1) - 4 * q + 6)) -
        11 * (pw(p1, 2) * pw(p, m - 2) * k.a + pw(p, 2 * (m - 1)) * pw(p1, 2) * (pw(p, 3 * m) - 2 * pw(p, 2 * m) + 1)) +
        6 * (p1 * (q - 1) * pw(p, 3 * m - 1));
    k.b = exact_div(b_num, pw(p1, 4) * pw(p, 2 * m - 4));
    return k;
}

std::string to_string(const FrequencyCounts& f) {
    std::ostringstream os;
    os << "(n10=" << f.n_p0 << ", n-10=" << f.n_m0 << ", n12=" << f.n_p2 << ", n-12=" << f.n_m2 << ", n14=" << f.n_p4
       << ", n-14=" << f.n_m4 << ", 2n1=" << f.two_n1 << ", 2n3=" << f.two_n3 << ")";
    return os.str();
}

FrequencyCounts frequencies_closed_form(const IdentityConstants& k, int p, int m) {
    require_theorem_range(p, m, "frequencies_closed_form");
    const Rational P = p;
    auto P_ = [&](int e) { return Rational(pw(p, e)); };
    const Rational a = k.a, b = k.b, c1 = k.c1, c2 = k.c2, c3 = k.c3, c4 = k.c4, c5 = k.c5, c6 = k.c6;

    const Rational d0 = -2 * P_(6) + 2 * P_(4) + 2 * P_(2) - 2;
    const Rational d2 = 2 * P_(7) - 4 * P_(5) + 2 * P_(3);
    const Rational d4 = 2 * P_(10) - 2 * P_(8) - 2 * P_(6) + 2 * P_(4);

    const Rational n10 = -(b + c6 - a * P_(2) - a * P_(3) - a * P_(4) - a * P_(5) - b * P_(2) + c1 * P_(6) + c2 * P_(6) +
                           c3 * P_(3) + c3 * P_(5) - c4 * P_(2) - c4 * P_(4) + c5 * P_(2)) / d0;
    const Rational nm10 = -(b - c6 - a * P_(2) - a * P_(3) - a * P_(4) - a * P_(5) - b * P_(2) + c1 * P_(6) - c2 * P_(6) +
                            c3 * P_(3) + c3 * P_(5) + c4 * P_(2) + c4 * P_(4) + c5 * P_(2)) / d0;
    const Rational t1 = -(b - c5 + a * P_(3) - c3 * P_(3)) / (P_(2) - P_(4));
    const Rational n12 = (c4 - c6 + a * P - c5 * P + a * P_(2) + a * P_(4) + a * P_(5) - c1 * P_(5) - c2 * P_(4) -
                          c3 * P_(2) - c3 * P_(4) + c4 * P_(4)) / d2;
    const Rational nm12 = -(c4 - c6 - a * P + c5 * P - a * P_(2) - a * P_(4) - a * P_(5) + c1 * P_(5) - c2 * P_(4) +
                            c3 * P_(2) + c3 * P_(4) + c4 * P_(4)) / d2;
    const Rational t3 = (b - c5 + a * P - c3 * P) / (P_(4) - P_(6));
    const Rational n14 = -(b + c4 - c5 - c6 + a * P - c3 * P + a * P_(2) + a * P_(3) + a * P_(4) - b * P_(2) -
                           c1 * P_(4) - c2 * P_(2) - c3 * P_(3) + c4 * P_(2)) / d4;
    const Rational nm14 = -(b - c4 - c5 + c6 + a * P - c3 * P + a * P_(2) + a * P_(3) + a * P_(4) - b * P_(2) -
                            c1 * P_(4) + c2 * P_(2) - c3 * P_(3) - c4 * P_(2)) / d4;

    return {require_integer(n10, "n10"),   require_integer(nm10, "n-10"), require_integer(n12, "n12"),
            require_integer(nm12, "n-12"), require_integer(n14, "n14"),   require_integer(nm14, "n-14"),
            require_integer(t1, "2n1"),    require_integer(t3, "2n3")};
}

FrequencyCounts frequencies_linear_solve(const IdentityConstants& k, int p, int m) {
    require_theorem_range(p, m, "frequencies_linear_solve");
    auto P = [&](int e) { return Rational(pw(p, e)); };
    // Unknowns: n10, n-10, n12, n-12, n14, n-14, 2n1, 2n3.
    // Differences d_j = n_{1,j} - n_{-1,j}, sums s_j = n_{1,j} + n_{-1,j}.
    auto diff = [&](Rational w0, Rational w2, Rational w4) {
        return std::array<Rational, 8>{w0, -w0, w2, -w2, w4, -w4, 0, 0};
    };
    auto sums = [&](Rational w0, Rational w2, Rational w4, Rational t1, Rational t3) {
        return std::array<Rational, 8>{w0, w0, w2, w2, w4, w4, t1, t3};
    };
    std::array<std::array<Rational, 8>, 8> A{
        sums(1, 1, 1, 1, 1),
        diff(1, P(1), P(2)),
        sums(1, P(2), P(4), -P(1), -P(3)),
        diff(1, P(3), P(6)),
        sums(1, P(4), P(8), P(2), P(6)),
        diff(1, P(5), P(10)),
        sums(1, P(2), P(4), 0, 0),
        sums(1, P(4), P(8), 0, 0),
    };
    std::array<Rational, 8> rhs{Rational(k.c1), Rational(k.c2), Rational(k.c3), Rational(k.c4),
                                Rational(k.c5), Rational(k.c6), Rational(k.a),  Rational(k.b)};

    for (std::size_t col = 0; col < 8; ++col) {
        std::size_t piv = col;
        while (piv < 8 && A[piv][col] == 0) ++piv;
        if (piv == 8) throw InconsistencyError("identity system is singular");
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < 8; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const Rational f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < 8; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::array<Integer, 8> x;
    static constexpr std::array<const char*, 8> kNames{"n10", "n-10", "n12", "n-12", "n14", "n-14", "2n1", "2n3"};
    for (std::size_t i = 0; i < 8; ++i) x[i] = require_integer(rhs[i] / A[i][i], kNames[i]);
    return {x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]};
}

FrequencyCounts solve_frequencies(const IdentityConstants& k, int p, int m) {
    const FrequencyCounts closed = frequencies_closed_form(k, p, m);
    const FrequencyCounts solved = frequencies_linear_solve(k, p, m);
    auto fail = [&](const std::string& why) {
        throw InconsistencyError("identity-system inconsistency: " + why + "; closed form " + to_string(closed) +
                                 ", linear solve " + to_string(solved));
    };
    if (!(closed == solved)) fail("solution paths disagree");
    for (const auto& v : closed.as_array())
        if (v < 0) fail("negative count");
    if (closed.two_n1 % 2 != 0 || closed.two_n3 % 2 != 0) fail("odd 2n1 or 2n3");
    return closed;
}

FrequencyCounts frequencies_from_histogram(const ClassHistogram& h) {
    FrequencyCounts f;
    for (std::size_t s = 1; s < h.slots.size(); ++s) {
        if (!h.slots[s]) continue;
        const ExpSumClass c = class_from_slot(static_cast<int>(s), h.m);
        const Integer v = from_u64(h.slots[s]);
        const bool plus = c.epsilon > 0;
        switch (c.j) {
        case 0: (plus ? f.n_p0 : f.n_m0) += v; break;
        case 2: (plus ? f.n_p2 : f.n_m2) += v; break;
        case 4: (plus ? f.n_p4 : f.n_m4) += v; break;
        case 1: f.two_n1 += v; break;
        case 3: f.two_n3 += v; break;
        default: throw InconsistencyError("class with j = " + std::to_string(c.j) + " has no frequency slot");
        }
    }
    return f;
}

Integer m6_from_frequencies(const FrequencyCounts& f, int p, int m, const Integer& zero_triples) {
    return f.n_p0 + f.n_m0 + pw(p, 6) * (f.n_p2 + f.n_m2) + pw(p, 12) * (f.n_p4 + f.n_m4) - pw(p, 3) * f.two_n1 -
           pw(p, 9) * f.two_n3 + zero_triples * pw(p, 3 * m);
}

WeightDistribution distribution_from_frequencies(const FrequencyCounts& f, int p, int m) {
    const WeightLevels lv = weight_levels(p, m);
    WeightDistribution d;
    d.length = pw(p, m).get_ui() - 1;
    auto put = [&](const Integer& w, const Integer& c) {
        if (c != 0) d.counts[w.get_ui()] += c;
    };
    put(0, 1);
    put(lv.r00, f.two_n1 + f.two_n3);
    put(lv.r00 - lv.r0, f.n_p0);
    put(lv.r00 + lv.r0, f.n_m0);
    put(lv.r00 - lv.r2, f.n_p2);
    put(lv.r00 + lv.r2, f.n_m2);
    put(lv.r00 - lv.r4, f.n_p4);
    put(lv.r00 + lv.r4, f.n_m4);
    return d;
}

WeightDistribution theorem_table(int p, int m) {
    require_theorem_range(p, m, "theorem_table");
    const DualLowWeights dual = dual_low_weights_closed(p, m);
    const IdentityConstants k = constants(p, m, dual.counts[2], dual.counts[4]);
    return distribution_from_frequencies(solve_frequencies(k, p, m), p, m);
}

} // namespace tricode
