#include "tricode/code.hpp"

#include <algorithm>

namespace tricode {

CycloCoset cyclotomic_coset(std::uint64_t s, int p, int m) {
    if (p < 2 || m < 1) throw ConfigurationError("invalid (p, m)");
    const std::uint64_t n = saturating_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(m)) - 1;
    if (n > (std::uint64_t{1} << 58)) throw ConfigurationError("field too large for coset arithmetic");
    if (s >= n) throw ConfigurationError("coset representative out of range");
    CycloCoset c{s, {}};
    std::uint64_t x = s;
    do {
        c.elements.push_back(x);
        x = (x * static_cast<std::uint64_t>(p)) % n;
    } while (x != s);
    std::sort(c.elements.begin(), c.elements.end());
    return c;
}

int code_dimension(int p, int m) {
    const std::uint64_t n = saturating_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(m)) - 1;
    std::vector<std::vector<std::uint64_t>> seen;
    int k = 0;
    for (std::uint64_t s : {std::uint64_t{2}, static_cast<std::uint64_t>(p + 1), static_cast<std::uint64_t>(p * p + 1)}) {
        auto c = cyclotomic_coset(s % n, p, m);
        if (std::find(seen.begin(), seen.end(), c.elements) != seen.end()) continue;
        k += static_cast<int>(c.size());
        seen.push_back(std::move(c.elements));
    }
    return k;
}

Codeword codeword(const FieldContext& ctx, const Triple& t) {
    const auto p = static_cast<std::int64_t>(ctx.p());
    const std::array<std::int64_t, 3> exps{2, p + 1, p * p + 1};
    Codeword cw;
    cw.symbols.resize(static_cast<std::size_t>(ctx.order()));
    // Running powers pi^{s i}.
    std::array<FieldElement, 3> step, cur;
    for (std::size_t e = 0; e < 3; ++e) {
        step[e] = ctx.primitive_power(exps[e]);
        cur[e] = ctx.one();
    }
    for (std::size_t i = 0; i < cw.symbols.size(); ++i) {
        const FieldElement v =
            ctx.add(ctx.add(ctx.mul(t.alpha, cur[0]), ctx.mul(t.beta, cur[1])), ctx.mul(t.gamma, cur[2]));
        cw.symbols[i] = static_cast<std::uint8_t>(ctx.trace(v));
        for (std::size_t e = 0; e < 3; ++e) cur[e] = ctx.mul(cur[e], step[e]);
    }
    return cw;
}

int weight_direct(const Codeword& cw) noexcept {
    return static_cast<int>(std::count_if(cw.symbols.begin(), cw.symbols.end(), [](std::uint8_t s) { return s != 0; }));
}

Integer weight_from_r(const Integer& r, int p, int m) {
    if (r % p != 0) throw InconsistencyError("R = " + r.get_str() + " is not divisible by p");
    return (p - 1) * ipow(p, static_cast<unsigned long>(m - 1)) - r / p;
}

Integer weight_via_expsum(const FieldContext& ctx, const Triple& t) {
    if (ctx.m() % 2 != 0) throw ConfigurationError("weight_via_expsum requires even m");
    return weight_from_r(r_sum(ctx, t), ctx.p(), ctx.m());
}

Integer weight_from_class(const ExpSumClass& c, int p, int m) { return weight_from_r(r_from_class(c, p, m), p, m); }

Integer WeightDistribution::total() const {
    Integer t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::uint64_t ClassHistogram::total() const noexcept {
    std::uint64_t t = 0;
    for (auto v : slots) t += v;
    return t;
}

WeightDistribution distribution_from_histogram(const ClassHistogram& h, int p) {
    WeightDistribution d;
    d.length = saturating_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(h.m)) - 1;
    for (std::size_t s = 0; s < h.slots.size(); ++s) {
        if (!h.slots[s]) continue;
        const Integer w = weight_from_class(class_from_slot(static_cast<int>(s), h.m), p, h.m);
        d.counts[w.get_ui()] += from_u64(h.slots[s]);
    }
    return d;
}

WeightDistribution distinct_codewords(const WeightDistribution& d, int p, int m) {
    const Integer triples = ipow(p, 3UL * static_cast<unsigned long>(m));
    const Integer mult = exact_div(triples, ipow(p, static_cast<unsigned long>(code_dimension(p, m))));
    WeightDistribution out{d.length, {}};
    for (const auto& [w, c] : d.counts) out.counts[w] = exact_div(c, mult);
    return out;
}

std::vector<std::uint64_t> symmetry_violations(const WeightDistribution& d, int p, int m) {
    const Integer center = (p - 1) * ipow(p, static_cast<unsigned long>(m - 1));
    std::vector<std::uint64_t> bad;
    for (const auto& [w, c] : d.counts) {
        if (w == 0 || c == 0) continue;
        const Integer mirror = 2 * center - from_u64(w);
        if (mirror < 0 || d.at(mirror.get_ui()) == 0) bad.push_back(w);
    }
    return bad;
}

EisensteinInteger moment_from_histogram(const ClassHistogram& h, int k) {
    if (k < 0) throw ConfigurationError("moment order must be nonnegative");
    EisensteinInteger total;
    for (std::size_t s = 0; s < h.slots.size(); ++s) {
        if (!h.slots[s]) continue;
        total += EisensteinInteger(from_u64(h.slots[s])) *
                 class_value(class_from_slot(static_cast<int>(s), h.m), h.m).pow(static_cast<unsigned>(k));
    }
    return total;
}

} // namespace tricode
