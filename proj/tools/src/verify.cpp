#include "tricode/verify.hpp"

#include "tricode/code.hpp"
#include "tricode/counting.hpp"
#include "tricode/expsum.hpp"
#include "tricode/gf.hpp"
#include "tricode/identities.hpp"
#include "tricode/quadform.hpp"
#include "tricode/serialize.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <set>

namespace tricode::cli {

std::string_view to_string(ItemStatus s) noexcept {
    switch (s) {
    case ItemStatus::Match: return "match";
    case ItemStatus::Mismatch: return "mismatch";
    case ItemStatus::Skipped: return "skipped";
    case ItemStatus::RemarkHeld: return "remark-held";
    case ItemStatus::RemarkViolated: return "remark-violated";
    }
    return "?";
}

namespace {

class Report {
public:
    Report(std::string suite, std::vector<VerifyItem>& items) : suite_(std::move(suite)), items_(items) {}

    void compare(const std::string& name, const std::string& expected, const std::string& actual,
                 std::string note = {}) {
        items_.push_back({suite_, name, expected, actual,
                          expected == actual ? ItemStatus::Match : ItemStatus::Mismatch, std::move(note)});
    }
    void compare(const std::string& name, const Integer& expected, const Integer& actual, std::string note = {}) {
        compare(name, to_decimal(expected), to_decimal(actual), std::move(note));
    }
    void skip(const std::string& name, std::string why) {
        items_.push_back({suite_, name, "", "", ItemStatus::Skipped, std::move(why)});
    }
    void remark(const std::string& name, const std::string& expected, const std::string& actual, std::string note) {
        items_.push_back({suite_, name, expected, actual,
                          expected == actual ? ItemStatus::RemarkHeld : ItemStatus::RemarkViolated, std::move(note)});
    }

private:
    std::string suite_;
    std::vector<VerifyItem>& items_;
};

// Each suite draws from its own stream so results do not depend on suite order.
// FNV-1a keeps the per-suite salt identical across standard libraries.
std::mt19937_64 suite_rng(std::uint64_t seed, std::string_view suite) {
    std::uint32_t salt = 2166136261U;
    for (unsigned char ch : suite) salt = (salt ^ ch) * 16777619U;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt};
    return std::mt19937_64(seq);
}

FieldElement random_element(const FieldContext& ctx, std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, ctx.q() - 1);
    return ctx.from_index(d(rng));
}

Triple random_triple(const FieldContext& ctx, std::mt19937_64& rng) {
    return {random_element(ctx, rng), random_element(ctx, rng), random_element(ctx, rng)};
}

Triple triple_from_index(const FieldContext& ctx, std::uint64_t i) {
    const std::uint64_t q = ctx.q();
    return {ctx.from_index(i / (q * q)), ctx.from_index((i / q) % q), ctx.from_index(i % q)};
}

EnumerationOptions enum_options(const VerifyOptions& o) {
    EnumerationOptions e;
    e.budget = o.budget;
    e.parallelism = o.parallelism;
    return e;
}

void say(const VerifyOptions& o, const std::string& msg) {
    if (o.progress) o.progress(msg);
}

std::string fmt_triple(const FieldContext& ctx, const Triple& t) {
    return "(" + std::to_string(ctx.to_index(t.alpha)) + "," + std::to_string(ctx.to_index(t.beta)) + "," +
           std::to_string(ctx.to_index(t.gamma)) + ")";
}

void require_even(const VerifyOptions& o, std::string_view suite) {
    if (o.m < 2 || o.m % 2 != 0 || o.m > kMaxBaseDegree)
        throw ConfigurationError(std::string(suite) + " suite requires even m in [2, " +
                                 std::to_string(kMaxBaseDegree) + "], got m=" + std::to_string(o.m));
}

// ---------------------------------------------------------------------------

void suite_moments(const VerifyOptions& o, std::vector<VerifyItem>& items) {
    require_even(o, "moments");
    Report r("moments", items);
    const FieldContext ctx = FieldContext::create(3, o.m);
    const Integer scale = ipow(3, 3UL * static_cast<unsigned long>(o.m));

    // Small fields: independent direct tallies. Larger ones only have the rank path.
    std::vector<EisensteinInteger> mom;
    std::optional<ClassHistogram> hist;
    try {
        if (o.m <= 4) {
            say(o, "moments: direct tallies of all triples");
            mom = moments_bruteforce(ctx, 6, enum_options(o));
        }
        say(o, "moments: class histogram");
        hist = class_histogram(ctx, enum_options(o));
    } catch (const BudgetExceeded& e) {
        r.skip("power sums", e.what());
        return;
    }
    if (mom.empty())
        for (int k = 1; k <= 6; ++k) mom.push_back(moment_from_histogram(*hist, k));
    auto as_str = [](const EisensteinInteger& v) { return v.to_string(); };

    r.compare("sum_S^1", EisensteinInteger(scale).to_string(), as_str(mom[0]), "p^{3m}");
    static constexpr std::array<SystemId, 5> kHom{SystemId::SYS2_HOM, SystemId::SYS3_HOM, SystemId::SYS4_HOM,
                                                  SystemId::SYS5_HOM, SystemId::SYS6_HOM};
    for (int k = 2; k <= 6; ++k) {
        const SystemId sys = kHom[static_cast<std::size_t>(k - 2)];
        const std::string name = "sum_S^" + std::to_string(k);
        if (has_closed_form(sys)) {
            const Integer closed = closed_form_count(sys, 3, o.m).count * scale;
            r.compare(name + " vs closed form", EisensteinInteger(closed).to_string(), as_str(mom[static_cast<std::size_t>(k - 1)]),
                      std::string(to_string(sys)) + " count times p^{3m}");
        }
        try {
            const Integer brute = count_bruteforce(sys, ctx, {o.budget, o.parallelism}).count * scale;
            r.compare(name + " vs solution count", EisensteinInteger(brute).to_string(),
                      as_str(mom[static_cast<std::size_t>(k - 1)]), std::string(to_string(sys)) + " brute force");
        } catch (const BudgetExceeded& e) {
            r.skip(name + " vs solution count", e.what());
        }
    }

    // Sixth moment from the class frequencies, weighted by the S = q triples.
    const ClassHistogram& h = *hist;
    const FrequencyCounts f = frequencies_from_histogram(h);
    const Integer m6 = m6_from_frequencies(f, 3, o.m, from_u64(h.slots[0])) * scale;
    r.compare("sum_S^6 vs frequency formula", EisensteinInteger(m6).to_string(), as_str(mom[5]));
    if (o.m >= 6) {
        const DualLowWeights dual = dual_low_weights_closed(3, o.m);
        const FrequencyCounts solved =
            solve_frequencies(constants(3, o.m, dual.counts[2], dual.counts[4]), 3, o.m);
        r.compare("frequencies: histogram vs identity system", to_string(solved), to_string(f));
    }
}

// ---------------------------------------------------------------------------

void suite_expsum(const VerifyOptions& o, std::vector<VerifyItem>& items) {
    require_even(o, "expsum");
    if (o.m > 10) throw ConfigurationError("expsum suite supports m <= 10");
    Report r("expsum", items);
    const FieldContext ctx = FieldContext::create(3, o.m);
    auto rng = suite_rng(o.seed, "expsum");
    const std::uint64_t q = ctx.q();
    const bool exhaustive = o.m <= 4;

    // Literal definition vs the table-driven tallies on a few triples.
    std::unique_ptr<IndexTables> tables;
    std::unique_ptr<TraceRows> rows;
    if (o.m <= 8) {
        tables = std::make_unique<IndexTables>(ctx);
        rows = std::make_unique<TraceRows>(*tables);
        std::uint64_t agree = 0;
        std::string first_bad;
        const int probes = 20;
        for (int i = 0; i < probes; ++i) {
            const Triple t = random_triple(ctx, rng);
            const auto tally = tally_rows(*rows, static_cast<std::uint32_t>(ctx.to_index(t.alpha)),
                                          static_cast<std::uint32_t>(ctx.to_index(t.beta)),
                                          static_cast<std::uint32_t>(ctx.to_index(t.gamma)));
            if (tally_to_eisenstein(tally) == direct_sum(ctx, t))
                ++agree;
            else if (first_bad.empty())
                first_bad = fmt_triple(ctx, t);
        }
        r.compare("table tallies vs literal sum", std::to_string(probes), std::to_string(agree), first_bad);
    }

    const FormTables forms(ctx);
    const std::uint64_t samples = exhaustive ? q * q * q : (o.m <= 8 ? 100000 : 200);
    say(o, "expsum: classifying " + std::to_string(samples) + (exhaustive ? " triples (all)" : " sampled triples"));

    std::uint64_t legendre_ok = 0, fast_ok = 0, rank_ok = 0, nonzero = 0;
    std::string legendre_bad, fast_bad, rank_bad;
    std::vector<std::uint8_t> buf(forms.cells());
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Triple t = exhaustive ? triple_from_index(ctx, i) : random_triple(ctx, rng);
        const auto ia = static_cast<std::uint32_t>(ctx.to_index(t.alpha));
        const auto ib = static_cast<std::uint32_t>(ctx.to_index(t.beta));
        const auto ic = static_cast<std::uint32_t>(ctx.to_index(t.gamma));
        const EisensteinInteger s = rows ? tally_to_eisenstein(tally_rows(*rows, ia, ib, ic)) : direct_sum(ctx, t);
        const ExpSumClass direct = classify(s, o.m);

        const SymmetricMatrix hm = build_form(ctx, t);
        if (classify_via_legendre(hm, o.m) == direct)
            ++legendre_ok;
        else if (legendre_bad.empty())
            legendre_bad = fmt_triple(ctx, t);

        for (std::size_t k = 0; k < buf.size(); ++k)
            buf[k] = static_cast<std::uint8_t>((forms.matrix(0, ia)[k] + forms.matrix(1, ib)[k] + forms.matrix(2, ic)[k]) % 3);
        if (classify_ternary_in_place(buf.data(), forms.n()) == class_slot(direct))
            ++fast_ok;
        else if (fast_bad.empty())
            fast_bad = fmt_triple(ctx, t);

        if (ia || ib || ic) {
            ++nonzero;
            const int rk = rank(hm);
            if (rk >= o.m - 4 && rk <= o.m)
                ++rank_ok;
            else if (rank_bad.empty())
                rank_bad = fmt_triple(ctx, t) + " rank " + std::to_string(rk);
        }
    }
    const std::string n = std::to_string(samples);
    r.compare("legendre class vs direct sum", n, std::to_string(legendre_ok), legendre_bad);
    r.compare("fast class vs direct sum", n, std::to_string(fast_ok), fast_bad);
    r.compare("rank in [m-4, m] for nonzero triples", std::to_string(nonzero), std::to_string(rank_ok), rank_bad);

    if (exhaustive) {
        const ClassHistogram h = class_histogram(ctx, enum_options(o));
        for (int j = 1; j <= o.m; j += 2) {
            const auto plus = h.slots[static_cast<std::size_t>(1 + 2 * j)];
            const auto minus = h.slots[static_cast<std::size_t>(2 + 2 * j)];
            r.compare("odd j=" + std::to_string(j) + " sign balance", std::to_string(plus), std::to_string(minus),
                      "count with eps=+1 vs eps=-1");
        }
    } else {
        r.skip("odd j sign balance", "needs the full class histogram; run `weights --method rank`");
    }
}

// ---------------------------------------------------------------------------

void suite_variety(const VerifyOptions& o, std::vector<VerifyItem>& items) {
    if (o.m < 1 || o.m > kMaxBaseDegree) throw ConfigurationError("variety suite requires 1 <= m <= 12");
    Report r("variety", items);
    const FieldContext ctx = FieldContext::create(3, o.m);
    const CountOptions copts{o.budget, o.parallelism};

    for (SystemId id : kAllSystems) {
        if (!has_closed_form(id)) continue;
        const std::string name = std::string(to_string(id)) + " closed form vs brute force";
        try {
            say(o, "variety: " + std::string(to_string(id)));
            r.compare(name, closed_form_count(id, 3, o.m).count, count_bruteforce(id, ctx, copts).count);
        } catch (const BudgetExceeded& e) {
            r.skip(name, e.what());
        }
    }
    for (TableId id : kAllTables) {
        const VarietyTable& t = variety_table(id);
        const std::string name = std::string(to_string(id)) + " components vs " + std::string(to_string(t.system));
        try {
            say(o, "variety: " + std::string(to_string(id)));
            const Integer brute = count_bruteforce(t.system, ctx, copts).count;
            r.compare(name, brute, variety_count(id, ctx, copts).count);
        } catch (const BudgetExceeded& e) {
            r.skip(name, e.what());
        }
    }

    // Circle lemma on five random right-hand sides.
    if (2 * o.m > kMaxDegree) {
        r.skip("circle parametrization", "no built-in modulus of degree 2m");
        return;
    }
    auto rng = suite_rng(o.seed, "variety");
    const QuadraticExtension ext(ctx);
    const FieldContext& big = ext.field();
    const std::uint64_t expected = big.q() - 1;
    for (int i = 0; i < 5; ++i) {
        const FieldElement a = random_element(ctx, rng, true);
        const FieldElement ea = ext.embed(a);
        const auto sols = circle_solutions(ext, a);
        std::set<std::pair<std::uint64_t, std::uint64_t>> distinct;
        std::uint64_t on_curve = 0;
        for (const auto& [x, y] : sols) {
            if (big.add(big.mul(x, x), big.mul(y, y)) == ea) ++on_curve;
            distinct.emplace(big.to_index(x), big.to_index(y));
        }
        const std::string tag = "circle a=" + std::to_string(ctx.to_index(a));
        r.compare(tag + " distinct points", std::to_string(expected), std::to_string(distinct.size()));
        r.compare(tag + " points on x^2+y^2=a", std::to_string(sols.size()), std::to_string(on_curve));
    }
}

// ---------------------------------------------------------------------------

// Expected size of the coset of 1 + p^i: m, except m/2 when i = m/2 (mod m, up to sign).
std::size_t expected_coset_size(int i, int m) {
    int e = i % m;
    if (2 * e > m) e = m - e;
    return (m % 2 == 0 && 2 * e == m) ? static_cast<std::size_t>(m / 2) : static_cast<std::size_t>(m);
}

void suite_codewords(const VerifyOptions& o, std::vector<VerifyItem>& items) {
    require_even(o, "codewords");
    Report r("codewords", items);
    const FieldContext ctx = FieldContext::create(3, o.m);
    auto rng = suite_rng(o.seed, "codewords");
    const std::uint64_t n = ctx.order();

    for (int i = 0; i <= 2; ++i) {
        const std::uint64_t s = 1 + static_cast<std::uint64_t>(ipow(3, static_cast<unsigned long>(i)).get_ui());
        r.compare("coset size of " + std::to_string(s), std::to_string(expected_coset_size(i, o.m)),
                  std::to_string(cyclotomic_coset(s % n, 3, o.m).size()));
    }

    const bool exhaustive = o.m == 2;
    const std::uint64_t samples = exhaustive ? ctx.q() * ctx.q() * ctx.q() : 1000;
    say(o, "codewords: " + std::to_string(samples) + " weight comparisons");
    std::uint64_t agree = 0;
    std::string first_bad;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Triple t = exhaustive ? triple_from_index(ctx, i) : random_triple(ctx, rng);
        const Integer direct = weight_direct(codeword(ctx, t));
        const Integer via = weight_via_expsum(ctx, t);
        if (direct == via)
            ++agree;
        else if (first_bad.empty())
            first_bad = fmt_triple(ctx, t) + ": " + to_decimal(direct) + " vs " + to_decimal(via);
    }
    r.compare("direct weight vs weight from R", std::to_string(samples), std::to_string(agree), first_bad);

    const FieldElement s2 = ctx.primitive_power(2), s4 = ctx.primitive_power(4), s10 = ctx.primitive_power(10);
    std::uint64_t shift_ok = 0, linear_ok = 0;
    const int probes = 10;
    for (int i = 0; i < probes; ++i) {
        const Triple t = random_triple(ctx, rng), u = random_triple(ctx, rng);
        const Codeword c = codeword(ctx, t);
        const Codeword shifted = codeword(ctx, {ctx.mul(t.alpha, s2), ctx.mul(t.beta, s4), ctx.mul(t.gamma, s10)});
        std::vector<std::uint8_t> rot(c.symbols.begin() + 1, c.symbols.end());
        rot.push_back(c.symbols.front());
        if (rot == shifted.symbols) ++shift_ok;

        const Codeword cu = codeword(ctx, u);
        const Codeword sum = codeword(ctx, {ctx.add(t.alpha, u.alpha), ctx.add(t.beta, u.beta), ctx.add(t.gamma, u.gamma)});
        bool ok = true;
        for (std::size_t k = 0; k < c.symbols.size(); ++k)
            ok = ok && sum.symbols[k] == (c.symbols[k] + cu.symbols[k]) % 3;
        if (ok) ++linear_ok;
    }
    r.compare("cyclic shift closure", std::to_string(probes), std::to_string(shift_ok));
    r.compare("linearity", std::to_string(probes), std::to_string(linear_ok));

    WeightDistribution dist;
    if (o.m <= 4) {
        say(o, "codewords: direct and rank enumeration");
        const auto direct = enumerate_distribution(ctx, EnumerationMethod::Direct, enum_options(o));
        dist = enumerate_distribution(ctx, EnumerationMethod::Rank, enum_options(o));
        r.compare("distribution direct vs rank", to_json(direct), to_json(dist));
    } else {
        dist = theorem_table(3, o.m);
    }
    const auto bad = symmetry_violations(dist, 3, o.m);
    std::string listed;
    for (auto w : bad) listed += (listed.empty() ? "" : " ") + std::to_string(w);
    r.remark("weights symmetric about p^{m-1}(p-1)", "", listed, "weights listed have no mirror");
}

// ---------------------------------------------------------------------------

std::string low_str(const std::array<Integer, 5>& a) {
    std::string s;
    for (const auto& v : a) s += (s.empty() ? "" : " ") + to_decimal(v);
    return s;
}

void suite_dual(const VerifyOptions& o, std::vector<VerifyItem>& items) {
    require_even(o, "dual");
    Report r("dual", items);
    const FieldContext ctx = FieldContext::create(3, o.m);
    const std::uint64_t l = ctx.order();
    const int k = code_dimension(3, o.m);
    const DualLowWeights closed = dual_low_weights_closed(3, o.m);

    WeightDistribution a;
    if (closed.within_hypothesis) {
        a = theorem_table(3, o.m);
        const DualLowWeights d = closed;
        const FrequencyCounts cf = frequencies_closed_form(constants(3, o.m, d.counts[2], d.counts[4]), 3, o.m);
        const FrequencyCounts ls = frequencies_linear_solve(constants(3, o.m, d.counts[2], d.counts[4]), 3, o.m);
        r.compare("frequency solution: printed vs linear solve", to_string(cf), to_string(ls));
    } else {
        say(o, "dual: enumerating the code");
        a = distinct_codewords(enumerate_distribution(ctx, EnumerationMethod::Rank, enum_options(o)), 3, o.m);
    }
    r.compare("codeword total", ipow(3, static_cast<unsigned long>(k)), a.total(), "p^k, k = " + std::to_string(k));

    const WeightDistribution dual = macwilliams_transform(a, l, k, 3);
    std::array<Integer, 5> low;
    for (std::size_t i = 0; i < 5; ++i) low[i] = dual.at(i);
    if (closed.within_hypothesis)
        r.compare("dual A'_0..A'_4 vs closed form", low_str(closed.counts), low_str(low));
    else
        r.remark("dual A'_0..A'_4 vs closed form", low_str(closed.counts), low_str(low),
                 "closed form is stated for m >= 6 only");
    try {
        say(o, "dual: searching low-weight dual words");
        r.compare("dual A'_0..A'_4 vs brute force", low_str(dual_low_weights_bruteforce(ctx, o.budget)), low_str(low));
    } catch (const BudgetExceeded& e) {
        r.skip("dual A'_0..A'_4 vs brute force", e.what());
    }
    r.compare("double transform", to_json(a),
              to_json(macwilliams_transform(dual, l, static_cast<int>(l) - k, 3)));

    for (const IdentityCheck& c : power_moments(a, l, k, 3, low))
        r.compare(c.name, c.rhs, c.lhs, "sum over i of (i)_r A_i");
    Integer first = 0;
    for (const auto& [w, c] : a.counts) first += from_u64(w) * c;
    const Integer expected = 2 * from_u64(l) * ipow(3, static_cast<unsigned long>(k - 1));
    r.compare("sum i A_i", expected, first, "(p-1) l p^{k-1}");
}

} // namespace

std::vector<VerifyItem> run_suite(std::string_view suite, const VerifyOptions& options) {
    std::vector<VerifyItem> items;
    auto one = [&](std::string_view s) {
        if (s == "moments") suite_moments(options, items);
        else if (s == "expsum") suite_expsum(options, items);
        else if (s == "variety") suite_variety(options, items);
        else if (s == "codewords") suite_codewords(options, items);
        else if (s == "dual") suite_dual(options, items);
        else throw ConfigurationError("unknown suite '" + std::string(s) + "'");
    };
    if (suite == "all") {
        for (auto s : kSuites) one(s);
    } else {
        one(suite);
    }
    return items;
}

} // namespace tricode::cli
