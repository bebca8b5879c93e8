#include "tricode/counting.hpp"

#include "tricode/parallel.hpp"

#include <algorithm>

namespace tricode {

namespace {

struct SystemEntry {
    SystemId id;
    std::string_view name;
    SystemSpec spec;
};

const std::vector<SystemEntry>& system_entries() {
    static const std::vector<SystemEntry> entries{
        {SystemId::SYS2_HOM, "SYS2_HOM", {{1, 1}, 0}},
        {SystemId::SYS3_AFF, "SYS3_AFF", {{1, 1}, 1}},
        {SystemId::SYS3_HOM, "SYS3_HOM", {{1, 1, 1}, 0}},
        {SystemId::SYS4_AFF, "SYS4_AFF", {{1, 1, 1}, 1}},
        {SystemId::SYS4_HOM, "SYS4_HOM", {{1, 1, 1, 1}, 0}},
        {SystemId::SYS5_HOM, "SYS5_HOM", {{1, 1, 1, 1, 1}, 0}},
        {SystemId::SYS6_HOM, "SYS6_HOM", {{1, 1, 1, 1, 1, 1}, 0}},
        {SystemId::DUAL_W3_SAME, "DUAL_W3_SAME", {{1, 1}, 1}},
        {SystemId::DUAL_W3_MIX, "DUAL_W3_MIX", {{1, -1}, 1}},
        {SystemId::DUAL_W4_PAIR, "DUAL_W4_PAIR", {{1, 1, -1}, 0}},
        {SystemId::DUAL_W4_ONEFLIP, "DUAL_W4_ONEFLIP", {{1, 1, 1, -1}, 0}},
        {SystemId::DUAL_W4_TWOFLIP, "DUAL_W4_TWOFLIP", {{1, 1, -1, -1}, 0}},
    };
    return entries;
}

const SystemEntry& entry(SystemId id) {
    for (const auto& e : system_entries())
        if (e.id == id) return e;
    throw ConfigurationError("unknown system id");
}

} // namespace

std::string_view to_string(SystemId id) noexcept {
    for (const auto& e : system_entries())
        if (e.id == id) return e.name;
    return "UNKNOWN";
}

SystemId system_from_string(std::string_view name) {
    for (const auto& e : system_entries())
        if (e.name == name) return e.id;
    throw ConfigurationError("unknown system id: " + std::string(name));
}

const SystemSpec& system_spec(SystemId id) { return entry(id).spec; }

std::vector<std::string> describe_system(SystemId id, int p) {
    static constexpr std::string_view kNames = "xyzwuv";
    const auto& spec = system_spec(id);
    const std::array<std::string, 3> exps{"2", std::to_string(p + 1), std::to_string(p * p + 1)};
    std::vector<std::string> out;
    for (const auto& e : exps) {
        std::string line;
        for (std::size_t i = 0; i < spec.signs.size(); ++i) {
            if (i > 0 || spec.signs[i] < 0) line += spec.signs[i] < 0 ? "-" : "+";
            line += kNames[i];
            line += "^" + e;
        }
        if (spec.constant) line += spec.constant > 0 ? "+1" : "-1";
        out.push_back(line + "=0");
    }
    return out;
}

SolutionCount count_bruteforce(SystemId id, const FieldContext& ctx, const CountOptions& options) {
    if (ctx.p() != 3) throw ConfigurationError("brute-force counting is implemented for p = 3");
    const auto& spec = system_spec(id);
    const int n = static_cast<int>(spec.signs.size());
    const std::uint64_t required = saturating_pow(ctx.q(), static_cast<unsigned>(n));
    if (required > options.budget) throw BudgetExceeded(required, options.budget);

    const IndexTables tables(ctx);
    const std::uint32_t q = tables.q();
    static constexpr std::array<std::uint64_t, 3> kExp{2, 4, 10};

    // Signed packed powers per variable position.
    std::vector<std::array<std::vector<std::uint64_t>, 3>> pw(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < 3; ++e) {
            auto& tab = pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)];
            tab.resize(q);
            for (std::uint32_t x = 0; x < q; ++x) {
                const std::uint64_t val = tables.packed(tables.pow(x, kExp[static_cast<std::size_t>(e)]));
                tab[x] = spec.signs[static_cast<std::size_t>(v)] < 0 ? packed3::neg(val) : val;
            }
        }
    // Square roots: roots of x^2 = t occupy [root_begin[t], root_begin[t+1]).
    std::vector<std::uint32_t> root_begin(q + 1, 0), roots(q);
    for (std::uint32_t x = 0; x < q; ++x) ++root_begin[tables.mul(x, x) + 1];
    for (std::uint32_t t = 0; t < q; ++t) root_begin[t + 1] += root_begin[t];
    {
        auto fill = root_begin;
        for (std::uint32_t x = 0; x < q; ++x) roots[fill[tables.mul(x, x)]++] = x;
    }

    const std::uint64_t constant = tables.packed(static_cast<std::uint32_t>(ctx.to_index(ctx.constant(spec.constant))));
    const int last = n - 1;
    const bool last_negative = spec.signs[static_cast<std::size_t>(last)] < 0;

    std::vector<std::uint64_t> partial(std::max(1U, options.parallelism), 0);
    parallel_ranges(q, options.parallelism, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        std::uint64_t count = 0;
        // s[level][e]: sum over variables < level plus the constant.
        std::vector<std::array<std::uint64_t, 3>> s(static_cast<std::size_t>(n));
        std::vector<std::uint32_t> idx(static_cast<std::size_t>(n), 0);
        s[0] = {constant, constant, constant};

        auto solve_last = [&](const std::array<std::uint64_t, 3>& acc) {
            // sign * x^2 = -acc2.
            const std::uint64_t target = last_negative ? acc[0] : packed3::neg(acc[0]);
            const std::uint32_t t = tables.unpack(target);
            for (std::uint32_t k = root_begin[t]; k < root_begin[t + 1]; ++k) {
                const std::uint32_t x = roots[k];
                if (packed3::add(acc[1], pw[static_cast<std::size_t>(last)][1][x]) != 0) continue;
                if (packed3::add(acc[2], pw[static_cast<std::size_t>(last)][2][x]) != 0) continue;
                ++count;
            }
        };
        if (last == 0) {
            if (begin == 0) solve_last(s[0]);
            partial[worker] = count;
            return;
        }

        // Iterative odometer over variables 0..last-1; variable 0 restricted to [begin, end).
        int level = 0;
        idx[0] = static_cast<std::uint32_t>(begin);
        if (begin >= end) {
            partial[worker] = 0;
            return;
        }
        while (level >= 0) {
            const std::uint32_t x = idx[static_cast<std::size_t>(level)];
            const std::uint32_t limit = level == 0 ? static_cast<std::uint32_t>(end) : q;
            if (x >= limit) {
                --level;
                if (level >= 0) ++idx[static_cast<std::size_t>(level)];
                continue;
            }
            std::array<std::uint64_t, 3> acc{};
            for (int e = 0; e < 3; ++e)
                acc[static_cast<std::size_t>(e)] = packed3::add(s[static_cast<std::size_t>(level)][static_cast<std::size_t>(e)],
                                                                pw[static_cast<std::size_t>(level)][static_cast<std::size_t>(e)][x]);
            if (level + 1 == last) {
                solve_last(acc);
                ++idx[static_cast<std::size_t>(level)];
            } else {
                s[static_cast<std::size_t>(level + 1)] = acc;
                ++level;
                idx[static_cast<std::size_t>(level)] = 0;
            }
        }
        partial[worker] = count;
    });

    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    return {id, ctx.m(), from_u64(total)};
}

bool has_closed_form(SystemId id) noexcept {
    switch (id) {
    case SystemId::SYS2_HOM:
    case SystemId::SYS3_AFF:
    case SystemId::SYS3_HOM:
    case SystemId::SYS4_AFF:
    case SystemId::SYS4_HOM:
    case SystemId::SYS5_HOM: return true;
    default: return false;
    }
}

SolutionCount closed_form_count(SystemId id, int p, int m) {
    if (m < 1) throw ConfigurationError("m must be positive");
    const Integer q = ipow(p, static_cast<unsigned long>(m));
    auto ternary_only = [&] {
        if (p != 3) throw HypothesisError("closed form for " + std::string(to_string(id)) + " is proved for p = 3 only");
    };
    Integer v;
    switch (id) {
    case SystemId::SYS2_HOM: v = 1; break;
    case SystemId::SYS3_AFF: v = p + 1; break;
    case SystemId::SYS3_HOM: v = 1 + (q - 1) * (p + 1); break;
    case SystemId::SYS4_AFF:
        ternary_only();
        v = 4 * (2 * q - 3);
        break;
    case SystemId::SYS4_HOM:
        ternary_only();
        v = 8 * (q - 1) * (q - 1) + 1;
        break;
    case SystemId::SYS5_HOM:
        ternary_only();
        v = 5 * (q - 1) * (8 * q - 2 * p - 10) + 1;
        break;
    default: throw ConfigurationError("no closed form for " + std::string(to_string(id)));
    }
    return {id, m, v};
}

// ---------------------------------------------------------------------------

std::vector<std::pair<FieldElement, FieldElement>> circle_solutions(const QuadraticExtension& ext, const FieldElement& a) {
    const FieldContext& base = ext.base();
    const FieldContext& big = ext.field();
    if (base.is_zero(a)) throw ConfigurationError("circle radius must be nonzero");
    if (!base.is_valid(a)) throw ConfigurationError("element does not belong to the base field");

    const auto s = big.sqrt(ext.embed(a));
    const auto t = big.sqrt(big.neg(big.one()));
    if (!s || !t) throw InconsistencyError("base-field element is not a square in the quadratic extension");
    const FieldElement half = big.inverse(big.constant(2));
    const FieldElement sh = big.mul(*s, half);
    const FieldElement sth = big.mul(sh, *t);

    std::vector<std::pair<FieldElement, FieldElement>> out;
    out.reserve(static_cast<std::size_t>(big.order()));
    FieldElement theta = big.one();
    for (std::uint64_t i = 0; i < big.order(); ++i) {
        const FieldElement inv = big.primitive_power(-static_cast<std::int64_t>(i));
        out.emplace_back(big.mul(sh, big.add(theta, inv)), big.mul(sth, big.sub(theta, inv)));
        theta = big.mul(theta, big.pi());
    }
    return out;
}

} // namespace tricode
