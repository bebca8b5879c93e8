#include "tricode/code.hpp"
#include "tricode/parallel.hpp"
#include "tricode/quadform.hpp"

#include "json.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>

namespace tricode {

namespace {

using nlohmann::json;

constexpr const char* kCheckpointFormat = "tricode-class-histogram-1";

void require_even_ternary(const FieldContext& ctx) {
    if (ctx.p() != 3) throw ConfigurationError("enumeration requires p = 3");
    if (ctx.m() % 2 != 0) throw ConfigurationError("enumeration requires even m, got m=" + std::to_string(ctx.m()));
}

std::vector<int> modulus_vector(const FieldContext& ctx) {
    return {ctx.modulus().begin(), ctx.modulus().end()};
}

struct Checkpoint {
    std::vector<std::uint8_t> done;  // per alpha index
    std::vector<std::uint64_t> slots;
};

std::optional<Checkpoint> load_checkpoint(const std::string& path, const FieldContext& ctx) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IntegrityError("checkpoint " + path + " is not valid JSON: " + e.what());
    }
    if (j.value("format", "") != kCheckpointFormat || j.value("m", 0) != ctx.m() ||
        j.value("modulus", std::vector<int>{}) != modulus_vector(ctx))
        throw IntegrityError("checkpoint " + path + " belongs to a different field or format");
    Checkpoint c;
    c.done.assign(ctx.q(), 0);
    for (auto a : j.at("done").get<std::vector<std::uint64_t>>()) {
        if (a >= ctx.q()) throw IntegrityError("checkpoint alpha index out of range");
        c.done[a] = 1;
    }
    c.slots = j.at("slots").get<std::vector<std::uint64_t>>();
    if (c.slots.size() != static_cast<std::size_t>(class_slot_count(ctx.m())))
        throw IntegrityError("checkpoint histogram has the wrong number of slots");
    return c;
}

void save_checkpoint(const std::string& path, const FieldContext& ctx, const Checkpoint& c) {
    json j;
    j["format"] = kCheckpointFormat;
    j["m"] = ctx.m();
    j["modulus"] = modulus_vector(ctx);
    std::vector<std::uint64_t> done;
    for (std::uint64_t a = 0; a < c.done.size(); ++a)
        if (c.done[a]) done.push_back(a);
    j["done"] = done;
    j["slots"] = c.slots;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ConfigurationError("cannot write checkpoint " + tmp);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

ClassHistogram class_histogram(const FieldContext& ctx, const EnumerationOptions& options) {
    require_even_ternary(ctx);
    const std::uint64_t q = ctx.q();
    const std::uint64_t required = saturating_pow(q, 3);
    if (required > options.budget) throw BudgetExceeded(required, options.budget);

    const FormTables forms(ctx);
    const int n = forms.n();
    const std::size_t cells = forms.cells();
    const auto nslots = static_cast<std::size_t>(class_slot_count(ctx.m()));

    Checkpoint state;
    if (options.checkpoint) {
        if (auto loaded = load_checkpoint(*options.checkpoint, ctx)) state = std::move(*loaded);
    }
    if (state.done.empty()) {
        state.done.assign(q, 0);
        state.slots.assign(nslots, 0);
    }

    std::vector<std::uint32_t> pending;
    for (std::uint64_t a = 0; a < q; ++a)
        if (!state.done[a]) pending.push_back(static_cast<std::uint32_t>(a));
    std::uint64_t done_count = q - pending.size();

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::uint64_t since_checkpoint = 0;
    const std::uint64_t per_alpha = q * q;

    parallel_ranges(options.parallelism, options.parallelism, [&](std::uint64_t, std::uint64_t, unsigned) {
        std::vector<std::uint8_t> hab(cells), work(cells);
        std::vector<std::uint64_t> local(nslots);
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) break;
            const std::uint32_t a = pending[i];
            std::fill(local.begin(), local.end(), 0);
            const std::uint8_t* ha = forms.matrix(0, a);
            for (std::uint32_t b = 0; b < q; ++b) {
                const std::uint8_t* hb = forms.matrix(1, b);
                static constexpr std::uint8_t kMod3[5] = {0, 1, 2, 0, 1};
                for (std::size_t k = 0; k < cells; ++k) hab[k] = kMod3[ha[k] + hb[k]];
                for (std::uint32_t c = 0; c < q; ++c) {
                    add3_mod3(hab.data(), forms.matrix(2, c), work.data(), cells);
                    ++local[static_cast<std::size_t>(classify_ternary_in_place(work.data(), n))];
                }
            }
            std::lock_guard lock(mu);
            for (std::size_t s = 0; s < nslots; ++s) state.slots[s] += local[s];
            state.done[a] = 1;
            ++done_count;
            since_checkpoint += per_alpha;
            if (since_checkpoint >= options.checkpoint_interval) {
                since_checkpoint = 0;
                if (options.checkpoint) save_checkpoint(*options.checkpoint, ctx, state);
                if (options.progress) options.progress(done_count, q);
            }
        }
    });
    if (options.checkpoint) save_checkpoint(*options.checkpoint, ctx, state);
    if (options.progress) options.progress(done_count, q);

    ClassHistogram h{ctx.m(), std::move(state.slots)};
    if (h.total() != required) throw InconsistencyError("class histogram does not cover all triples");
    return h;
}

namespace {

template <class PerTriple>
void for_all_tallies(const FieldContext& ctx, const EnumerationOptions& options, PerTriple&& fn) {
    if (ctx.p() != 3) throw ConfigurationError("direct enumeration requires p = 3");
    const std::uint64_t q = ctx.q();
    const std::uint64_t required = saturating_pow(q, 4);
    if (required > options.budget) throw BudgetExceeded(required, options.budget);
    const IndexTables tables(ctx);
    const TraceRows rows(tables);
    parallel_ranges(q, options.parallelism, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        for (std::uint64_t a = begin; a < end; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c)
                    fn(worker, tally_rows(rows, static_cast<std::uint32_t>(a), b, c));
    });
}

} // namespace

ClassHistogram class_histogram_direct(const FieldContext& ctx, const EnumerationOptions& options) {
    require_even_ternary(ctx);
    const auto nslots = static_cast<std::size_t>(class_slot_count(ctx.m()));
    const unsigned workers = std::max(1U, options.parallelism);
    std::vector<std::vector<std::uint64_t>> local(workers, std::vector<std::uint64_t>(nslots, 0));
    for_all_tallies(ctx, options, [&](unsigned w, const std::array<std::uint64_t, 3>& t) {
        ++local[w][static_cast<std::size_t>(class_slot(classify(tally_to_eisenstein(t), ctx.m())))];
    });
    ClassHistogram h{ctx.m(), std::vector<std::uint64_t>(nslots, 0)};
    for (const auto& l : local)
        for (std::size_t s = 0; s < nslots; ++s) h.slots[s] += l[s];
    return h;
}

WeightDistribution enumerate_distribution(const FieldContext& ctx, EnumerationMethod method,
                                          const EnumerationOptions& options) {
    if (method == EnumerationMethod::Rank) return distribution_from_histogram(class_histogram(ctx, options), ctx.p());

    const std::uint64_t length = ctx.order();
    const unsigned workers = std::max(1U, options.parallelism);
    std::vector<std::vector<std::uint64_t>> local(workers, std::vector<std::uint64_t>(length + 1, 0));
    // tally[0] counts x = 0 too, so the codeword has tally[0] - 1 zero symbols.
    for_all_tallies(ctx, options, [&](unsigned w, const std::array<std::uint64_t, 3>& t) {
        ++local[w][length - (t[0] - 1)];
    });
    WeightDistribution d{length, {}};
    for (std::uint64_t wt = 0; wt <= length; ++wt) {
        std::uint64_t c = 0;
        for (const auto& l : local) c += l[wt];
        if (c) d.counts[wt] = from_u64(c);
    }
    return d;
}

std::vector<EisensteinInteger> moments_bruteforce(const FieldContext& ctx, int max_k, const EnumerationOptions& options) {
    if (max_k < 1 || max_k > 6) throw ConfigurationError("moment order must lie in [1, 6]");
    require_even_ternary(ctx);
    std::vector<EisensteinInteger> out(static_cast<std::size_t>(max_k));
    if (saturating_pow(ctx.q(), 4) <= options.budget && ctx.m() <= 8) {
        // Tally -> multiplicity, then exact powers of each distinct sum.
        const unsigned workers = std::max(1U, options.parallelism);
        std::vector<std::map<std::array<std::uint64_t, 3>, std::uint64_t>> local(workers);
        for_all_tallies(ctx, options, [&](unsigned w, const std::array<std::uint64_t, 3>& t) { ++local[w][t]; });
        std::map<std::array<std::uint64_t, 3>, std::uint64_t> merged;
        for (const auto& l : local)
            for (const auto& [t, c] : l) merged[t] += c;
        for (const auto& [t, c] : merged) {
            const EisensteinInteger s = tally_to_eisenstein(t);
            EisensteinInteger power(from_u64(c));
            for (int k = 1; k <= max_k; ++k) {
                power *= s;
                out[static_cast<std::size_t>(k - 1)] += power;
            }
        }
    } else {
        const ClassHistogram h = class_histogram(ctx, options);
        for (int k = 1; k <= max_k; ++k) out[static_cast<std::size_t>(k - 1)] = moment_from_histogram(h, k);
    }
    for (const auto& v : out)
        if (!v.is_rational()) throw InconsistencyError("moment has a nonzero zeta component: " + v.to_string());
    return out;
}

EisensteinInteger moment_bruteforce(const FieldContext& ctx, int k, const EnumerationOptions& options) {
    if (k < 1 || k > 6) throw ConfigurationError("moment order must lie in [1, 6]");
    return moments_bruteforce(ctx, k, options).back();
}

} // namespace tricode
