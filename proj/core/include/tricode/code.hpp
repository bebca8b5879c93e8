#pragma once

#include "tricode/errors.hpp"
#include "tricode/expsum.hpp"
#include "tricode/gf.hpp"
#include "tricode/numeric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tricode {

/// Orbit of s under multiplication by p modulo p^m - 1.
struct CycloCoset {
    std::uint64_t s = 0;
    std::vector<std::uint64_t> elements;  // sorted
    std::size_t size() const noexcept { return elements.size(); }
};

CycloCoset cyclotomic_coset(std::uint64_t s, int p, int m);

/// Sum of the sizes of the distinct cosets of 2, p+1 and p^2+1.
int code_dimension(int p, int m);

struct Codeword {
    std::vector<std::uint8_t> symbols;
};

/// c_i = Tr(alpha pi^{2i} + beta pi^{(p+1)i} + gamma pi^{(p^2+1)i}), i in [0, q-1).
Codeword codeword(const FieldContext& ctx, const Triple& t);

int weight_direct(const Codeword& cw) noexcept;

/// p^{m-1}(p-1) - R/p; throws InconsistencyError if p does not divide R.
Integer weight_from_r(const Integer& r, int p, int m);
/// Weight from a direct evaluation of R. Requires even m.
Integer weight_via_expsum(const FieldContext& ctx, const Triple& t);
Integer weight_from_class(const ExpSumClass& c, int p, int m);

/// Weight -> number of coefficient triples (or codewords) of that weight.
struct WeightDistribution {
    std::uint64_t length = 0;
    std::map<std::uint64_t, Integer> counts;

    Integer total() const;
    Integer at(std::uint64_t w) const {
        auto it = counts.find(w);
        return it == counts.end() ? Integer(0) : it->second;
    }
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Per-class counts over all triples, indexed by class_slot.
struct ClassHistogram {
    int m = 0;
    std::vector<std::uint64_t> slots;

    std::uint64_t total() const noexcept;
    friend bool operator==(const ClassHistogram&, const ClassHistogram&) = default;
};

enum class EnumerationMethod { Direct, Rank };

struct EnumerationOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned parallelism = 1;
    /// Checkpoint file for the rank method; resumed from if it exists.
    std::optional<std::string> checkpoint;
    std::uint64_t checkpoint_interval = std::uint64_t{1} << 24;
    /// Called with (alpha values done, q) after each checkpoint interval and at the end.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Classification of every triple with the form-matrix fast path. Requires p = 3, even m <= 10,
/// and q^3 within budget.
ClassHistogram class_histogram(const FieldContext& ctx, const EnumerationOptions& options = {});

/// Histogram by direct trace tallies (q^4 work).
ClassHistogram class_histogram_direct(const FieldContext& ctx, const EnumerationOptions& options = {});

WeightDistribution distribution_from_histogram(const ClassHistogram& h, int p);

/// Weight distribution over all q^3 triples (the zero triple at weight 0).
/// Direct counts nonzero codeword symbols; Rank goes through the class histogram.
WeightDistribution enumerate_distribution(const FieldContext& ctx, EnumerationMethod method,
                                          const EnumerationOptions& options = {});

/// Distinct-codeword distribution: every count divided by q^3 / p^k. Throws
/// InconsistencyError when a count is not divisible.
WeightDistribution distinct_codewords(const WeightDistribution& d, int p, int m);

/// Nonzero weights w whose mirror 2 p^{m-1}(p-1) - w is absent. Empty when the
/// distribution is symmetric about p^{m-1}(p-1).
std::vector<std::uint64_t> symmetry_violations(const WeightDistribution& d, int p, int m);

/// sum over all triples of S^k. Direct tallies when q^4 fits the budget, otherwise the
/// class histogram.
EisensteinInteger moment_bruteforce(const FieldContext& ctx, int k, const EnumerationOptions& options = {});

/// sum S^k for k = 1..max_k (max_k <= 6) from a single enumeration; element k-1 holds order k.
std::vector<EisensteinInteger> moments_bruteforce(const FieldContext& ctx, int max_k,
                                                  const EnumerationOptions& options = {});

/// sum_slots count * class_value^k.
EisensteinInteger moment_from_histogram(const ClassHistogram& h, int k);

} // namespace tricode
