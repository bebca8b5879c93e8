#pragma once

#include "tricode/code.hpp"
#include "tricode/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace tricode {

/// R00 = p^{m-1}(p-1) and R_j = (p-1) p^{(m+j)/2 - 1} for j = 0, 2, 4.
struct WeightLevels {
    Integer r00, r0, r2, r4;
};

WeightLevels weight_levels(int p, int m);

/// Dual distribution: coefficient of y^j in sum_i A_i (1+(p-1)y)^{l-i} (1-y)^i, divided by
/// p^{k_dim}. Throws InconsistencyError ("not a linear-code distribution") on a
/// non-integral or negative result.
WeightDistribution macwilliams_transform(const WeightDistribution& a, std::uint64_t l, int k_dim, int p);

struct IdentityCheck {
    std::string name;
    Integer lhs;
    Integer rhs;
    bool match = false;
};

/// Power-moment identities for r = 1..4:
///   sum_i (i)_r A_i = p^{k-r} sum_{j<=r} (-1)^j C(r,j) j! (l-j)_{r-j} (p-1)^{r-j} A'_j,
/// with (x)_r the falling factorial. `dual_low` holds A'_0..A'_4.
std::vector<IdentityCheck> power_moments(const WeightDistribution& a, std::uint64_t l, int k_dim, int p,
                                         const std::array<Integer, 5>& dual_low);

struct DualLowWeights {
    std::array<Integer, 5> counts;  // A'_0 .. A'_4
    bool within_hypothesis = false; // p = 3, m even >= 6
};

/// A'_0 = 1, A'_1 = 0, A'_2 = q - 1, A'_3 = 0,
/// A'_4 = (q-1)(2q-p-3)/3 + (q-1)(q-3)/2.
DualLowWeights dual_low_weights_closed(int p, int m);

/// A'_0..A'_4 by searching all supports of size <= 4 and all nonzero values on them.
std::array<Integer, 5> dual_low_weights_bruteforce(const FieldContext& ctx, std::uint64_t budget = kDefaultBudget);

struct IdentityConstants {
    Integer c1, c2, c3, c4, c5, c6, a, b;
};

/// Requires m even >= 6. A2p and A4p are the dual weight-2 and weight-4 counts.
IdentityConstants constants(int p, int m, const Integer& a2p, const Integer& a4p);

/// n_{1,j}, n_{-1,j} for j = 0, 2, 4 and 2 n_1, 2 n_3.
struct FrequencyCounts {
    Integer n_p0, n_m0, n_p2, n_m2, n_p4, n_m4, two_n1, two_n3;

    Integer total() const { return n_p0 + n_m0 + n_p2 + n_m2 + n_p4 + n_m4 + two_n1 + two_n3; }
    std::array<Integer, 8> as_array() const { return {n_p0, n_m0, n_p2, n_m2, n_p4, n_m4, two_n1, two_n3}; }
    friend bool operator==(const FrequencyCounts&, const FrequencyCounts&) = default;
};

std::string to_string(const FrequencyCounts& f);

/// The printed solution of the eight-equation system.
FrequencyCounts frequencies_closed_form(const IdentityConstants& k, int p, int m);
/// Exact Gaussian elimination over Q, natural pivot order.
FrequencyCounts frequencies_linear_solve(const IdentityConstants& k, int p, int m);
/// Both of the above; throws InconsistencyError (with both candidates) unless they agree and
/// the counts are nonnegative with even 2n_1, 2n_3.
FrequencyCounts solve_frequencies(const IdentityConstants& k, int p, int m);

/// Frequencies read off an exhaustive class histogram (any even m). Throws
/// InconsistencyError if a class with j > 4 occurs.
FrequencyCounts frequencies_from_histogram(const ClassHistogram& h);

/// n10 + n-10 + p^6(n12 + n-12) + p^12(n14 + n-14) - p^3 2n1 - p^9 2n3 + z p^{3m}, where z is
/// the number of triples with S = q. z = 1 whenever the code has dimension 3m; below that
/// the whole kernel of (alpha, beta, gamma) -> codeword contributes.
Integer m6_from_frequencies(const FrequencyCounts& f, int p, int m, const Integer& zero_triples = 1);

/// Seven nonzero weights R00, R00 -/+ R_j plus the zero word. Throws HypothesisError
/// unless p = 3 and m is even and >= 6.
WeightDistribution theorem_table(int p, int m);

/// Weight map of the frequencies: A_{R00} = 2n1 + 2n3, A_{R00-Rj} = n_{1,j}, A_{R00+Rj} = n_{-1,j}.
WeightDistribution distribution_from_frequencies(const FrequencyCounts& f, int p, int m);

} // namespace tricode
