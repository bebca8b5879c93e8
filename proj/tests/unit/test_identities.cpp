#include "doctest.h"
#include "helpers.hpp"

#include "tricode/identities.hpp"

using namespace tricode;
using tricode::test::field;

namespace {

WeightDistribution m6_table() {
    WeightDistribution d{728, {}};
    d.counts = {{0, 1},           {324, 4732},      {432, 8591310}, {468, 128432304},
                {486, 124245576}, {504, 119277522}, {540, 6866496}, {648, 2548}};
    return d;
}

std::array<Integer, 5> low_of(const WeightDistribution& d) {
    return {d.at(0), d.at(1), d.at(2), d.at(3), d.at(4)};
}

Integer binom(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

TEST_SUITE("identities") {

TEST_CASE("weight levels") {
    const WeightLevels w = weight_levels(3, 6);
    CHECK(w.r00 == 486);
    CHECK(w.r0 == 18);
    CHECK(w.r2 == 54);
    CHECK(w.r4 == 162);
}

TEST_CASE("distribution at m=6 from the identity system") {
    const DualLowWeights dual = dual_low_weights_closed(3, 6);
    CHECK(dual.within_hypothesis);
    CHECK(dual.counts == std::array<Integer, 5>{1, 0, 728, 0, 616616});
    const IdentityConstants k = constants(3, 6, dual.counts[2], dual.counts[4]);
    const FrequencyCounts f = solve_frequencies(k, 3, 6);
    CHECK(frequencies_closed_form(k, 3, 6) == frequencies_linear_solve(k, 3, 6));
    CHECK(f.total() == ipow(3, 18) - 1);
    CHECK(distribution_from_frequencies(f, 3, 6) == m6_table());
    CHECK(theorem_table(3, 6) == m6_table());
    CHECK(theorem_table(3, 6).total() == ipow(3, 18));
}

TEST_CASE("solver agreement beyond m=6") {
    for (int m : {6, 8, 10, 12}) {
        CAPTURE(m);
        const DualLowWeights dual = dual_low_weights_closed(3, m);
        const IdentityConstants k = constants(3, m, dual.counts[2], dual.counts[4]);
        const FrequencyCounts a = frequencies_closed_form(k, 3, m);
        CHECK(a == frequencies_linear_solve(k, 3, m));
        for (const auto& v : a.as_array()) CHECK(v >= 0);
        CHECK(a.two_n1 % 2 == 0);
        CHECK(a.two_n3 % 2 == 0);
        CHECK(a.total() == ipow(3, 3UL * static_cast<unsigned long>(m)) - 1);
        // The distribution is a linear-code distribution whose dual starts as predicted.
        // (The full transform grows quadratically in q; m = 8 is the largest cheap case.)
        if (m > 8) continue;
        const WeightDistribution d = theorem_table(3, m);
        const auto l = saturating_pow(3, static_cast<unsigned>(m)) - 1;
        CHECK(low_of(macwilliams_transform(d, l, 3 * m, 3)) == dual.counts);
    }
}

TEST_CASE("solver rejects inconsistent constants") {
    // A wrong A'_4 already fails the exact divisions that produce the constants.
    CHECK_THROWS_AS(solve_frequencies(constants(3, 6, 728, 616617), 3, 6), InconsistencyError);
}

TEST_CASE("theorem range") {
    CHECK_THROWS_AS(theorem_table(3, 4), HypothesisError);
    CHECK_THROWS_AS(theorem_table(3, 7), HypothesisError);
    CHECK_THROWS_AS(theorem_table(5, 6), HypothesisError);
    CHECK_THROWS_AS(constants(3, 4, 80, 7280), HypothesisError);
    CHECK_FALSE(dual_low_weights_closed(3, 4).within_hypothesis);
}

TEST_CASE("MacWilliams transform") {
    const WeightDistribution a = m6_table();
    const WeightDistribution dual = macwilliams_transform(a, 728, 18, 3);
    CHECK(low_of(dual) == std::array<Integer, 5>{1, 0, 728, 0, 616616});
    CHECK(dual.total() == ipow(3, 728 - 18));
    CHECK(macwilliams_transform(dual, 728, 728 - 18, 3) == a);

    SUBCASE("zero code has the whole space as dual") {
        WeightDistribution zero{10, {{0, 1}}};
        const WeightDistribution all = macwilliams_transform(zero, 10, 0, 3);
        for (unsigned j = 0; j <= 10; ++j) CHECK(all.at(j) == binom(10, j) * ipow(2, j));
    }
    SUBCASE("non-code input") {
        // Total 9 but the dual counts are not integers.
        WeightDistribution bad{8, {{0, 1}, {4, 8}}};
        CHECK_THROWS_AS(macwilliams_transform(bad, 8, 2, 3), InconsistencyError);
        bad.counts[4] = 1;  // total 2 is not a power of 3
        CHECK_THROWS_AS(macwilliams_transform(bad, 8, 1, 3), InconsistencyError);
    }
}

TEST_CASE("power moments") {
    const WeightDistribution a = m6_table();
    const auto checks = power_moments(a, 728, 18, 3, {1, 0, 728, 0, 616616});
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.match);
        CHECK(c.lhs == c.rhs);
    }
    CHECK(checks[0].lhs == 2 * 728 * ipow(3, 17));

    // The zero code needs the A'_1 and A'_3 terms.
    WeightDistribution zero{12, {{0, 1}}};
    const WeightDistribution all = macwilliams_transform(zero, 12, 0, 3);
    for (const auto& c : power_moments(zero, 12, 0, 3, low_of(all))) CHECK(c.match);

    // A wrong dual count breaks the fourth identity only.
    const auto off = power_moments(a, 728, 18, 3, {1, 0, 728, 0, 616615});
    CHECK(off[0].match);
    CHECK(off[1].match);
    CHECK_FALSE(off[3].match);
}

TEST_CASE("dual low weights by search") {
    CHECK(dual_low_weights_bruteforce(field(2)) == std::array<Integer, 5>{1, 0, 8, 0, 56});
    const auto m4 = dual_low_weights_bruteforce(field(4));
    CHECK(m4 == std::array<Integer, 5>{1, 0, 80, 0, 7280});
    const WeightDistribution d4 =
        distinct_codewords(enumerate_distribution(field(4), EnumerationMethod::Rank), 3, 4);
    CHECK(low_of(macwilliams_transform(d4, 80, code_dimension(3, 4), 3)) == m4);
    CHECK_THROWS_AS(dual_low_weights_bruteforce(field(4), 1000), BudgetExceeded);
}

TEST_CASE("sixth moment from frequencies") {
    for (int m : {2, 4}) {
        const ClassHistogram h = class_histogram(field(m));
        const FrequencyCounts f = frequencies_from_histogram(h);
        CHECK(f.total() + from_u64(h.slots[0]) == ipow(3, 3UL * static_cast<unsigned long>(m)));
        const Integer m6 = m6_from_frequencies(f, 3, m, from_u64(h.slots[0]));
        CHECK(EisensteinInteger(m6 * ipow(3, 3UL * static_cast<unsigned long>(m))) == moment_from_histogram(h, 6));
    }
    CHECK(m6_from_frequencies(frequencies_from_histogram(class_histogram(field(2))), 3, 2, 27) == 14337);
}

} // TEST_SUITE
