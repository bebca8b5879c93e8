#include "doctest.h"
#include "helpers.hpp"

#include "tricode/code.hpp"
#include "tricode/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

using namespace tricode;
using tricode::test::field;

namespace {

std::size_t expected_coset_size(int i, int m) {
    int e = i % m;
    if (2 * e > m) e = m - e;
    return (m % 2 == 0 && 2 * e == m) ? static_cast<std::size_t>(m / 2) : static_cast<std::size_t>(m);
}

WeightDistribution dist(std::uint64_t l, std::initializer_list<std::pair<std::uint64_t, long>> entries) {
    WeightDistribution d{l, {}};
    for (const auto& [w, c] : entries) d.counts[w] = c;
    return d;
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string name) : path(std::move(name)) { std::filesystem::remove(path); }
    ~TempFile() {
        std::filesystem::remove(path);
        std::filesystem::remove(path + ".tmp");
    }
};

} // namespace

TEST_SUITE("code") {

TEST_CASE("coset sizes of 1 + p^i") {
    for (int m = 2; m <= 10; ++m) {
        const std::uint64_t n = saturating_pow(3, static_cast<unsigned>(m)) - 1;
        for (int i = 0; i <= 2; ++i) {
            const std::uint64_t s = 1 + saturating_pow(3, static_cast<unsigned>(i));
            CAPTURE(m);
            CAPTURE(s);
            const CycloCoset c = cyclotomic_coset(s % n, 3, m);
            CHECK(c.size() == expected_coset_size(i, m));
            for (auto e : c.elements) CHECK(std::binary_search(c.elements.begin(), c.elements.end(), (3 * e) % n));
        }
    }
}

TEST_CASE("cosets partition the residues") {
    const std::uint64_t n = 80;
    std::set<std::uint64_t> covered;
    std::size_t total = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
        if (covered.count(s)) continue;
        const auto c = cyclotomic_coset(s, 3, 4);
        total += c.size();
        covered.insert(c.elements.begin(), c.elements.end());
    }
    CHECK(total == n);
    CHECK(covered.size() == n);
}

TEST_CASE("code dimension") {
    CHECK(code_dimension(3, 2) == 3);
    CHECK(code_dimension(3, 4) == 10);
    for (int m = 6; m <= 12; m += 2) CHECK(code_dimension(3, m) == 3 * m);
    CHECK_THROWS_AS(cyclotomic_coset(80, 3, 4), ConfigurationError);
}

TEST_CASE("codewords are linear and closed under cyclic shift") {
    for (int m : {2, 4}) {
        const FieldContext& f = field(m);
        std::mt19937_64 rng(300 + static_cast<std::uint64_t>(m));
        const auto s2 = f.primitive_power(2), s4 = f.primitive_power(4), s10 = f.primitive_power(10);
        CHECK(weight_direct(codeword(f, Triple{})) == 0);
        for (int i = 0; i < 30; ++i) {
            const Triple t = test::random_triple(f, rng), u = test::random_triple(f, rng);
            const Codeword ct = codeword(f, t), cu = codeword(f, u);
            REQUIRE(ct.symbols.size() == f.order());
            const Codeword sum = codeword(f, {f.add(t.alpha, u.alpha), f.add(t.beta, u.beta), f.add(t.gamma, u.gamma)});
            for (std::size_t k = 0; k < ct.symbols.size(); ++k) CHECK(sum.symbols[k] == (ct.symbols[k] + cu.symbols[k]) % 3);

            const Codeword sh = codeword(f, {f.mul(t.alpha, s2), f.mul(t.beta, s4), f.mul(t.gamma, s10)});
            for (std::size_t k = 0; k < ct.symbols.size(); ++k)
                CHECK(sh.symbols[k] == ct.symbols[(k + 1) % ct.symbols.size()]);
        }
    }
}

TEST_CASE("three weight formulas agree") {
    const FieldContext& f2 = field(2);
    for (std::uint64_t i = 0; i < 729; ++i) {
        const Triple t = test::triple_at(f2, i);
        const Integer w = weight_direct(codeword(f2, t));
        CHECK(weight_via_expsum(f2, t) == w);
        CHECK(weight_from_class(classify(direct_sum(f2, t), 2), 3, 2) == w);
    }
    const FieldContext& f4 = field(4);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const Triple t = test::random_triple(f4, rng);
        CHECK(weight_via_expsum(f4, t) == weight_direct(codeword(f4, t)));
    }
    CHECK_THROWS_AS(weight_from_r(4, 3, 2), InconsistencyError);
    CHECK_THROWS_AS(weight_via_expsum(field(3), Triple{}), ConfigurationError);
}

TEST_CASE("enumeration at m=2") {
    const WeightDistribution expected = dist(8, {{0, 27}, {4, 324}, {6, 216}, {8, 162}});
    CHECK(enumerate_distribution(field(2), EnumerationMethod::Direct) == expected);
    CHECK(enumerate_distribution(field(2), EnumerationMethod::Rank) == expected);
    CHECK(distinct_codewords(expected, 3, 2) == dist(8, {{0, 1}, {4, 12}, {6, 8}, {8, 6}}));
    CHECK(symmetry_violations(expected, 3, 2).empty());
}

TEST_CASE("class histogram at m=4") {
    const ClassHistogram h = class_histogram(field(4));
    // slot = 1 + 2j + (eps < 0)
    const std::vector<std::uint64_t> expected{9, 189540, 151632, 84240, 84240, 14040, 7020, 360, 360, 0, 0};
    CHECK(h.slots == expected);
    CHECK(class_histogram_direct(field(4)) == h);
    CHECK(enumerate_distribution(field(4), EnumerationMethod::Direct) ==
          enumerate_distribution(field(4), EnumerationMethod::Rank));
}

TEST_CASE("results do not depend on the worker count") {
    EnumerationOptions one, many;
    many.parallelism = 5;
    CHECK(class_histogram(field(4), one) == class_histogram(field(4), many));
    CHECK(enumerate_distribution(field(2), EnumerationMethod::Direct, one) ==
          enumerate_distribution(field(2), EnumerationMethod::Direct, many));
    CHECK(moments_bruteforce(field(2), 6, one) == moments_bruteforce(field(2), 6, many));
}

TEST_CASE("checkpoint resume") {
    const ClassHistogram full = class_histogram(field(4));
    const TempFile ck("tricode_test_checkpoint_m4.json");

    EnumerationOptions opts;
    opts.checkpoint = ck.path;
    opts.checkpoint_interval = 81 * 81 * 10;  // every ten alpha values
    int calls = 0;
    opts.progress = [&](std::uint64_t, std::uint64_t) {
        if (++calls == 3) throw std::runtime_error("interrupted");
    };
    CHECK_THROWS_AS(class_histogram(field(4), opts), std::runtime_error);
    REQUIRE(std::filesystem::exists(ck.path));

    std::uint64_t resumed_from = 0;
    opts.progress = [&](std::uint64_t done, std::uint64_t) {
        if (!resumed_from) resumed_from = done;
    };
    CHECK(class_histogram(field(4), opts) == full);
    CHECK(resumed_from > 30);

    SUBCASE("a checkpoint for another field is refused") {
        EnumerationOptions other;
        other.checkpoint = ck.path;
        CHECK_THROWS_AS(class_histogram(field(2), other), IntegrityError);
    }
    SUBCASE("a corrupt checkpoint is refused") {
        std::ofstream(ck.path) << "{not json";
        CHECK_THROWS_AS(class_histogram(field(4), opts), IntegrityError);
    }
}

TEST_CASE("moments by direct tallies at m=2") {
    const auto mom = moments_bruteforce(field(2), 5);
    const std::vector<long> expected{729, 729, 24057, 373977, 1633689};
    for (std::size_t k = 0; k < 5; ++k) CHECK(mom[k] == EisensteinInteger(expected[k]));
    CHECK(moment_bruteforce(field(2), 3) == mom[2]);
    CHECK(moment_from_histogram(class_histogram(field(2)), 4) == mom[3]);
    CHECK_THROWS_AS(moment_bruteforce(field(2), 7), ConfigurationError);
}

TEST_CASE("enumeration preconditions") {
    EnumerationOptions tiny;
    tiny.budget = 100;
    CHECK_THROWS_AS(class_histogram(field(2), tiny), BudgetExceeded);
    CHECK_THROWS_AS(class_histogram_direct(field(2), tiny), BudgetExceeded);
    CHECK_THROWS_AS(class_histogram(field(3)), ConfigurationError);
}

TEST_CASE("symmetry violations are reported") {
    const auto bad = symmetry_violations(dist(8, {{0, 1}, {4, 3}, {6, 2}}), 3, 2);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == 4);
}

TEST_CASE("distribution serialization") {
    WeightDistribution d = dist(728, {{0, 1}, {486, 124245576}});
    d.counts[648] = Integer("123456789012345678901234567890");
    const std::string j = to_json(d);
    CHECK(j == R"({"l":728,"counts":{"0":"1","486":"124245576","648":"123456789012345678901234567890"},)"
               R"("total":"123456789012345678901358813467"})");
    CHECK(distribution_from_json(j) == d);
    CHECK(to_csv(dist(8, {{0, 1}, {4, 12}})) == "weight,count\n0,1\n4,12\n");
    CHECK_THROWS_AS(distribution_from_json("{\"l\":8}"), ConfigurationError);
    CHECK_THROWS_AS(distribution_from_json("{\"l\":8,\"counts\":{\"x\":\"1\"}}"), ConfigurationError);
    CHECK_THROWS_AS(distribution_from_json("{\"l\":8,\"counts\":{\"1\":\"1\"},\"total\":\"2\"}"), ConfigurationError);
}

} // TEST_SUITE
