#include "doctest.h"
#include "helpers.hpp"

#include "tricode/counting.hpp"

#include <map>
#include <set>

using namespace tricode;
using tricode::test::field;

TEST_SUITE("counting") {

TEST_CASE("brute-force counts at m=2") {
    const std::map<SystemId, unsigned long> expected{
        {SystemId::SYS2_HOM, 1},         {SystemId::SYS3_AFF, 4},       {SystemId::SYS3_HOM, 33},
        {SystemId::SYS4_AFF, 60},        {SystemId::SYS4_HOM, 513},     {SystemId::SYS5_HOM, 2241},
        {SystemId::SYS6_HOM, 14337},     {SystemId::DUAL_W3_SAME, 4},   {SystemId::DUAL_W3_MIX, 2},
        {SystemId::DUAL_W4_PAIR, 33},    {SystemId::DUAL_W4_ONEFLIP, 81}, {SystemId::DUAL_W4_TWOFLIP, 513},
    };
    for (SystemId id : kAllSystems) {
        CAPTURE(to_string(id));
        CHECK(count_bruteforce(id, field(2)).count == expected.at(id));
    }
}

TEST_CASE("closed forms agree with brute force") {
    for (int m : {2, 4}) {
        for (SystemId id : kAllSystems) {
            if (!has_closed_form(id)) continue;
            CAPTURE(m);
            CAPTURE(to_string(id));
            CHECK(closed_form_count(id, 3, m).count == count_bruteforce(id, field(m)).count);
        }
    }
}

TEST_CASE("odd m: closed forms still hold where defined") {
    for (SystemId id : {SystemId::SYS2_HOM, SystemId::SYS3_AFF, SystemId::SYS3_HOM}) {
        CAPTURE(to_string(id));
        CHECK(closed_form_count(id, 3, 3).count == count_bruteforce(id, field(3)).count);
    }
}

TEST_CASE("closed-form preconditions") {
    CHECK_THROWS_AS(closed_form_count(SystemId::SYS6_HOM, 3, 2), ConfigurationError);
    CHECK_THROWS_AS(closed_form_count(SystemId::SYS4_HOM, 5, 2), HypothesisError);
    CHECK_NOTHROW(closed_form_count(SystemId::SYS3_HOM, 5, 2));
}

TEST_CASE("budget refusal is exact") {
    // SYS4_HOM at m=2 needs q^4 = 6561 evaluations.
    CHECK_THROWS_AS(count_bruteforce(SystemId::SYS4_HOM, field(2), {6560, 1}), BudgetExceeded);
    CHECK(count_bruteforce(SystemId::SYS4_HOM, field(2), {6561, 1}).count == 513);
    try {
        count_bruteforce(SystemId::SYS6_HOM, field(4), {1000, 1});
        FAIL("expected refusal");
    } catch (const BudgetExceeded& e) {
        CHECK(e.required() == 282429536481ULL);
        CHECK(e.budget() == 1000);
    }
}

TEST_CASE("parallel counts equal serial counts") {
    for (unsigned w : {2U, 3U, 8U}) {
        CHECK(count_bruteforce(SystemId::SYS5_HOM, field(2), {kDefaultBudget, w}).count == 2241);
        CHECK(count_bruteforce(SystemId::SYS4_HOM, field(4), {kDefaultBudget, w}).count ==
              count_bruteforce(SystemId::SYS4_HOM, field(4), {kDefaultBudget, 1}).count);
    }
}

TEST_CASE("system names round trip") {
    for (SystemId id : kAllSystems) CHECK(system_from_string(to_string(id)) == id);
    CHECK_THROWS_AS(system_from_string("SYS7_HOM"), ConfigurationError);
    CHECK(describe_system(SystemId::SYS2_HOM, 3).front() == "x^2+y^2=0");
    CHECK(describe_system(SystemId::SYS3_AFF, 3).size() == 3);
}

TEST_CASE("constraint parser") {
    const std::vector<std::string> vars{"x", "y", "z", "w"};
    const FieldContext& f = field(2);
    const IndexTables t(f);

    const Constraint c = parse_constraint("y^2-yz+z^2+w^2", vars);
    CHECK(c.terms.size() == 4);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        std::array<std::uint32_t, 4> v{};
        for (auto& e : v) e = static_cast<std::uint32_t>(rng() % 9);
        const auto y = f.from_index(v[1]), z = f.from_index(v[2]), w = f.from_index(v[3]);
        const auto expect = f.add(f.add(f.sub(f.mul(y, y), f.mul(y, z)), f.mul(z, z)), f.mul(w, w));
        CHECK(evaluate_constraint(t, c, v.data()) == f.to_index(expect));
    }
    // Explicit '*' and coefficients are the same polynomial.
    const Constraint d = parse_constraint("y^2 + 2*y*z + z^2 + w^2", vars);
    for (std::uint32_t a = 0; a < 9; ++a) {
        const std::array<std::uint32_t, 4> v{0, a, (a * 5) % 9, (a + 4) % 9};
        CHECK(evaluate_constraint(t, c, v.data()) == evaluate_constraint(t, d, v.data()));
    }
    CHECK_THROWS_AS(parse_constraint("x+q", vars), ConfigurationError);
    CHECK_THROWS_AS(parse_constraint("x^", vars), ConfigurationError);
    CHECK_THROWS_AS(parse_constraint("x++y", vars), ConfigurationError);
    CHECK_THROWS_AS(parse_constraint("", vars), ConfigurationError);
}

TEST_CASE("component tables") {
    CHECK(variety_table(TableId::TABLE_I).blocks.size() == 40);
    CHECK(variety_table(TableId::TABLE_II).blocks.size() == 10);
    CHECK(variety_table(TableId::TABLE_III).blocks.size() == 8);
    CHECK(variety_table(TableId::TABLE_I).system == SystemId::SYS5_HOM);
    for (TableId id : kAllTables) CHECK(table_from_string(to_string(id)) == id);
    const std::string dump = dump_tables();
    CHECK(dump.find("TABLE_I (SYS5_HOM") != std::string::npos);
    CHECK(dump.find("TABLE_III") != std::string::npos);
}

TEST_CASE("component unions match the systems") {
    for (TableId id : kAllTables) {
        const VarietyTable& t = variety_table(id);
        CAPTURE(to_string(id));
        CHECK(variety_count(id, field(2)).count == count_bruteforce(t.system, field(2)).count);
    }
    for (TableId id : {TableId::TABLE_II, TableId::TABLE_III}) {
        const VarietyTable& t = variety_table(id);
        CAPTURE(to_string(id));
        CHECK(variety_count(id, field(4)).count == count_bruteforce(t.system, field(4)).count);
    }
}

TEST_CASE("circle parametrization") {
    for (int m : {2, 3}) {
        const FieldContext& f = field(m);
        const QuadraticExtension ext(f);
        const FieldContext& g = ext.field();
        for (std::uint64_t i = 1; i < f.q(); ++i) {
            const auto a = f.from_index(i);
            const auto pts = circle_solutions(ext, a);
            CHECK(pts.size() == g.q() - 1);
            std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
            for (const auto& [x, y] : pts) {
                CHECK(g.add(g.mul(x, x), g.mul(y, y)) == ext.embed(a));
                seen.emplace(g.to_index(x), g.to_index(y));
            }
            CHECK(seen.size() == g.q() - 1);
        }
    }
}

} // TEST_SUITE
