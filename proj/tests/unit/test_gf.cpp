#include "doctest.h"
#include "helpers.hpp"

#include "tricode/code.hpp"
#include "tricode/errors.hpp"
#include "tricode/gf.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

using namespace tricode;
using tricode::test::field;

namespace {

// Sets TRICODE_MODULUS_TABLE for the lifetime of the object.
struct ModulusOverride {
    std::string path;
    explicit ModulusOverride(const std::string& contents) {
        path = "tricode_modulus_override_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt";
        std::ofstream(path) << contents;
        setenv(kModulusTableEnv, path.c_str(), 1);
    }
    ~ModulusOverride() {
        unsetenv(kModulusTableEnv);
        std::remove(path.c_str());
    }
};

} // namespace

TEST_SUITE("gf") {

TEST_CASE("field axioms hold exhaustively at m=2") {
    const FieldContext& f = field(2);
    REQUIRE(f.q() == 9);
    for (std::uint64_t i = 0; i < 9; ++i) {
        const auto a = f.from_index(i);
        CHECK(f.to_index(a) == i);
        CHECK(f.add(a, f.zero()) == a);
        CHECK(f.mul(a, f.one()) == a);
        CHECK(f.add(a, f.neg(a)) == f.zero());
        if (i) CHECK(f.mul(a, f.inverse(a)) == f.one());
        for (std::uint64_t j = 0; j < 9; ++j) {
            const auto b = f.from_index(j);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.sub(f.add(a, b), b) == a);
            for (std::uint64_t k = 0; k < 9; ++k) {
                const auto c = f.from_index(k);
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

TEST_CASE("inverse of zero is rejected") {
    CHECK_THROWS_AS(field(2).inverse(field(2).zero()), ConfigurationError);
}

TEST_CASE("pi has order q-1") {
    for (int m = 1; m <= 8; ++m) {
        const FieldContext& f = field(m);
        CHECK(f.pow(f.pi(), f.order()) == f.one());
        for (auto r : prime_factors(f.order())) CHECK(f.pow(f.pi(), f.order() / r) != f.one());
        // Every nonzero element appears once among the powers.
        if (m <= 6) {
            std::set<std::uint64_t> seen;
            for (std::uint64_t i = 0; i < f.order(); ++i) seen.insert(f.to_index(f.primitive_power(static_cast<std::int64_t>(i))));
            CHECK(seen.size() == f.order());
            CHECK(seen.count(0) == 0);
        }
    }
}

TEST_CASE("every built-in modulus is primitive") {
    for (int d = 1; d <= kMaxDegree; ++d) {
        CAPTURE(d);
        const auto mod = builtin_modulus(3, d);
        REQUIRE(mod.size() == static_cast<std::size_t>(d + 1));
        CHECK(mod.back() == 1);
        CHECK_NOTHROW(FieldContext::from_modulus(3, mod));
    }
}

TEST_CASE("trace matches its definition") {
    for (int m : {2, 4}) {
        const FieldContext& f = field(m);
        for (std::uint64_t i = 0; i < f.q(); ++i) {
            const auto a = f.from_index(i);
            CHECK(f.trace(a) == trace_by_definition(f, a));
        }
    }
    std::mt19937_64 rng(6);
    const FieldContext& f6 = field(6);
    for (int i = 0; i < 200; ++i) {
        const auto a = test::random_element(f6, rng);
        CHECK(f6.trace(a) == trace_by_definition(f6, a));
    }
}

TEST_CASE("trace is linear and Frobenius invariant") {
    const FieldContext& f = field(4);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        const auto a = test::random_element(f, rng), b = test::random_element(f, rng);
        CHECK(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % 3);
        CHECK(f.trace(f.scale(2, a)) == (2 * f.trace(a)) % 3);
        CHECK(f.trace(f.frobenius(a)) == f.trace(a));
    }
    // Trace is onto F_3 with equal fibres.
    std::array<int, 3> fibres{};
    for (std::uint64_t i = 0; i < f.q(); ++i) ++fibres[static_cast<std::size_t>(f.trace(f.from_index(i)))];
    CHECK(fibres[0] == 27);
    CHECK(fibres[1] == 27);
    CHECK(fibres[2] == 27);
}

TEST_CASE("square roots") {
    const FieldContext& f = field(4);
    int squares = 0;
    for (std::uint64_t i = 0; i < f.q(); ++i) {
        const auto a = f.from_index(i);
        const auto r = f.sqrt(a);
        if (r) {
            ++squares;
            CHECK(f.mul(*r, *r) == a);
        }
    }
    CHECK(squares == 41);  // zero plus (q-1)/2
}

TEST_CASE("index tables agree with field arithmetic") {
    for (int m : {2, 4}) {
        const FieldContext& f = field(m);
        const IndexTables t(f);
        for (std::uint32_t a = 0; a < t.q(); ++a) {
            CHECK(t.trace(a) == f.trace(f.from_index(a)));
            CHECK(t.unpack(t.packed(a)) == a);
            CHECK(t.neg(a) == f.to_index(f.neg(f.from_index(a))));
            if (a) CHECK(t.exp(t.log(a)) == a);
            for (std::uint32_t b = 0; b < t.q(); b += (m == 2 ? 1 : 7)) {
                CHECK(t.mul(a, b) == f.to_index(f.mul(f.from_index(a), f.from_index(b))));
                CHECK(t.add(a, b) == f.to_index(f.add(f.from_index(a), f.from_index(b))));
            }
            CHECK(t.pow(a, 10) == f.to_index(f.pow(f.from_index(a), 10)));
        }
    }
}

TEST_CASE("packed lanes add mod 3 independently") {
    for (std::uint64_t a = 0; a < 81; ++a)
        for (std::uint64_t b = 0; b < 81; ++b) {
            std::uint64_t pa = 0, pb = 0, expect = 0, expect_neg = 0;
            std::uint64_t x = a, y = b;
            for (int k = 0; k < 4; ++k, x /= 3, y /= 3) {
                pa |= (x % 3) << (3 * k);
                pb |= (y % 3) << (3 * k);
                expect |= ((x % 3 + y % 3) % 3) << (3 * k);
                expect_neg |= ((3 - x % 3) % 3) << (3 * k);
            }
            CHECK(packed3::add(pa, pb) == expect);
            CHECK(packed3::neg(pa) == expect_neg);
        }
}

TEST_CASE("quadratic extension embedding is a ring homomorphism") {
    for (int m : {2, 3}) {
        const FieldContext& f = field(m);
        const QuadraticExtension ext(f);
        const FieldContext& g = ext.field();
        CHECK(g.m() == 2 * m);
        CHECK(ext.embed(f.one()) == g.one());
        for (std::uint64_t i = 0; i < f.q(); ++i)
            for (std::uint64_t j = 0; j < f.q(); ++j) {
                const auto a = f.from_index(i), b = f.from_index(j);
                CHECK(ext.embed(f.add(a, b)) == g.add(ext.embed(a), ext.embed(b)));
                CHECK(ext.embed(f.mul(a, b)) == g.mul(ext.embed(a), ext.embed(b)));
            }
        // The image is exactly the fixed field of x -> x^q.
        for (std::uint64_t i = 0; i < f.q(); ++i) {
            const auto e = ext.embed(f.from_index(i));
            CHECK(g.pow(e, f.q()) == e);
        }
    }
}

TEST_CASE("unsupported parameters are configuration errors") {
    CHECK_THROWS_AS(FieldContext::create(5, 2), ConfigurationError);
    CHECK_THROWS_AS(FieldContext::create(3, 0), ConfigurationError);
    CHECK_THROWS_AS(FieldContext::create(3, kMaxBaseDegree + 1), ConfigurationError);
    CHECK_THROWS_AS(builtin_modulus(3, kMaxDegree + 1), ConfigurationError);
}

TEST_CASE("non-primitive moduli are integrity errors") {
    CHECK_THROWS_AS(FieldContext::from_modulus(3, {1, 0, 1}), IntegrityError);     // x^2+1: x has order 4
    CHECK_THROWS_AS(FieldContext::from_modulus(3, {1, 0, 0, 1}), IntegrityError);  // (x+1)^3
    CHECK_THROWS_AS(FieldContext::from_modulus(3, {0, 1, 1}), IntegrityError);     // root 0
}

TEST_CASE("modulus table override") {
    SUBCASE("replaces one degree") {
        const ModulusOverride o("# alternative quadratic\n2, 2, 1\n");
        const auto f = FieldContext::create(3, 2);
        CHECK(std::vector<std::uint8_t>(f.modulus().begin(), f.modulus().end()) == std::vector<std::uint8_t>{2, 2, 1});
        // Other degrees fall back to the built-in table.
        const auto g = FieldContext::create(3, 4);
        CHECK(std::vector<std::uint8_t>(g.modulus().begin(), g.modulus().end()) == builtin_modulus(3, 4));
    }
    SUBCASE("malformed file") {
        const ModulusOverride o("2 x 1\n");
        CHECK_THROWS_AS(FieldContext::create(3, 2), IntegrityError);
    }
    SUBCASE("non-primitive entry") {
        const ModulusOverride o("1 0 1\n");
        CHECK_THROWS_AS(FieldContext::create(3, 2), IntegrityError);
    }
}

TEST_CASE("class histogram does not depend on the modulus") {
    const ClassHistogram a = class_histogram(field(2));
    const ModulusOverride o("2 2 1\n");
    const auto other = FieldContext::create(3, 2);
    CHECK(class_histogram(other) == a);
    CHECK(class_histogram_direct(other) == a);
}

} // TEST_SUITE
