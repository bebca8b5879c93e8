#include "doctest.h"
#include "helpers.hpp"

#include "tricode/expsum.hpp"

using namespace tricode;
using tricode::test::field;

TEST_SUITE("expsum") {

TEST_CASE("Eisenstein arithmetic") {
    const EisensteinInteger z = EisensteinInteger::zeta();
    CHECK(z.pow(3) == EisensteinInteger(1));
    CHECK(EisensteinInteger(1) + z + z * z == EisensteinInteger(0));
    CHECK(EisensteinInteger::sqrt_minus_three().pow(2) == EisensteinInteger(-3));
    CHECK(z.conj() == z * z);
    const EisensteinInteger a(5, -2), b(-3, 7);
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a * a.conj() == EisensteinInteger(a.norm()));
    CHECK((a - b) + b == a);
}

TEST_CASE("zero triple sums to q") {
    for (int m : {2, 4, 6}) {
        const FieldContext& f = field(m);
        const Triple zero{};
        CHECK(direct_sum(f, zero) == EisensteinInteger(from_u64(f.q())));
        const ExpSumClass c = classify(direct_sum(f, zero), m);
        CHECK(c.kind == SumKind::ZeroTriple);
        CHECK(class_slot(c) == 0);
    }
}

TEST_CASE("table tallies equal literal tallies") {
    for (int m : {2, 4}) {
        const FieldContext& f = field(m);
        const IndexTables t(f);
        const TraceRows rows(t);
        std::mt19937_64 rng(static_cast<std::uint64_t>(m));
        const int n = m == 2 ? 729 : 300;
        for (int i = 0; i < n; ++i) {
            const Triple tr = m == 2 ? test::triple_at(f, static_cast<std::uint64_t>(i)) : test::random_triple(f, rng);
            const auto lit = trace_tally(f, tr);
            CHECK(lit[0] + lit[1] + lit[2] == f.q());
            CHECK(tally_rows(rows, static_cast<std::uint32_t>(f.to_index(tr.alpha)),
                             static_cast<std::uint32_t>(f.to_index(tr.beta)),
                             static_cast<std::uint32_t>(f.to_index(tr.gamma))) == lit);
            CHECK(direct_sum(f, tr) == tally_to_eisenstein(lit));
        }
    }
}

TEST_CASE("class slots round trip") {
    for (int m : {2, 4, 6, 8}) {
        // The last two slots (j = m) stay empty: rank-0 forms are counted in slot 0.
        for (int s = 0; s < class_slot_count(m) - 2; ++s) {
            const ExpSumClass c = class_from_slot(s, m);
            CHECK(class_slot(c) == s);
            CHECK(classify(class_value(c, m), m) == c);
        }
    }
}

TEST_CASE("classify rejects values outside every family") {
    CHECK_THROWS_AS(classify(EisensteinInteger(5), 4), InconsistencyError);
    CHECK_THROWS_AS(classify(EisensteinInteger(2, 1), 4), InconsistencyError);
    CHECK_THROWS_AS(classify(EisensteinInteger(9), 3), ConfigurationError);
}

TEST_CASE("properties of S over all triples at m=2 and sampled at m=4") {
    for (int m : {2, 4}) {
        const FieldContext& f = field(m);
        std::mt19937_64 rng(40 + static_cast<std::uint64_t>(m));
        const int n = m == 2 ? 729 : 150;
        const auto lambda = f.primitive_power(5);
        for (int i = 0; i < n; ++i) {
            const Triple t = m == 2 ? test::triple_at(f, static_cast<std::uint64_t>(i)) : test::random_triple(f, rng);
            const EisensteinInteger s = direct_sum(f, t);
            const ExpSumClass c = classify(s, m);
            CAPTURE(to_string(c));
            // |S|^2 = q p^j
            if (c.kind != SumKind::ZeroTriple)
                CHECK(s.norm() == ipow(3, static_cast<unsigned long>(m + c.j)));
            // S(2t) is the conjugate.
            const Triple t2{f.scale(2, t.alpha), f.scale(2, t.beta), f.scale(2, t.gamma)};
            CHECK(direct_sum(f, t2) == s.conj());
            // R from the class equals R by summation.
            CHECK(r_from_class(c, 3, m) == r_sum(f, t));
            // Substituting x -> lambda x rescales the coefficients without changing S.
            const Triple ts{f.mul(t.alpha, f.pow(lambda, 2)), f.mul(t.beta, f.pow(lambda, 4)),
                            f.mul(t.gamma, f.pow(lambda, 10))};
            CHECK(direct_sum(f, ts) == s);
        }
    }
}

} // TEST_SUITE
