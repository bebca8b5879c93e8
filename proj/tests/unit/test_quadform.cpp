#include "doctest.h"
#include "helpers.hpp"

#include "tricode/quadform.hpp"

using namespace tricode;
using tricode::test::field;

namespace {

SymmetricMatrix random_symmetric(int n, std::mt19937_64& rng, int zero_bias = 0) {
    std::uniform_int_distribution<int> d(0, 2 + zero_bias);
    SymmetricMatrix h(n, 3);
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            const int v = d(rng);
            h.set(r, c, v > 2 ? 0 : v);
        }
    return h;
}

// Literal sum over F_3^n of zeta^{X H X^T + A X^T}.
EisensteinInteger brute_form_sum(const SymmetricMatrix& h, const std::vector<std::uint8_t>& a) {
    const int n = h.n();
    std::array<std::int64_t, 3> tally{};
    std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        int lin = 0;
        for (int i = 0; i < n; ++i, v /= 3) {
            x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v % 3);
            lin += a.empty() ? 0 : a[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        }
        ++tally[static_cast<std::size_t>((evaluate_form(h, x) + lin) % 3)];
    }
    return EisensteinInteger(tally[0] - tally[2], tally[1] - tally[2]);
}

} // namespace

TEST_SUITE("quadform") {

TEST_CASE("form matrix reproduces the trace of f") {
    for (int m : {2, 4}) {
        const FieldContext& f = field(m);
        std::mt19937_64 rng(100 + static_cast<std::uint64_t>(m));
        for (int i = 0; i < 40; ++i) {
            const Triple t = test::random_triple(f, rng);
            const SymmetricMatrix h = build_form(f, t);
            for (std::uint64_t x = 0; x < f.q(); ++x) {
                const auto e = f.from_index(x);
                CHECK(evaluate_form(h, coordinates(f, e)) == f.trace(evaluate_f(f, t, e)));
            }
        }
    }
}

TEST_CASE("form tables add up to the form matrix") {
    for (int m : {2, 4, 6}) {
        const FieldContext& f = field(m);
        const FormTables tables(f);
        std::mt19937_64 rng(200 + static_cast<std::uint64_t>(m));
        const int n = m == 2 ? 729 : 200;
        for (int i = 0; i < n; ++i) {
            const Triple t = m == 2 ? test::triple_at(f, static_cast<std::uint64_t>(i)) : test::random_triple(f, rng);
            const SymmetricMatrix h = build_form(f, t);
            const auto* a = tables.matrix(0, static_cast<std::uint32_t>(f.to_index(t.alpha)));
            const auto* b = tables.matrix(1, static_cast<std::uint32_t>(f.to_index(t.beta)));
            const auto* c = tables.matrix(2, static_cast<std::uint32_t>(f.to_index(t.gamma)));
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s) {
                    const auto k = static_cast<std::size_t>(r * m + s);
                    CHECK((a[k] + b[k] + c[k]) % 3 == h.at(r, s));
                }
        }
    }
}

TEST_CASE("diagonalization is a congruence") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n)
        for (int i = 0; i < 60; ++i) {
            // Biased towards zeros so zero pivots occur often.
            const SymmetricMatrix h = random_symmetric(n, rng, i % 3 == 0 ? 4 : 0);
            const Diagonalization dg = diagonalize(h);
            CHECK(dg.d.matrix().is_diagonal());
            CHECK(congruence(dg.p, h) == dg.d);
            CHECK(rank(dg.p) == n);
            CHECK(rank(dg.d) == rank(h));
        }
}

TEST_CASE("rank is invariant under congruence") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const SymmetricMatrix h = random_symmetric(5, rng);
        Matrix p(5, 3);
        do {
            for (int r = 0; r < 5; ++r)
                for (int c = 0; c < 5; ++c) p.set(r, c, static_cast<long>(rng() % 3));
        } while (rank(p) < 5);
        CHECK(rank(congruence(p, h)) == rank(h));
    }
}

TEST_CASE("Legendre symbol mod 3") {
    CHECK(legendre(0, 3) == 0);
    CHECK(legendre(1, 3) == 1);
    CHECK(legendre(2, 3) == -1);
    CHECK(legendre(-1, 3) == -1);
    CHECK(legendre(4, 3) == 1);
}

TEST_CASE("Gauss sum equals the literal sum") {
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 6; ++n)
        for (int i = 0; i < 40; ++i) {
            const SymmetricMatrix h = random_symmetric(n, rng, i % 2 ? 3 : 0);
            CHECK(gauss_sum(h) == brute_form_sum(h, {}));
        }
}

TEST_CASE("affine sum equals the literal sum") {
    std::mt19937_64 rng(10);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 60; ++i) {
            const SymmetricMatrix h = random_symmetric(n, rng, i % 2 ? 3 : 0);
            std::vector<std::uint8_t> a(static_cast<std::size_t>(n));
            for (auto& v : a) v = static_cast<std::uint8_t>(rng() % 3);
            CHECK(affine_exponential_sum(h, a) == brute_form_sum(h, a));
        }
}

TEST_CASE("fast classifier agrees with the Legendre classification") {
    std::mt19937_64 rng(11);
    for (int n : {2, 4, 6, 8}) {
        for (int i = 0; i < 300; ++i) {
            const SymmetricMatrix h = random_symmetric(n, rng, i % 3);
            std::vector<std::uint8_t> buf(static_cast<std::size_t>(n * n));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) buf[static_cast<std::size_t>(r * n + c)] = h.at(r, c);
            CHECK(classify_ternary_in_place(buf.data(), n) == class_slot(classify_via_legendre(h, n)));
        }
    }
}

TEST_CASE("Legendre classification equals the direct classification at m=2") {
    const FieldContext& f = field(2);
    for (std::uint64_t i = 0; i < 729; ++i) {
        const Triple t = test::triple_at(f, i);
        CHECK(classify_via_legendre(build_form(f, t), 2) == classify(direct_sum(f, t), 2));
    }
}

TEST_CASE("matrix input validation") {
    Matrix m(2, 3);
    m.set(0, 1, 1);
    CHECK_THROWS_AS(SymmetricMatrix{m}, ConfigurationError);
    CHECK_THROWS_AS(classify_via_legendre(SymmetricMatrix(3, 3), 3), ConfigurationError);
    CHECK_THROWS_AS(classify_via_legendre(SymmetricMatrix(2, 3), 4), ConfigurationError);
    CHECK_THROWS_AS(gauss_sum(SymmetricMatrix(2, 5)), ConfigurationError);
    CHECK_THROWS_AS(Matrix(2, 3) * Matrix(3, 3), ConfigurationError);
}

} // TEST_SUITE
