#include "tricode/quadform.hpp"

#include "tricode/errors.hpp"

#include <utility>

namespace tricode {

namespace {

int mod_p(long v, int p) {
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(int a, int p) {
    a = mod_p(a, p);
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw InconsistencyError("zero has no inverse");
}

int pow_mod(long a, long e, int p) {
    long r = 1;
    a = mod_p(a, p);
    while (e > 0) {
        if (e & 1) r = (r * a) % p;
        a = (a * a) % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

} // namespace

Matrix Matrix::identity(int n, int p) {
    Matrix m(n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(int r, int c, long v) noexcept {
    a_[static_cast<std::size_t>(r * n_ + c)] = static_cast<std::uint8_t>(mod_p(v, p_));
}

Matrix Matrix::transpose() const {
    Matrix t(n_, p_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) t.set(c, r, at(r, c));
    return t;
}

bool Matrix::is_zero() const noexcept {
    for (auto v : a_)
        if (v) return false;
    return true;
}

bool Matrix::is_diagonal() const noexcept {
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (r != c && at(r, c)) return false;
    return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_ || x.p_ != y.p_) throw ConfigurationError("matrix shape mismatch");
    Matrix out(x.n_, x.p_);
    for (int r = 0; r < x.n_; ++r)
        for (int c = 0; c < x.n_; ++c) {
            long s = 0;
            for (int k = 0; k < x.n_; ++k) s += x.at(r, k) * y.at(k, c);
            out.set(r, c, s);
        }
    return out;
}

SymmetricMatrix::SymmetricMatrix(const Matrix& m) : m_(m) {
    if (m.transpose() != m) throw ConfigurationError("matrix is not symmetric");
}

SymmetricMatrix congruence(const Matrix& p, const SymmetricMatrix& h) {
    return SymmetricMatrix(p * h.matrix() * p.transpose());
}

int evaluate_form(const SymmetricMatrix& h, std::span<const std::uint8_t> x) {
    long s = 0;
    for (int r = 0; r < h.n(); ++r)
        for (int c = 0; c < h.n(); ++c) s += x[static_cast<std::size_t>(r)] * h.at(r, c) * x[static_cast<std::size_t>(c)];
    return mod_p(s, h.p());
}

std::vector<std::uint8_t> coordinates(const FieldContext& ctx, const FieldElement& x) {
    return {x.coeffs.begin(), x.coeffs.begin() + ctx.m()};
}

SymmetricMatrix build_form(const FieldContext& ctx, const Triple& t) {
    const int n = ctx.m();
    const int p = ctx.p();
    const int half = inv_mod(2, p);
    auto form = [&](const FieldElement& x) { return ctx.trace(evaluate_f(ctx, t, x)); };

    std::vector<FieldElement> basis(static_cast<std::size_t>(n));
    std::vector<int> diag(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        basis[static_cast<std::size_t>(j)].coeffs[static_cast<std::size_t>(j)] = 1;
        diag[static_cast<std::size_t>(j)] = form(basis[static_cast<std::size_t>(j)]);
    }
    SymmetricMatrix h(n, p);
    for (int j = 0; j < n; ++j) {
        h.set(j, j, diag[static_cast<std::size_t>(j)]);
        for (int k = j + 1; k < n; ++k) {
            const int both = form(ctx.add(basis[static_cast<std::size_t>(j)], basis[static_cast<std::size_t>(k)]));
            h.set(j, k, half * (both - diag[static_cast<std::size_t>(j)] - diag[static_cast<std::size_t>(k)]));
        }
    }
    return h;
}

int rank(const Matrix& m) {
    const int n = m.n();
    const int p = m.p();
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    int rk = 0;
    for (int c = 0; c < n && rk < n; ++c) {
        int piv = -1;
        for (int r = rk; r < n; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rk)]);
        const int inv = inv_mod(a[static_cast<std::size_t>(rk)][static_cast<std::size_t>(c)], p);
        for (int r = rk + 1; r < n; ++r) {
            const int f = (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * inv) % p;
            if (!f) continue;
            for (int k = c; k < n; ++k)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                    mod_p(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -
                              f * a[static_cast<std::size_t>(rk)][static_cast<std::size_t>(k)],
                          p);
        }
        ++rk;
    }
    return rk;
}

namespace {

// Dense working copy for the congruence reduction.
struct Work {
    int n;
    int p;
    std::vector<int> a;  // symmetric matrix being reduced
    std::vector<int> t;  // accumulated row operations (P)

    int& A(int r, int c) { return a[static_cast<std::size_t>(r * n + c)]; }
    int& T(int r, int c) { return t[static_cast<std::size_t>(r * n + c)]; }

    void swap_index(int i, int k) {
        if (i == k) return;
        for (int c = 0; c < n; ++c) std::swap(A(i, c), A(k, c));
        for (int r = 0; r < n; ++r) std::swap(A(r, i), A(r, k));
        for (int c = 0; c < n; ++c) std::swap(T(i, c), T(k, c));
    }
    // row_i += f row_j and col_i += f col_j, mirrored on P's rows.
    void add_index(int i, int j, int f) {
        for (int c = 0; c < n; ++c) A(i, c) = mod_p(A(i, c) + f * A(j, c), p);
        for (int r = 0; r < n; ++r) A(r, i) = mod_p(A(r, i) + f * A(r, j), p);
        for (int c = 0; c < n; ++c) T(i, c) = mod_p(T(i, c) + f * T(j, c), p);
    }
};

} // namespace

Diagonalization diagonalize(const SymmetricMatrix& h) {
    const int n = h.n();
    const int p = h.p();
    if (p == 2) throw ConfigurationError("congruence diagonalization needs odd characteristic");
    Work w{n, p, std::vector<int>(static_cast<std::size_t>(n * n)), std::vector<int>(static_cast<std::size_t>(n * n), 0)};
    for (int r = 0; r < n; ++r) {
        w.T(r, r) = 1;
        for (int c = 0; c < n; ++c) w.A(r, c) = h.at(r, c);
    }

    for (int k = 0; k < n; ++k) {
        if (w.A(k, k) == 0) {
            int diag = -1;
            for (int i = k + 1; i < n && diag < 0; ++i)
                if (w.A(i, i)) diag = i;
            if (diag >= 0) {
                w.swap_index(diag, k);
            } else {
                int pi = -1, pj = -1;
                for (int i = k; i < n && pi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (w.A(i, j)) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi < 0) break;  // remaining block is zero
                // Both diagonals are zero, so the new diagonal is 2 A(i, j) != 0.
                w.add_index(pi, pj, 1);
                w.swap_index(pi, k);
            }
        }
        const int inv = inv_mod(w.A(k, k), p);
        for (int i = k + 1; i < n; ++i) {
            const int f = mod_p(-static_cast<long>(w.A(i, k)) * inv, p);
            if (f) w.add_index(i, k, f);
        }
    }

    SymmetricMatrix d(n, p);
    Matrix pm(n, p);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            pm.set(r, c, w.T(r, c));
            if (r <= c) d.set(r, c, w.A(r, c));
        }
    return {d, pm};
}

int legendre(long a, int p) {
    const int r = mod_p(a, p);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace {

struct RankDelta {
    int rank;
    int chi;  // Legendre symbol of the product of nonzero diagonal entries
};

RankDelta rank_and_discriminant(const SymmetricMatrix& h) {
    const auto dz = diagonalize(h);
    RankDelta out{0, 1};
    for (int i = 0; i < h.n(); ++i) {
        const int v = dz.d.at(i, i);
        if (v) {
            ++out.rank;
            out.chi *= legendre(v, h.p());
        }
    }
    return out;
}

void require_ternary(int p) {
    if (p % 4 == 1) throw ConfigurationError("the p = 1 (mod 4) Gauss sum branch is not implemented");
    if (p != 3) throw ConfigurationError("Gauss sums are represented in Z[zeta_3]; p must be 3");
}

} // namespace

EisensteinInteger gauss_sum(const SymmetricMatrix& h) {
    require_ternary(h.p());
    const auto [r, chi] = rank_and_discriminant(h);
    const int n = h.n();
    if (r % 2 == 0) {
        const int sign = ((r / 2) % 2 ? -1 : 1) * chi;
        return EisensteinInteger(sign * ipow(3, static_cast<unsigned long>(n - r / 2)));
    }
    const int sign = (((r - 1) / 2) % 2 ? -1 : 1) * chi;
    return EisensteinInteger(sign * ipow(3, static_cast<unsigned long>(n - (r + 1) / 2))) *
           EisensteinInteger::sqrt_minus_three();
}

ExpSumClass classify_via_legendre(const SymmetricMatrix& h, int m) {
    require_ternary(h.p());
    if (m <= 0 || m % 2 != 0) throw ConfigurationError("classify_via_legendre requires even m");
    if (h.n() != m) throw ConfigurationError("form dimension differs from m");
    if (h.is_zero()) return {SumKind::ZeroTriple, 1, 0, m};
    const auto [r, chi] = rank_and_discriminant(h);
    if (r % 2 == 0) return {SumKind::EvenRank, ((r / 2) % 2 ? -1 : 1) * chi, r, m - r};
    return {SumKind::OddRank, (((r - 1) / 2) % 2 ? -1 : 1) * chi, r, m - r};
}

EisensteinInteger affine_exponential_sum(const SymmetricMatrix& h, std::span<const std::uint8_t> a) {
    const int n = h.n();
    const int p = h.p();
    if (a.size() != static_cast<std::size_t>(n)) throw ConfigurationError("linear term has wrong length");

    // Solve (2H) B^T = -A^T by Gauss-Jordan elimination on the augmented matrix.
    std::vector<std::vector<int>> aug(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = mod_p(2 * h.at(r, c), p);
        aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] = mod_p(-static_cast<long>(a[static_cast<std::size_t>(r)]), p);
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < n && row < n; ++c) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(aug[static_cast<std::size_t>(piv)], aug[static_cast<std::size_t>(row)]);
        auto& prow = aug[static_cast<std::size_t>(row)];
        const int inv = inv_mod(prow[static_cast<std::size_t>(c)], p);
        for (auto& v : prow) v = (v * inv) % p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            auto& cur = aug[static_cast<std::size_t>(r)];
            const int f = cur[static_cast<std::size_t>(c)];
            if (!f) continue;
            for (int k = 0; k <= n; ++k) cur[static_cast<std::size_t>(k)] = mod_p(cur[static_cast<std::size_t>(k)] - f * prow[static_cast<std::size_t>(k)], p);
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (int r = row; r < n; ++r)
        if (aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)]) return EisensteinInteger(0);

    std::vector<int> b(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < row; ++r) b[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
    long ab = 0;
    for (int k = 0; k < n; ++k) ab += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
    const int c = mod_p(inv_mod(2, p) * mod_p(ab, p), p);
    return EisensteinInteger::zeta_power(c) * gauss_sum(h);
}

// ---------------------------------------------------------------------------

FormTables::FormTables(const FieldContext& ctx) : n_(ctx.m()), q_(static_cast<std::uint32_t>(ctx.q())) {
    if (ctx.p() != 3) throw ConfigurationError("form tables require p = 3");
    if (ctx.m() > 10) throw ConfigurationError("form tables are limited to m <= 10");
    const std::size_t cells = this->cells();

    for (int e = 0; e < 3; ++e) {
        // Matrices of the basis coefficients x^k, then every coefficient by linearity.
        std::vector<SymmetricMatrix> basis;
        for (int k = 0; k < n_; ++k) {
            FieldElement c;
            c.coeffs[static_cast<std::size_t>(k)] = 1;
            Triple t;
            (e == 0 ? t.alpha : e == 1 ? t.beta : t.gamma) = c;
            basis.push_back(build_form(ctx, t));
        }
        auto& data = data_[static_cast<std::size_t>(e)];
        data.assign(static_cast<std::size_t>(q_) * cells, 0);
        for (std::uint32_t idx = 0; idx < q_; ++idx) {
            const FieldElement c = ctx.from_index(idx);
            std::uint8_t* out = data.data() + static_cast<std::size_t>(idx) * cells;
            for (int r = 0; r < n_; ++r)
                for (int col = 0; col < n_; ++col) {
                    int s = 0;
                    for (int k = 0; k < n_; ++k) s += c.coeffs[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(k)].at(r, col);
                    out[r * n_ + col] = static_cast<std::uint8_t>(s % 3);
                }
        }
    }
}

int classify_ternary_in_place(std::uint8_t* a, int n) noexcept {
    // Symmetric Schur-complement elimination over F_3. 1 is a square, 2 is not, and each
    // pivot is its own inverse.
    static constexpr std::uint8_t kMul[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    static constexpr std::uint8_t kSub[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    auto at = [a, n](int r, int c) -> std::uint8_t& { return a[r * n + c]; };

    int r = 0;
    int chi = 1;
    for (int k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            int diag = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, i)) {
                    diag = i;
                    break;
                }
            if (diag < 0) {
                int pi = -1, pj = -1;
                for (int i = k; i < n && pi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (at(i, j)) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi < 0) break;
                // row/col pi += row/col pj; only the active block k..n-1 matters.
                for (int c = k; c < n; ++c) at(pi, c) = static_cast<std::uint8_t>((at(pi, c) + at(pj, c)) % 3);
                for (int rr = k; rr < n; ++rr) at(rr, pi) = static_cast<std::uint8_t>((at(rr, pi) + at(rr, pj)) % 3);
                diag = pi;
            }
            if (diag != k) {
                for (int c = k; c < n; ++c) std::swap(at(diag, c), at(k, c));
                for (int rr = k; rr < n; ++rr) std::swap(at(rr, diag), at(rr, k));
            }
        }
        const std::uint8_t d = at(k, k);
        ++r;
        if (d == 2) chi = -chi;
        for (int i = k + 1; i < n; ++i) {
            const std::uint8_t f = kMul[at(i, k)][d];  // A(i,k) / d
            if (!f) continue;
            for (int j = k + 1; j < n; ++j) at(i, j) = kSub[at(i, j)][kMul[f][at(k, j)]];
        }
    }
    if (r == 0) return 0;
    const int j = n - r;
    const int eps = ((r % 2 == 0 ? r / 2 : (r - 1) / 2) % 2 ? -1 : 1) * chi;
    return 1 + 2 * j + (eps < 0 ? 1 : 0);
}

} // namespace tricode
