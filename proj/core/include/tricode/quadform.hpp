#pragma once

#include "tricode/expsum.hpp"
#include "tricode/gf.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tricode {

/// Square matrix over F_p, row-major.
class Matrix {
public:
    Matrix(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
    static Matrix identity(int n, int p);

    int n() const noexcept { return n_; }
    int p() const noexcept { return p_; }
    std::uint8_t at(int r, int c) const noexcept { return a_[static_cast<std::size_t>(r * n_ + c)]; }
    void set(int r, int c, long v) noexcept;

    Matrix transpose() const;
    bool is_zero() const noexcept;
    bool is_diagonal() const noexcept;

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int n_;
    int p_;
    std::vector<std::uint8_t> a_;
};

/// Matrix with entries[j][k] = entries[k][j]; set() writes both halves.
class SymmetricMatrix {
public:
    SymmetricMatrix(int n, int p) : m_(n, p) {}
    /// Throws ConfigurationError if `m` is not symmetric.
    explicit SymmetricMatrix(const Matrix& m);

    int n() const noexcept { return m_.n(); }
    int p() const noexcept { return m_.p(); }
    std::uint8_t at(int r, int c) const noexcept { return m_.at(r, c); }
    void set(int r, int c, long v) noexcept {
        m_.set(r, c, v);
        m_.set(c, r, v);
    }
    const Matrix& matrix() const noexcept { return m_; }
    bool is_zero() const noexcept { return m_.is_zero(); }

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    Matrix m_;
};

/// P H P^T.
SymmetricMatrix congruence(const Matrix& p, const SymmetricMatrix& h);

/// X H X^T for a coordinate row vector X.
int evaluate_form(const SymmetricMatrix& h, std::span<const std::uint8_t> x);

/// Coordinates of x in the polynomial basis.
std::vector<std::uint8_t> coordinates(const FieldContext& ctx, const FieldElement& x);

/// H with X H X^T = Tr(alpha x^2 + beta x^{p+1} + gamma x^{p^2+1}) in the polynomial basis.
SymmetricMatrix build_form(const FieldContext& ctx, const Triple& t);

/// Row rank over F_p.
int rank(const Matrix& m);
inline int rank(const SymmetricMatrix& h) { return rank(h.matrix()); }

struct Diagonalization {
    SymmetricMatrix d;
    Matrix p;
};

/// Congruence diagonalization: P H P^T = D with P invertible. Zero pivots are repaired by
/// adding a partner row/column, which needs p odd.
Diagonalization diagonalize(const SymmetricMatrix& h);

/// Euler's criterion, mapped to {-1, 0, 1}.
int legendre(long a, int p);

/// sum_{X in F_p^n} zeta^{X H X^T} = i^r (Delta/p) p^{n - r/2} for p = 3.
EisensteinInteger gauss_sum(const SymmetricMatrix& h);

/// Class of the form's exponential sum from rank and the Legendre symbol of the
/// diagonal product; m must be even.
ExpSumClass classify_via_legendre(const SymmetricMatrix& h, int m);

/// sum_X zeta^{X H X^T + A X^T}: zeta^c times the Gauss sum when 2 Y H + A = 0 has a
/// solution B (c = A B^T / 2), zero otherwise.
EisensteinInteger affine_exponential_sum(const SymmetricMatrix& h, std::span<const std::uint8_t> a);

/// Per-coefficient form matrices for the enumeration hot path (p = 3, m <= 10).
/// H(alpha, beta, gamma) = H(alpha,0,0) + H(0,beta,0) + H(0,0,gamma) since the trace is linear.
class FormTables {
public:
    explicit FormTables(const FieldContext& ctx);

    int n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return q_; }
    std::size_t cells() const noexcept { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }

    /// Row-major n x n matrix for exponent slot e (0: x^2, 1: x^{p+1}, 2: x^{p^2+1}) and
    /// coefficient index c (FieldContext::to_index).
    const std::uint8_t* matrix(int e, std::uint32_t c) const noexcept {
        return data_[static_cast<std::size_t>(e)].data() + static_cast<std::size_t>(c) * cells();
    }

private:
    int n_ = 0;
    std::uint32_t q_ = 0;
    std::array<std::vector<std::uint8_t>, 3> data_;
};

/// Rank and Legendre class of a ternary symmetric matrix held as n*n bytes in [0, 3).
/// The buffer is overwritten. Returns the class slot (see class_slot).
int classify_ternary_in_place(std::uint8_t* a, int n) noexcept;

/// a + b + c entrywise mod 3 into out (length len).
inline void add3_mod3(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len) noexcept {
    static constexpr std::uint8_t kMod3[5] = {0, 1, 2, 0, 1};
    for (std::size_t i = 0; i < len; ++i) out[i] = kMod3[a[i] + b[i]];
}

} // namespace tricode
