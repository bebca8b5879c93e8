#pragma once

#include "tricode/gf.hpp"
#include "tricode/numeric.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tricode {

/// a0 + a1*zeta in Z[zeta], zeta = e^{2 pi i / 3}. Every ternary character sum lives here;
/// zeta^2 = -1 - zeta keeps the representation canonical.
class EisensteinInteger {
public:
    EisensteinInteger() = default;
    EisensteinInteger(Integer a0, Integer a1 = 0) : a0_(std::move(a0)), a1_(std::move(a1)) {}
    EisensteinInteger(long a0) : a0_(a0), a1_(0) {}

    static EisensteinInteger zeta() { return {0, 1}; }
    static EisensteinInteger zeta_power(int k);
    /// 1 + 2*zeta = i*sqrt(3), the quadratic Gauss sum over F_3.
    static EisensteinInteger sqrt_minus_three() { return {1, 2}; }

    const Integer& a0() const noexcept { return a0_; }
    const Integer& a1() const noexcept { return a1_; }
    bool is_rational() const { return a1_ == 0; }

    EisensteinInteger conj() const { return {a0_ - a1_, -a1_}; }
    /// a0^2 - a0 a1 + a1^2 = |z|^2.
    Integer norm() const { return a0_ * a0_ - a0_ * a1_ + a1_ * a1_; }
    EisensteinInteger pow(unsigned k) const;

    EisensteinInteger& operator+=(const EisensteinInteger& o) {
        a0_ += o.a0_;
        a1_ += o.a1_;
        return *this;
    }
    EisensteinInteger& operator-=(const EisensteinInteger& o) {
        a0_ -= o.a0_;
        a1_ -= o.a1_;
        return *this;
    }
    EisensteinInteger& operator*=(const EisensteinInteger& o);

    friend EisensteinInteger operator+(EisensteinInteger a, const EisensteinInteger& b) { return a += b; }
    friend EisensteinInteger operator-(EisensteinInteger a, const EisensteinInteger& b) { return a -= b; }
    friend EisensteinInteger operator*(EisensteinInteger a, const EisensteinInteger& b) { return a *= b; }
    friend EisensteinInteger operator-(const EisensteinInteger& a) { return {-a.a0_, -a.a1_}; }
    friend bool operator==(const EisensteinInteger& a, const EisensteinInteger& b) {
        return a.a0_ == b.a0_ && a.a1_ == b.a1_;
    }

    std::string to_string() const;

private:
    Integer a0_;
    Integer a1_;
};

struct Triple {
    FieldElement alpha;
    FieldElement beta;
    FieldElement gamma;
};

/// f(x) = alpha x^2 + beta x^{p+1} + gamma x^{p^2+1}.
FieldElement evaluate_f(const FieldContext& ctx, const Triple& t, const FieldElement& x);

/// #{x : Tr f(x) = 0, 1, 2}.
std::array<std::uint64_t, 3> trace_tally(const FieldContext& ctx, const Triple& t);

/// S(alpha, beta, gamma) = sum_x zeta^{Tr f(x)}, literal evaluation. Requires p = 3.
EisensteinInteger direct_sum(const FieldContext& ctx, const Triple& t);

/// (N0 - N2) + (N1 - N2) zeta.
EisensteinInteger tally_to_eisenstein(const std::array<std::uint64_t, 3>& tally);

enum class SumKind { ZeroTriple, EvenRank, OddRank };

/// Family of S: zero triple (S = q), even rank (S = eps 3^{(m+j)/2}) or odd rank
/// (S = eps (1 + 2 zeta) 3^{m - (r+1)/2}), with j = m - r.
struct ExpSumClass {
    SumKind kind = SumKind::ZeroTriple;
    int epsilon = 1;
    int rank = 0;
    int j = 0;

    friend bool operator==(const ExpSumClass&, const ExpSumClass&) = default;
};

std::string to_string(const ExpSumClass& c);

/// Classify an exact sum for even m. Throws ConfigurationError for odd m and
/// InconsistencyError when no family matches.
ExpSumClass classify(const EisensteinInteger& s, int m);

/// The value S of a class (inverse of classify).
EisensteinInteger class_value(const ExpSumClass& c, int m);

/// Dense histogram slot for a class: 0 for the zero triple, else 1 + 2j + (eps < 0).
int class_slot(const ExpSumClass& c) noexcept;
ExpSumClass class_from_slot(int slot, int m);
inline int class_slot_count(int m) noexcept { return 2 * m + 3; }

/// R = sum_{a=1}^{p-1} S(a alpha, a beta, a gamma), by direct summation.
Integer r_sum(const FieldContext& ctx, const Triple& t);

/// R from the class: eps (p-1) p^{m-r/2} for even rank, 0 for odd rank, (p-1) q for zero.
Integer r_from_class(const ExpSumClass& c, int p, int m);

/// Table-driven evaluation of tallies for all triples; the rows are
/// trace(coef * pi^{s i}) for i in [0, q-1), one row per (exponent, coefficient).
class TraceRows {
public:
    explicit TraceRows(const IndexTables& tables);

    static constexpr int kExponents = 3;
    /// Exponents 2, p+1, p^2+1 for p = 3.
    static constexpr std::array<std::uint32_t, kExponents> kPowers{2, 4, 10};

    std::uint32_t length() const noexcept { return length_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Row for exponent slot e and coefficient index c: Tr(c pi^{s_e i}), i < q-1.
    const std::uint8_t* row(int e, std::uint32_t coefficient) const noexcept {
        return rows_[static_cast<std::size_t>(e)].data() + static_cast<std::size_t>(coefficient) * length_;
    }

private:
    std::uint32_t q_ = 0;
    std::uint32_t length_ = 0;
    std::array<std::vector<std::uint8_t>, kExponents> rows_;
};

/// Tally over x in F_q of Tr f(x) for the triple given by indices, x = 0 included.
std::array<std::uint64_t, 3> tally_rows(const TraceRows& rows, std::uint32_t a, std::uint32_t b, std::uint32_t c);

} // namespace tricode
