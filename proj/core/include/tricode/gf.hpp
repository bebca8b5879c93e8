#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tricode {

/// Largest extension degree representable by FieldElement. Base fields go up to
/// degree 12; the quadratic extension of those needs twice that.
inline constexpr int kMaxDegree = 24;
inline constexpr int kMaxBaseDegree = 12;

/// Element of F_{p^m} in the polynomial basis 1, x, ..., x^{m-1}.
/// Coefficients past the context's degree are always zero.
struct FieldElement {
    std::array<std::uint8_t, kMaxDegree> coeffs{};

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// F_{p^m} = F_p[x]/(modulus) with primitive element pi = x mod modulus.
///
/// Contexts are immutable once built and may be shared freely between threads.
class FieldContext {
public:
    /// Field from the built-in primitive modulus table (or the override file named by
    /// TRICODE_MODULUS_TABLE). Supports p = 3, 1 <= m <= 12.
    static FieldContext create(int p, int m);

    /// Field from an explicit monic modulus, coefficients low-to-high (leading 1 included).
    /// The modulus must be primitive: irreducible, with x of order p^m - 1.
    static FieldContext from_modulus(int p, std::vector<std::uint8_t> modulus);

    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    std::uint64_t q() const noexcept { return q_; }
    /// Multiplicative group order q - 1 (the code length).
    std::uint64_t order() const noexcept { return q_ - 1; }
    std::span<const std::uint8_t> modulus() const noexcept { return modulus_; }
    const FieldElement& pi() const noexcept { return pi_; }

    FieldElement zero() const noexcept { return {}; }
    FieldElement one() const noexcept { return constant(1); }
    FieldElement constant(long c) const noexcept;

    FieldElement add(const FieldElement& a, const FieldElement& b) const noexcept;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const noexcept;
    FieldElement neg(const FieldElement& a) const noexcept;
    FieldElement scale(long c, const FieldElement& a) const noexcept;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const noexcept;
    FieldElement pow(FieldElement base, std::uint64_t e) const noexcept;
    /// Throws ConfigurationError on zero.
    FieldElement inverse(const FieldElement& a) const;
    FieldElement frobenius(const FieldElement& a) const noexcept { return pow(a, static_cast<std::uint64_t>(p_)); }

    /// Absolute trace to F_p, a residue in [0, p).
    int trace(const FieldElement& a) const noexcept;

    /// pi^(i mod (q-1)); negative i allowed.
    FieldElement primitive_power(std::int64_t i) const noexcept;

    /// Some y with y^2 = a, if a is a square. Tonelli-Shanks with pi as the non-residue.
    std::optional<FieldElement> sqrt(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const noexcept { return a == FieldElement{}; }
    bool is_valid(const FieldElement& a) const noexcept;

    /// Base-p integer with digit k = coefficient of x^k; a bijection F_q -> [0, q).
    std::uint64_t to_index(const FieldElement& a) const noexcept;
    FieldElement from_index(std::uint64_t index) const noexcept;

    std::string to_string(const FieldElement& a) const;

private:
    FieldContext() = default;
    void verify_primitive() const;

    int p_ = 0;
    int m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint8_t> modulus_;
    FieldElement pi_;
    std::array<std::uint8_t, kMaxDegree> basis_trace_{};
};

/// Tr(a) = a + a^p + ... + a^{p^{m-1}}, evaluated literally. Reference for FieldContext::trace.
int trace_by_definition(const FieldContext& ctx, const FieldElement& a);

/// F_{q^2} together with the embedding of F_q. The extension uses its own primitive
/// modulus of degree 2m; the embedding sends pi to a root of the base modulus.
class QuadraticExtension {
public:
    explicit QuadraticExtension(const FieldContext& base);

    const FieldContext& base() const noexcept { return base_; }
    const FieldContext& field() const noexcept { return field_; }
    FieldElement embed(const FieldElement& x) const noexcept;

private:
    FieldContext base_;
    FieldContext field_;
    std::vector<FieldElement> basis_images_;
};

QuadraticExtension quadratic_extension(const FieldContext& ctx);

/// Prime factors of n by trial division, ascending, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Built-in primitive modulus for (3, degree), 1 <= degree <= kMaxDegree.
std::vector<std::uint8_t> builtin_modulus(int p, int degree);

/// Environment variable naming an override file: one modulus per line, coefficients
/// low-to-high separated by spaces or commas. A line of length d+1 replaces the degree-d entry.
inline constexpr const char* kModulusTableEnv = "TRICODE_MODULUS_TABLE";

// ---------------------------------------------------------------------------
// Index tables: dense lookup structures for the enumeration hot paths.

/// Ternary vectors packed three bits per coordinate. Addition of two packed values
/// stays within each lane because lane sums are at most 4.
namespace packed3 {

inline constexpr std::uint64_t lane_mask(int m) noexcept {
    std::uint64_t mask = 0;
    for (int k = 0; k < m; ++k) mask |= std::uint64_t{1} << (3 * k);
    return mask;
}

inline constexpr std::uint64_t kLow = lane_mask(21);

inline constexpr std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t s = a + b;
    const std::uint64_t b0 = s & kLow;
    const std::uint64_t b1 = (s >> 1) & kLow;
    const std::uint64_t b2 = (s >> 2) & kLow;
    const std::uint64_t ge3 = b2 | (b1 & b0);
    return s - (ge3 | (ge3 << 1));
}

inline constexpr std::uint64_t neg(std::uint64_t a) noexcept {
    const std::uint64_t lo = a & kLow;
    const std::uint64_t hi = (a >> 1) & kLow;
    return (lo << 1) | hi;
}

inline constexpr std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept { return add(a, neg(b)); }

} // namespace packed3

/// Log/antilog, trace and packed-vector tables indexed by FieldContext::to_index.
/// Requires p = 3 and q <= 3^12.
class IndexTables {
public:
    explicit IndexTables(const FieldContext& ctx);

    const FieldContext& context() const noexcept { return ctx_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t order() const noexcept { return q_ - 1; }

    /// Index of pi^i, i in [0, q-1).
    std::uint32_t exp(std::uint32_t i) const noexcept { return exp_[i]; }
    /// Discrete log of a nonzero index.
    std::uint32_t log(std::uint32_t index) const noexcept { return log_[index]; }
    std::uint8_t trace(std::uint32_t index) const noexcept { return trace_[index]; }
    std::uint64_t packed(std::uint32_t index) const noexcept { return packed_[index]; }
    std::uint32_t unpack(std::uint64_t packed) const noexcept;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
        if (a == 0) return e == 0 ? 1 : 0;
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        return unpack(packed3::add(packed_[a], packed_[b]));
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return unpack(packed3::neg(packed_[a])); }

private:
    FieldContext ctx_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint8_t> trace_;
    std::vector<std::uint64_t> packed_;
};

} // namespace tricode
