#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tricode {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(long base, unsigned long exponent) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exponent);
    if (base < 0 && (exponent & 1U)) r = -r;
    return r;
}

inline Integer from_u64(std::uint64_t v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

/// Exact quotient; throws if d does not divide n.
Integer exact_div(const Integer& n, const Integer& d);

/// Rational that must be an integer; throws otherwise.
Integer require_integer(const Rational& r, const char* what);

} // namespace tricode
