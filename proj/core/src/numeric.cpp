#include "tricode/numeric.hpp"

#include "tricode/errors.hpp"

namespace tricode {

Integer exact_div(const Integer& n, const Integer& d) {
    if (d == 0) throw InconsistencyError("division by zero");
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
        throw InconsistencyError("inexact division: " + to_decimal(n) + " / " + to_decimal(d));
    Integer r;
    mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

Integer require_integer(const Rational& r, const char* what) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() != 1)
        throw InconsistencyError(std::string(what) + " is not an integer: " + c.get_str());
    return c.get_num();
}

} // namespace tricode
