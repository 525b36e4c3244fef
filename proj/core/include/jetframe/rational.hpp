#ifndef JETFRAME_RATIONAL_HPP
#define JETFRAME_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace jetframe {

// Always canonical: GMP keeps mpq_class reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace jetframe

#endif
