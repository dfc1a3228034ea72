#ifndef PMSKIT_RATIONAL_HPP
#define PMSKIT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace pmskit {

// Exact rational scalar. All symbolic computation in the library is done
// over these; floating point only ever appears in the numerics module.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" in lowest terms, "p" when q == 1.
std::string to_string(const Rational& r);

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

double to_double(const Rational& r);

} // namespace pmskit

#endif
