#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace aqc {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator), which is exactly the invariant we need for
/// reproducible symbolic output.
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p" or "p/q" with optional sign. Rejects q == 0.
inline Rational parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace aqc
