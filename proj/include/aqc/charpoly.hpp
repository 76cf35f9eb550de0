#pragma once

#include <vector>

#include "aqc/polymatrix.hpp"

namespace aqc {

/// Coefficients of p(lambda) = det(lambda*Id - B) = sum_j a_j lambda^{n-j},
/// a_0 = 1, together with the rank index r = max{ j : a_j != 0 }.
struct CharPolyData {
    std::vector<MultiPoly> coefficients;  // a_0 .. a_n
    int r = 0;

    int n() const { return static_cast<int>(coefficients.size()) - 1; }
    const MultiPoly& a(int j) const { return coefficients.at(j); }
    /// (-1)^r a_r: for B = M M* this is the r-th elementary symmetric
    /// function of the eigenvalues, positive wherever rank M = r.
    MultiPoly positive_a_r() const;
};

/// Characteristic polynomial of a square polynomial matrix via the
/// Faddeev-LeVerrier recurrence (exact over Q, divisions by integers only).
CharPolyData char_poly(const PolyMatrix& b);

/// Moore-Penrose pseudo-inverse of a polynomial matrix as a polynomial
/// numerator over a scalar polynomial denominator. P/s satisfies the four
/// Penrose identities with M at every point where s != 0.
struct ScaledPseudoInverse {
    PolyMatrix numerator;    // P, cols(M) x rows(M)
    MultiPoly denominator;   // s = +-a_r of char_poly(M M*)
    CharPolyData char_data;  // of M M*

    ScaledPseudoInverse(PolyMatrix p, MultiPoly s, CharPolyData c)
        : numerator(std::move(p)), denominator(std::move(s)), char_data(std::move(c)) {}
};

/// Closed-form pseudo-inverse from the characteristic polynomial of M M*.
/// The overall sign is validated against the Penrose identities at a random
/// rational point (seeded), flipping once if needed.
ScaledPseudoInverse decell_pinv(const PolyMatrix& m, std::uint64_t validation_seed = 12345);

/// True when the four Penrose identities hold exactly for X = P/s against
/// M, all evaluated at `point` (caller guarantees s(point) != 0).
bool penrose_identities_hold(const PolyMatrix& m, const ScaledPseudoInverse& pinv,
                             std::span<const Rational> point);

}  // namespace aqc
