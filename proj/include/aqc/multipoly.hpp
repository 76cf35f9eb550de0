#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aqc/rational.hpp"

namespace aqc {

/// Exponent vector of a monomial xi^alpha in up to kMaxDim variables.
using MultiIndex = std::vector<int>;

int multiindex_order(const MultiIndex& alpha);

/// Multivariate polynomial over the rationals.
///
/// Terms are kept sorted by a packed graded-lexicographic key (total degree
/// first, then lexicographic with the first axis most significant), so
/// iteration order and hence serialized output are canonical. Exponents are
/// limited to 255 per axis and dimension to 7, comfortably above anything
/// the synthesis chain produces.
class MultiPoly {
public:
    static constexpr int kMaxDim = 7;
    static constexpr int kMaxExponent = 255;

    struct Term {
        std::uint64_t key;
        Rational coeff;
    };

    explicit MultiPoly(int dim);

    static MultiPoly zero(int dim) { return MultiPoly(dim); }
    static MultiPoly constant(int dim, Rational value);
    /// The variable xi_axis (axis is 0-based).
    static MultiPoly variable(int dim, int axis);
    static MultiPoly monomial(const MultiIndex& alpha, Rational coeff);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Adds coeff * xi^alpha, merging with an existing term if present.
    void add_term(const MultiIndex& alpha, const Rational& coeff);
    Rational coeff_of(const MultiIndex& alpha) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    bool operator==(const MultiPoly& other) const;

    MultiPoly scaled(const Rational& factor) const;
    MultiPoly derivative(int axis) const;
    MultiPoly derivative(const MultiIndex& beta) const;

    /// Total degree of the highest term, or -1 for the zero polynomial.
    int degree() const;
    /// True when every term has total degree q (vacuously true when zero).
    bool is_homogeneous(int q) const;
    /// Degree shared by all terms; -1 if zero, throws if inhomogeneous.
    int homogeneous_degree() const;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    /// GCD of coefficient numerators over LCM of denominators (positive).
    /// Zero polynomial has content 0.
    Rational content() const;

    std::string to_string() const;

    static std::uint64_t pack(const MultiIndex& alpha);
    static MultiIndex unpack(std::uint64_t key, int dim);

private:
    int dim_;
    std::vector<Term> terms_;  // sorted ascending by key, no zero coeffs

    void prune_zeros();
};

}  // namespace aqc
