#pragma once

#include <set>
#include <span>
#include <vector>

#include "aqc/multipoly.hpp"
#include "aqc/sampling.hpp"

namespace aqc {

/// Dense matrix of rational scalars (evaluation results, coefficients).
struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> data;  // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Rational(0)) {}

    Rational& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    static RationalMatrix identity(int n);
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator-(const RationalMatrix& other) const;
    RationalMatrix transpose() const;
    bool operator==(const RationalMatrix& other) const = default;
    bool is_zero() const;
};

/// Exact rank by Gaussian elimination over Q (denominators cleared row-wise
/// first, then fraction-free pivoting on integers).
int exact_rank(RationalMatrix m);

/// Matrix with multivariate polynomial entries sharing one variable count.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int dim);

    static PolyMatrix identity(int n, int dim);
    static PolyMatrix zero(int rows, int cols, int dim) { return PolyMatrix(rows, cols, dim); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int dim() const { return dim_; }

    MultiPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const MultiPoly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const PolyMatrix& other) const;

    PolyMatrix operator+(const PolyMatrix& other) const;
    PolyMatrix operator-(const PolyMatrix& other) const;
    PolyMatrix operator*(const PolyMatrix& other) const;
    PolyMatrix operator-() const;

    /// Transpose; real coefficients, so this is the adjoint M*.
    PolyMatrix transpose() const;

    PolyMatrix scaled(const Rational& factor) const;
    PolyMatrix scaled(const MultiPoly& factor) const;

    /// Largest total degree over entries, -1 if all zero.
    int degree() const;
    bool is_homogeneous(int q) const;

    /// GCD of the contents of all entries (0 for the zero matrix).
    Rational content() const;
    /// Divides every entry by the positive content, making the coefficient
    /// set integral with gcd 1. No-op on the zero matrix.
    PolyMatrix content_normalized() const;

    RationalMatrix eval(std::span<const Rational> point) const;
    std::vector<double> eval(std::span<const double> point) const;  // row-major

private:
    int rows_, cols_, dim_;
    std::vector<MultiPoly> entries_;
};

PolyMatrix adjoint(const PolyMatrix& m);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
RationalMatrix eval_symbol(const PolyMatrix& m, std::span<const Rational> point);

struct RankProfile {
    std::set<int> observed_ranks;
    bool constant_rank = false;
    int rank = -1;  // meaningful when constant_rank
};

/// Evaluates the symbol at `samples` random nonzero integer lattice points
/// and reports the set of exact ranks seen.
RankProfile rank_profile(const PolyMatrix& m, int samples, std::uint64_t seed);

}  // namespace aqc
