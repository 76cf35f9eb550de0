#include "aqc/polymatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace aqc {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols != other.rows) throw std::invalid_argument("matrix: inner dimension mismatch");
    RationalMatrix out(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& a = (*this)(i, k);
            if (is_zero(a)) continue;
            for (int j = 0; j < other.cols; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
    if (rows != other.rows || cols != other.cols)
        throw std::invalid_argument("matrix: shape mismatch");
    RationalMatrix out(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] - other.data[i];
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Rational& q) { return aqc::is_zero(q); });
}

int exact_rank(RationalMatrix m) {
    // Clear denominators row by row, then integer elimination with exact
    // divisions (Bareiss).
    std::vector<std::vector<mpz_class>> a(m.rows, std::vector<mpz_class>(m.cols));
    for (int i = 0; i < m.rows; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < m.cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols; ++j) {
            Rational v = m(i, j) * Rational(lcm);
            v.canonicalize();
            a[i][j] = v.get_num();
        }
    }
    int rank = 0;
    mpz_class prev_pivot = 1;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[row], a[pivot]);
        for (int i = row + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j) {
                mpz_class t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev_pivot = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

PolyMatrix::PolyMatrix(int rows, int cols, int dim)
    : rows_(rows), cols_(cols), dim_(dim),
      entries_(static_cast<std::size_t>(rows) * cols, MultiPoly(dim)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("polymatrix: bad shape");
}

PolyMatrix PolyMatrix::identity(int n, int dim) {
    PolyMatrix m(n, n, dim);
    for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(dim, Rational(1));
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const MultiPoly& p) { return p.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || dim_ != other.dim_) return false;
    return entries_ == other.entries_;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("polymatrix: shape mismatch");
    PolyMatrix out(rows_, cols_, dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const { return *this + (-other); }

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out(rows_, cols_, dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("polymatrix: inner dimension mismatch");
    if (dim_ != other.dim_) throw std::invalid_argument("polymatrix: variable count mismatch");
    PolyMatrix out(rows_, other.cols_, dim_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < other.cols_; ++j) {
            MultiPoly acc(dim_);
            for (int k = 0; k < cols_; ++k) {
                const MultiPoly& a = at(i, k);
                const MultiPoly& b = other.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc += a * b;
            }
            out.at(i, j) = std::move(acc);
        }
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_, dim_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

PolyMatrix PolyMatrix::scaled(const Rational& factor) const {
    PolyMatrix out(rows_, cols_, dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].scaled(factor);
    return out;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& factor) const {
    PolyMatrix out(rows_, cols_, dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
    return out;
}

int PolyMatrix::degree() const {
    int d = -1;
    for (const MultiPoly& p : entries_) d = std::max(d, p.degree());
    return d;
}

bool PolyMatrix::is_homogeneous(int q) const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [q](const MultiPoly& p) { return p.is_homogeneous(q); });
}

Rational PolyMatrix::content() const {
    mpz_class num_gcd = 0, den_lcm = 1;
    bool any = false;
    for (const MultiPoly& p : entries_) {
        if (p.is_zero()) continue;
        any = true;
        const Rational c = p.content();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (!any) return Rational(0);
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

PolyMatrix PolyMatrix::content_normalized() const {
    const Rational c = content();
    if (aqc::is_zero(c)) return *this;
    return scaled(Rational(1) / c);
}

RationalMatrix PolyMatrix::eval(std::span<const Rational> point) const {
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = at(i, j).eval(point);
    return out;
}

std::vector<double> PolyMatrix::eval(std::span<const double> point) const {
    std::vector<double> out(static_cast<std::size_t>(rows_) * cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(i) * cols_ + j] = at(i, j).eval(point);
    return out;
}

PolyMatrix adjoint(const PolyMatrix& m) { return m.transpose(); }

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }

RationalMatrix eval_symbol(const PolyMatrix& m, std::span<const Rational> point) {
    return m.eval(point);
}

RankProfile rank_profile(const PolyMatrix& m, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("rank_profile: samples must be >= 1");
    Rng rng(seed);
    RankProfile profile;
    for (int s = 0; s < samples; ++s) {
        const std::vector<Rational> point = rng.lattice_point(m.dim());
        profile.observed_ranks.insert(exact_rank(m.eval(point)));
    }
    profile.constant_rank = profile.observed_ranks.size() == 1;
    if (profile.constant_rank) profile.rank = *profile.observed_ranks.begin();
    return profile;
}

}  // namespace aqc
