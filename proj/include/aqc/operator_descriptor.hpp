#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "aqc/polymatrix.hpp"

namespace aqc {

/// A k-homogeneous constant-coefficient linear differential operator
/// A = sum_{|alpha|=k} A^alpha d_alpha acting on R^N-valued fields in d
/// variables, with values in R^m. Coefficient matrices are exact rationals.
///
/// Terms are keyed by the packed multi-index, so iteration (and serialized
/// output) follows the fixed graded-lexicographic order.
class OperatorDescriptor {
public:
    /// Validating constructor for user input: every alpha must satisfy
    /// |alpha| = k and at least one coefficient matrix must be nonzero.
    static OperatorDescriptor make(int d, int k, int N, int m,
                                   const std::vector<std::pair<MultiIndex, RationalMatrix>>& terms);

    /// The zero operator of the given signature (synthesis can legitimately
    /// produce it, e.g. the potential of an injective symbol).
    static OperatorDescriptor zero(int d, int k, int N, int m);

    /// Reads coefficients off a homogeneous symbol: symbol coefficients are
    /// operator coefficients by definition. `k` pins the order when the
    /// symbol is zero; otherwise it must match the homogeneity degree.
    static OperatorDescriptor from_symbol(const PolyMatrix& symbol, int k);

    int d() const { return d_; }
    int k() const { return k_; }
    int N() const { return N_; }
    int m() const { return m_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<std::uint64_t, RationalMatrix>& packed_terms() const { return terms_; }
    std::vector<std::pair<MultiIndex, RationalMatrix>> terms() const;
    /// Coefficient matrix for alpha (zero matrix if absent).
    RationalMatrix coefficient(const MultiIndex& alpha) const;

    /// The Fourier symbol map sum_{|alpha|=k} xi^alpha A^alpha.
    PolyMatrix symbol() const;

    /// Applies the operator exactly to a polynomial field (one MultiPoly
    /// per input component). Used by the symbolic differentiation oracles.
    std::vector<MultiPoly> apply_to_polynomials(const std::vector<MultiPoly>& field) const;

    bool operator==(const OperatorDescriptor& other) const = default;

private:
    OperatorDescriptor(int d, int k, int N, int m) : d_(d), k_(k), N_(N), m_(m) {}

    int d_, k_, N_, m_;
    std::map<std::uint64_t, RationalMatrix> terms_;
};

/// Free-function spelling of OperatorDescriptor::symbol().
PolyMatrix symbol_of(const OperatorDescriptor& op);

}  // namespace aqc
