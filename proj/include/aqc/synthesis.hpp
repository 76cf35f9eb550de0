#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "aqc/charpoly.hpp"
#include "aqc/operator_descriptor.hpp"

namespace aqc {

struct NonConstantRankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroOperatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The synthesized chain G -> L -> A with its characteristic data.
///
/// L has symbol (+-a^a_r)(xi) [Id - A^dagger A][xi], content-normalized so
/// the coefficient set is integral with gcd 1; G is built from L the same
/// way. content_l / content_g are the positive factors divided out, kept so
/// identity checks against the raw formulas stay exact.
struct PotentialTriple {
    OperatorDescriptor A, L, G;
    PolyMatrix symbol_a, symbol_l, symbol_g;
    int k = 0;         // order of A
    int l = 0;         // order of L = 2k * r^a
    int degree_g = 0;  // order of G = 2l * r^l
    CharPolyData char_a;  // of A[xi] A*[xi]
    CharPolyData char_l;  // of L[xi] L*[xi]
    Rational content_l{1}, content_g{1};
    bool g_symmetric = false;

    // pseudo-inverses of A[xi] and L[xi]; filled by synthesize_triple,
    // recomputable after deserialization via ensure_pseudo_inverses
    std::optional<ScaledPseudoInverse> pinv_a, pinv_l;
};

/// Potential operator for a constant-rank A: symbol a^a_r(xi)[Id - A^dagger
/// A][xi] with the positive-leading sign convention, homogeneous of degree
/// l = 2k r^a. Throws NonConstantRankError / ZeroOperatorError.
OperatorDescriptor potential_operator(const OperatorDescriptor& a, int samples = 40,
                                      std::uint64_t seed = 2024);

/// Kernel annihilator for a constant-rank L; same construction applied to L.
OperatorDescriptor annihilator_operator(const OperatorDescriptor& l, int samples = 40,
                                        std::uint64_t seed = 2024);

/// Runs the full chain A -> L -> G with cached symbols, char data and
/// pseudo-inverses.
PotentialTriple synthesize_triple(const OperatorDescriptor& a, int samples = 40,
                                  std::uint64_t seed = 2024);

/// Recomputes pinv_a / pinv_l if absent (after loading a triple from disk).
void ensure_pseudo_inverses(PotentialTriple& triple);

struct ExactnessReport {
    bool al_zero = false;        // A[xi] L[xi] == 0 symbolically
    bool lg_zero = false;        // L[xi] G[xi] == 0 symbolically
    bool ranks_ok = false;       // rank A + rank L == N and rank L + rank G == N'
    bool degrees_ok = false;     // l == 2k r^a and deg G == 2l r^l
    bool g_symmetric = false;
    int samples = 0;
    std::string witness;  // first failing sample point, if any

    bool pass() const { return al_zero && lg_zero && ranks_ok && degrees_ok; }
};

ExactnessReport verify_exactness(const PotentialTriple& triple, int samples, std::uint64_t seed);

struct ExpansionReport {
    bool identity_holds = false;      // G recomputed from a^a_j, a^l_j, A^dagger A
    bool intermediate_holds = false;  // L L* == mu^2 [Id - A^dagger A]
    bool both_sides_zero = false;     // degenerate full-rank-L case
    std::string mismatch;             // first differing entry, if any
};

/// Recomputes G[xi] through the characteristic-coefficient expansion and
/// asserts polynomial equality with the stored G. Requires pseudo-inverses.
ExpansionReport expand_g_in_a(const PotentialTriple& triple);

/// Generalized product-rule coefficients: L(chi Phi) =
/// sum_{|alpha|+|beta|=l} L^(alpha,beta) (d_alpha Phi)(d_beta chi) for
/// scalar chi. The beta = 0 slice is L itself.
struct LeibnizTable {
    int d = 0, l = 0, rows = 0, cols = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, RationalMatrix> entries;

    const RationalMatrix* find(const MultiIndex& alpha, const MultiIndex& beta) const;
    /// Exact table-side evaluation on polynomial inputs (test oracle hook).
    std::vector<MultiPoly> apply_to_product(const std::vector<MultiPoly>& phi,
                                            const MultiPoly& chi) const;
};

LeibnizTable leibniz_table(const OperatorDescriptor& l_op);

/// Product of per-axis binomial coefficients C(gamma_i, beta_i).
Rational multiindex_binomial(const MultiIndex& gamma, const MultiIndex& beta);

}  // namespace aqc
