#pragma once

#include <optional>

#include "aqc/fft.hpp"
#include "aqc/synthesis.hpp"

namespace aqc {

struct NotAFreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDropError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-frequency evaluation of an operator symbol on a grid's frequency
/// lattice, with the convention d_alpha -> (2 pi i xi)^alpha. At a Nyquist
/// index the axis factor of an odd-order derivative is zeroed (standard
/// unpaired-frequency rule) so real fields stay real.
class SymbolTable {
public:
    SymbolTable(const OperatorDescriptor& op, GridSpec grid);

    SpectralField apply(const SpectralField& in) const;
    const GridSpec& grid() const { return grid_; }

private:
    GridSpec grid_;
    int rows_, cols_;
    std::complex<double> phase_;        // (2 pi i)^k
    std::vector<double> matrices_;      // freq-major rows x cols blocks
};

/// A f computed spectrally; exact for band-limited fields.
PeriodicField apply_operator(const OperatorDescriptor& op, const PeriodicField& f);

/// sup_x |(A f)(x)| / sup_x |f(x)| (0 when f = 0).
double relative_residual(const OperatorDescriptor& op, const PeriodicField& f);

/// Evaluates the trigonometric interpolant of f at arbitrary torus points
/// (row-major points x N output). Nyquist coefficients contribute their
/// cosine part. Zero coefficients are skipped, so band-limited fields are
/// cheap.
std::vector<double> eval_at_points(const SpectralField& f,
                                   const std::vector<std::vector<double>>& points);

/// Random band-limited real field: conjugate-symmetric coefficients drawn
/// uniformly on the ball |xi|_inf <= band (frequencies iterated in a fixed
/// canonical order independent of the grid, so equal seeds give equal
/// spectra on every sufficiently fine grid). zero_mean pins the xi = 0
/// coefficient to 0.
PeriodicField random_band_limited(const GridSpec& grid, int n_components, int band,
                                  std::uint64_t seed, bool zero_mean = true);

/// U = L Phi for a random band-limited potential Phi; mean-free and A-free
/// by construction. Requires band < min(dims)/2.
PeriodicField gen_afree(const PotentialTriple& triple, const GridSpec& grid, int band,
                        std::uint64_t seed);

struct SolveResult {
    PeriodicField phi;
    double residual_l = 0.0;  // |L phi - U|_inf / |U|_inf
    double residual_g = 0.0;  // |G phi|_inf / |U|_inf
};

/// Spectral potential solver: phi_hat(xi) = (2 pi i)^{-l} L^dagger[xi]
/// U_hat(xi) per nonzero frequency, phi_hat(0) = 0. The pseudo-inverse
/// route keeps phi orthogonal to ker L per frequency, hence G phi = 0.
class PotentialSolver {
public:
    /// Scans the lattice for rank drops of a^l_r at construction
    /// (|a^l_r(2 pi xi)| < 1e-14 (2 pi |xi|)^deg throws RankDropError).
    /// with_residual_tables caches L, G and A tables for cheap residuals.
    PotentialSolver(const PotentialTriple& triple, GridSpec grid,
                    bool with_residual_tables = true);

    /// Throws NotAFreeError when U has nonzero mean or A-residual > tol
    /// (relative). Postconditions residual_l, residual_g <= tol are checked
    /// when residual tables are present.
    SolveResult solve(const PeriodicField& u, double tol) const;

    const GridSpec& grid() const { return grid_; }

private:
    const PotentialTriple& triple_;
    GridSpec grid_;
    int n_fiber_;
    std::complex<double> inv_phase_;    // (2 pi i)^{-l} * (2 pi)^{l} = i^{-l}
    std::vector<double> solve_matrices_;  // P_L[2 pi xi] / a^l_r(2 pi xi)
    std::optional<SymbolTable> table_a_, table_l_, table_g_;
};

/// Grid L^p norm of the Euclidean fiber norm, (avg |f|^p)^{1/p}.
double lp_norm(const PeriodicField& f, double p);

/// W^{l,p} norm with all derivatives of order <= l computed spectrally:
/// (sum_{|alpha|<=l} |d_alpha f|_p^p)^{1/p}.
double sobolev_norm(const PeriodicField& f, int l, double p);

struct SobolevBoundRow {
    GridSpec grid;
    double max_ratio_p2 = 0.0;      // max |phi|_{W^{l,2}} / |U|_{L^2}
    double max_ratio_pd1 = 0.0;     // same with p = d + 1
};

struct SobolevBoundReport {
    std::vector<SobolevBoundRow> rows;
    int trials = 0, band = 0;
    /// Relative change of max_ratio_p2 between consecutive grids.
    std::vector<double> refinement_change;
};

/// Draws `trials` A-free fields per grid (same seeds across grids, so the
/// ensembles coincide for band-limited draws) and records the Sobolev/L^p
/// ratio of Theorem-style bounds.
SobolevBoundReport sobolev_bound_experiment(const PotentialTriple& triple,
                                            const std::vector<GridSpec>& grids, int band,
                                            int trials, std::uint64_t seed);

}  // namespace aqc
