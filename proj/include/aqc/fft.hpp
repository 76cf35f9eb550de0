#pragma once

#include "aqc/grid.hpp"

namespace aqc {

/// Forward transform with the basis e^{2 pi i xi.x}: coefficients are
/// (1/total_points) sum_x f(x) e^{-2 pi i xi.x}, so a constant field c has
/// coefficient c at xi = 0 and dft/idft is an exact inverse pair.
SpectralField dft(const PeriodicField& f);

/// Synthesis sum_xi F(xi) e^{2 pi i xi.x}; the imaginary part is discarded
/// (inputs are expected conjugate-symmetric).
PeriodicField idft(const SpectralField& f);

}  // namespace aqc
