#include "aqc/fft.hpp"

#include <fftw3.h>

#include <stdexcept>

namespace aqc {

namespace {

// Our layout has x1 fastest; FFTW is row-major with the *last* index
// fastest, so passing the dims reversed makes the memory layouts agree.
std::vector<int> fftw_dims(const GridSpec& grid) {
    std::vector<int> n(grid.dims.rbegin(), grid.dims.rend());
    return n;
}

void transform_component(const GridSpec& grid, int sign, std::vector<std::complex<double>>& buf) {
    const std::vector<int> n = fftw_dims(grid);
    fftw_complex* data = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan =
        fftw_plan_dft(grid.d, n.data(), data, data, sign, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    if (!plan) throw std::runtime_error("fft: fftw plan creation failed");
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

}  // namespace

SpectralField dft(const PeriodicField& f) {
    SpectralField out(f.grid, f.N);
    const std::size_t points = f.grid.total_points();
    std::vector<std::complex<double>> buf(points);
    const double scale = 1.0 / static_cast<double>(points);
    for (int c = 0; c < f.N; ++c) {
        for (std::size_t p = 0; p < points; ++p) buf[p] = f.values[p * f.N + c];
        transform_component(f.grid, FFTW_FORWARD, buf);
        for (std::size_t p = 0; p < points; ++p) out.coeffs[p * f.N + c] = buf[p] * scale;
    }
    return out;
}

PeriodicField idft(const SpectralField& f) {
    PeriodicField out(f.grid, f.N);
    const std::size_t points = f.grid.total_points();
    std::vector<std::complex<double>> buf(points);
    for (int c = 0; c < f.N; ++c) {
        for (std::size_t p = 0; p < points; ++p) buf[p] = f.coeffs[p * f.N + c];
        transform_component(f.grid, FFTW_BACKWARD, buf);
        for (std::size_t p = 0; p < points; ++p) out.values[p * f.N + c] = buf[p].real();
    }
    return out;
}

}  // namespace aqc
