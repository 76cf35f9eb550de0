#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aqc {

/// Uniform grid on the unit torus [0,1)^d, node x_i = index/dims_i.
struct GridSpec {
    int d = 0;
    std::vector<int> dims;  // per-axis sample counts, even, >= 4

    GridSpec() = default;
    GridSpec(int d_, std::vector<int> dims_);
    static GridSpec cubic(int d, int n) { return GridSpec(d, std::vector<int>(d, n)); }

    std::size_t total_points() const;
    bool operator==(const GridSpec& other) const = default;

    /// Linear index with x1 fastest: i1 + dims1*(i2 + dims2*(...)).
    std::size_t flatten(std::span<const int> idx) const;
    std::vector<int> unflatten(std::size_t linear) const;
    /// Signed integer frequency at index t along an axis (FFT layout).
    static int frequency(int t, int n) { return t <= (n - 1) / 2 ? t : t - n; }
    static bool is_nyquist(int t, int n) { return n % 2 == 0 && t == n / 2; }
};

/// Real R^N-valued function sampled on a torus grid. Layout: component
/// index fastest, then x1, then x2, ... (matches the AFLD file format).
struct PeriodicField {
    GridSpec grid;
    int N = 0;
    std::vector<double> values;

    PeriodicField() = default;
    PeriodicField(GridSpec g, int n_components);

    double& at(std::size_t point, int comp) { return values[point * N + comp]; }
    double at(std::size_t point, int comp) const { return values[point * N + comp]; }

    /// Max over grid points of the Euclidean norm of the fiber vector.
    double sup_norm() const;
    /// Componentwise grid average, fixed summation order.
    std::vector<double> mean() const;

    PeriodicField operator+(const PeriodicField& other) const;
    PeriodicField operator-(const PeriodicField& other) const;
    PeriodicField scaled(double factor) const;
};

/// DFT coefficients of a PeriodicField, same index layout over the integer
/// frequency lattice (FFT order along each axis).
struct SpectralField {
    GridSpec grid;
    int N = 0;
    std::vector<std::complex<double>> coeffs;

    SpectralField() = default;
    SpectralField(GridSpec g, int n_components);

    std::complex<double>& at(std::size_t point, int comp) { return coeffs[point * N + comp]; }
    const std::complex<double>& at(std::size_t point, int comp) const {
        return coeffs[point * N + comp];
    }
};

/// "AFLD" container: magic, u32 version=1, u32 d, u32 N, u32 dims[d],
/// float64 values (component fastest, then x1, x2, ... row-major), all
/// little-endian.
void save_afld(const PeriodicField& field, const std::string& path);
PeriodicField load_afld(const std::string& path);

}  // namespace aqc
