#include "aqc/grid.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "AFLD I/O writes raw little-endian words");

namespace aqc {

GridSpec::GridSpec(int d_, std::vector<int> dims_) : d(d_), dims(std::move(dims_)) {
    if (d < 1 || static_cast<int>(dims.size()) != d)
        throw std::invalid_argument("grid: dimension mismatch");
    for (int n : dims)
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("grid: per-axis sample counts must be even and >= 4");
}

std::size_t GridSpec::total_points() const {
    std::size_t total = 1;
    for (int n : dims) total *= static_cast<std::size_t>(n);
    return total;
}

std::size_t GridSpec::flatten(std::span<const int> idx) const {
    std::size_t linear = 0;
    for (int axis = d - 1; axis >= 0; --axis)
        linear = linear * dims[axis] + static_cast<std::size_t>(idx[axis]);
    return linear;
}

std::vector<int> GridSpec::unflatten(std::size_t linear) const {
    std::vector<int> idx(d);
    for (int axis = 0; axis < d; ++axis) {
        idx[axis] = static_cast<int>(linear % dims[axis]);
        linear /= dims[axis];
    }
    return idx;
}

PeriodicField::PeriodicField(GridSpec g, int n_components)
    : grid(std::move(g)), N(n_components),
      values(grid.total_points() * static_cast<std::size_t>(n_components), 0.0) {
    if (N < 1) throw std::invalid_argument("field: fiber dimension must be positive");
}

double PeriodicField::sup_norm() const {
    const std::size_t points = grid.total_points();
    double best = 0.0;
    for (std::size_t p = 0; p < points; ++p) {
        double sq = 0.0;
        for (int c = 0; c < N; ++c) {
            const double v = values[p * N + c];
            sq += v * v;
        }
        best = std::max(best, sq);
    }
    return std::sqrt(best);
}

std::vector<double> PeriodicField::mean() const {
    const std::size_t points = grid.total_points();
    std::vector<double> acc(N, 0.0);
    for (std::size_t p = 0; p < points; ++p)
        for (int c = 0; c < N; ++c) acc[c] += values[p * N + c];
    for (double& v : acc) v /= static_cast<double>(points);
    return acc;
}

PeriodicField PeriodicField::operator+(const PeriodicField& other) const {
    if (!(grid == other.grid) || N != other.N)
        throw std::invalid_argument("field: shape mismatch");
    PeriodicField out = *this;
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] += other.values[i];
    return out;
}

PeriodicField PeriodicField::operator-(const PeriodicField& other) const {
    if (!(grid == other.grid) || N != other.N)
        throw std::invalid_argument("field: shape mismatch");
    PeriodicField out = *this;
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] -= other.values[i];
    return out;
}

PeriodicField PeriodicField::scaled(double factor) const {
    PeriodicField out = *this;
    for (double& v : out.values) v *= factor;
    return out;
}

SpectralField::SpectralField(GridSpec g, int n_components)
    : grid(std::move(g)), N(n_components),
      coeffs(grid.total_points() * static_cast<std::size_t>(n_components)) {
    if (N < 1) throw std::invalid_argument("field: fiber dimension must be positive");
}

namespace {

void write_u32(std::ofstream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t read_u32(std::ifstream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw std::runtime_error("afld: truncated file");
    return v;
}

}  // namespace

void save_afld(const PeriodicField& field, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("afld: cannot open '" + tmp + "' for writing");
        os.write("AFLD", 4);
        write_u32(os, 1);
        write_u32(os, static_cast<std::uint32_t>(field.grid.d));
        write_u32(os, static_cast<std::uint32_t>(field.N));
        for (int n : field.grid.dims) write_u32(os, static_cast<std::uint32_t>(n));
        os.write(reinterpret_cast<const char*>(field.values.data()),
                 static_cast<std::streamsize>(field.values.size() * sizeof(double)));
        if (!os) throw std::runtime_error("afld: write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

PeriodicField load_afld(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("afld: cannot open '" + path + "'");
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != "AFLD")
        throw std::runtime_error("afld: bad magic in '" + path + "'");
    const std::uint32_t version = read_u32(is);
    if (version != 1) throw std::runtime_error("afld: unsupported version");
    const int d = static_cast<int>(read_u32(is));
    const int n_comp = static_cast<int>(read_u32(is));
    if (d < 1 || d > 7 || n_comp < 1 || n_comp > 4096)
        throw std::runtime_error("afld: implausible header");
    std::vector<int> dims(d);
    for (int& n : dims) n = static_cast<int>(read_u32(is));
    PeriodicField field(GridSpec(d, dims), n_comp);
    is.read(reinterpret_cast<char*>(field.values.data()),
            static_cast<std::streamsize>(field.values.size() * sizeof(double)));
    if (!is) throw std::runtime_error("afld: truncated values in '" + path + "'");
    return field;
}

}  // namespace aqc
