#pragma once

#include <stdexcept>
#include <vector>

namespace cgmn {

/// Interior gridpoints of the unit interval; spacing is always 1/(N+1).
struct Grid1D {
    int n_interior;
    double spacing;

    explicit Grid1D(int n) : n_interior(n), spacing(1.0 / (n + 1)) {
        if (n < 1) throw std::invalid_argument("grid needs at least one interior point");
    }

    /// Coordinate of interior point i (0-based): x = (i+1) h.
    double x(int i) const { return (i + 1) * spacing; }
};

/// Interior gridpoints of a rectangle, row-major with x fastest.
struct Grid2D {
    int nx;
    int ny;
    double spacing;

    Grid2D(int nx_, int ny_, double h) : nx(nx_), ny(ny_), spacing(h) {
        if (nx_ < 1 || ny_ < 1) throw std::invalid_argument("grid needs at least one interior point");
        if (h <= 0.0) throw std::invalid_argument("spacing must be positive");
    }

    int size() const { return nx * ny; }
    double x(int idx) const { return (idx % nx + 1) * spacing; }
    double y(int idx) const { return (idx / nx + 1) * spacing; }
};

/// Per-gridpoint wavenumber field.
struct Medium {
    std::vector<double> wavenumber;

    explicit Medium(std::vector<double> k) : wavenumber(std::move(k)) {
        for (double v : wavenumber)
            if (v < 0.0) throw std::invalid_argument("wavenumber entries must be nonnegative");
    }

    static Medium constant(double k, int n) { return Medium(std::vector<double>(n, k)); }

    /// Background k0 with a rectangular anomaly [x0,x1]x[y0,y1] of value k_anomaly.
    static Medium with_anomaly(const Grid2D& grid, double k0, double k_anomaly,
                               double x0, double x1, double y0, double y1) {
        std::vector<double> k(static_cast<std::size_t>(grid.size()), k0);
        for (int i = 0; i < grid.size(); ++i) {
            const double x = grid.x(i), y = grid.y(i);
            if (x >= x0 && x <= x1 && y >= y0 && y <= y1)
                k[static_cast<std::size_t>(i)] = k_anomaly;
        }
        return Medium(std::move(k));
    }

    std::size_t size() const { return wavenumber.size(); }
};

}  // namespace cgmn
