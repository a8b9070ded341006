#pragma once

// Background parameters and the diagonal double-null grid.
//
// Conventions used throughout:
//   * metric g = -Omega^2 du dv + r^2 g_{S^2}, Lambda < 0,
//   * axis r = 0 on {u = v}, conformal infinity on {v - u = v_infinity},
//   * AdS length unit k = sqrt(-3/Lambda),
//   * compactified radius rho = k * atan(r/k), rho -> k*pi/2 at infinity.

#include <cmath>
#include <stdexcept>

namespace adsnull {

struct Cosmology {
    double lambda = -3.0;      // cosmological constant, must be < 0
    double v_infinity = 0.0;   // slab width in v - u
    double length_unit = 1.0;  // k = sqrt(-3/lambda), kept exactly in sync

    Cosmology() : lambda(-3.0), v_infinity(0.0), length_unit(1.0) {}
    Cosmology(double lambda_, double v_infinity_)
        : lambda(lambda_), v_infinity(v_infinity_),
          length_unit(std::sqrt(-3.0 / lambda_)) {
        if (!(lambda < 0.0))
            throw std::invalid_argument("Cosmology: lambda must be negative");
        if (!(v_infinity > 0.0))
            throw std::invalid_argument("Cosmology: v_infinity must be positive");
    }

    double k() const { return length_unit; }

    // rho value of conformal infinity
    double rho_infinity() const { return 0.5 * M_PI * length_unit; }
};

inline Cosmology standard_ads(double lambda = -3.0) {
    // slab width of the unrescaled AdS solution: v_infinity = k*pi
    double k = std::sqrt(-3.0 / lambda);
    return Cosmology(lambda, M_PI * k);
}

// Null grid aligned with the characteristics: nodes (u_i, v_j) = (i*h, j*h)
// restricted to 0 <= j - i <= n_per_slab. A "slice" is a constant-u line,
// a "column" is a constant (v-u) diagonal. h divides v_infinity exactly so
// the boundaries u = v and v - u = v_infinity pass through grid nodes.
struct DiagonalGrid {
    double h = 0.0;
    int n_per_slab = 0;   // n_per_slab * h == v_infinity
    int u_steps = 0;      // slices run i = 0 .. u_steps

    static DiagonalGrid make(const Cosmology& c, int n_per_slab, double target_u) {
        if (n_per_slab <= 0)
            throw std::invalid_argument("DiagonalGrid: n_per_slab must be positive");
        DiagonalGrid g;
        g.n_per_slab = n_per_slab;
        g.h = c.v_infinity / n_per_slab;
        g.u_steps = (int)std::ceil(target_u / g.h - 1e-12);
        if (g.u_steps < 0) g.u_steps = 0;
        return g;
    }

    double u_of(int i) const { return i * h; }
    double v_of(int j) const { return j * h; }
    int nodes_per_slice() const { return n_per_slab + 1; }
};

} // namespace adsnull
