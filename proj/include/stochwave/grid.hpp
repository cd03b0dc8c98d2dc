#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "stochwave/errors.hpp"

namespace stochwave {

using cplx = std::complex<double>;

enum class Boundary { Periodic, FarField };

/// Uniform 1D grid. Periodic grids sample [x_min, x_max) with spacing
/// (x_max-x_min)/n; FarField grids sample [x_min, x_max] with spacing
/// (x_max-x_min)/(n-1) and pin the two edge nodes to far-field values.
struct SpatialGrid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n = 8;
  Boundary boundary = Boundary::Periodic;

  SpatialGrid() = default;
  SpatialGrid(double xmin, double xmax, int nodes, Boundary b)
      : x_min(xmin), x_max(xmax), n(nodes), boundary(b) {
    if (!(x_max > x_min)) throw InvalidGrid("grid requires x_max > x_min");
    if (n < 8) throw InvalidGrid("grid requires n >= 8");
  }

  double length() const { return x_max - x_min; }
  double dx() const {
    return boundary == Boundary::Periodic ? length() / n : length() / (n - 1);
  }
  double node(int i) const { return x_min + i * dx(); }
  bool periodic() const { return boundary == Boundary::Periodic; }

  bool operator==(const SpatialGrid& o) const {
    return x_min == o.x_min && x_max == o.x_max && n == o.n && boundary == o.boundary;
  }
};

/// Complex-valued samples on a grid. Real models keep is_real set and the
/// imaginary parts exactly zero.
struct ScalarField {
  SpatialGrid grid;
  std::vector<cplx> values;
  bool is_real = true;

  ScalarField() = default;
  ScalarField(SpatialGrid g, bool real_field)
      : grid(g), values(static_cast<std::size_t>(g.n), cplx(0.0, 0.0)), is_real(real_field) {}

  int size() const { return grid.n; }
  double x(int i) const { return grid.node(i); }

  static ScalarField sample_real(const SpatialGrid& g, const std::function<double(double)>& f) {
    ScalarField out(g, true);
    for (int i = 0; i < g.n; ++i) out.values[i] = cplx(f(g.node(i)), 0.0);
    return out;
  }
  static ScalarField sample_complex(const SpatialGrid& g, const std::function<cplx(double)>& f) {
    ScalarField out(g, false);
    for (int i = 0; i < g.n; ++i) out.values[i] = f(g.node(i));
    return out;
  }
};

enum class DerivScheme { CentralFD2, CentralFD4, Spectral };

struct DerivOp {
  DerivScheme scheme = DerivScheme::CentralFD2;
  int order = 1;  // 1, 2 or 3
};

/// order-th spatial derivative on the same grid. Spectral requires a
/// periodic grid; FD stencils switch to one-sided forms only at FarField
/// boundary nodes.
ScalarField spatial_deriv(const ScalarField& f, const DerivOp& op);

/// Quadrature of |f|^2 over the grid (trapezoid on FarField, rectangle on
/// periodic).
double mass_l2(const ScalarField& f);

/// Index range [lo, hi) covering the central `fraction` of the grid.
std::pair<int, int> interior_range(const SpatialGrid& g, double fraction);

/// L2 norm (quadrature-weighted) over the interior fraction.
double l2_norm_interior(const ScalarField& f, double fraction);

/// Sup norm over the interior fraction.
double sup_norm_interior(const ScalarField& f, double fraction);

namespace field_ops {

inline void axpy(ScalarField& y, cplx alpha, const ScalarField& x) {
  for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] += alpha * x.values[i];
}

inline ScalarField lin_comb(cplx a, const ScalarField& f, cplx b, const ScalarField& g) {
  ScalarField out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = a * f.values[i] + b * g.values[i];
  out.is_real = f.is_real && g.is_real && a.imag() == 0.0 && b.imag() == 0.0;
  return out;
}

bool all_finite(const ScalarField& f);

}  // namespace field_ops

}  // namespace stochwave
