#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stochwave/errors.hpp"
#include "stochwave/rng.hpp"

namespace stochwave {

/// One realization of a Brownian motion on a uniform time grid, together
/// with its running values and running time-integral. Fully determined by
/// (seed, path_index, level, n_steps): increments come from the
/// counter-based generator, so paths are reproducible and order-independent.
struct BrownianPath {
  double horizon = 1.0;
  int n_steps = 1;
  int level = 0;  // number of bridge refinements applied
  std::uint64_t seed = 0;
  std::uint64_t path_index = 0;
  std::vector<double> increments;     // n_steps draws, Var = dt
  std::vector<double> values;         // n_steps+1 running sums, values[0] = 0
  std::vector<double> time_integral;  // running trapezoid of int_0^t beta ds

  double dt() const { return horizon / n_steps; }
  double t(int i) const { return horizon * i / n_steps; }

  /// beta at time t (linear interpolation between knots).
  double value_at(double t) const;
  /// int_0^t beta ds by trapezoid on the path's knots.
  double integral_at(double t) const;

  /// Recompute values and time_integral from increments.
  void rebuild_running();

  /// Test hook: a path with prescribed knot values (increments derived).
  static BrownianPath from_values(double T, const std::vector<double>& values);
};

/// Fresh path with i.i.d. N(0, T/n_steps) increments keyed by
/// (seed, path_index, level=0, step).
BrownianPath sample_path(double T, int n_steps, std::uint64_t seed, std::uint64_t path_index);

/// Same Brownian path on 2x the steps: parent knots are kept bitwise,
/// midpoints are drawn by Brownian bridge, keyed by (seed, path_index,
/// level+1, parent_step).
BrownianPath refine_path(const BrownianPath& p);

/// CSV with columns t, beta, int_beta.
void write_path_csv(const BrownianPath& p, const std::string& filename);

}  // namespace stochwave
