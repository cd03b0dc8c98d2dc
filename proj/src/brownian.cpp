#include "stochwave/brownian.hpp"

#include <cmath>
#include <cstdio>

namespace stochwave {

void BrownianPath::rebuild_running() {
  const double h = dt();
  values.assign(static_cast<std::size_t>(n_steps) + 1, 0.0);
  time_integral.assign(static_cast<std::size_t>(n_steps) + 1, 0.0);
  for (int i = 0; i < n_steps; ++i) {
    values[i + 1] = values[i] + increments[i];
    time_integral[i + 1] = time_integral[i] + 0.5 * (values[i] + values[i + 1]) * h;
  }
}

namespace {

double interp(const std::vector<double>& y, double T, int n, double t, const char* what) {
  if (t < -1e-12 || t > T * (1.0 + 1e-12)) throw OutOfHorizon(what);
  const double s = t / T * n;
  int i = static_cast<int>(std::floor(s));
  if (i >= n) i = n - 1;
  if (i < 0) i = 0;
  const double frac = s - i;
  return y[i] + frac * (y[i + 1] - y[i]);
}

}  // namespace

double BrownianPath::value_at(double tt) const {
  return interp(values, horizon, n_steps, tt, "value_at outside path horizon");
}

double BrownianPath::integral_at(double tt) const {
  return interp(time_integral, horizon, n_steps, tt, "integral_at outside path horizon");
}

BrownianPath BrownianPath::from_values(double T, const std::vector<double>& vals) {
  BrownianPath p;
  p.horizon = T;
  p.n_steps = static_cast<int>(vals.size()) - 1;
  p.increments.resize(p.n_steps);
  for (int i = 0; i < p.n_steps; ++i) p.increments[i] = vals[i + 1] - vals[i];
  p.rebuild_running();
  return p;
}

BrownianPath sample_path(double T, int n_steps, std::uint64_t seed, std::uint64_t path_index) {
  if (!(T > 0.0)) throw InvalidHorizon("path horizon must be positive");
  if (n_steps < 1) throw InvalidHorizon("path needs at least one step");
  BrownianPath p;
  p.horizon = T;
  p.n_steps = n_steps;
  p.seed = seed;
  p.path_index = path_index;
  p.level = 0;
  p.increments.resize(n_steps);
  const double sd = std::sqrt(T / n_steps);
  for (int i = 0; i < n_steps; ++i)
    p.increments[i] =
        sd * normal_at({seed, path_index, 0, static_cast<std::uint64_t>(i)});
  p.rebuild_running();
  return p;
}

BrownianPath refine_path(const BrownianPath& p) {
  BrownianPath q;
  q.horizon = p.horizon;
  q.n_steps = 2 * p.n_steps;
  q.seed = p.seed;
  q.path_index = p.path_index;
  q.level = p.level + 1;
  q.values.resize(static_cast<std::size_t>(q.n_steps) + 1);
  q.increments.resize(q.n_steps);
  const double h = p.dt();
  const double half_sd = 0.5 * std::sqrt(h);  // bridge midpoint sd = sqrt(dt/4)
  for (int i = 0; i < p.n_steps; ++i) {
    const double a = p.values[i];
    const double b = p.values[i + 1];
    const double mid =
        0.5 * (a + b) + half_sd * normal_at({q.seed, q.path_index,
                                             static_cast<std::uint64_t>(q.level),
                                             static_cast<std::uint64_t>(i)});
    q.values[2 * i] = a;  // parent knots kept bitwise
    q.values[2 * i + 1] = mid;
    q.increments[2 * i] = mid - a;
    q.increments[2 * i + 1] = b - mid;
  }
  q.values[q.n_steps] = p.values[p.n_steps];
  q.time_integral.assign(static_cast<std::size_t>(q.n_steps) + 1, 0.0);
  const double hh = q.dt();
  for (int i = 0; i < q.n_steps; ++i)
    q.time_integral[i + 1] = q.time_integral[i] + 0.5 * (q.values[i] + q.values[i + 1]) * hh;
  return q;
}

void write_path_csv(const BrownianPath& p, const std::string& filename) {
  std::FILE* f = std::fopen(filename.c_str(), "w");
  if (!f) throw Error("cannot open " + filename);
  std::fprintf(f, "t,beta,int_beta\n");
  for (int i = 0; i <= p.n_steps; ++i)
    std::fprintf(f, "%.16e,%.16e,%.16e\n", p.t(i), p.values[i], p.time_integral[i]);
  std::fclose(f);
}

}  // namespace stochwave
