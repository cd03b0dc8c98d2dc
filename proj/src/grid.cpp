#include "stochwave/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace stochwave {

namespace {

// Cached forward/backward c2c plans per size. Plans are created with
// FFTW_UNALIGNED so they can execute on any caller buffer; creation is
// serialized (FFTW planning is not thread-safe), execution is.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

PlanPair& plans_for(int n) {
  static std::mutex mtx;
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> a(n), b(n);
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                           reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                           reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, p).first->second;
}

std::vector<double> wavenumbers(int n, double length) {
  std::vector<double> k(n);
  const double dk = 2.0 * M_PI / length;
  for (int m = 0; m < n; ++m) {
    const int mm = (m <= n / 2) ? m : m - n;
    k[m] = dk * mm;
  }
  return k;
}

ScalarField spectral_deriv(const ScalarField& f, int order) {
  const int n = f.grid.n;
  auto& p = plans_for(n);
  std::vector<cplx> hat(n);
  {
    std::vector<cplx> in = f.values;
    fftw_execute_dft(p.fwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(hat.data()));
  }
  const auto k = wavenumbers(n, f.grid.length());
  for (int m = 0; m < n; ++m) {
    cplx mult = std::pow(cplx(0.0, k[m]), order);
    // The unmatched Nyquist mode has no well-defined odd derivative.
    if (n % 2 == 0 && m == n / 2 && order % 2 == 1) mult = 0.0;
    hat[m] *= mult / static_cast<double>(n);
  }
  ScalarField out(f.grid, f.is_real);
  fftw_execute_dft(p.bwd, reinterpret_cast<fftw_complex*>(hat.data()),
                   reinterpret_cast<fftw_complex*>(out.values.data()));
  if (f.is_real)
    for (auto& v : out.values) v = cplx(v.real(), 0.0);
  return out;
}

// value at index i with periodic wrap
inline cplx at_p(const std::vector<cplx>& v, int n, int i) {
  i %= n;
  if (i < 0) i += n;
  return v[static_cast<std::size_t>(i)];
}

void fd_central(const ScalarField& f, int order, int width, ScalarField& out) {
  // width: 1 for FD2 stencils of order 1,2; 2 for FD2 order 3 and FD4 order
  // 1,2; 3 for FD4 order 3.
  const int n = f.grid.n;
  const double h = f.grid.dx();
  const auto& v = f.values;
  const bool per = f.grid.periodic();

  auto stencil = [&](int i, auto get) -> cplx {
    switch (order * 10 + width) {
      case 11:  // FD2 first derivative
        return (get(i + 1) - get(i - 1)) / (2.0 * h);
      case 21:  // FD2 second derivative
        return (get(i + 1) - 2.0 * get(i) + get(i - 1)) / (h * h);
      case 32:  // FD2 third derivative
        return (get(i + 2) - 2.0 * get(i + 1) + 2.0 * get(i - 1) - get(i - 2)) / (2.0 * h * h * h);
      case 12:  // FD4 first derivative
        return (-get(i + 2) + 8.0 * get(i + 1) - 8.0 * get(i - 1) + get(i - 2)) / (12.0 * h);
      case 22:  // FD4 second derivative
        return (-get(i + 2) + 16.0 * get(i + 1) - 30.0 * get(i) + 16.0 * get(i - 1) -
                get(i - 2)) /
               (12.0 * h * h);
      case 33:  // FD4 third derivative
        return (-get(i + 3) + 8.0 * get(i + 2) - 13.0 * get(i + 1) + 13.0 * get(i - 1) -
                8.0 * get(i - 2) + get(i - 3)) /
               (8.0 * h * h * h);
      default:
        throw OrderUnsupported("unsupported derivative order");
    }
  };

  if (per) {
    auto get = [&](int i) { return at_p(v, n, i); };
    for (int i = 0; i < n; ++i) out.values[i] = stencil(i, get);
    return;
  }

  auto get = [&](int i) { return v[static_cast<std::size_t>(i)]; };
  for (int i = width; i < n - width; ++i) out.values[i] = stencil(i, get);

  // One-sided fallbacks at the FarField edges. Residual norms are taken on
  // the interior, these only need to be sane.
  auto d1_fwd = [&](int i) {
    return (-3.0 * get(i) + 4.0 * get(i + 1) - get(i + 2)) / (2.0 * h);
  };
  auto d1_bwd = [&](int i) {
    return (3.0 * get(i) - 4.0 * get(i - 1) + get(i - 2)) / (2.0 * h);
  };
  auto d2_fwd = [&](int i) {
    return (2.0 * get(i) - 5.0 * get(i + 1) + 4.0 * get(i + 2) - get(i + 3)) / (h * h);
  };
  auto d2_bwd = [&](int i) {
    return (2.0 * get(i) - 5.0 * get(i - 1) + 4.0 * get(i - 2) - get(i - 3)) / (h * h);
  };
  auto d3_fwd = [&](int i) {
    return (-get(i) + 3.0 * get(i + 1) - 3.0 * get(i + 2) + get(i + 3)) / (h * h * h);
  };
  auto d3_bwd = [&](int i) {
    return (get(i) - 3.0 * get(i - 1) + 3.0 * get(i - 2) - get(i - 3)) / (h * h * h);
  };
  for (int i = 0; i < width; ++i) {
    const int j = n - 1 - i;
    switch (order) {
      case 1:
        out.values[i] = d1_fwd(i);
        out.values[j] = d1_bwd(j);
        break;
      case 2:
        out.values[i] = d2_fwd(i);
        out.values[j] = d2_bwd(j);
        break;
      case 3:
        out.values[i] = d3_fwd(i);
        out.values[j] = d3_bwd(j);
        break;
      default:
        throw OrderUnsupported("unsupported derivative order");
    }
  }
}

}  // namespace

ScalarField spatial_deriv(const ScalarField& f, const DerivOp& op) {
  if (op.order < 1 || op.order > 3) throw OrderUnsupported("derivative order must be 1, 2 or 3");
  if (op.scheme == DerivScheme::Spectral) {
    if (!f.grid.periodic())
      throw SpectralOnNonPeriodic("spectral derivatives require a periodic grid");
    return spectral_deriv(f, op.order);
  }
  ScalarField out(f.grid, f.is_real);
  const int width = (op.scheme == DerivScheme::CentralFD2) ? (op.order == 3 ? 2 : 1)
                                                           : (op.order == 3 ? 3 : 2);
  fd_central(f, op.order, width, out);
  if (f.is_real)
    for (auto& v : out.values) v = cplx(v.real(), 0.0);
  return out;
}

double mass_l2(const ScalarField& f) {
  const int n = f.grid.n;
  const double h = f.grid.dx();
  double acc = 0.0;
  if (f.grid.periodic()) {
    for (int i = 0; i < n; ++i) acc += std::norm(f.values[i]);
    return acc * h;
  }
  for (int i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += w * std::norm(f.values[i]);
  }
  return acc * h;
}

std::pair<int, int> interior_range(const SpatialGrid& g, double fraction) {
  fraction = std::clamp(fraction, 0.0, 1.0);
  const int skip = static_cast<int>(std::floor(g.n * (1.0 - fraction) / 2.0));
  return {skip, g.n - skip};
}

double l2_norm_interior(const ScalarField& f, double fraction) {
  auto [lo, hi] = interior_range(f.grid, fraction);
  const double h = f.grid.dx();
  double acc = 0.0;
  for (int i = lo; i < hi; ++i) acc += std::norm(f.values[i]);
  return std::sqrt(acc * h);
}

double sup_norm_interior(const ScalarField& f, double fraction) {
  auto [lo, hi] = interior_range(f.grid, fraction);
  double m = 0.0;
  for (int i = lo; i < hi; ++i) m = std::max(m, std::abs(f.values[i]));
  return m;
}

namespace field_ops {

bool all_finite(const ScalarField& f) {
  for (const auto& v : f.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace field_ops

}  // namespace stochwave
