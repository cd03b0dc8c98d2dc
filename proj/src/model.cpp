#include "stochwave/model.hpp"

#include <cmath>

#include "stochwave/errors.hpp"

namespace stochwave {

void ModelSpec::validate() const {
  if (sigma < 0.0) throw InvalidConfig("sigma must be >= 0");
  if (kind == ModelKind::Nagumo && !(a > 0.0 && a < 1.0))
    throw ThresholdOutOfRange("Nagumo requires 0 < a < 1");
  if (kind == ModelKind::Burgers && !(nu > 0.0)) throw InvalidConfig("Burgers requires nu > 0");
}

std::string ModelSpec::name() const {
  switch (kind) {
    case ModelKind::Nagumo: return "nagumo";
    case ModelKind::Burgers: return "burgers";
    case ModelKind::KdV: return "kdv";
    case ModelKind::NLS: return "nls";
  }
  return "?";
}

DerivScheme default_scheme(const SpatialGrid& g) {
  return g.periodic() ? DerivScheme::Spectral : DerivScheme::CentralFD2;
}

namespace {

void require_compatible(const ModelSpec& m, const ScalarField& f) {
  if (m.complex_field() == f.is_real)
    throw IncompatibleField(m.complex_field() ? "NLS needs a complex field"
                                              : "real model needs a real field");
}

double g_of(NoiseKind k, double u) {
  switch (k) {
    case NoiseKind::Linear: return u;
    case NoiseKind::Logistic: return u * (1.0 - u);
    case NoiseKind::Additive: return 1.0;
  }
  return 0.0;
}

double g_prime_of(NoiseKind k, double u) {
  switch (k) {
    case NoiseKind::Linear: return 1.0;
    case NoiseKind::Logistic: return 1.0 - 2.0 * u;
    case NoiseKind::Additive: return 0.0;
  }
  return 0.0;
}

}  // namespace

ScalarField drift_eval(const ModelSpec& m, const ScalarField& f,
                       std::optional<DerivScheme> scheme) {
  require_compatible(m, f);
  const DerivScheme s = scheme.value_or(default_scheme(f.grid));
  ScalarField out(f.grid, f.is_real);
  switch (m.kind) {
    case ModelKind::Nagumo: {
      ScalarField uxx = spatial_deriv(f, {s, 2});
      for (int i = 0; i < f.size(); ++i) {
        const double u = f.values[i].real();
        out.values[i] = uxx.values[i] + u * (1.0 - u) * (u - m.a);
      }
      break;
    }
    case ModelKind::Burgers: {
      ScalarField ux = spatial_deriv(f, {s, 1});
      ScalarField uxx = spatial_deriv(f, {s, 2});
      for (int i = 0; i < f.size(); ++i)
        out.values[i] = m.nu * uxx.values[i] - f.values[i] * ux.values[i];
      break;
    }
    case ModelKind::KdV: {
      ScalarField ux = spatial_deriv(f, {s, 1});
      ScalarField uxxx = spatial_deriv(f, {s, 3});
      for (int i = 0; i < f.size(); ++i)
        out.values[i] = 6.0 * f.values[i] * ux.values[i] - uxxx.values[i];
      break;
    }
    case ModelKind::NLS: {
      ScalarField pxx = spatial_deriv(f, {s, 2});
      const cplx I(0.0, 1.0);
      for (int i = 0; i < f.size(); ++i)
        out.values[i] = I * pxx.values[i] + I * std::norm(f.values[i]) * f.values[i];
      out.is_real = false;
      break;
    }
  }
  if (f.is_real)
    for (auto& v : out.values) v = cplx(v.real(), 0.0);
  return out;
}

ScalarField diffusion_eval(const ModelSpec& m, const ScalarField& f) {
  require_compatible(m, f);
  ScalarField out(f.grid, f.is_real);
  if (m.kind == ModelKind::NLS) {
    const cplx mi(0.0, -1.0);
    for (int i = 0; i < f.size(); ++i) out.values[i] = mi * m.sigma * f.values[i];
    out.is_real = false;
    return out;
  }
  const NoiseKind g = (m.kind == ModelKind::KdV) ? NoiseKind::Additive : m.g_kind;
  for (int i = 0; i < f.size(); ++i)
    out.values[i] = cplx(m.sigma * g_of(g, f.values[i].real()), 0.0);
  return out;
}

ScalarField strat_drift_correction(const ModelSpec& m, const ScalarField& f) {
  require_compatible(m, f);
  ScalarField out(f.grid, f.is_real);
  if (m.kind == ModelKind::NLS) {
    // G = -i sigma psi, G' = -i sigma: -(1/2) G' G = +sigma^2 psi / 2.
    for (int i = 0; i < f.size(); ++i)
      out.values[i] = 0.5 * m.sigma * m.sigma * f.values[i];
    out.is_real = false;
    return out;
  }
  const NoiseKind g = (m.kind == ModelKind::KdV) ? NoiseKind::Additive : m.g_kind;
  for (int i = 0; i < f.size(); ++i) {
    const double u = f.values[i].real();
    out.values[i] =
        cplx(-0.5 * m.sigma * m.sigma * g_prime_of(g, u) * g_of(g, u), 0.0);
  }
  return out;
}

bool linearity_check(NoiseKind g_kind, const std::vector<std::pair<double, double>>& samples) {
  static const std::vector<std::pair<double, double>> defaults = {
      {2.0, 1.0}, {0.5, 1.0}, {-1.0, 0.25}, {3.0, 2.0}, {2.0, -0.5}, {0.1, 4.0}};
  const auto& pts = samples.empty() ? defaults : samples;
  for (const auto& [z, h] : pts) {
    const double lhs = g_of(g_kind, z * h);
    const double rhs = z * g_of(g_kind, h);
    if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(rhs))) return false;
  }
  return true;
}

}  // namespace stochwave
