#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stochwave/grid.hpp"

namespace stochwave {

enum class ModelKind { Nagumo, Burgers, KdV, NLS };
enum class NoiseKind { Linear, Logistic, Additive };
enum class Interpretation { Ito, Stratonovich };

/// One of the four model equations, normalized to the explicit form
/// du = F(u) dt + G(u) dbeta before any numerics. The NLS equation
/// "i dpsi = [...]dt + sigma psi dbeta" is divided through by i exactly
/// once, here: F(psi) = i psi_xx + i |psi|^2 psi, G(psi) = -i sigma psi.
struct ModelSpec {
  ModelKind kind = ModelKind::Burgers;
  double a = 0.25;    // Nagumo threshold, 0 < a < 1
  double nu = 1.0;    // Burgers viscosity, > 0
  NoiseKind g_kind = NoiseKind::Linear;
  double sigma = 0.0;
  Interpretation interpretation = Interpretation::Ito;

  void validate() const;
  bool complex_field() const { return kind == ModelKind::NLS; }
  std::string name() const;
};

/// F(f): the deterministic right-hand side. The derivative scheme defaults
/// to Spectral on periodic grids and CentralFD2 on FarField grids.
ScalarField drift_eval(const ModelSpec& m, const ScalarField& f,
                       std::optional<DerivScheme> scheme = std::nullopt);

/// G(f): the coefficient of dbeta.
ScalarField diffusion_eval(const ModelSpec& m, const ScalarField& f);

/// The term to add to the Ito drift so the Stratonovich form of the same
/// equation is equivalent: u -> -(1/2) G'(u) G(u). Identically zero for
/// additive noise.
ScalarField strat_drift_correction(const ModelSpec& m, const ScalarField& f);

/// True iff g is multiplicatively separable (g(z*h) = z*g(h)) on the given
/// (z, h) samples, i.e. linear. Defaults to a small built-in sample set.
bool linearity_check(NoiseKind g_kind,
                     const std::vector<std::pair<double, double>>& samples = {});

DerivScheme default_scheme(const SpatialGrid& g);

}  // namespace stochwave
