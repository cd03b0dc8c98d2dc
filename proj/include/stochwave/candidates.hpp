#pragma once

#include <functional>
#include <string>

#include "stochwave/brownian.hpp"
#include "stochwave/grid.hpp"
#include "stochwave/model.hpp"
#include "stochwave/profiles.hpp"

namespace stochwave {

enum class Verdict { Valid, Invalid, Inconclusive };
enum class ExpectedVerdict { Valid, Invalid, Unknown };

enum class CandidateLabel {
  NagumoExact,
  KdVWadati,
  NLSStratCs,
  BurgersHomogeneousGBM,
  AnsatzA,
  AnsatzB,
  AnsatzC,
  Custom,
};

/// A closed-form map (x, t, path) -> value plus the model it claims to
/// solve and the verdict its construction predicts.
struct CandidateSolution {
  CandidateLabel label = CandidateLabel::Custom;
  std::string id = "custom";
  std::function<cplx(double x, double t, const BrownianPath&)> eval;
  ModelSpec model;
  ExpectedVerdict expected_verdict = ExpectedVerdict::Unknown;

  ScalarField sample(const SpatialGrid& g, double t, const BrownianPath& path) const {
    ScalarField out(g, !model.complex_field());
    for (int i = 0; i < g.n; ++i) out.values[i] = eval(g.node(i), t, path);
    if (out.is_real)
      for (auto& v : out.values) v = cplx(v.real(), 0.0);
    return out;
  }
};

/// Exact stochastic Nagumo front against the Ito equation with logistic
/// noise: u = Phi(sqrt(1+sigma^2) (x - c_sigma t - alpha_t)) with
/// c_sigma = c/sqrt(1+sigma^2). The shift alpha_t = rho beta_t carries
/// rho = sqrt(2) sigma / sqrt(1+sigma^2), the unique coefficient for which
/// the substitution residual vanishes (noise matching uses
/// Phi(1-Phi) = -sqrt(2) Phi').
CandidateSolution nagumo_stochastic_wave(double a, double sigma);

/// Shift coefficient rho of the Nagumo wave above.
double nagumo_wave_shift_rate(double sigma);

/// u = Phi_c(x - c t + 6 sigma int_0^t beta) + sigma beta_t against KdV
/// with additive noise.
CandidateSolution kdv_wadati_solution(double c, double sigma);

/// psi = Phi(x - ct) exp(i(kx - omega t - sigma beta_t)) against the
/// Stratonovich NLS equation.
CandidateSolution nls_strat_cs_solution(double A, double k, double sigma);

/// profile(x - ct) * exp(sigma beta_t - sigma^2 t / 2). Expected Invalid
/// against Burgers with linear noise unless the profile is constant, in
/// which case it coincides with the homogeneous GBM solution.
CandidateSolution ansatz_a_candidate(const WaveProfile& profile, double c, double sigma,
                                     double nu = 1.0);

/// psi = Phi(x-ct) exp(i(kx - omega t) + sigma beta_t - sigma^2 t / 2),
/// expected Invalid against the Ito NLS equation.
CandidateSolution ansatz_b_candidate(double A, double k, double sigma);

/// psi = Phi(x-ct) exp(i(kx - omega t - sigma beta_t + sigma^2 t / 2)),
/// expected Invalid against the Ito NLS equation.
CandidateSolution ansatz_c_candidate(double A, double k, double sigma);

/// u = u0 exp(sigma beta_t - sigma^2 t / 2), the spatially homogeneous
/// exact solution of Ito Burgers with linear noise.
CandidateSolution burgers_homogeneous_gbm(double u0, double sigma, double nu = 1.0);

}  // namespace stochwave
