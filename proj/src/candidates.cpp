#include "stochwave/candidates.hpp"

#include <cmath>

namespace stochwave {

double nagumo_wave_shift_rate(double sigma) {
  return std::sqrt(2.0) * sigma / std::sqrt(1.0 + sigma * sigma);
}

CandidateSolution nagumo_stochastic_wave(double a, double sigma) {
  if (sigma < 0.0) throw InvalidConfig("sigma must be >= 0");
  WaveProfile phi = nagumo_profile(a);
  const double c = phi.param("c");
  const double gamma = std::sqrt(1.0 + sigma * sigma);
  const double c_sigma = c / gamma;
  const double rho = nagumo_wave_shift_rate(sigma);
  CandidateSolution cand;
  cand.label = CandidateLabel::NagumoExact;
  cand.id = "nagumo-exact";
  cand.model = {ModelKind::Nagumo, a, 1.0, NoiseKind::Logistic, sigma, Interpretation::Ito};
  cand.expected_verdict = ExpectedVerdict::Valid;
  cand.eval = [phi, gamma, c_sigma, rho](double x, double t, const BrownianPath& path) {
    const double alpha = rho * path.value_at(t);
    return cplx(phi.eval(gamma * (x - c_sigma * t - alpha)), 0.0);
  };
  return cand;
}

CandidateSolution kdv_wadati_solution(double c, double sigma) {
  if (sigma < 0.0) throw InvalidConfig("sigma must be >= 0");
  WaveProfile phi = kdv_soliton_profile(c);
  CandidateSolution cand;
  cand.label = CandidateLabel::KdVWadati;
  cand.id = "kdv-wadati";
  cand.model = {ModelKind::KdV, 0.25, 1.0, NoiseKind::Additive, sigma, Interpretation::Ito};
  cand.expected_verdict = ExpectedVerdict::Valid;
  cand.eval = [phi, c, sigma](double x, double t, const BrownianPath& path) {
    const double z = x - c * t + 6.0 * sigma * path.integral_at(t);
    return cplx(phi.eval(z) + sigma * path.value_at(t), 0.0);
  };
  return cand;
}

CandidateSolution nls_strat_cs_solution(double A, double k, double sigma) {
  WaveProfile phi = nls_soliton(A, k);
  const double c = phi.param("c");
  const double omega = phi.param("omega");
  CandidateSolution cand;
  cand.label = CandidateLabel::NLSStratCs;
  cand.id = "nls-strat-cs";
  cand.model = {ModelKind::NLS, 0.25, 1.0, NoiseKind::Linear, sigma,
                Interpretation::Stratonovich};
  cand.expected_verdict = ExpectedVerdict::Valid;
  cand.eval = [phi, c, omega, k, sigma](double x, double t, const BrownianPath& path) {
    const double theta = k * x - omega * t - sigma * path.value_at(t);
    return phi.eval(x - c * t) * std::exp(cplx(0.0, theta));
  };
  return cand;
}

CandidateSolution ansatz_a_candidate(const WaveProfile& profile, double c, double sigma,
                                     double nu) {
  CandidateSolution cand;
  cand.label = CandidateLabel::AnsatzA;
  cand.id = "ansatz-a";
  cand.model = {ModelKind::Burgers, 0.25, nu, NoiseKind::Linear, sigma, Interpretation::Ito};
  // A constant profile degenerates to the homogeneous GBM solution.
  bool constant = true;
  const double p0 = profile.eval(0.0);
  for (double xi : {-7.3, -1.0, 2.5, 11.0})
    if (std::abs(profile.eval(xi) - p0) > 1e-14 * (1.0 + std::abs(p0))) constant = false;
  cand.expected_verdict = constant ? ExpectedVerdict::Valid : ExpectedVerdict::Invalid;
  WaveProfile phi = profile;
  cand.eval = [phi, c, sigma](double x, double t, const BrownianPath& path) {
    const double h = std::exp(sigma * path.value_at(t) - 0.5 * sigma * sigma * t);
    return cplx(phi.eval(x - c * t) * h, 0.0);
  };
  return cand;
}

CandidateSolution ansatz_b_candidate(double A, double k, double sigma) {
  WaveProfile phi = nls_soliton(A, k);
  const double c = phi.param("c");
  const double omega = phi.param("omega");
  CandidateSolution cand;
  cand.label = CandidateLabel::AnsatzB;
  cand.id = "ansatz-b";
  cand.model = {ModelKind::NLS, 0.25, 1.0, NoiseKind::Linear, sigma, Interpretation::Ito};
  cand.expected_verdict = ExpectedVerdict::Invalid;
  cand.eval = [phi, c, omega, k, sigma](double x, double t, const BrownianPath& path) {
    const double b = path.value_at(t);
    const cplx expo(sigma * b - 0.5 * sigma * sigma * t, k * x - omega * t);
    return phi.eval(x - c * t) * std::exp(expo);
  };
  return cand;
}

CandidateSolution ansatz_c_candidate(double A, double k, double sigma) {
  WaveProfile phi = nls_soliton(A, k);
  const double c = phi.param("c");
  const double omega = phi.param("omega");
  CandidateSolution cand;
  cand.label = CandidateLabel::AnsatzC;
  cand.id = "ansatz-c";
  cand.model = {ModelKind::NLS, 0.25, 1.0, NoiseKind::Linear, sigma, Interpretation::Ito};
  cand.expected_verdict = ExpectedVerdict::Invalid;
  cand.eval = [phi, c, omega, k, sigma](double x, double t, const BrownianPath& path) {
    const double theta =
        k * x - omega * t - sigma * path.value_at(t) + 0.5 * sigma * sigma * t;
    return phi.eval(x - c * t) * std::exp(cplx(0.0, theta));
  };
  return cand;
}

CandidateSolution burgers_homogeneous_gbm(double u0, double sigma, double nu) {
  CandidateSolution cand;
  cand.label = CandidateLabel::BurgersHomogeneousGBM;
  cand.id = "burgers-gbm";
  cand.model = {ModelKind::Burgers, 0.25, nu, NoiseKind::Linear, sigma, Interpretation::Ito};
  cand.expected_verdict = ExpectedVerdict::Valid;
  cand.eval = [u0, sigma](double, double t, const BrownianPath& path) {
    return cplx(u0 * std::exp(sigma * path.value_at(t) - 0.5 * sigma * sigma * t), 0.0);
  };
  return cand;
}

}  // namespace stochwave
