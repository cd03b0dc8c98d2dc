#include "stochwave/profiles.hpp"

#include <cmath>

namespace stochwave {

namespace {

// Phi = alpha + beta * tanh(s xi) and its first three derivatives.
WaveProfile tanh_profile(double alpha, double beta, double s) {
  WaveProfile p;
  p.eval = [=](double xi) { return alpha + beta * std::tanh(s * xi); };
  p.d1 = [=](double xi) {
    const double sech = 1.0 / std::cosh(s * xi);
    return beta * s * sech * sech;
  };
  p.d2 = [=](double xi) {
    const double sech = 1.0 / std::cosh(s * xi);
    return -2.0 * beta * s * s * sech * sech * std::tanh(s * xi);
  };
  p.d3 = [=](double xi) {
    const double sech2 = 1.0 / (std::cosh(s * xi) * std::cosh(s * xi));
    const double tanh2 = std::tanh(s * xi) * std::tanh(s * xi);
    return -2.0 * beta * s * s * s * sech2 * (sech2 - 2.0 * tanh2);
  };
  return p;
}

}  // namespace

WaveProfile nagumo_profile(double a) {
  if (!(a > 0.0 && a < 1.0)) throw ThresholdOutOfRange("Nagumo requires 0 < a < 1");
  const double k = std::sqrt(2.0) / 4.0;
  WaveProfile p = tanh_profile(0.5, -0.5, k);  // tanh(-k xi) = -tanh(k xi)
  p.params = {{"a", a},
              {"c", std::sqrt(2.0) * (0.5 - a)},
              {"f_plus", 1.0},
              {"f_minus", 0.0}};
  return p;
}

WaveProfile burgers_profile(double f_plus, double f_minus, double nu) {
  if (!(nu > 0.0)) throw InvalidConfig("Burgers profile requires nu > 0");
  if (f_plus < f_minus) throw ReversedAsymptotes("Burgers front requires f+ >= f-");
  const double c = 0.5 * (f_plus + f_minus);
  const double m = 0.5 * (f_plus - f_minus);
  const double kappa = (f_plus - f_minus) / (4.0 * nu);
  WaveProfile p = tanh_profile(c, -m, kappa);
  if (f_plus == f_minus) {
    // constant solution; derivatives vanish
    p = tanh_profile(c, 0.0, 1.0);
  }
  p.params = {{"c", c}, {"nu", nu}, {"f_plus", f_plus}, {"f_minus", f_minus}};
  return p;
}

WaveProfile kdv_soliton_profile(double c) {
  if (!(c > 0.0)) throw NonpositiveSpeed("KdV soliton requires c > 0");
  const double B = 0.5 * std::sqrt(c);
  const double A = -0.5 * c;
  WaveProfile p;
  p.eval = [=](double xi) {
    const double sech = 1.0 / std::cosh(B * xi);
    return A * sech * sech;
  };
  p.d1 = [=](double xi) {
    const double sech = 1.0 / std::cosh(B * xi);
    return -2.0 * A * B * sech * sech * std::tanh(B * xi);
  };
  p.d2 = [=](double xi) {
    const double S = 1.0 / (std::cosh(B * xi) * std::cosh(B * xi));
    return A * B * B * (4.0 * S - 6.0 * S * S);
  };
  p.d3 = [=](double xi) {
    const double S = 1.0 / (std::cosh(B * xi) * std::cosh(B * xi));
    return 8.0 * A * B * B * B * S * std::tanh(B * xi) * (3.0 * S - 1.0);
  };
  p.params = {{"c", c}, {"A", A}, {"B", B}};
  return p;
}

WaveProfile nls_soliton(double A, double k) {
  if (!(A > 0.0)) throw NonpositiveAmplitude("NLS soliton requires A > 0");
  const double B = A / std::sqrt(2.0);
  WaveProfile p;
  p.eval = [=](double xi) { return A / std::cosh(B * xi); };
  p.d1 = [=](double xi) {
    const double sech = 1.0 / std::cosh(B * xi);
    return -A * B * sech * std::tanh(B * xi);
  };
  p.d2 = [=](double xi) {
    const double sech = 1.0 / std::cosh(B * xi);
    return A * B * B * (sech - 2.0 * sech * sech * sech);
  };
  p.d3 = [=](double xi) {
    const double sech = 1.0 / std::cosh(B * xi);
    return A * B * B * B * sech * std::tanh(B * xi) * (6.0 * sech * sech - 1.0);
  };
  p.params = {{"A", A}, {"B", B}, {"k", k}, {"c", 2.0 * k}, {"omega", k * k - 0.5 * A * A}};
  return p;
}

}  // namespace stochwave
