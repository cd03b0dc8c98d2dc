#pragma once

#include <functional>
#include <map>
#include <string>

#include "stochwave/errors.hpp"

namespace stochwave {

/// A closed-form travelling-wave profile with its named parameters and, when
/// the tanh/sech algebra allows, closed-form derivatives (so residual checks
/// carry no discretization error).
struct WaveProfile {
  std::function<double(double)> eval;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
  std::function<double(double)> d3;
  std::map<std::string, double> params;

  double param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw MissingParameters("profile parameter missing: " + key);
    return it->second;
  }
  bool has_param(const std::string& key) const { return params.count(key) > 0; }
};

/// Bistable front Phi(xi) = (1/2)[1 + tanh(-(sqrt2/4) xi)], speed
/// c = sqrt2 (1/2 - a). Limits Phi(-inf)=1, Phi(inf)=0.
WaveProfile nagumo_profile(double a);

/// Viscous front Phi(xi) = c - ((f+ - f-)/2) tanh(((f+ - f-)/(4 nu)) xi),
/// speed c = (f+ + f-)/2. f+ = f- gives the constant solution.
WaveProfile burgers_profile(double f_plus, double f_minus, double nu);

/// Depression soliton of u_t = 6 u u_x - u_xxx: Phi(xi) = A sech^2(B xi)
/// with A = -c/2, B = sqrt(c)/2, fixed by zero residual of the travelling
/// substitution into the equation.
WaveProfile kdv_soliton_profile(double c);

/// Envelope Phi(xi) = A sech(B xi) with B = A/sqrt2; carries c = 2k and
/// omega = k^2 - A^2/2.
WaveProfile nls_soliton(double A, double k);

}  // namespace stochwave
