#pragma once

#include <cmath>
#include <random>

#include "ncalc/algebra.hpp"

namespace ncalc {

using Rng = std::mt19937_64;

/// Gaussian coordinates scaled by `scale`.
inline Element random_element(const AlgebraPtr& algebra, Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> c(algebra->dim());
  for (double& v : c) v = scale * gauss(rng);
  return Element(algebra, std::move(c));
}

/// Uniform direction with unit coordinate length.
inline Element random_unit(const AlgebraPtr& algebra, Rng& rng) {
  for (;;) {
    Element e = random_element(algebra, rng);
    const double n = e.coord_norm();
    if (n > 1e-6) return e / n;
  }
}

/// Uniform point in the coordinate ball of the given radius.
inline Element random_in_ball(const AlgebraPtr& algebra, Rng& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::pow(u(rng), 1.0 / static_cast<double>(algebra->dim()));
  return random_unit(algebra, rng) * r;
}

}  // namespace ncalc
