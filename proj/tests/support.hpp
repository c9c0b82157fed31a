#pragma once

// Random polynomials and forms shared by the unit, property and acceptance tests.

#include <algorithm>
#include <cmath>

#include "ncalc/expr.hpp"
#include "ncalc/form.hpp"
#include "ncalc/poly.hpp"
#include "ncalc/random.hpp"

namespace ncalc::testing {

inline AlgebraPtr quaternions() { return builtin_algebra("quaternion"); }

inline Monomial random_monomial(const AlgebraPtr& alg, Rng& rng, std::size_t degree, double scale = 1.0) {
  Monomial m;
  for (std::size_t k = 0; k <= degree; ++k) m.coeffs.push_back(random_element(alg, rng, scale));
  m.slots.assign(degree, 0);
  return m;
}

/// Sum of one random monomial per degree 0..degree.
inline NoncommPoly random_poly(const AlgebraPtr& alg, Rng& rng, std::size_t degree, double scale = 1.0) {
  NoncommPoly p(alg);
  for (std::size_t d = 0; d <= degree; ++d) p += NoncommPoly::monomial(random_monomial(alg, rng, d, scale));
  return p;
}

/// Sum of `terms` products f0 (x) f1 (x) .. with random polynomial factors,
/// alternated so the result is a form.
inline TensorPoly random_tensor_form(const AlgebraPtr& alg, Rng& rng, std::size_t degree, std::size_t poly_degree,
                                     std::size_t terms = 2) {
  TensorPoly t(alg, degree);
  for (std::size_t k = 0; k < terms; ++k) {
    TensorTerm term;
    for (std::size_t f = 0; f <= degree; ++f) term.factors.push_back(random_poly(alg, rng, f == 0 ? poly_degree : 0, 0.7));
    term.slots.assign(degree, 0);
    term.perm = Permutation::identity(degree);
    t.add_term(std::move(term));
  }
  return degree >= 2 ? alternate(t) : t;
}

inline double rel_error(const Element& got, const Element& want) {
  const double scale = want.coord_norm();
  const double diff = (got - want).coord_norm();
  return scale > 1e-12 ? diff / scale : diff;
}

inline double distance(const Element& a, const Element& b) { return (a - b).coord_norm(); }

}  // namespace ncalc::testing
