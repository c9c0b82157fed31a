#pragma once

// Polylinear maps A^n -> A in tensor form. A term with weight w, coefficients
// a0..an, slot maps F1..Fn and permutation p evaluates at (x1..xn) to
//   w * a0 (F1 x_{p[0]}) a1 ... (Fn x_{p[n-1]}) an
// with products taken left to right.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "ncalc/algebra.hpp"
#include "ncalc/permutation.hpp"
#include "ncalc/random.hpp"

namespace ncalc {

struct Term {
  double weight = 1.0;
  std::vector<Element> coeffs;     // n + 1
  std::vector<std::size_t> slots;  // n basis map indices
  Permutation perm;                // n
};

class PolyMap {
 public:
  PolyMap(AlgebraPtr algebra, std::size_t degree) : algebra_(std::move(algebra)), degree_(degree) {}
  PolyMap(AlgebraPtr algebra, std::size_t degree, std::vector<Term> terms);

  static PolyMap constant(const Element& value);
  /// The identity linear map 1 (x) 1.
  static PolyMap identity(const AlgebraPtr& algebra);
  /// Single term with identity permutation.
  static PolyMap single(std::vector<Element> coeffs, std::vector<std::size_t> slots = {}, double weight = 1.0);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  void add_term(Term term);

  /// Throws ArityMismatch or AlgebraMismatch.
  Element apply(std::span<const Element> args) const;
  Element operator()(std::span<const Element> args) const { return apply(args); }
  Element operator()(std::initializer_list<Element> args) const {
    return apply(std::span<const Element>(args.begin(), args.size()));
  }

  PolyMap& operator+=(const PolyMap& other);
  friend PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
  friend PolyMap operator-(PolyMap a, const PolyMap& b) { return a += b.scaled(-1.0); }
  PolyMap scaled(double s) const;

  /// Merges terms with equal coefficients, slots and permutation.
  PolyMap compact() const;

  nlohmann::json to_json() const;
  static PolyMap from_json(const AlgebraPtr& algebra, const nlohmann::json& doc);

 private:
  AlgebraPtr algebra_;
  std::size_t degree_;
  std::vector<Term> terms_;
};

/// f o sigma: (f o sigma)(x1..xn) = f(x_{sigma[0]}, .., x_{sigma[n-1]}).
PolyMap permuted(const PolyMap& f, const Permutation& sigma);
/// (1/n!) sum sign(sigma) f o sigma. Degree <= 6.
PolyMap alternate(const PolyMap& f);
PolyMap symmetrize(const PolyMap& f);
/// Product of the values: (p join r)(x1..x_{n+m}) = p(x1..xn) r(x_{n+1}..).
PolyMap tensor_join(const PolyMap& p, const PolyMap& r);
/// Exterior product by the shuffle formula. Throws NotSkew.
PolyMap wedge(const PolyMap& f, const PolyMap& g);
/// Composition of linear maps g o f; only identity slot maps are supported.
PolyMap compose_linear(const PolyMap& g, const PolyMap& f);

/// Largest |f(..a..b..) + f(..b..a..)| over adjacent transpositions and
/// random arguments, relative to the size of the values.
double skew_residual(const PolyMap& f, Rng& rng, int trials = 4);

/// J(j, i) = coordinate j of f(e_i).
Eigen::MatrixXd tensor_to_jacobian(const PolyMap& f);
/// The same matrix contracted from tensor components and structure constants.
Eigen::MatrixXd jacobian_via_structure_constants(const PolyMap& f);
/// Least-squares standard components over the family of basis maps. Throws
/// DeficientFamily when the residual exceeds 1e-8. Commutative algebras get
/// one term a_F (x) 1 per family member.
PolyMap jacobian_to_tensor(const AlgebraPtr& algebra, const Eigen::MatrixXd& jacobian,
                           const std::vector<std::string>& family, double* residual = nullptr);

bool is_commutative(const AlgebraSpec& algebra);

}  // namespace ncalc
