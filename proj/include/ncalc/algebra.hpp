#pragma once

// Finite-dimensional associative algebras over the reals, given by structure
// constants C[i][j][p] with e_i e_j = C[i][j][p] e_p.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "ncalc/error.hpp"

namespace ncalc {

enum class NormKind { Euclidean, MinkowskiPseudo, Quadratic };

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Description used to build an AlgebraSpec. Validation happens in
/// AlgebraSpec::create, never here.
struct AlgebraConfig {
  std::string name = "custom";
  std::size_t dim = 0;
  std::size_t unit = 0;
  std::vector<double> structure;  // dim^3 entries, index (i*dim + j)*dim + p
  NormKind norm = NormKind::Euclidean;
  Eigen::MatrixXd norm_matrix;    // only for NormKind::Quadratic
  double norm_scale = 1.0;
  bool division = false;
  std::vector<std::string> basis_names;  // defaults to e0, e1, ...
  std::vector<std::pair<std::string, Eigen::MatrixXd>> basis_maps;  // "E" is added
};

class AlgebraSpec {
 public:
  /// Validates the configuration: unit law, associativity and the basis map
  /// shapes. Throws Error{MalformedSpec | BadUnit | NonAssociative}.
  static AlgebraPtr create(AlgebraConfig config);

  const std::string& name() const { return product_->name; }
  std::size_t dim() const { return product_->dim; }
  std::size_t unit_index() const { return product_->unit; }
  bool division() const { return product_->division; }

  double constant(std::size_t i, std::size_t j, std::size_t p) const {
    return product_->structure[(i * dim() + j) * dim() + p];
  }

  /// Nonzero structure constants of e_i e_j as (p, value) pairs.
  std::span<const std::pair<std::size_t, double>> product_terms(std::size_t i,
                                                                std::size_t j) const {
    return product_->sparse[i * dim() + j];
  }

  NormKind norm_kind() const { return norm_kind_; }
  bool is_true_norm() const { return true_norm_; }
  double norm_scale() const { return norm_scale_; }
  const Eigen::MatrixXd& norm_matrix() const { return norm_matrix_; }

  std::size_t basis_map_count() const { return product_->maps.size(); }
  const std::string& basis_map_name(std::size_t index) const { return product_->maps[index].first; }
  const Eigen::MatrixXd& basis_map(std::size_t index) const { return product_->maps[index].second; }
  /// Index of a registered basis map; "E" is always index 0.
  std::size_t basis_map_index(std::string_view name) const;
  bool has_basis_map(std::string_view name) const;

  const std::vector<std::string>& basis_names() const { return product_->basis_names; }

  /// Two specs are compatible when they share the product (a rescaled norm
  /// does not create a different algebra).
  bool same_structure(const AlgebraSpec& other) const { return product_ == other.product_; }

  AlgebraPtr with_norm(NormKind kind, Eigen::MatrixXd matrix = {}) const;
  AlgebraPtr with_norm_scale(double scale) const;

  nlohmann::json to_json() const;

 private:
  struct Product {
    std::string name;
    std::size_t dim = 0;
    std::size_t unit = 0;
    bool division = false;
    std::vector<double> structure;
    std::vector<std::vector<std::pair<std::size_t, double>>> sparse;
    std::vector<std::pair<std::string, Eigen::MatrixXd>> maps;
    std::vector<std::string> basis_names;
  };

  AlgebraSpec() = default;
  void set_norm(NormKind kind, Eigen::MatrixXd matrix, double scale);

  std::shared_ptr<const Product> product_;
  NormKind norm_kind_ = NormKind::Euclidean;
  Eigen::MatrixXd norm_matrix_;
  double norm_scale_ = 1.0;
  bool true_norm_ = true;
};

/// An algebra number: coordinates over the basis of its AlgebraSpec.
class Element {
 public:
  /// Throws Error{MalformedSpec} on a size mismatch and Error{NonFinite} on
  /// NaN or infinite coordinates.
  Element(AlgebraPtr algebra, std::vector<double> coords);
  Element(AlgebraPtr algebra, std::initializer_list<double> coords)
      : Element(std::move(algebra), std::vector<double>(coords)) {}

  static Element zero(const AlgebraPtr& algebra);
  static Element unit(const AlgebraPtr& algebra);
  static Element scalar(const AlgebraPtr& algebra, double value);
  static Element basis(const AlgebraPtr& algebra, std::size_t index);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  const std::vector<double>& coord_vector() const { return coords_; }

  bool is_finite() const;
  /// Euclidean length of the coordinate column (independent of the algebra norm).
  double coord_norm() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(double s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= -1.0; }
  friend Element operator*(Element a, double s) { return a *= s; }
  friend Element operator*(double s, Element a) { return a *= s; }
  friend Element operator/(Element a, double s) { return a *= 1.0 / s; }
  friend Element operator*(const Element& a, const Element& b);

  /// Exact coordinate equality.
  friend bool operator==(const Element& a, const Element& b);

 private:
  struct Unchecked {};
  Element(AlgebraPtr algebra, std::vector<double> coords, Unchecked)
      : algebra_(std::move(algebra)), coords_(std::move(coords)) {}

  AlgebraPtr algebra_;
  std::vector<double> coords_;

  friend Element mul(const Element&, const Element&);
  friend Element apply_matrix(const Eigen::MatrixXd&, const Element&);
};

void require_same_algebra(const Element& a, const Element& b);
void require_same_algebra(const AlgebraSpec& a, const AlgebraSpec& b);

Element mul(const Element& x, const Element& y);
Element commutator(const Element& a, const Element& b);

/// Left-multiplication matrix L with (x y) = L * y.
Eigen::MatrixXd left_multiplication(const Element& x);

/// Inverse by solving the left-multiplication system. Works in any algebra;
/// zero divisors raise Error{SingularElement}.
Element inv(const Element& x);
/// Throws Error{NotDivisionAlgebra} unless the algebra is flagged as a
/// division algebra.
void require_division(const AlgebraSpec& algebra);

double norm(const Element& x);
/// Matrix-vector action of a registered basis map on the coordinates.
Element apply_basis_map(std::string_view name, const Element& x);
Element apply_basis_map(std::size_t index, const Element& x);
Element apply_matrix(const Eigen::MatrixXd& matrix, const Element& x);

/// Largest value of |ab| / (|a||b|) found by a deterministic stream of
/// random sphere samples interleaved with coordinate hill climbing. The
/// result only grows with the evaluation budget.
double product_operator_norm(const AlgebraPtr& algebra, std::size_t budget = 20000,
                             std::uint64_t seed = 42);

AlgebraPtr rescale_norm(const AlgebraPtr& algebra, double factor);

/// Builtins: real, complex, hyperbolic, quaternion.
AlgebraPtr builtin_algebra(std::string_view name);
/// Parses the JSON algebra document.
AlgebraPtr make_algebra(const nlohmann::json& document);
AlgebraPtr load_algebra_file(const std::string& path);

/// Exhaustive check of the associativity identity on structure constants;
/// returns the largest violation.
double associativity_defect(const AlgebraSpec& algebra);

}  // namespace ncalc
