#include "ncalc/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

namespace ncalc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotDivisionAlgebra: return "NotDivisionAlgebra";
    case ErrorKind::SingularElement: return "SingularElement";
    case ErrorKind::PseudoNorm: return "PseudoNorm";
    case ErrorKind::NonPositiveFactor: return "NonPositiveFactor";
    case ErrorKind::UnknownBasisMap: return "UnknownBasisMap";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnsupportedSlotMap: return "UnsupportedSlotMap";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DeficientFamily: return "DeficientFamily";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotIntegrable: return "NotIntegrable";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

constexpr double kStructureTol = 1e-12;

double defect(const std::vector<double>& c, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t p) { return c[(i * n + j) * n + p]; };
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t q = 0; q < n; ++q) {
          double left = 0.0, right = 0.0;
          for (std::size_t p = 0; p < n; ++p) {
            left += at(i, j, p) * at(p, k, q);
            right += at(j, k, p) * at(i, p, q);
          }
          worst = std::max(worst, std::abs(left - right));
        }
  return worst;
}

}  // namespace

AlgebraPtr AlgebraSpec::create(AlgebraConfig config) {
  const std::size_t n = config.dim;
  if (n == 0) throw Error(ErrorKind::MalformedSpec, "dimension must be positive");
  if (config.structure.size() != n * n * n)
    throw Error(ErrorKind::MalformedSpec, "expected dim^3 structure constants");
  for (double v : config.structure)
    if (!std::isfinite(v)) throw Error(ErrorKind::MalformedSpec, "structure constants must be finite");
  if (config.unit >= n) throw Error(ErrorKind::BadUnit, "unit index out of range");

  auto product = std::make_shared<Product>();
  product->name = config.name;
  product->dim = n;
  product->unit = config.unit;
  product->division = config.division;
  product->structure = std::move(config.structure);

  const auto& c = product->structure;
  auto at = [&](std::size_t i, std::size_t j, std::size_t p) { return c[(i * n + j) * n + p]; };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t p = 0; p < n; ++p) {
      const double delta = j == p ? 1.0 : 0.0;
      if (std::abs(at(config.unit, j, p) - delta) > kStructureTol ||
          std::abs(at(j, config.unit, p) - delta) > kStructureTol)
        throw Error(ErrorKind::BadUnit, "basis element " + std::to_string(config.unit) +
                                            " is not a two-sided unit");
    }
  if (n <= 8) {
    const double d = defect(c, n);
    if (d > 1e-9) throw Error(ErrorKind::NonAssociative, "associativity defect " + std::to_string(d));
  }

  product->sparse.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        if (at(i, j, p) != 0.0) product->sparse[i * n + j].emplace_back(p, at(i, j, p));

  product->maps.emplace_back("E", Eigen::MatrixXd::Identity(n, n));
  for (auto& [name, m] : config.basis_maps) {
    if (name == "E") {
      if (m.rows() != static_cast<Eigen::Index>(n) || m.cols() != static_cast<Eigen::Index>(n) ||
          !m.isIdentity(kStructureTol))
        throw Error(ErrorKind::MalformedSpec, "basis map E must be the identity");
      continue;
    }
    if (m.rows() != static_cast<Eigen::Index>(n) || m.cols() != static_cast<Eigen::Index>(n))
      throw Error(ErrorKind::MalformedSpec, "basis map " + name + " has the wrong shape");
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
      throw Error(ErrorKind::MalformedSpec, "basis map names start with an uppercase letter");
    product->maps.emplace_back(name, m);
  }

  if (config.basis_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) product->basis_names.push_back("e" + std::to_string(i));
  } else {
    if (config.basis_names.size() != n) throw Error(ErrorKind::MalformedSpec, "basis name count");
    product->basis_names = std::move(config.basis_names);
  }

  auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
  spec->product_ = std::move(product);
  spec->set_norm(config.norm, std::move(config.norm_matrix), config.norm_scale);
  return spec;
}

void AlgebraSpec::set_norm(NormKind kind, Eigen::MatrixXd matrix, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error(ErrorKind::NonPositiveFactor, "norm scale must be positive");
  norm_kind_ = kind;
  norm_scale_ = scale;
  const auto n = static_cast<Eigen::Index>(dim());
  switch (kind) {
    case NormKind::Euclidean:
      norm_matrix_ = Eigen::MatrixXd::Identity(n, n);
      true_norm_ = true;
      break;
    case NormKind::MinkowskiPseudo:
      norm_matrix_ = -Eigen::MatrixXd::Identity(n, n);
      norm_matrix_(static_cast<Eigen::Index>(unit_index()), static_cast<Eigen::Index>(unit_index())) = 1.0;
      true_norm_ = false;
      break;
    case NormKind::Quadratic: {
      if (matrix.rows() != n || matrix.cols() != n)
        throw Error(ErrorKind::MalformedSpec, "norm matrix has the wrong shape");
      norm_matrix_ = 0.5 * (matrix + matrix.transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(norm_matrix_);
      true_norm_ = eig.eigenvalues().minCoeff() > 0.0;
      break;
    }
  }
}

std::size_t AlgebraSpec::basis_map_index(std::string_view name) const {
  for (std::size_t i = 0; i < product_->maps.size(); ++i)
    if (product_->maps[i].first == name) return i;
  throw Error(ErrorKind::UnknownBasisMap, "no basis map named " + std::string(name) + " in " + this->name());
}

bool AlgebraSpec::has_basis_map(std::string_view name) const {
  return std::any_of(product_->maps.begin(), product_->maps.end(),
                     [&](const auto& m) { return m.first == name; });
}

AlgebraPtr AlgebraSpec::with_norm(NormKind kind, Eigen::MatrixXd matrix) const {
  auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec(*this));
  spec->set_norm(kind, std::move(matrix), norm_scale_);
  return spec;
}

AlgebraPtr AlgebraSpec::with_norm_scale(double scale) const {
  auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec(*this));
  spec->set_norm(norm_kind_, norm_matrix_, scale);
  return spec;
}

namespace {

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd json_matrix(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorKind::MalformedSpec, "matrix must be dim x dim");
  Eigen::MatrixXd m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw Error(ErrorKind::MalformedSpec, "matrix must be dim x dim");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

}  // namespace

nlohmann::json AlgebraSpec::to_json() const {
  const std::size_t n = dim();
  nlohmann::json doc;
  doc["name"] = name();
  doc["dim"] = n;
  doc["unit"] = unit_index();
  auto c = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    auto ci = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      auto cij = nlohmann::json::array();
      for (std::size_t p = 0; p < n; ++p) cij.push_back(constant(i, j, p));
      ci.push_back(cij);
    }
    c.push_back(ci);
  }
  doc["C"] = c;
  switch (norm_kind_) {
    case NormKind::Euclidean: doc["norm"] = "euclidean"; break;
    case NormKind::MinkowskiPseudo: doc["norm"] = "minkowski_pseudo"; break;
    case NormKind::Quadratic: doc["norm"] = {{"quadratic", matrix_json(norm_matrix_)}}; break;
  }
  if (norm_scale_ != 1.0) doc["norm_scale"] = norm_scale_;
  doc["division"] = division();
  doc["basis_names"] = basis_names();
  nlohmann::json maps = nlohmann::json::object();
  for (std::size_t k = 1; k < basis_map_count(); ++k) maps[basis_map_name(k)] = matrix_json(basis_map(k));
  doc["basis_maps"] = maps;
  return doc;
}

// ---- Element ----

Element::Element(AlgebraPtr algebra, std::vector<double> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw Error(ErrorKind::MalformedSpec, "element without algebra");
  if (coords_.size() != algebra_->dim())
    throw Error(ErrorKind::MalformedSpec, "expected " + std::to_string(algebra_->dim()) + " coordinates, got " +
                                              std::to_string(coords_.size()));
  if (!is_finite()) throw Error(ErrorKind::NonFinite, "element coordinates must be finite");
}

Element Element::zero(const AlgebraPtr& algebra) {
  return Element(algebra, std::vector<double>(algebra->dim(), 0.0), Unchecked{});
}

Element Element::unit(const AlgebraPtr& algebra) { return basis(algebra, algebra->unit_index()); }

Element Element::scalar(const AlgebraPtr& algebra, double value) {
  std::vector<double> c(algebra->dim(), 0.0);
  c[algebra->unit_index()] = value;
  return Element(algebra, std::move(c));
}

Element Element::basis(const AlgebraPtr& algebra, std::size_t index) {
  if (index >= algebra->dim()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  std::vector<double> c(algebra->dim(), 0.0);
  c[index] = 1.0;
  return Element(algebra, std::move(c), Unchecked{});
}

bool Element::is_finite() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double v) { return std::isfinite(v); });
}

double Element::coord_norm() const {
  double s = 0.0;
  for (double v : coords_) s += v * v;
  return std::sqrt(s);
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Element& Element::operator*=(double s) {
  for (double& v : coords_) v *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) { return mul(a, b); }

bool operator==(const Element& a, const Element& b) {
  return a.algebra_->same_structure(*b.algebra_) && a.coords_ == b.coords_;
}

void require_same_algebra(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (!a.same_structure(b))
    throw Error(ErrorKind::AlgebraMismatch, "operands belong to " + a.name() + " and " + b.name());
}

void require_same_algebra(const Element& a, const Element& b) {
  require_same_algebra(*a.algebra(), *b.algebra());
}

Element mul(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const auto& alg = *x.algebra();
  const std::size_t n = alg.dim();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords_[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const double xy = x.coords_[i] * y.coords_[j];
      if (xy == 0.0) continue;
      for (const auto& [p, c] : alg.product_terms(i, j)) out[p] += xy * c;
    }
  }
  return Element(x.algebra_, std::move(out), Element::Unchecked{});
}

Element commutator(const Element& a, const Element& b) { return mul(a, b) - mul(b, a); }

Eigen::MatrixXd left_multiplication(const Element& x) {
  const auto& alg = *x.algebra();
  const std::size_t n = alg.dim();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [p, c] : alg.product_terms(i, j)) l(p, j) += x[i] * c;
  return l;
}

Element inv(const Element& x) {
  const auto& alg = x.algebra();
  if (x.coord_norm() < 1e-12) throw Error(ErrorKind::SingularElement, "cannot invert zero");
  const Eigen::MatrixXd l = left_multiplication(x);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(l);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularElement, "element is a zero divisor");
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(alg->dim()));
  unit(static_cast<Eigen::Index>(alg->unit_index())) = 1.0;
  const Eigen::VectorXd y = lu.solve(unit);
  Element result(alg, std::vector<double>(y.data(), y.data() + y.size()));
  // In a finite-dimensional associative algebra a right inverse is two-sided;
  // the check guards against ill-conditioned solves.
  const Element check = mul(result, x) - Element::unit(alg);
  if (check.coord_norm() > 1e-9 * std::max(1.0, result.coord_norm() * x.coord_norm()))
    throw Error(ErrorKind::SingularElement, "inverse is numerically unreliable");
  return result;
}

void require_division(const AlgebraSpec& algebra) {
  if (!algebra.division())
    throw Error(ErrorKind::NotDivisionAlgebra, algebra.name() + " is not a division algebra");
}

double norm(const Element& x) {
  const auto& alg = *x.algebra();
  const Eigen::Map<const Eigen::VectorXd> v(x.coords().data(), static_cast<Eigen::Index>(x.dim()));
  double q = 0.0;
  switch (alg.norm_kind()) {
    case NormKind::Euclidean: q = v.squaredNorm(); break;
    case NormKind::MinkowskiPseudo: q = std::abs(v.dot(alg.norm_matrix() * v)); break;
    case NormKind::Quadratic: q = std::max(0.0, v.dot(alg.norm_matrix() * v)); break;
  }
  return alg.norm_scale() * std::sqrt(q);
}

Element apply_matrix(const Eigen::MatrixXd& matrix, const Element& x) {
  const Eigen::Map<const Eigen::VectorXd> v(x.coords().data(), static_cast<Eigen::Index>(x.dim()));
  const Eigen::VectorXd r = matrix * v;
  return Element(x.algebra_, std::vector<double>(r.data(), r.data() + r.size()), Element::Unchecked{});
}

Element apply_basis_map(std::size_t index, const Element& x) {
  if (index == 0) return x;
  return apply_matrix(x.algebra()->basis_map(index), x);
}

Element apply_basis_map(std::string_view name, const Element& x) {
  return apply_basis_map(x.algebra()->basis_map_index(name), x);
}

double product_operator_norm(const AlgebraPtr& algebra, std::size_t budget, std::uint64_t seed) {
  if (!algebra->is_true_norm())
    throw Error(ErrorKind::PseudoNorm, "operator norm needs a true norm");
  const std::size_t n = algebra->dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto ratio = [&](const std::vector<double>& a, const std::vector<double>& b) {
    const Element ea(algebra, a), eb(algebra, b);
    const double na = norm(ea), nb = norm(eb);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return norm(mul(ea, eb)) / (na * nb);
  };
  auto random_vector = [&] {
    std::vector<double> v(n);
    for (double& c : v) c = gauss(rng);
    return v;
  };

  std::vector<double> best_a = random_vector(), best_b = random_vector();
  double best = ratio(best_a, best_b);
  double step = 0.5;
  std::size_t used = 1;
  // Rounds of 32 fresh samples followed by 32 coordinate climbing moves from
  // the best pair. The running maximum never decreases as budget grows.
  while (used < budget) {
    for (int s = 0; s < 32 && used < budget; ++s, ++used) {
      auto a = random_vector(), b = random_vector();
      const double r = ratio(a, b);
      if (r > best) best = r, best_a = std::move(a), best_b = std::move(b);
    }
    for (int s = 0; s < 32 && used < budget; ++s, ++used) {
      auto a = best_a, b = best_b;
      const std::size_t coord = static_cast<std::size_t>(rng() % (2 * n));
      const double delta = (rng() & 1U ? step : -step) * (1.0 + std::abs(gauss(rng)));
      (coord < n ? a[coord] : b[coord - n]) += delta;
      const double r = ratio(a, b);
      if (r > best) {
        best = r, best_a = std::move(a), best_b = std::move(b);
      } else {
        step = std::max(step * 0.97, 1e-6);
      }
    }
  }
  return best;
}

AlgebraPtr rescale_norm(const AlgebraPtr& algebra, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw Error(ErrorKind::NonPositiveFactor, "rescale factor must be positive");
  return algebra->with_norm_scale(algebra->norm_scale() * factor);
}

double associativity_defect(const AlgebraSpec& algebra) {
  std::vector<double> c(algebra.dim() * algebra.dim() * algebra.dim());
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) c[(i * n + j) * n + p] = algebra.constant(i, j, p);
  return defect(c, n);
}

// ---- builtins ----

namespace {

AlgebraConfig table_config(std::string name, std::size_t n,
                           const std::vector<std::vector<std::pair<int, std::size_t>>>& table) {
  // table[i][j] = (sign, p): e_i e_j = sign * e_p
  AlgebraConfig cfg;
  cfg.name = std::move(name);
  cfg.dim = n;
  cfg.structure.assign(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto [sign, p] = table[i][j];
      cfg.structure[(i * n + j) * n + p] = sign;
    }
  return cfg;
}

Eigen::MatrixXd conjugation2() {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2, 2);
  m(1, 1) = -1.0;
  return m;
}

AlgebraPtr make_builtin(std::string_view name) {
  if (name == "real") {
    auto cfg = table_config("real", 1, {{{1, 0}}});
    cfg.division = true;
    cfg.basis_names = {"1"};
    return AlgebraSpec::create(std::move(cfg));
  }
  if (name == "complex") {
    auto cfg = table_config("complex", 2, {{{1, 0}, {1, 1}}, {{1, 1}, {-1, 0}}});
    cfg.division = true;
    cfg.basis_names = {"1", "i"};
    cfg.basis_maps.emplace_back("I", conjugation2());
    return AlgebraSpec::create(std::move(cfg));
  }
  if (name == "hyperbolic") {
    auto cfg = table_config("hyperbolic", 2, {{{1, 0}, {1, 1}}, {{1, 1}, {1, 0}}});
    cfg.basis_names = {"1", "j"};
    cfg.basis_maps.emplace_back("I", conjugation2());
    return AlgebraSpec::create(std::move(cfg));
  }
  if (name == "quaternion") {
    // 0 = 1, 1 = i, 2 = j, 3 = k
    auto cfg = table_config("quaternion", 4,
                            {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                             {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                             {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                             {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}});
    cfg.division = true;
    cfg.basis_names = {"1", "i", "j", "k"};
    return AlgebraSpec::create(std::move(cfg));
  }
  throw Error(ErrorKind::MalformedSpec, "unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace

AlgebraPtr builtin_algebra(std::string_view name) {
  // Builtins are cached so elements created from separate lookups are compatible.
  static const AlgebraPtr real = make_builtin("real");
  static const AlgebraPtr complex = make_builtin("complex");
  static const AlgebraPtr hyperbolic = make_builtin("hyperbolic");
  static const AlgebraPtr quaternion = make_builtin("quaternion");
  if (name == "real") return real;
  if (name == "complex") return complex;
  if (name == "hyperbolic") return hyperbolic;
  if (name == "quaternion") return quaternion;
  return make_builtin(name);
}

AlgebraPtr make_algebra(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorKind::MalformedSpec, "algebra document must be an object");
    if (!doc.contains("dim") || !doc.contains("C"))
      throw Error(ErrorKind::MalformedSpec, "algebra document needs dim and C");
    AlgebraConfig cfg;
    const auto dim = doc.at("dim").get<long long>();
    if (dim <= 0) throw Error(ErrorKind::MalformedSpec, "dim must be positive");
    cfg.dim = static_cast<std::size_t>(dim);
    const std::size_t n = cfg.dim;
    cfg.name = doc.value("name", std::string("custom"));
    const auto unit = doc.value("unit", 0LL);
    if (unit < 0 || static_cast<std::size_t>(unit) >= n) throw Error(ErrorKind::BadUnit, "unit index out of range");
    cfg.unit = static_cast<std::size_t>(unit);
    cfg.division = doc.value("division", false);

    const auto& c = doc.at("C");
    if (!c.is_array() || c.size() != n) throw Error(ErrorKind::MalformedSpec, "C must be dim x dim x dim");
    cfg.structure.resize(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!c[i].is_array() || c[i].size() != n) throw Error(ErrorKind::MalformedSpec, "C must be dim x dim x dim");
      for (std::size_t j = 0; j < n; ++j) {
        if (!c[i][j].is_array() || c[i][j].size() != n)
          throw Error(ErrorKind::MalformedSpec, "C must be dim x dim x dim");
        for (std::size_t p = 0; p < n; ++p) cfg.structure[(i * n + j) * n + p] = c[i][j][p].get<double>();
      }
    }

    if (doc.contains("norm")) {
      const auto& nm = doc.at("norm");
      if (nm.is_string()) {
        const auto s = nm.get<std::string>();
        if (s == "euclidean") cfg.norm = NormKind::Euclidean;
        else if (s == "minkowski_pseudo") cfg.norm = NormKind::MinkowskiPseudo;
        else throw Error(ErrorKind::MalformedSpec, "unknown norm '" + s + "'");
      } else if (nm.is_object() && nm.contains("quadratic")) {
        cfg.norm = NormKind::Quadratic;
        cfg.norm_matrix = json_matrix(nm.at("quadratic"), n);
      } else {
        throw Error(ErrorKind::MalformedSpec, "norm must be a name or {\"quadratic\": matrix}");
      }
    }
    cfg.norm_scale = doc.value("norm_scale", 1.0);
    if (doc.contains("basis_maps")) {
      for (const auto& [key, value] : doc.at("basis_maps").items())
        cfg.basis_maps.emplace_back(key, json_matrix(value, n));
    }
    if (doc.contains("basis_names")) cfg.basis_names = doc.at("basis_names").get<std::vector<std::string>>();
    return AlgebraSpec::create(std::move(cfg));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

AlgebraPtr load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot open " + path);
  try {
    return make_algebra(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

}  // namespace ncalc
