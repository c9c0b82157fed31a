#include "ncalc/polymap.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ncalc {

namespace {

constexpr std::size_t kMaxAlternationDegree = 6;

void check_term(const AlgebraPtr& algebra, std::size_t degree, const Term& t) {
  if (t.coeffs.size() != degree + 1 || t.slots.size() != degree || t.perm.size() != degree || !t.perm.valid())
    throw Error(ErrorKind::ArityMismatch, "term shape does not match degree " + std::to_string(degree));
  for (const auto& c : t.coeffs) require_same_algebra(*algebra, *c.algebra());
  for (std::size_t s : t.slots)
    if (s >= algebra->basis_map_count()) throw Error(ErrorKind::UnknownBasisMap, "slot map index out of range");
}

}  // namespace

PolyMap::PolyMap(AlgebraPtr algebra, std::size_t degree, std::vector<Term> terms)
    : algebra_(std::move(algebra)), degree_(degree) {
  terms_.reserve(terms.size());
  for (auto& t : terms) add_term(std::move(t));
}

void PolyMap::add_term(Term term) {
  check_term(algebra_, degree_, term);
  terms_.push_back(std::move(term));
}

PolyMap PolyMap::constant(const Element& value) {
  PolyMap f(value.algebra(), 0);
  f.add_term(Term{1.0, {value}, {}, Permutation::identity(0)});
  return f;
}

PolyMap PolyMap::identity(const AlgebraPtr& algebra) {
  return single({Element::unit(algebra), Element::unit(algebra)}, {0});
}

PolyMap PolyMap::single(std::vector<Element> coeffs, std::vector<std::size_t> slots, double weight) {
  if (coeffs.empty()) throw Error(ErrorKind::ArityMismatch, "a term needs at least one coefficient");
  const std::size_t n = coeffs.size() - 1;
  if (slots.empty()) slots.assign(n, 0);
  PolyMap f(coeffs.front().algebra(), n);
  f.add_term(Term{weight, std::move(coeffs), std::move(slots), Permutation::identity(n)});
  return f;
}

Element PolyMap::apply(std::span<const Element> args) const {
  if (args.size() != degree_)
    throw Error(ErrorKind::ArityMismatch,
                "expected " + std::to_string(degree_) + " arguments, got " + std::to_string(args.size()));
  for (const auto& a : args) require_same_algebra(*algebra_, *a.algebra());
  Element total = Element::zero(algebra_);
  for (const auto& t : terms_) {
    if (t.weight == 0.0) continue;
    Element acc = t.coeffs[0];
    for (std::size_t s = 0; s < degree_; ++s) {
      acc = mul(acc, apply_basis_map(t.slots[s], args[t.perm[s]]));
      acc = mul(acc, t.coeffs[s + 1]);
    }
    total += acc * t.weight;
  }
  return total;
}

PolyMap& PolyMap::operator+=(const PolyMap& other) {
  require_same_algebra(*algebra_, *other.algebra_);
  if (other.degree_ != degree_) throw Error(ErrorKind::ArityMismatch, "cannot add maps of different degree");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

PolyMap PolyMap::scaled(double s) const {
  PolyMap r = *this;
  for (auto& t : r.terms_) t.weight *= s;
  return r;
}

PolyMap PolyMap::compact() const {
  using Key = std::tuple<std::vector<std::vector<double>>, std::vector<std::size_t>, std::vector<std::size_t>>;
  std::map<Key, std::size_t> index;
  PolyMap out(algebra_, degree_);
  for (const auto& t : terms_) {
    Key key;
    for (const auto& c : t.coeffs) std::get<0>(key).push_back(c.coord_vector());
    std::get<1>(key) = t.slots;
    std::get<2>(key) = t.perm.image;
    auto [it, fresh] = index.emplace(std::move(key), out.terms_.size());
    if (fresh) out.terms_.push_back(t);
    else out.terms_[it->second].weight += t.weight;
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.weight == 0.0; });
  return out;
}

nlohmann::json PolyMap::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : t.coeffs) coeffs.push_back(c.coord_vector());
    nlohmann::json slots = nlohmann::json::array();
    for (std::size_t s : t.slots) slots.push_back(algebra_->basis_map_name(s));
    nlohmann::json perm = nlohmann::json::array();
    for (std::size_t v : t.perm.image) perm.push_back(v + 1);
    terms.push_back({{"w", t.weight}, {"coeffs", coeffs}, {"slots", slots}, {"perm", perm}});
  }
  return {{"degree", degree_}, {"terms", terms}};
}

PolyMap PolyMap::from_json(const AlgebraPtr& algebra, const nlohmann::json& doc) {
  try {
    const auto degree = doc.at("degree").get<std::size_t>();
    PolyMap f(algebra, degree);
    for (const auto& jt : doc.at("terms")) {
      Term t;
      t.weight = jt.value("w", 1.0);
      for (const auto& c : jt.at("coeffs")) t.coeffs.emplace_back(algebra, c.get<std::vector<double>>());
      if (jt.contains("slots")) {
        for (const auto& s : jt.at("slots")) t.slots.push_back(algebra->basis_map_index(s.get<std::string>()));
      } else {
        t.slots.assign(degree, 0);
      }
      if (jt.contains("perm")) {
        for (const auto& v : jt.at("perm")) {
          const auto k = v.get<long long>();
          if (k < 1) throw Error(ErrorKind::MalformedSpec, "perm entries are 1-based");
          t.perm.image.push_back(static_cast<std::size_t>(k - 1));
        }
      } else {
        t.perm = Permutation::identity(degree);
      }
      f.add_term(std::move(t));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

PolyMap permuted(const PolyMap& f, const Permutation& sigma) {
  if (sigma.size() != f.degree() || !sigma.valid())
    throw Error(ErrorKind::ArityMismatch, "permutation size does not match degree");
  std::vector<Term> terms = f.terms();
  for (auto& t : terms)
    for (auto& v : t.perm.image) v = sigma[v];
  return PolyMap(f.algebra(), f.degree(), std::move(terms));
}

namespace {

PolyMap average_over_S(const PolyMap& f, bool signed_sum) {
  const std::size_t n = f.degree();
  if (n > kMaxAlternationDegree) throw Error(ErrorKind::TooLarge, "alternation is capped at degree 6");
  PolyMap out(f.algebra(), n);
  const double scale = 1.0 / static_cast<double>(factorial(n));
  for (const auto& sigma : gen_S(n)) {
    const double w = scale * (signed_sum ? sigma.parity() : 1);
    out += permuted(f, sigma).scaled(w);
  }
  return out;
}

}  // namespace

PolyMap alternate(const PolyMap& f) {
  if (f.degree() == 0) throw Error(ErrorKind::InvalidArgument, "alternation needs degree >= 1");
  return average_over_S(f, true);
}

PolyMap symmetrize(const PolyMap& f) {
  if (f.degree() == 0) throw Error(ErrorKind::InvalidArgument, "symmetrization needs degree >= 1");
  return average_over_S(f, false);
}

PolyMap tensor_join(const PolyMap& p, const PolyMap& r) {
  require_same_algebra(*p.algebra(), *r.algebra());
  const std::size_t n = p.degree(), m = r.degree();
  PolyMap out(p.algebra(), n + m);
  for (const auto& a : p.terms())
    for (const auto& b : r.terms()) {
      Term t;
      t.weight = a.weight * b.weight;
      t.coeffs.assign(a.coeffs.begin(), a.coeffs.end() - 1);
      t.coeffs.push_back(mul(a.coeffs.back(), b.coeffs.front()));
      t.coeffs.insert(t.coeffs.end(), b.coeffs.begin() + 1, b.coeffs.end());
      t.slots = a.slots;
      t.slots.insert(t.slots.end(), b.slots.begin(), b.slots.end());
      t.perm.image = a.perm.image;
      for (std::size_t v : b.perm.image) t.perm.image.push_back(v + n);
      out.add_term(std::move(t));
    }
  return out;
}

double skew_residual(const PolyMap& f, Rng& rng, int trials) {
  const std::size_t n = f.degree();
  if (n < 2) return 0.0;
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Element> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(random_element(f.algebra(), rng));
    const Element base = f.apply(args);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto swapped = args;
      std::swap(swapped[i], swapped[i + 1]);
      const double r = (base + f.apply(swapped)).coord_norm() / std::max(1.0, base.coord_norm());
      worst = std::max(worst, r);
    }
  }
  return worst;
}

namespace {

void require_skew(const PolyMap& f) {
  if (f.degree() < 2) return;
  Rng rng(0x5eed);
  const double r = skew_residual(f, rng);
  if (r >= 1e-9) throw Error(ErrorKind::NotSkew, "map is not skew-symmetric (residual " + std::to_string(r) + ")");
}

}  // namespace

PolyMap wedge(const PolyMap& f, const PolyMap& g) {
  require_same_algebra(*f.algebra(), *g.algebra());
  const std::size_t p = f.degree(), q = g.degree(), n = p + q;
  if (n > kMaxAlternationDegree) throw Error(ErrorKind::TooLarge, "wedge is capped at total degree 6");
  require_skew(f);
  require_skew(g);
  const PolyMap joined = tensor_join(f, g);
  PolyMap out(f.algebra(), n);
  // Each shuffle lists the p chosen slots in order followed by the rest.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(p), true);
  do {
    Permutation sigma;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sigma.image.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
      if (!pick[i]) sigma.image.push_back(i);
    out += permuted(joined, sigma).scaled(sigma.parity());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

PolyMap compose_linear(const PolyMap& g, const PolyMap& f) {
  require_same_algebra(*f.algebra(), *g.algebra());
  if (f.degree() != 1 || g.degree() != 1) throw Error(ErrorKind::ArityMismatch, "compose_linear needs linear maps");
  auto identity_slots = [](const PolyMap& m) {
    return std::all_of(m.terms().begin(), m.terms().end(), [](const Term& t) { return t.slots[0] == 0; });
  };
  if (!identity_slots(f) || !identity_slots(g))
    throw Error(ErrorKind::UnsupportedSlotMap, "compose_linear supports identity slot maps only");
  PolyMap out(f.algebra(), 1);
  for (const auto& gt : g.terms())
    for (const auto& ft : f.terms())
      out.add_term(Term{gt.weight * ft.weight,
                        {mul(gt.coeffs[0], ft.coeffs[0]), mul(ft.coeffs[1], gt.coeffs[1])},
                        {0},
                        Permutation::identity(1)});
  return out;
}

Eigen::MatrixXd tensor_to_jacobian(const PolyMap& f) {
  if (f.degree() != 1) throw Error(ErrorKind::ArityMismatch, "Jacobian needs a linear map");
  const auto& alg = f.algebra();
  const auto n = static_cast<Eigen::Index>(alg->dim());
  Eigen::MatrixXd j(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Element e = Element::basis(alg, static_cast<std::size_t>(i));
    const Element v = f.apply(std::span<const Element>(&e, 1));
    for (Eigen::Index r = 0; r < n; ++r) j(r, i) = v[static_cast<std::size_t>(r)];
  }
  return j;
}

Eigen::MatrixXd jacobian_via_structure_constants(const PolyMap& f) {
  if (f.degree() != 1) throw Error(ErrorKind::ArityMismatch, "Jacobian needs a linear map");
  const auto& alg = *f.algebra();
  const std::size_t n = alg.dim();
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& t : f.terms()) {
    // d^{kr} e_k (F e_i) e_r: contract C^p_{k m} C^q_{p r} with F^m_i.
    Eigen::MatrixXd core = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
      const double dk = t.coeffs[0][k];
      if (dk == 0.0) continue;
      for (std::size_t r = 0; r < n; ++r) {
        const double d = dk * t.coeffs[1][r];
        if (d == 0.0) continue;
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
              core(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(m)) +=
                  d * alg.constant(k, m, p) * alg.constant(p, r, q);
      }
    }
    j += t.weight * core * alg.basis_map(t.slots[0]);
  }
  return j;
}

bool is_commutative(const AlgebraSpec& algebra) {
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        if (algebra.constant(i, j, p) != algebra.constant(j, i, p)) return false;
  return true;
}

PolyMap jacobian_to_tensor(const AlgebraPtr& algebra, const Eigen::MatrixXd& jacobian,
                           const std::vector<std::string>& family, double* residual) {
  const std::size_t n = algebra->dim();
  const auto ni = static_cast<Eigen::Index>(n);
  if (jacobian.rows() != ni || jacobian.cols() != ni)
    throw Error(ErrorKind::MalformedSpec, "Jacobian must be dim x dim");
  std::vector<std::size_t> maps;
  for (const auto& name : family) maps.push_back(algebra->basis_map_index(name));
  if (maps.empty()) throw Error(ErrorKind::DeficientFamily, "empty basis map family");

  const bool commutative = is_commutative(*algebra);
  // Unknown columns: (F, k) for commutative algebras, (F, k, r) otherwise.
  struct Unknown { std::size_t map, k, r; };
  std::vector<Unknown> unknowns;
  for (std::size_t m : maps)
    for (std::size_t k = 0; k < n; ++k) {
      if (commutative) unknowns.push_back({m, k, algebra->unit_index()});
      else
        for (std::size_t r = 0; r < n; ++r) unknowns.push_back({m, k, r});
    }

  auto term_for = [&](const Unknown& u, double w) {
    return Term{w, {Element::basis(algebra, u.k), Element::basis(algebra, u.r)}, {u.map}, Permutation::identity(1)};
  };

  Eigen::MatrixXd system(ni * ni, static_cast<Eigen::Index>(unknowns.size()));
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    PolyMap single(algebra, 1);
    single.add_term(term_for(unknowns[c], 1.0));
    const Eigen::MatrixXd jc = tensor_to_jacobian(single);
    system.col(static_cast<Eigen::Index>(c)) = Eigen::Map<const Eigen::VectorXd>(jc.data(), ni * ni);
  }
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(jacobian.data(), ni * ni);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(system);
  cod.setThreshold(1e-12);
  const Eigen::VectorXd sol = cod.solve(rhs);
  const double res = (system * sol - rhs).norm() / std::max(1.0, rhs.norm());
  if (residual) *residual = res;
  if (res > 1e-8)
    throw Error(ErrorKind::DeficientFamily,
                "basis map family cannot express this Jacobian (residual " + std::to_string(res) + ")");

  PolyMap out(algebra, 1);
  if (commutative) {
    // Collect a_F = sum_k d_{F,k} e_k into a single term a_F (x) 1 per map.
    std::size_t c = 0;
    for (std::size_t m : maps) {
      std::vector<double> coords(n, 0.0);
      for (std::size_t k = 0; k < n; ++k, ++c) coords[k] = std::abs(sol(static_cast<Eigen::Index>(c))) < 1e-14 ? 0.0 : sol(static_cast<Eigen::Index>(c));
      out.add_term(Term{1.0, {Element(algebra, coords), Element::unit(algebra)}, {m}, Permutation::identity(1)});
    }
  } else {
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      const double w = sol(static_cast<Eigen::Index>(c));
      if (std::abs(w) > 1e-14) out.add_term(term_for(unknowns[c], w));
    }
  }
  return out;
}

}  // namespace ncalc
