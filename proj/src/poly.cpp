#include "ncalc/poly.hpp"

#include <algorithm>

namespace ncalc {

namespace {

void check_monomial(const AlgebraPtr& algebra, const Monomial& m) {
  if (m.coeffs.size() != m.slots.size() + 1)
    throw Error(ErrorKind::ArityMismatch, "monomial needs one more coefficient than slots");
  for (const auto& c : m.coeffs) require_same_algebra(*algebra, *c.algebra());
  for (std::size_t s : m.slots)
    if (s >= algebra->basis_map_count()) throw Error(ErrorKind::UnknownBasisMap, "slot map index out of range");
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.weight = a.weight * b.weight;
  m.coeffs.assign(a.coeffs.begin(), a.coeffs.end() - 1);
  m.coeffs.push_back(mul(a.coeffs.back(), b.coeffs.front()));
  m.coeffs.insert(m.coeffs.end(), b.coeffs.begin() + 1, b.coeffs.end());
  m.slots = a.slots;
  m.slots.insert(m.slots.end(), b.slots.begin(), b.slots.end());
  return m;
}

}  // namespace

NoncommPoly::NoncommPoly(AlgebraPtr algebra, std::vector<Monomial> monomials) : algebra_(std::move(algebra)) {
  for (auto& m : monomials) check_monomial(algebra_, m);
  monomials_ = std::move(monomials);
}

NoncommPoly NoncommPoly::constant(const Element& c) {
  return NoncommPoly(c.algebra(), {Monomial{1.0, {c}, {}}});
}

NoncommPoly NoncommPoly::scalar(const AlgebraPtr& algebra, double s) {
  return NoncommPoly(algebra, {Monomial{s, {Element::unit(algebra)}, {}}});
}

NoncommPoly NoncommPoly::variable(const AlgebraPtr& algebra, std::size_t slot) {
  return NoncommPoly(algebra, {Monomial{1.0, {Element::unit(algebra), Element::unit(algebra)}, {slot}}});
}

NoncommPoly NoncommPoly::monomial(Monomial m) {
  if (m.coeffs.empty()) throw Error(ErrorKind::ArityMismatch, "monomial without coefficients");
  auto alg = m.coeffs.front().algebra();
  return NoncommPoly(alg, {std::move(m)});
}

std::size_t NoncommPoly::degree() const {
  std::size_t d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

Element NoncommPoly::eval(const Element& x) const {
  require_same_algebra(*algebra_, *x.algebra());
  Element total = Element::zero(algebra_);
  std::vector<Element> mapped;
  for (std::size_t k = 0; k < algebra_->basis_map_count(); ++k)
    mapped.push_back(k == 0 ? x : apply_basis_map(k, x));
  for (const auto& m : monomials_) {
    if (m.weight == 0.0) continue;
    Element acc = m.coeffs[0];
    for (std::size_t s = 0; s < m.slots.size(); ++s) acc = mul(mul(acc, mapped[m.slots[s]]), m.coeffs[s + 1]);
    total += acc * m.weight;
  }
  return total;
}

NoncommPoly& NoncommPoly::operator+=(const NoncommPoly& other) {
  require_same_algebra(*algebra_, *other.algebra_);
  monomials_.insert(monomials_.end(), other.monomials_.begin(), other.monomials_.end());
  return *this;
}

NoncommPoly operator*(const NoncommPoly& a, const NoncommPoly& b) {
  require_same_algebra(*a.algebra_, *b.algebra_);
  NoncommPoly out(a.algebra_);
  for (const auto& ma : a.monomials_)
    for (const auto& mb : b.monomials_) out.monomials_.push_back(product(ma, mb));
  return out;
}

NoncommPoly NoncommPoly::scaled(double s) const {
  NoncommPoly r = *this;
  for (auto& m : r.monomials_) m.weight *= s;
  return r;
}

NoncommPoly NoncommPoly::power(unsigned k) const {
  NoncommPoly r = scalar(algebra_, 1.0);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

NoncommPoly NoncommPoly::pruned() const {
  NoncommPoly r = *this;
  std::erase_if(r.monomials_, [](const Monomial& m) {
    return m.weight == 0.0 || std::any_of(m.coeffs.begin(), m.coeffs.end(),
                                          [](const Element& c) { return c.coord_norm() == 0.0; });
  });
  return r;
}

// ---- TensorPoly ----

TensorPoly TensorPoly::from_poly(const NoncommPoly& p) {
  TensorPoly t(p.algebra(), 0);
  t.add_term(TensorTerm{1.0, {p}, {}, Permutation::identity(0)});
  return t;
}

TensorPoly TensorPoly::one_form(const NoncommPoly& left, const NoncommPoly& right, std::size_t slot) {
  TensorPoly t(left.algebra(), 1);
  t.add_term(TensorTerm{1.0, {left, right}, {slot}, Permutation::identity(1)});
  return t;
}

void TensorPoly::add_term(TensorTerm term) {
  if (term.factors.size() != degree_ + 1 || term.slots.size() != degree_ || term.perm.size() != degree_ ||
      !term.perm.valid())
    throw Error(ErrorKind::ArityMismatch, "tensor term shape does not match degree");
  for (const auto& f : term.factors) require_same_algebra(*algebra_, *f.algebra());
  terms_.push_back(std::move(term));
}

PolyMap TensorPoly::at(const Element& x) const {
  PolyMap out(algebra_, degree_);
  for (const auto& t : terms_) {
    Term pt;
    pt.weight = t.weight;
    for (const auto& f : t.factors) pt.coeffs.push_back(f.eval(x));
    pt.slots = t.slots;
    pt.perm = t.perm;
    out.add_term(std::move(pt));
  }
  return out;
}

Element TensorPoly::apply(const Element& x, std::span<const Element> args) const { return at(x).apply(args); }

std::size_t TensorPoly::poly_degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) {
    std::size_t s = 0;
    for (const auto& f : t.factors) s += f.degree();
    d = std::max(d, s);
  }
  return d;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
  require_same_algebra(*algebra_, *other.algebra_);
  if (other.degree_ != degree_) throw Error(ErrorKind::ArityMismatch, "cannot add forms of different degree");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

TensorPoly TensorPoly::scaled(double s) const {
  TensorPoly r = *this;
  for (auto& t : r.terms_) t.weight *= s;
  return r;
}

TensorPoly permuted(const TensorPoly& f, const Permutation& sigma) {
  if (sigma.size() != f.degree() || !sigma.valid())
    throw Error(ErrorKind::ArityMismatch, "permutation size does not match degree");
  TensorPoly out(f.algebra(), f.degree());
  for (auto t : f.terms()) {
    for (auto& v : t.perm.image) v = sigma[v];
    out.add_term(std::move(t));
  }
  return out;
}

TensorPoly alternate(const TensorPoly& f) {
  const std::size_t n = f.degree();
  if (n == 0) return f;
  if (n > 6) throw Error(ErrorKind::TooLarge, "alternation is capped at degree 6");
  TensorPoly out(f.algebra(), n);
  const double scale = 1.0 / static_cast<double>(factorial(n));
  for (const auto& sigma : gen_S(n)) out += permuted(f, sigma).scaled(scale * sigma.parity());
  return out;
}

TensorPoly differentiate(const TensorPoly& f) {
  const std::size_t p = f.degree();
  const auto& alg = f.algebra();
  TensorPoly out(alg, p + 1);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i <= p; ++i) {
      for (const auto& m : t.factors[i].monomials()) {
        // Replace slot j of the monomial by the direction; later slots first so
        // dx^3 reads x^2 (x) 1 + x (x) x + 1 (x) x^2.
        for (std::size_t j = m.degree(); j-- > 0;) {
          Monomial prefix{1.0, {m.coeffs.begin(), m.coeffs.begin() + static_cast<std::ptrdiff_t>(j) + 1},
                          {m.slots.begin(), m.slots.begin() + static_cast<std::ptrdiff_t>(j)}};
          Monomial suffix{1.0, {m.coeffs.begin() + static_cast<std::ptrdiff_t>(j) + 1, m.coeffs.end()},
                          {m.slots.begin() + static_cast<std::ptrdiff_t>(j) + 1, m.slots.end()}};
          TensorTerm d;
          d.weight = t.weight * m.weight;
          for (std::size_t k = 0; k < i; ++k) d.factors.push_back(t.factors[k]);
          d.factors.push_back(NoncommPoly::monomial(std::move(prefix)));
          d.factors.push_back(NoncommPoly::monomial(std::move(suffix)));
          for (std::size_t k = i + 1; k <= p; ++k) d.factors.push_back(t.factors[k]);
          for (std::size_t k = 0; k < i; ++k) d.slots.push_back(t.slots[k]);
          d.slots.push_back(m.slots[j]);
          for (std::size_t k = i; k < p; ++k) d.slots.push_back(t.slots[k]);
          for (std::size_t k = 0; k < i; ++k) d.perm.image.push_back(t.perm[k] + 1);
          d.perm.image.push_back(0);
          for (std::size_t k = i; k < p; ++k) d.perm.image.push_back(t.perm[k] + 1);
          out.add_term(std::move(d));
        }
      }
    }
  }
  return out;
}

TensorPoly tensor_join(const TensorPoly& f, const TensorPoly& g) {
  require_same_algebra(*f.algebra(), *g.algebra());
  const std::size_t n = f.degree();
  TensorPoly out(f.algebra(), n + g.degree());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      TensorTerm t;
      t.weight = a.weight * b.weight;
      t.factors.assign(a.factors.begin(), a.factors.end() - 1);
      t.factors.push_back(a.factors.back() * b.factors.front());
      t.factors.insert(t.factors.end(), b.factors.begin() + 1, b.factors.end());
      t.slots = a.slots;
      t.slots.insert(t.slots.end(), b.slots.begin(), b.slots.end());
      t.perm.image = a.perm.image;
      for (std::size_t v : b.perm.image) t.perm.image.push_back(v + n);
      out.add_term(std::move(t));
    }
  return out;
}

}  // namespace ncalc
