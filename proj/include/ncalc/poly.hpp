#pragma once

#include <cstddef>
#include <vector>

#include "ncalc/algebra.hpp"
#include "ncalc/polymap.hpp"

namespace ncalc {

/// w * a0 (F1 x) a1 ... (Fn x) an
struct Monomial {
  double weight = 1.0;
  std::vector<Element> coeffs;     // n + 1
  std::vector<std::size_t> slots;  // n basis map indices

  std::size_t degree() const { return slots.size(); }
};

/// A noncommutative polynomial in one variable x.
class NoncommPoly {
 public:
  explicit NoncommPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  NoncommPoly(AlgebraPtr algebra, std::vector<Monomial> monomials);

  static NoncommPoly constant(const Element& c);
  static NoncommPoly scalar(const AlgebraPtr& algebra, double s);
  /// F(x) for the basis map with the given index (0 = x itself).
  static NoncommPoly variable(const AlgebraPtr& algebra, std::size_t slot = 0);
  static NoncommPoly monomial(Monomial m);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t degree() const;
  bool empty() const { return monomials_.empty(); }

  Element eval(const Element& x) const;
  Element operator()(const Element& x) const { return eval(x); }

  NoncommPoly& operator+=(const NoncommPoly& other);
  friend NoncommPoly operator+(NoncommPoly a, const NoncommPoly& b) { return a += b; }
  friend NoncommPoly operator-(NoncommPoly a, const NoncommPoly& b) { return a += b.scaled(-1.0); }
  friend NoncommPoly operator*(const NoncommPoly& a, const NoncommPoly& b);
  NoncommPoly scaled(double s) const;
  NoncommPoly power(unsigned k) const;
  /// Drops zero-weight monomials.
  NoncommPoly pruned() const;

 private:
  AlgebraPtr algebra_;
  std::vector<Monomial> monomials_;
};

/// One term of a polynomial p-form: w * f0(x) (F1 a_{perm[0]}) f1(x) ... fp(x)
/// where each fi is a noncommutative polynomial.
struct TensorTerm {
  double weight = 1.0;
  std::vector<NoncommPoly> factors;  // p + 1
  std::vector<std::size_t> slots;    // p
  Permutation perm;                  // p
};

/// Map x -> PolyMap of degree p whose tensor coefficients are polynomials in x.
/// This is the closed form used for symbolic derivatives and polynomial forms.
class TensorPoly {
 public:
  TensorPoly(AlgebraPtr algebra, std::size_t degree) : algebra_(std::move(algebra)), degree_(degree) {}

  static TensorPoly from_poly(const NoncommPoly& p);
  /// f0 (x) f1 with identity slot.
  static TensorPoly one_form(const NoncommPoly& left, const NoncommPoly& right, std::size_t slot = 0);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t degree() const { return degree_; }
  const std::vector<TensorTerm>& terms() const { return terms_; }
  void add_term(TensorTerm term);

  PolyMap at(const Element& x) const;
  Element apply(const Element& x, std::span<const Element> args) const;
  /// Largest degree of any coefficient polynomial product in a term.
  std::size_t poly_degree() const;

  TensorPoly& operator+=(const TensorPoly& other);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  TensorPoly scaled(double s) const;

 private:
  AlgebraPtr algebra_;
  std::size_t degree_;
  std::vector<TensorTerm> terms_;
};

TensorPoly permuted(const TensorPoly& f, const Permutation& sigma);
TensorPoly alternate(const TensorPoly& f);
/// Derivative of x -> f(x)(a1..ap): a TensorPoly of degree p + 1 whose first
/// argument is the direction of differentiation.
TensorPoly differentiate(const TensorPoly& f);
/// Pointwise join f(x) join g(x).
TensorPoly tensor_join(const TensorPoly& f, const TensorPoly& g);

}  // namespace ncalc
