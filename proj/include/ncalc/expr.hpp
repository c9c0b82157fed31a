#pragma once

// A small expression language for polynomials and polynomial 1-forms.
//
//   x^3 - 2 i x j        juxtaposition or * multiplies, ^k powers
//   I(x)                 a registered basis map applied to x
//   (x - I(x))^3/8       division by a number only
//   3x0^2 + 6x0x1 i      real coordinates of x (2-dimensional algebras with I)
//   1@x^2 + x@x + x^2@1  1-forms; '@' and U+2297 both denote the tensor sign
//
// Basis literals are the algebra's basis names (i, j, k for quaternions) or
// e0, e1, ... Numbers accept decimals and exponents; pi is recognised.

#include <string_view>

#include "ncalc/poly.hpp"

namespace ncalc {

/// Throws Error{Parse}.
NoncommPoly parse_poly(const AlgebraPtr& algebra, std::string_view text);
/// Every term must contain exactly one tensor sign. Throws Error{Parse}.
TensorPoly parse_form(const AlgebraPtr& algebra, std::string_view text);
/// A constant expression such as "1+i" or "pi/2 i". Throws Error{Parse}.
Element parse_element(const AlgebraPtr& algebra, std::string_view text);

/// The real coordinate polynomials x^0 = (x + Ix)/2 and
/// x^1 = e1^-1 (x - Ix)/2 of a 2-dimensional algebra with conjugation.
NoncommPoly coordinate_poly(const AlgebraPtr& algebra, std::size_t index);

}  // namespace ncalc
