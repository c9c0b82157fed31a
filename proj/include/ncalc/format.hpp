#pragma once

#include <string>

#include <json.hpp>

#include "ncalc/poly.hpp"
#include "ncalc/polymap.hpp"

namespace ncalc {

std::string format_number(double v);
/// "1+i", "-2j", "0.5-1.5i+k"; components below 1e-15 relative are dropped.
std::string format_element(const Element& e);
std::string format_poly(const NoncommPoly& p);
/// "x^2⊗1 + x⊗x + 1⊗x^2"
std::string format_tensor(const TensorPoly& t);
std::string format_polymap(const PolyMap& f);

nlohmann::json element_json(const Element& e);

}  // namespace ncalc
