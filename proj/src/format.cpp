#include "ncalc/format.hpp"

#include <cmath>
#include <sstream>

namespace ncalc {

namespace {

const char* const kTensor = "\xE2\x8A\x97";

bool is_real_multiple(const Element& e, double& s) {
  const std::size_t u = e.algebra()->unit_index();
  for (std::size_t i = 0; i < e.dim(); ++i)
    if (i != u && e[i] != 0.0) return false;
  s = e[u];
  return true;
}

// Single basis element with coefficient 1 prints as its name.
bool is_basis_name(const Element& e, std::string& name) {
  std::size_t hit = e.dim();
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i] == 0.0) continue;
    if (e[i] != 1.0 || hit != e.dim()) return false;
    hit = i;
  }
  if (hit == e.dim()) return false;
  name = e.algebra()->basis_names()[hit];
  return true;
}

std::string monomial_body(const Monomial& m, double& scalar) {
  const auto& alg = m.coeffs.front().algebra();
  std::vector<std::string> tokens;
  scalar = m.weight;
  auto push_coeff = [&](const Element& c) {
    double s = 0.0;
    std::string name;
    if (is_real_multiple(c, s)) scalar *= s;
    else if (is_basis_name(c, name)) tokens.push_back(name);
    else tokens.push_back("(" + format_element(c) + ")");
  };
  push_coeff(m.coeffs[0]);
  for (std::size_t s = 0; s < m.slots.size(); ++s) {
    tokens.push_back(m.slots[s] == 0 ? "x" : alg->basis_map_name(m.slots[s]) + "(x)");
    push_coeff(m.coeffs[s + 1]);
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t j = i;
    while (j < tokens.size() && tokens[j] == tokens[i]) ++j;
    out += tokens[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string with_scalar(double s, const std::string& body) {
  if (body.empty()) return format_number(s);
  if (s == 1.0) return body;
  if (s == -1.0) return "-" + body;
  return format_number(s) + body;
}

std::string join_signed(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!parts[i].empty() && parts[i][0] == '-') out += " - " + parts[i].substr(1);
    else out += " + " + parts[i];
  }
  return out;
}

std::string poly_body(const NoncommPoly& p, double& scalar) {
  const auto pruned = p.pruned();
  if (pruned.monomials().size() == 1) return monomial_body(pruned.monomials()[0], scalar);
  scalar = 1.0;
  if (pruned.monomials().empty()) {
    scalar = 0.0;
    return "";
  }
  return "(" + format_poly(pruned) + ")";
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string format_element(const Element& e) {
  const auto& names = e.algebra()->basis_names();
  double scale = 0.0;
  for (std::size_t i = 0; i < e.dim(); ++i) scale = std::max(scale, std::abs(e[i]));
  std::string out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    const double v = e[i];
    if (v == 0.0 || std::abs(v) < 1e-15 * scale) continue;
    const bool unit = names[i] == "1";
    std::string piece = unit ? format_number(std::abs(v))
                             : (std::abs(v) == 1.0 ? names[i] : format_number(std::abs(v)) + names[i]);
    if (out.empty()) out = (v < 0 ? "-" : "") + piece;
    else out += (v < 0 ? "-" : "+") + piece;
  }
  return out.empty() ? "0" : out;
}

std::string format_poly(const NoncommPoly& p) {
  std::vector<std::string> parts;
  const NoncommPoly pruned = p.pruned();
  for (const auto& m : pruned.monomials()) {
    double s = 1.0;
    const std::string body = monomial_body(m, s);
    parts.push_back(with_scalar(s, body));
  }
  return join_signed(parts);
}

std::string format_tensor(const TensorPoly& t) {
  std::vector<std::string> parts;
  const auto& alg = t.algebra();
  for (const auto& term : t.terms()) {
    double scalar = term.weight;
    std::vector<std::string> bodies;
    bool zero = false;
    for (const auto& f : term.factors) {
      double s = 1.0;
      std::string b = poly_body(f, s);
      if (s == 0.0) zero = true;
      scalar *= s;
      bodies.push_back(b.empty() ? "1" : b);
    }
    if (zero || scalar == 0.0) continue;
    // 3 (x) x^2 rather than 31 (x) x^2
    if (bodies[0] == "1" && scalar != 1.0 && scalar != -1.0) {
      bodies[0] = format_number(scalar);
      scalar = 1.0;
    }
    std::string body = bodies[0];
    for (std::size_t k = 0; k < term.slots.size(); ++k) {
      body += kTensor;
      if (term.slots[k] != 0) body += "[" + alg->basis_map_name(term.slots[k]) + "]";
      body += bodies[k + 1];
    }
    if (term.perm != Permutation::identity(term.perm.size())) {
      body += "\xE2\x88\x98(";
      for (std::size_t k = 0; k < term.perm.size(); ++k) body += (k ? "," : "") + std::to_string(term.perm[k] + 1);
      body += ")";
    }
    parts.push_back(with_scalar(scalar, body));
  }
  return join_signed(parts);
}

std::string format_polymap(const PolyMap& f) {
  std::vector<std::string> parts;
  for (const auto& t : f.terms()) {
    std::string body;
    for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
      if (k) {
        body += kTensor;
        if (t.slots[k - 1] != 0) body += "[" + f.algebra()->basis_map_name(t.slots[k - 1]) + "]";
      }
      body += "(" + format_element(t.coeffs[k]) + ")";
    }
    parts.push_back(with_scalar(t.weight, body));
  }
  return join_signed(parts);
}

nlohmann::json element_json(const Element& e) { return e.coord_vector(); }

}  // namespace ncalc
