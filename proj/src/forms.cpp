#include "ncalc/forms.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <mutex>

#include "ncalc/random.hpp"

namespace ncalc {

namespace {

std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

WarningHandler& warning_sink() {
  static WarningHandler handler = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
  return handler;
}

void warn(const std::string& msg) {
  std::lock_guard lock(warning_mutex());
  if (warning_sink()) warning_sink()(msg);
}

// Shuffles of p + q slots: the chosen p positions in order, then the rest.
std::vector<Permutation> shuffles(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<Permutation> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(p), true);
  do {
    Permutation sigma;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sigma.image.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
      if (!pick[i]) sigma.image.push_back(i);
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(warning_mutex());
  std::swap(handler, warning_sink());
  return handler;
}

FormP wedge_forms(const FormP& alpha, const FormP& beta) {
  require_same_algebra(*alpha.algebra(), *beta.algebra());
  // FormP checks skewness when it is built; forms that skip the check are
  // skew by construction.
  const std::size_t p = alpha.degree(), q = beta.degree();
  if (p + q > 6) throw Error(ErrorKind::TooLarge, "wedge is capped at total degree 6");
  auto perms = std::make_shared<const std::vector<Permutation>>(shuffles(p, q));
  const auto smooth = std::min(alpha.smoothness(), beta.smoothness());
  FormP result(
      alpha.algebra(), p + q,
      [alpha, beta, perms, p, q](const Element& x, std::span<const Element> args) {
        Element total = Element::zero(x.algebra());
        std::vector<Element> left, right;
        for (const auto& sigma : *perms) {
          left.clear();
          right.clear();
          for (std::size_t i = 0; i < p; ++i) left.push_back(args[sigma[i]]);
          for (std::size_t i = 0; i < q; ++i) right.push_back(args[sigma[p + i]]);
          total += mul(alpha(x, left), beta(x, right)) * sigma.parity();
        }
        return total;
      },
      smooth, std::min(alpha.domain_radius(), beta.domain_radius()), false);
  return result;
}

FormP exterior_differential(const FormP& omega, const GateauxOptions& options) {
  const auto smooth = lower_smoothness(omega.smoothness());
  const std::size_t p = omega.degree();
  return FormP(
      omega.algebra(), p + 1,
      [omega, options, p](const Element& x, std::span<const Element> args) {
        Element total = Element::zero(x.algebra());
        std::vector<Element> rest;
        for (std::size_t i = 0; i <= p; ++i) {
          rest.clear();
          for (std::size_t j = 0; j <= p; ++j)
            if (j != i) rest.push_back(args[j]);
          const Element d = gateaux([&](const Element& y) { return omega(y, rest); }, x, args[i], options);
          if (i % 2 == 0) total += d;
          else total -= d;
        }
        return total;
      },
      // the alternating sum is skew whenever omega is; difference noise would
      // trip the construction check
      smooth, omega.domain_radius(), false);
}

TensorPoly exterior_differential(const TensorPoly& omega) {
  const std::size_t p = omega.degree();
  const TensorPoly d = differentiate(omega);
  TensorPoly out(omega.algebra(), p + 1);
  for (std::size_t i = 0; i <= p; ++i) {
    Permutation sigma;
    sigma.image.push_back(i);
    for (std::size_t j = 0; j <= p; ++j)
      if (j != i) sigma.image.push_back(j);
    out += permuted(d, sigma).scaled(i % 2 == 0 ? 1.0 : -1.0);
  }
  return out;
}

double d_squared_residual(const FormP& omega, std::size_t probes, std::uint64_t seed) {
  const FormP dd = exterior_differential(exterior_differential(omega));
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < probes; ++i) {
    const Element x = random_in_ball(omega.algebra(), rng);
    std::vector<Element> args;
    double scale = 1.0;
    for (std::size_t k = 0; k < dd.degree(); ++k) {
      args.push_back(random_element(omega.algebra(), rng));
      scale *= args.back().coord_norm();
    }
    worst = std::max(worst, dd(x, args).coord_norm() / scale);
  }
  return worst;
}

IntegrabilityVerdict check_integrable(const FormP& omega, std::size_t probes, std::uint64_t seed) {
  if (omega.degree() != 1) throw Error(ErrorKind::ArityMismatch, "integrability is checked for 1-forms");
  const FormP d = exterior_differential(omega);
  const auto& alg = omega.algebra();
  Rng rng(seed);
  IntegrabilityVerdict verdict;
  const double radius = std::min(1.0, omega.domain_radius());
  for (std::size_t i = 0; i < probes; ++i) {
    const Element x = random_in_ball(alg, rng, radius);
    const Element a1 = random_unit(alg, rng);
    const Element a2 = random_unit(alg, rng);
    const double r = d(x, {a1, a2}).coord_norm();
    if (!verdict.x || r > verdict.max_residual) {
      verdict.max_residual = r;
      verdict.x = x;
      verdict.a1 = a1;
      verdict.a2 = a2;
    }
  }
  verdict.certified = verdict.max_residual < 1e-6;
  return verdict;
}

FormP poincare_k(const FormP& omega, const QuadratureOptions& options) {
  const auto& alg = omega.algebra();
  const std::size_t p = omega.degree();
  if (p == 0) return FormP::zero(alg, 0);
  auto warned = std::make_shared<std::atomic<bool>>(false);
  return FormP(
      alg, p - 1,
      [omega, options, p, warned](const Element& x, std::span<const Element> args) {
        if (norm(x) > omega.domain_radius() && !warned->exchange(true))
          warn("Poincare operator evaluated outside the form's domain radius");
        std::vector<Element> full;
        full.push_back(x);
        full.insert(full.end(), args.begin(), args.end());
        const auto result = integrate_unit_interval(
            [&](double t) { return omega(x * t, full) * std::pow(t, static_cast<double>(p - 1)); }, x.algebra(),
            options);
        return result.value;
      },
      omega.smoothness(), omega.domain_radius(), false);
}

std::vector<Element> form_coordinates(const FormP& omega, const Element& x) {
  const auto& alg = omega.algebra();
  const std::size_t n = alg->dim(), p = omega.degree();
  std::size_t count = 1;
  for (std::size_t k = 0; k < p; ++k) count *= n;
  std::vector<Element> out;
  out.reserve(count);
  std::vector<Element> args(p, Element::zero(alg));
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rem = flat;
    for (std::size_t k = p; k-- > 0;) {
      args[k] = Element::basis(alg, rem % n);
      rem /= n;
    }
    out.push_back(omega(x, args));
  }
  return out;
}

Element evaluate_from_coordinates(const std::vector<Element>& coords, std::span<const Element> args) {
  if (coords.empty()) throw Error(ErrorKind::InvalidArgument, "no coordinates");
  const auto& alg = coords.front().algebra();
  const std::size_t n = alg->dim(), p = args.size();
  Element total = Element::zero(alg);
  for (std::size_t flat = 0; flat < coords.size(); ++flat) {
    double w = 1.0;
    std::size_t rem = flat;
    for (std::size_t k = p; k-- > 0;) {
      w *= args[k][rem % n];
      rem /= n;
    }
    if (w != 0.0) total += coords[flat] * w;
  }
  return total;
}

FormP translate(const FormP& omega, const Element& shift) {
  return FormP(
      omega.algebra(), omega.degree(),
      [omega, shift](const Element& x, std::span<const Element> args) { return omega(x + shift, args); },
      omega.smoothness(), omega.domain_radius(), false);
}

}  // namespace ncalc
