#include "hyperco/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperco/rng.hpp"

namespace hyperco {

FunctionFamily family_from_string(const std::string& name) {
  if (name == "linear") return FunctionFamily::linear;
  if (name == "quadratic") return FunctionFamily::quadratic;
  if (name == "cubic") return FunctionFamily::cubic;
  if (name == "sin4pi") return FunctionFamily::sin4pi;
  if (name == "sin16pi") return FunctionFamily::sin16pi;
  if (name == "fourth_root") return FunctionFamily::fourth_root;
  if (name == "circle") return FunctionFamily::circle;
  if (name == "step") return FunctionFamily::step;
  throw std::domain_error("unknown function family: " + name);
}

std::string family_to_string(FunctionFamily fam) {
  switch (fam) {
    case FunctionFamily::linear: return "linear";
    case FunctionFamily::quadratic: return "quadratic";
    case FunctionFamily::cubic: return "cubic";
    case FunctionFamily::sin4pi: return "sin4pi";
    case FunctionFamily::sin16pi: return "sin16pi";
    case FunctionFamily::fourth_root: return "fourth_root";
    case FunctionFamily::circle: return "circle";
    case FunctionFamily::step: return "step";
  }
  throw std::domain_error("unknown function family enum");
}

double eval_family(FunctionFamily fam, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("eval_family: x must be in [0,1]");
  switch (fam) {
    case FunctionFamily::linear: return x;
    case FunctionFamily::quadratic: return x * x;
    case FunctionFamily::cubic: return x * x * x;
    case FunctionFamily::sin4pi: return std::sin(4.0 * M_PI * x);
    case FunctionFamily::sin16pi: return std::sin(16.0 * M_PI * x);
    case FunctionFamily::fourth_root: return std::pow(x, 0.25);
    case FunctionFamily::circle: return 0.5 * std::sin(2.0 * M_PI * x);
    case FunctionFamily::step: return x > 0.5 ? 1.0 : 0.0;
  }
  throw std::domain_error("eval_family: unknown family");
}

PairedSamples generate(const MixtureSpec& spec) {
  if (spec.n < 10) throw DegenerateInput("generate: need n >= 10");
  if (!(spec.alpha > 0.0 && spec.alpha <= 1.0))
    throw DegenerateInput("generate: need alpha in (0, 1]");
  if (spec.sigma2 < 0.0) throw DegenerateInput("generate: need sigma2 >= 0");
  const int n_rare = static_cast<int>(std::ceil(spec.alpha * spec.n));
  if (spec.correlated && n_rare < 1)
    throw DegenerateInput("generate: empty rare block");

  Rng rng(spec.seed);
  const double sigma = std::sqrt(spec.sigma2);
  const double dom_lo = spec.mirror ? -0.1 : 1.0;
  const double dom_hi = spec.mirror ? 0.0 : 1.1;
  VectorXd x(spec.n), y(spec.n);

  // Draw order per sample is fixed (x or t first, then the fresh U if any,
  // then noise) so seeded output is reproducible bit-for-bit.
  for (int i = 0; i < spec.n; ++i) {
    if (spec.correlated && i < n_rare) {
      if (spec.family == FunctionFamily::circle) {
        double t = rng.uniform();
        x[i] = 0.5 + 0.5 * std::cos(2.0 * M_PI * t);
        y[i] = 0.5 * std::sin(2.0 * M_PI * t) + rng.normal(0.0, sigma);
      } else {
        double xv = rng.uniform();
        x[i] = xv;
        y[i] = eval_family(spec.family, xv) + rng.normal(0.0, sigma);
      }
    } else if (spec.correlated) {
      x[i] = rng.uniform(dom_lo, dom_hi);
      y[i] = eval_family(spec.family, rng.uniform()) + rng.normal(0.0, sigma);
    } else {
      x[i] = rng.uniform(spec.mirror ? -0.1 : 0.0, spec.mirror ? 1.0 : 1.1);
      y[i] = eval_family(spec.family, rng.uniform()) + rng.normal(0.0, sigma);
    }
  }
  return PairedSamples(std::move(x), std::move(y));
}

}  // namespace hyperco
