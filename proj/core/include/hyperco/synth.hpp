#ifndef HYPERCO_SYNTH_HPP
#define HYPERCO_SYNTH_HPP

#include <cstdint>
#include <string>

#include "hyperco/types.hpp"

namespace hyperco {

// The eight benchmark function families for rare/dominant mixtures.
enum class FunctionFamily {
  linear,
  quadratic,
  cubic,
  sin4pi,
  sin16pi,
  fourth_root,
  circle,
  step,
};

FunctionFamily family_from_string(const std::string& name);
std::string family_to_string(FunctionFamily fam);

struct MixtureSpec {
  FunctionFamily family = FunctionFamily::linear;
  double alpha = 0.05;   // rare-block mass
  double sigma2 = 0.03;  // additive noise variance
  int n = 320;
  bool correlated = true;
  std::uint64_t seed = 0;
  // Place the dominant block at x in [-0.1, 0] instead of [1, 1.1]
  // (the mirrored layout used for the cubic family's left-side variant).
  bool mirror = false;
};

// f(x) on [0, 1]. For the circle family this returns the y-coordinate
// sin(2 pi x)/2 of the parametric circle at parameter x.
double eval_family(FunctionFamily fam, double x);

// Rare/dominant mixture sampler.
//
// correlated: the first ceil(alpha*n) samples are the rare block
//   x ~ Unif[0,1], y = f(x) + N(0, sigma2); the remaining samples are the
//   dominant block x ~ Unif[1, 1.1], y = f(U) + N(0, sigma2) with a fresh
//   U ~ Unif[0,1], so both blocks share the same Y-marginal. The circle
//   family draws its rare block parametrically:
//   x = 0.5 + 0.5 cos(2 pi t), y = 0.5 sin(2 pi t) + noise.
//
// not correlated (null): all n samples with x ~ Unif[0, 1.1] independent
//   of y = f(U) + N(0, sigma2).
//
// Pure function of spec (bit-identical across calls at fixed seed).
PairedSamples generate(const MixtureSpec& spec);

}  // namespace hyperco

#endif  // HYPERCO_SYNTH_HPP
