#ifndef HYPERCO_HYPERCO_HPP
#define HYPERCO_HYPERCO_HPP

#include "hyperco/baselines.hpp"
#include "hyperco/bounds.hpp"
#include "hyperco/density.hpp"
#include "hyperco/estimator.hpp"
#include "hyperco/oracle.hpp"
#include "hyperco/power.hpp"
#include "hyperco/rng.hpp"
#include "hyperco/synth.hpp"
#include "hyperco/table.hpp"
#include "hyperco/types.hpp"

#endif  // HYPERCO_HYPERCO_HPP
