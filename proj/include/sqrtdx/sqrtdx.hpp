#pragma once

// Umbrella header for the sqrtdx toolkit: corrected (gamma-normalized)
// integrals, Riemann-Liouville half integrals, Ramanujan asymptotic sums,
// and the half-form / half-density algebra on the real line.

#include "corrected.hpp"
#include "expression.hpp"
#include "extrapolation.hpp"
#include "format.hpp"
#include "fractional.hpp"
#include "gamma.hpp"
#include "halfform.hpp"
#include "interval.hpp"
#include "kahan.hpp"
#include "polynomial.hpp"
#include "quadrature.hpp"
#include "ramanujan.hpp"
