#pragma once

// Convenience umbrella: exact Levine-Tristram signature functions, satellite
// operators, concordance norm estimates, certificate checks, and the knot
// expression language.

#include "circle_point.hpp"
#include "knotdsl.hpp"
#include "metrics.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_matrix.hpp"
#include "root_isolation.hpp"
#include "satellite.hpp"
#include "seifert.hpp"
#include "signature_function.hpp"
#include "verify.hpp"
