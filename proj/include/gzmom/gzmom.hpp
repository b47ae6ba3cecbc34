#pragma once

// Umbrella header for the gzmom library: exact combinatorics, symbolic
// constant algebra, the closed-form moment and derivative formulas, and
// their high-precision numerical verification.

#include "gzmom/combinatorics.hpp"
#include "gzmom/complex_real.hpp"
#include "gzmom/gauss_legendre.hpp"
#include "gzmom/moments.hpp"
#include "gzmom/numquad.hpp"
#include "gzmom/power_series.hpp"
#include "gzmom/quad_engine.hpp"
#include "gzmom/rational.hpp"
#include "gzmom/real.hpp"
#include "gzmom/sequence_ops.hpp"
#include "gzmom/sym_value.hpp"
#include "gzmom/zeta.hpp"
