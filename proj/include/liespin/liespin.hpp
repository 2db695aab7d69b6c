#pragma once

// Umbrella header: exact metric Lie algebra constructions, curvature,
// holonomy and parallel spinor counting over Q(i, sqrt2).

#include "liespin/algebra.hpp"
#include "liespin/analysis.hpp"
#include "liespin/catalog.hpp"
#include "liespin/clifford.hpp"
#include "liespin/extensions.hpp"
#include "liespin/geometry.hpp"
#include "liespin/holonomy.hpp"
#include "liespin/json_io.hpp"
#include "liespin/linalg.hpp"
#include "liespin/matrix.hpp"
#include "liespin/scalar.hpp"
#include "liespin/spin.hpp"
#include "liespin/weights.hpp"
