#pragma once

#include "cppforge/error.hpp"
#include "cppforge/gf/construct.hpp"
#include "cppforge/gf/field.hpp"
#include "cppforge/gf/numtheory.hpp"
#include "cppforge/gf/ops.hpp"
#include "cppforge/poly/factor.hpp"
#include "cppforge/poly/poly.hpp"
#include "cppforge/poly/special.hpp"
#include "cppforge/core/goodness.hpp"
#include "cppforge/core/oracles.hpp"
#include "cppforge/core/witness.hpp"
#include "cppforge/families.hpp"
#include "cppforge/scan/scan.hpp"
#include "cppforge/scan/witness_io.hpp"
