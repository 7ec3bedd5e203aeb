#pragma once

#include "cppforge/families/common.hpp"
#include "cppforge/families/deg8.hpp"
#include "cppforge/families/deg9.hpp"
#include "cppforge/families/enumerate.hpp"
#include "cppforge/families/linearized.hpp"
#include "cppforge/families/type_a.hpp"
#include "cppforge/families/type_b.hpp"
#include "cppforge/families/type_c.hpp"
