#pragma once

#include "helisurf/bour.hpp"
#include "helisurf/calculus.hpp"
#include "helisurf/errors.hpp"
#include "helisurf/expr.hpp"
#include "helisurf/forms.hpp"
#include "helisurf/jet.hpp"
#include "helisurf/lb3.hpp"
#include "helisurf/surfaces.hpp"
#include "helisurf/verify.hpp"
