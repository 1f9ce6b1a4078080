#pragma once

#include "maxcone/error.hpp"
#include "maxcone/semiring.hpp"
#include "maxcone/matrix.hpp"
#include "maxcone/spectral.hpp"
#include "maxcone/cones.hpp"
#include "maxcone/projectors.hpp"
#include "maxcone/perm_pinv.hpp"
#include "maxcone/solver.hpp"
