// Umbrella header: the whole library.
#pragma once

#include "np3/constructions.hpp"
#include "np3/core.hpp"
#include "np3/error.hpp"
#include "np3/invariants.hpp"
#include "np3/io.hpp"
#include "np3/isomorphism.hpp"
#include "np3/normality.hpp"
#include "np3/rational.hpp"
#include "np3/surfaces.hpp"
