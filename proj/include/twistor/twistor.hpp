#pragma once

#include "twistor/charges.hpp"
#include "twistor/gaussian.hpp"
#include "twistor/graded_ring.hpp"
#include "twistor/integer.hpp"
#include "twistor/io.hpp"
#include "twistor/lattice.hpp"
#include "twistor/neck.hpp"
#include "twistor/pushout.hpp"
#include "twistor/quadric.hpp"
#include "twistor/real_structure.hpp"
#include "twistor/surfaces.hpp"
