#pragma once

// Umbrella header: radial calculus of the five harmonic model geometries.

#include "radialis/errors.hpp"
#include "radialis/jet.hpp"
#include "radialis/radial_function.hpp"
#include "radialis/model_space.hpp"
#include "radialis/jacobi.hpp"
#include "radialis/radial_ops.hpp"
#include "radialis/greens.hpp"
#include "radialis/ricci.hpp"
#include "radialis/classify.hpp"
