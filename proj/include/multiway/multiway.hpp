#pragma once

// Umbrella header: the whole library.

#include "multiway/continuum.hpp"
#include "multiway/convergence.hpp"
#include "multiway/dot.hpp"
#include "multiway/gaussian.hpp"
#include "multiway/renormalize.hpp"
#include "multiway/templates.hpp"
#include "multiway/wavefunction.hpp"
#include "multiway/words.hpp"
