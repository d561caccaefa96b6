#pragma once

// Umbrella header: the whole toolkit.

#include "alemass/ade.hpp"
#include "alemass/admint.hpp"
#include "alemass/gibbons_hawking.hpp"
#include "alemass/homcalc.hpp"
#include "alemass/json_io.hpp"
#include "alemass/kahlergeo.hpp"
#include "alemass/lebrun.hpp"
#include "alemass/metrics.hpp"
#include "alemass/quadrature.hpp"
#include "alemass/radial_kahler.hpp"
#include "alemass/rational.hpp"
#include "alemass/rational_matrix.hpp"
#include "alemass/registry.hpp"
#include "alemass/reproduce.hpp"
