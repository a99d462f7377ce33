#pragma once

#include "cy4gv/chow/characteristic.hpp"
#include "cy4gv/chow/k_class.hpp"
#include "cy4gv/chow/ring.hpp"
#include "cy4gv/conjecture.hpp"
#include "cy4gv/constraints.hpp"
#include "cy4gv/curve_class.hpp"
#include "cy4gv/dt4_examples.hpp"
#include "cy4gv/error.hpp"
#include "cy4gv/geometry.hpp"
#include "cy4gv/gv_series.hpp"
#include "cy4gv/heuristic.hpp"
#include "cy4gv/meeting.hpp"
#include "cy4gv/novikov_series.hpp"
#include "cy4gv/rational.hpp"
