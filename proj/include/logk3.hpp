#pragma once

// Umbrella header.

#include "logk3/brauer.hpp"
#include "logk3/charclass.hpp"
#include "logk3/classify.hpp"
#include "logk3/cycle_action.hpp"
#include "logk3/dihedral.hpp"
#include "logk3/group.hpp"
#include "logk3/hilbert.hpp"
#include "logk3/json_io.hpp"
#include "logk3/numeric.hpp"
#include "logk3/petersen.hpp"
#include "logk3/quadratic_order.hpp"
#include "logk3/rewrite.hpp"
#include "logk3/sequence.hpp"
#include "logk3/structure.hpp"
#include "logk3/surface.hpp"
