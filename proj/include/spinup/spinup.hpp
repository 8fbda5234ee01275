#pragma once

#include "spinup/augmentation.hpp"
#include "spinup/dga.hpp"
#include "spinup/disks.hpp"
#include "spinup/dual.hpp"
#include "spinup/errors.hpp"
#include "spinup/expr.hpp"
#include "spinup/front.hpp"
#include "spinup/gf2.hpp"
#include "spinup/homology_profile.hpp"
#include "spinup/invariants.hpp"
#include "spinup/knot_diagrams.hpp"
#include "spinup/lagrangian_diagram.hpp"
#include "spinup/param_map.hpp"
#include "spinup/pipeline.hpp"
#include "spinup/residuals.hpp"
#include "spinup/sampling.hpp"
#include "spinup/spinning.hpp"
#include "spinup/symbolic_suite.hpp"
