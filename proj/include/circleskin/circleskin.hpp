#pragma once

// Geometry core. io.hpp and service.hpp pull in JSON and HTTP and are
// included separately.
#include "circleskin/core.hpp"
#include "circleskin/minkowski.hpp"
#include "circleskin/planar.hpp"
#include "circleskin/polynomial.hpp"
#include "circleskin/re_segment.hpp"
#include "circleskin/reconstruction.hpp"
#include "circleskin/skin.hpp"
#include "circleskin/touchpoints.hpp"
