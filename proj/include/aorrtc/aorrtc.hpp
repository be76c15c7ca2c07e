#pragma once

#include "aorrtc/augmented.hpp"
#include "aorrtc/bench.hpp"
#include "aorrtc/clock.hpp"
#include "aorrtc/informed.hpp"
#include "aorrtc/io.hpp"
#include "aorrtc/oracle.hpp"
#include "aorrtc/planner.hpp"
#include "aorrtc/problem.hpp"
#include "aorrtc/simplify.hpp"
#include "aorrtc/space.hpp"
#include "aorrtc/stats.hpp"
#include "aorrtc/world.hpp"
