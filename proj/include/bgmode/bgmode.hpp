#pragma once

// Umbrella header: background estimation from fixed-camera frame sequences
// by hierarchical bitwise majority voting, plus the supporting analysis and
// I/O pieces.

#include "bgmode/accuracy.hpp"
#include "bgmode/bench.hpp"
#include "bgmode/errors.hpp"
#include "bgmode/frame.hpp"
#include "bgmode/majority.hpp"
#include "bgmode/pipeline.hpp"
#include "bgmode/pnm.hpp"
#include "bgmode/rng.hpp"
#include "bgmode/subtraction.hpp"
#include "bgmode/synth.hpp"
