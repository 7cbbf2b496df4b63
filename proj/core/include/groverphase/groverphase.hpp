#pragma once

// Umbrella header.

#include "groverphase/angle_expr.hpp"
#include "groverphase/csv.hpp"
#include "groverphase/errors.hpp"
#include "groverphase/full_state.hpp"
#include "groverphase/iteration.hpp"
#include "groverphase/mat2.hpp"
#include "groverphase/model.hpp"
#include "groverphase/spectral.hpp"
#include "groverphase/sweeps.hpp"
#include "groverphase/verify.hpp"
