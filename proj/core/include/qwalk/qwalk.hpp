#pragma once

#include "qwalk/density.hpp"
#include "qwalk/diagnostics.hpp"
#include "qwalk/fourier.hpp"
#include "qwalk/initial_state.hpp"
#include "qwalk/moments.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"
#include "qwalk/weight.hpp"
