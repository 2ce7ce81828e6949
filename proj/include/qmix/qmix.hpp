#pragma once

// Umbrella header: the whole library.

#include "qmix/criteria.hpp"
#include "qmix/errors.hpp"
#include "qmix/fuzz.hpp"
#include "qmix/io.hpp"
#include "qmix/mixtures.hpp"
#include "qmix/random.hpp"
#include "qmix/report.hpp"
#include "qmix/reproduce.hpp"
#include "qmix/scan.hpp"
#include "qmix/shape.hpp"
#include "qmix/state.hpp"
#include "qmix/states.hpp"
#include "qmix/tensor.hpp"
#include "qmix/theorems.hpp"
#include "qmix/tolerances.hpp"
