#pragma once

#include "polar/asymptotics.hpp"
#include "polar/circle_config.hpp"
#include "polar/energy.hpp"
#include "polar/error.hpp"
#include "polar/exact_series.hpp"
#include "polar/kernels.hpp"
#include "polar/optimizer.hpp"
#include "polar/potential.hpp"
#include "polar/transport.hpp"
