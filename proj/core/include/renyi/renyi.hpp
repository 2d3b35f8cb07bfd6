#pragma once

#include "renyi/distributions.hpp"
#include "renyi/entropy_bounds.hpp"
#include "renyi/error.hpp"
#include "renyi/mi_bounds.hpp"
#include "renyi/moments.hpp"
#include "renyi/optimize.hpp"
#include "renyi/quadrature.hpp"
#include "renyi/rng.hpp"
#include "renyi/specfun.hpp"
#include "renyi/version.hpp"
