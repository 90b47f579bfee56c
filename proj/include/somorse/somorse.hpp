#pragma once

#include "somorse/lie_core.hpp"
#include "somorse/morse_analytic.hpp"
#include "somorse/numeric_verify.hpp"
#include "somorse/polynomial.hpp"
#include "somorse/topology_poly.hpp"
