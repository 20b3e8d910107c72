#pragma once

#include "skewband/apex.hpp"
#include "skewband/apex_cache.hpp"
#include "skewband/band_matrix.hpp"
#include "skewband/cycle_graph.hpp"
#include "skewband/det_poly.hpp"
#include "skewband/exact_rank.hpp"
#include "skewband/numeric.hpp"
#include "skewband/parallel.hpp"
#include "skewband/polynomial.hpp"
