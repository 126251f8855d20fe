#pragma once

#include "genmat/connectivity.hpp"
#include "genmat/dense_matrix.hpp"
#include "genmat/extensions.hpp"
#include "genmat/families.hpp"
#include "genmat/graph.hpp"
#include "genmat/graph_io.hpp"
#include "genmat/matroids.hpp"
#include "genmat/prime_field.hpp"
#include "genmat/rng.hpp"
#include "genmat/seeds.hpp"
