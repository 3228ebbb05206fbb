#pragma once

#include "yao/constructions.hpp"
#include "yao/geometry.hpp"
#include "yao/graph.hpp"
#include "yao/io.hpp"
#include "yao/parallel.hpp"
#include "yao/point_set.hpp"
#include "yao/proof_oracles.hpp"
#include "yao/random_points.hpp"
#include "yao/stretch.hpp"
#include "yao/svg.hpp"
