#pragma once

#include "cgedit/bench.hpp"
#include "cgedit/cograph.hpp"
#include "cgedit/editing/brute_force.hpp"
#include "cgedit/editing/edit_result.hpp"
#include "cgedit/editing/exact.hpp"
#include "cgedit/editing/heuristic.hpp"
#include "cgedit/editing/quotient_search.hpp"
#include "cgedit/editing/random_pair.hpp"
#include "cgedit/editing/verify.hpp"
#include "cgedit/errors.hpp"
#include "cgedit/generator.hpp"
#include "cgedit/graph.hpp"
#include "cgedit/io.hpp"
#include "cgedit/merge.hpp"
#include "cgedit/modules.hpp"
#include "cgedit/rng.hpp"
#include "cgedit/vertex_set.hpp"
