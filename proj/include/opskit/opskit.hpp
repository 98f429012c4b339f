#pragma once

#include "opskit/error.hpp"
#include "opskit/fixtures.hpp"
#include "opskit/graph.hpp"
#include "opskit/io/csv_io.hpp"
#include "opskit/io/graph_io.hpp"
#include "opskit/io/report.hpp"
#include "opskit/knapsack.hpp"
#include "opskit/kruskal.hpp"
#include "opskit/max_flow.hpp"
#include "opskit/prim.hpp"
#include "opskit/shortest_path.hpp"
#include "opskit/stats/concordance.hpp"
#include "opskit/stats/fisher.hpp"
#include "opskit/stats/scores.hpp"
#include "opskit/stats/special.hpp"
#include "opskit/tree_enum.hpp"
#include "opskit/version.hpp"
