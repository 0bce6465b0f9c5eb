// treepath/treepath.hpp - Umbrella include for the whole library.
#pragma once

#include "treepath/apsp.hpp"
#include "treepath/bench.hpp"
#include "treepath/clique_tree.hpp"
#include "treepath/consistency.hpp"
#include "treepath/generators.hpp"
#include "treepath/graph.hpp"
#include "treepath/heaps.hpp"
#include "treepath/io.hpp"
#include "treepath/oracle.hpp"
#include "treepath/ordering.hpp"
