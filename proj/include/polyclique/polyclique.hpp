#ifndef POLYCLIQUE_POLYCLIQUE_HPP
#define POLYCLIQUE_POLYCLIQUE_HPP

#include "polyclique/error.hpp"
#include "polyclique/graph.hpp"
#include "polyclique/reduction.hpp"
#include "polyclique/flow.hpp"
#include "polyclique/oracles.hpp"
#include "polyclique/greedy.hpp"
#include "polyclique/harness.hpp"

#endif  // POLYCLIQUE_POLYCLIQUE_HPP
