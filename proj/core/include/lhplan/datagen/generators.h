#ifndef LHPLAN_DATAGEN_GENERATORS_H
#define LHPLAN_DATAGEN_GENERATORS_H

#include "lhplan/ground/task.h"
#include "lhplan/pddl/ast.h"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace lhplan::datagen {

class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string &message)
        : std::runtime_error(message) {}
};

/*
  Delivery instances: trucks drive along a connected random road graph and
  move packages, with per-truck capacity counters encoded as predicates.
  Every package's goal location differs from its origin, so instances are
  solvable by construction. Generation is a pure function of the config.
*/
struct TransportConfig {
    int locations = 3;
    int edges = 2;        // undirected; at least locations - 1
    int trucks = 1;
    int packages = 1;
    int capacity = 1;     // identical for every truck
    uint64_t seed = 0;
};

std::pair<pddl::DomainAst, pddl::ProblemAst> gen_transport(const TransportConfig &config);

/*
  Double-parking puzzles: cars move between curb slots and the backs of
  other cars. Initial and goal layouts are drawn at random; solvability is
  verified by a uniform-cost search under a fixed node budget, redrawing
  the layouts a bounded number of times on failure.
*/
struct ParkingConfig {
    int curbs = 3;
    int cars = 4;         // between 1 and 2*curbs - 2
    uint64_t seed = 0;
};

std::pair<pddl::DomainAst, pddl::ProblemAst> gen_parking(const ParkingConfig &config);

/*
  Derives a new problem by walking a fixed number of uniformly random
  applicable actions away from a goal-satisfying state and using the
  terminal state as the initial state; the goal is kept. The walk stops
  early when no action applies. The result is verified solvable by a
  uniform-cost search under a fixed node budget (redrawing the walk a
  bounded number of times), since the walk itself need not be reversible.
*/
struct WalkConfig {
    int walk_length = 5;
    uint64_t seed = 0;
};

pddl::ProblemAst random_walk_problem(const ground::GroundTask &task,
                                     const ground::State &goal_state,
                                     const pddl::ProblemAst &base_problem,
                                     const WalkConfig &config);

}

#endif
