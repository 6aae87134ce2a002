#ifndef LHPLAN_HEURISTICS_RELAXATION_H
#define LHPLAN_HEURISTICS_RELAXATION_H

#include "lhplan/ground/task.h"

#include <cstdint>
#include <limits>
#include <vector>

namespace lhplan::heuristics {

constexpr long long kInfiniteCost = std::numeric_limits<long long>::max();

// Additive costs and recorded best supporters for one evaluated state.
struct AdditiveCosts {
    std::vector<long long> atom_cost;   // kInfiniteCost when unreached
    std::vector<int> best_supporter;    // action index, -1 when in the state
};

struct RelaxedPlanResult {
    long long ff_value = 0;              // sum of costs of marked actions
    long long op_count = 0;              // distinct marked actions
    long long ignored_deletes_total = 0; // sum of |del| over marked actions
    double ignored_deletes_avg = 0.0;    // total / op_count, 0 when empty

    bool dead_end() const { return ff_value == kInfiniteCost; }
};

/*
  Delete relaxation machinery shared by the additive and the relaxed-plan
  heuristics. Holds per-instance scratch buffers: use one instance per
  running search; the task itself is shared and immutable.

  compute() runs a Dijkstra-style fixpoint: cost(p) = 0 for p in the state,
  otherwise the minimum over actions adding p of cost(a) + sum of the
  precondition costs. The best supporter of an atom is the cheapest adder,
  ties broken by the lowest action index.
*/
class DeleteRelaxation {
public:
    explicit DeleteRelaxation(const ground::GroundTask &task);

    void compute(const ground::State &state);

    // Valid after compute().
    const AdditiveCosts &costs() const { return costs_; }
    long long additive_goal_cost() const;  // sum over goal atoms, inf-aware

    // Backchains from the goal atoms through best supporters, marking each
    // action at most once. Returns an all-infinite result when some goal
    // atom is unreached (a recognized dead end).
    RelaxedPlanResult extract_relaxed_plan(const ground::State &state);

private:
    const ground::GroundTask &task_;
    AdditiveCosts costs_;
    std::vector<int> unsat_;               // per action
    std::vector<long long> accumulated_;   // per action
    std::vector<std::vector<int>> consumers_;  // atom -> actions with it in pre
    std::vector<char> marked_;             // per action, extraction scratch
    std::vector<char> needed_;             // per atom, extraction scratch
};

// Convenience wrappers matching the per-state operations.
AdditiveCosts hadd(const ground::State &state, const ground::GroundTask &task);
RelaxedPlanResult ff(const ground::State &state, const ground::GroundTask &task);

long long goal_count(const ground::State &state, const ground::GroundTask &task);

}

#endif
