#ifndef LHPLAN_SEARCH_SEARCH_H
#define LHPLAN_SEARCH_SEARCH_H

#include "lhplan/ground/task.h"
#include "lhplan/search/evaluator.h"
#include "lhplan/search/types.h"

namespace lhplan::search {

/*
  Uniform-cost search: expands by lowest path cost, FIFO among equal
  costs, duplicate detection by exact state equality. Returned plans are
  cost-optimal. The wall clock is checked every 1024 expansions.
*/
SearchResult uniform_cost_search(const ground::GroundTask &task,
                                 const SearchLimits &limits);

/*
  Greedy best-first search: expands by lowest heuristic value, FIFO among
  ties. Each state is evaluated at most once (first evaluation wins, no
  reopening); states evaluated to infinity are counted but never enter the
  open list. Returned plans are valid but not necessarily optimal.
*/
SearchResult greedy_best_first(const ground::GroundTask &task,
                               Evaluator &heuristic, const SearchLimits &limits);

// [init, apply(init, a1), ...]; throws std::runtime_error naming the step
// of the first inapplicable action.
std::vector<ground::State> trace_states(const ground::GroundTask &task,
                                        const Plan &plan);

// Replays the plan and checks goal satisfaction and the recorded cost.
bool validate_plan(const ground::GroundTask &task, const Plan &plan);

}

#endif
