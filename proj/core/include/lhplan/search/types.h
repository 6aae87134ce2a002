#ifndef LHPLAN_SEARCH_TYPES_H
#define LHPLAN_SEARCH_TYPES_H

#include <optional>
#include <string>
#include <vector>

namespace lhplan::search {

struct SearchLimits {
    std::optional<double> wall_clock_seconds;
    std::optional<long long> max_generated;
};

enum class ResultKind { solved, exhausted_unsolvable, timeout, node_limit };

std::string to_string(ResultKind kind);

/*
  Counting conventions, fixed so that generated-state comparisons between
  configurations are well defined:
    generated  counts the initial state plus every constructed successor,
               including duplicates and dead ends;
    expanded   counts every node removed from the open list, including the
               goal node (the goal test happens at expansion time);
    evaluated  counts the initial state plus every successor that was
               scored for the open list (duplicates are skipped before
               scoring in greedy search).
*/
struct SearchStats {
    long long generated = 0;
    long long expanded = 0;
    long long evaluated = 0;
    double wall_time = 0.0;
    ResultKind result = ResultKind::exhausted_unsolvable;
};

struct Plan {
    std::vector<int> actions;  // indices into GroundTask::actions
    long long cost = 0;
};

struct SearchResult {
    std::optional<Plan> plan;
    SearchStats stats;
};

}

#endif
