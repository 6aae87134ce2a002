#ifndef LHPLAN_HEURISTICS_FEATURES_H
#define LHPLAN_HEURISTICS_FEATURES_H

#include "lhplan/ground/task.h"
#include "lhplan/heuristics/relaxation.h"

#include <string>
#include <vector>

namespace lhplan::heuristics {

enum class FeatureSchema { simple, ff };

std::string to_string(FeatureSchema schema);
FeatureSchema schema_from_string(const std::string &name);  // throws on unknown
int schema_length(FeatureSchema schema);
std::vector<std::string> feature_names(FeatureSchema schema);

struct FeatureVector {
    FeatureSchema schema;
    std::vector<double> values;
};

// Task-level inputs of the simple schema; constant per task, so computed
// once and reused for every state.
struct TaskFeatures {
    double num_variables = 0;
    double q1_domain_size = 0;
    double q2_domain_size = 0;
    double q3_domain_size = 0;
    double num_goal_conjuncts = 0;
};

TaskFeatures compute_task_features(const ground::GroundTask &task);

// Nearest-rank quartile: element at index ceil(k*n/4), 1-based, of the
// sorted list; 0 for an empty list.
long long nearest_rank_quartile(const std::vector<long long> &sorted_values, int k);

/*
  simple: [num_variables, q1, q2, q3, num_goal_conjuncts, num_unsatisfied_goals]
  ff:     [ff_value, num_unsatisfied_goals, op_count, ignored_deletes_total,
           ignored_deletes_avg]
  The ff schema throws std::runtime_error("featurize dead end") when the
  relaxed plan reports a dead end; callers filter dead ends first.
*/
FeatureVector extract_features(const ground::State &state,
                               const ground::GroundTask &task,
                               FeatureSchema schema);

// Variant with caller-provided caches (task features; relaxation scratch).
FeatureVector extract_features(const ground::State &state,
                               const ground::GroundTask &task,
                               FeatureSchema schema,
                               const TaskFeatures *task_features,
                               DeleteRelaxation *relaxation);

}

#endif
