#include "lhplan/heuristics/features.h"

#include "lhplan/ground/mutex.h"

#include <optional>
#include <stdexcept>

using namespace std;
using lhplan::ground::GroundTask;
using lhplan::ground::State;

namespace lhplan::heuristics {

string to_string(FeatureSchema schema) {
    return schema == FeatureSchema::simple ? "simple" : "ff";
}

FeatureSchema schema_from_string(const string &name) {
    if (name == "simple")
        return FeatureSchema::simple;
    if (name == "ff")
        return FeatureSchema::ff;
    throw runtime_error("unknown feature schema '" + name + "'");
}

int schema_length(FeatureSchema schema) {
    return schema == FeatureSchema::simple ? 6 : 5;
}

vector<string> feature_names(FeatureSchema schema) {
    if (schema == FeatureSchema::simple)
        return {"num_variables",      "q1_domain_size", "q2_domain_size",
                "q3_domain_size",     "num_goal_conjuncts",
                "num_unsatisfied_goals"};
    return {"ff_value", "num_unsatisfied_goals", "op_count",
            "ignored_deletes_total", "ignored_deletes_avg"};
}

long long nearest_rank_quartile(const vector<long long> &sorted_values, int k) {
    if (sorted_values.empty())
        return 0;
    long long n = static_cast<long long>(sorted_values.size());
    long long rank = (k * n + 3) / 4;  // ceil(k*n/4), 1-based
    return sorted_values[rank - 1];
}

TaskFeatures compute_task_features(const GroundTask &task) {
    vector<long long> sizes = ground::variable_domain_sizes(task.mutex_groups, task);
    TaskFeatures features;
    features.num_variables = static_cast<double>(sizes.size());
    features.q1_domain_size = static_cast<double>(nearest_rank_quartile(sizes, 1));
    features.q2_domain_size = static_cast<double>(nearest_rank_quartile(sizes, 2));
    features.q3_domain_size = static_cast<double>(nearest_rank_quartile(sizes, 3));
    features.num_goal_conjuncts = static_cast<double>(task.goal.size());
    return features;
}

FeatureVector extract_features(const State &state, const GroundTask &task,
                               FeatureSchema schema,
                               const TaskFeatures *task_features,
                               DeleteRelaxation *relaxation) {
    FeatureVector result;
    result.schema = schema;
    if (schema == FeatureSchema::simple) {
        TaskFeatures local;
        if (!task_features) {
            local = compute_task_features(task);
            task_features = &local;
        }
        result.values = {task_features->num_variables,
                         task_features->q1_domain_size,
                         task_features->q2_domain_size,
                         task_features->q3_domain_size,
                         task_features->num_goal_conjuncts,
                         static_cast<double>(goal_count(state, task))};
        return result;
    }

    optional<DeleteRelaxation> local_relaxation;
    if (!relaxation) {
        local_relaxation.emplace(task);
        relaxation = &*local_relaxation;
    }
    relaxation->compute(state);
    RelaxedPlanResult plan = relaxation->extract_relaxed_plan(state);
    if (plan.dead_end())
        throw runtime_error("featurize dead end");
    result.values = {static_cast<double>(plan.ff_value),
                     static_cast<double>(goal_count(state, task)),
                     static_cast<double>(plan.op_count),
                     static_cast<double>(plan.ignored_deletes_total),
                     plan.ignored_deletes_avg};
    return result;
}

FeatureVector extract_features(const State &state, const GroundTask &task,
                               FeatureSchema schema) {
    return extract_features(state, task, schema, nullptr, nullptr);
}

}
