#include "lhplan/heuristics/evaluators.h"

#include <stdexcept>

using namespace std;
using lhplan::ground::GroundTask;
using lhplan::ground::State;

namespace lhplan::heuristics {

LearnedHeuristic::LearnedHeuristic(const GroundTask &task, learn::Model model)
    : task_(task), model_(move(model)), schema_(learn::model_schema(model_)) {
    int expected = schema_length(schema_);
    int actual = holds_alternative<learn::LinearModel>(model_)
                     ? static_cast<int>(get<learn::LinearModel>(model_).weights.size())
                     : get<learn::MlpModel>(model_).n_features;
    if (actual != expected)
        throw runtime_error("learned heuristic: model has " + to_string(actual) +
                            " inputs but schema " + to_string(schema_) +
                            " has " + to_string(expected) + " features");
    if (schema_ == FeatureSchema::simple)
        task_features_ = compute_task_features(task_);
    else
        relaxation_ = make_unique<DeleteRelaxation>(task_);
}

double LearnedHeuristic::evaluate(const State &state) {
    if (schema_ == FeatureSchema::ff) {
        relaxation_->compute(state);
        RelaxedPlanResult plan = relaxation_->extract_relaxed_plan(state);
        if (plan.dead_end())
            return search::kInfiniteHeuristic;
        vector<double> features = {static_cast<double>(plan.ff_value),
                                   static_cast<double>(goal_count(state, task_)),
                                   static_cast<double>(plan.op_count),
                                   static_cast<double>(plan.ignored_deletes_total),
                                   plan.ignored_deletes_avg};
        double value = learn::model_predict(model_, features);
        return value > 0 ? value : 0;
    }
    FeatureVector features =
        extract_features(state, task_, schema_, &task_features_, nullptr);
    double value = learn::model_predict(model_, features.values);
    return value > 0 ? value : 0;
}

double learned_heuristic(const State &state, const GroundTask &task,
                         const learn::Model &model) {
    LearnedHeuristic evaluator(task, model);
    return evaluator.evaluate(state);
}

}
