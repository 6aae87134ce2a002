#ifndef LHPLAN_HEURISTICS_EVALUATORS_H
#define LHPLAN_HEURISTICS_EVALUATORS_H

#include "lhplan/ground/task.h"
#include "lhplan/heuristics/features.h"
#include "lhplan/heuristics/relaxation.h"
#include "lhplan/learn/model.h"
#include "lhplan/search/evaluator.h"

#include <memory>
#include <string>

namespace lhplan::heuristics {

class GoalCountHeuristic : public search::Evaluator {
public:
    explicit GoalCountHeuristic(const ground::GroundTask &task) : task_(task) {}

    double evaluate(const ground::State &state) override {
        return static_cast<double>(goal_count(state, task_));
    }

private:
    const ground::GroundTask &task_;
};

class FfHeuristic : public search::Evaluator {
public:
    explicit FfHeuristic(const ground::GroundTask &task)
        : task_(task), relaxation_(task) {}

    double evaluate(const ground::State &state) override {
        relaxation_.compute(state);
        RelaxedPlanResult result = relaxation_.extract_relaxed_plan(state);
        if (result.dead_end())
            return search::kInfiniteHeuristic;
        return static_cast<double>(result.ff_value);
    }

private:
    const ground::GroundTask &task_;
    DeleteRelaxation relaxation_;
};

/*
  Evaluates a trained model as a planner heuristic: features are extracted
  under the model's schema and the prediction is clamped at 0. Under the ff
  schema, a relaxed-plan dead end short-circuits to infinity, preserving
  the base heuristic's dead-end detection. A feature-length mismatch is a
  configuration error raised at construction, not per state.
*/
class LearnedHeuristic : public search::Evaluator {
public:
    LearnedHeuristic(const ground::GroundTask &task, learn::Model model);

    double evaluate(const ground::State &state) override;

private:
    const ground::GroundTask &task_;
    learn::Model model_;
    FeatureSchema schema_;
    TaskFeatures task_features_;
    std::unique_ptr<DeleteRelaxation> relaxation_;
};

double learned_heuristic(const ground::State &state,
                         const ground::GroundTask &task,
                         const learn::Model &model);

}

#endif
