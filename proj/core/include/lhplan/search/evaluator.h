#ifndef LHPLAN_SEARCH_EVALUATOR_H
#define LHPLAN_SEARCH_EVALUATOR_H

#include "lhplan/ground/state.h"

#include <functional>
#include <limits>

namespace lhplan::search {

constexpr double kInfiniteHeuristic = std::numeric_limits<double>::infinity();

// State evaluators return a nonnegative estimate or infinity for states
// they recognize as dead ends. Evaluators may keep per-search scratch
// buffers; use one instance per running search.
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual double evaluate(const ground::State &state) = 0;
};

class FunctionEvaluator : public Evaluator {
public:
    explicit FunctionEvaluator(std::function<double(const ground::State &)> fn)
        : fn_(std::move(fn)) {}

    double evaluate(const ground::State &state) override { return fn_(state); }

private:
    std::function<double(const ground::State &)> fn_;
};

}

#endif
