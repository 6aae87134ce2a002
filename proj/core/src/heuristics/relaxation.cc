#include "lhplan/heuristics/relaxation.h"

#include <queue>

using namespace std;
using lhplan::ground::GroundAction;
using lhplan::ground::GroundTask;
using lhplan::ground::State;

namespace lhplan::heuristics {

DeleteRelaxation::DeleteRelaxation(const GroundTask &task) : task_(task) {
    size_t num_atoms = task.atoms.size();
    size_t num_actions = task.actions.size();
    costs_.atom_cost.resize(num_atoms);
    costs_.best_supporter.resize(num_atoms);
    unsat_.resize(num_actions);
    accumulated_.resize(num_actions);
    consumers_.resize(num_atoms);
    for (size_t a = 0; a < num_actions; ++a)
        for (int p : task.actions[a].pre)
            consumers_[p].push_back(static_cast<int>(a));
    marked_.resize(num_actions);
    needed_.resize(num_atoms);
}

void DeleteRelaxation::compute(const State &state) {
    size_t num_atoms = task_.atoms.size();
    size_t num_actions = task_.actions.size();
    fill(costs_.atom_cost.begin(), costs_.atom_cost.end(), kInfiniteCost);
    fill(costs_.best_supporter.begin(), costs_.best_supporter.end(), -1);

    using Entry = pair<long long, int>;  // (cost, atom)
    priority_queue<Entry, vector<Entry>, greater<Entry>> open;

    auto relax = [&](int atom, long long cost, int supporter) {
        long long &current = costs_.atom_cost[atom];
        if (cost < current) {
            current = cost;
            costs_.best_supporter[atom] = supporter;
            open.push({cost, atom});
        } else if (cost == current) {
            // Same cost: keep the lowest action index; atoms already true
            // in the state (supporter -1) stay unsupported. No push is
            // needed because the atom's cost is unchanged.
            int &best = costs_.best_supporter[atom];
            if (best != -1 && supporter != -1 && supporter < best)
                best = supporter;
        }
    };

    for (size_t a = 0; a < num_actions; ++a) {
        unsat_[a] = static_cast<int>(task_.actions[a].pre.size());
        accumulated_[a] = task_.actions[a].cost;
    }
    for (size_t p = 0; p < num_atoms; ++p)
        if (state.test(static_cast<int>(p)))
            relax(static_cast<int>(p), 0, -1);
    for (size_t a = 0; a < num_actions; ++a)
        if (unsat_[a] == 0)
            for (int q : task_.actions[a].add)
                relax(q, accumulated_[a], static_cast<int>(a));

    while (!open.empty()) {
        auto [cost, atom] = open.top();
        open.pop();
        if (cost > costs_.atom_cost[atom])
            continue;  // stale
        for (int a : consumers_[atom]) {
            accumulated_[a] += cost;
            if (--unsat_[a] == 0)
                for (int q : task_.actions[a].add)
                    relax(q, accumulated_[a], a);
        }
    }
}

long long DeleteRelaxation::additive_goal_cost() const {
    long long total = 0;
    for (int g : task_.goal) {
        long long cost = costs_.atom_cost[g];
        if (cost == kInfiniteCost)
            return kInfiniteCost;
        total += cost;
    }
    return total;
}

RelaxedPlanResult DeleteRelaxation::extract_relaxed_plan(const State &state) {
    for (int g : task_.goal)
        if (costs_.atom_cost[g] == kInfiniteCost) {
            RelaxedPlanResult dead;
            dead.ff_value = kInfiniteCost;
            dead.op_count = kInfiniteCost;
            dead.ignored_deletes_total = kInfiniteCost;
            dead.ignored_deletes_avg =
                std::numeric_limits<double>::infinity();
            return dead;
        }

    fill(marked_.begin(), marked_.end(), 0);
    fill(needed_.begin(), needed_.end(), 0);
    vector<int> stack(task_.goal.begin(), task_.goal.end());
    RelaxedPlanResult result;
    while (!stack.empty()) {
        int atom = stack.back();
        stack.pop_back();
        if (needed_[atom] || state.test(atom))
            continue;
        needed_[atom] = 1;
        int supporter = costs_.best_supporter[atom];
        if (supporter < 0 || marked_[supporter])
            continue;
        marked_[supporter] = 1;
        const GroundAction &action = task_.actions[supporter];
        result.ff_value += action.cost;
        result.op_count += 1;
        result.ignored_deletes_total += static_cast<long long>(action.del.size());
        for (int p : action.pre)
            stack.push_back(p);
    }
    result.ignored_deletes_avg =
        result.op_count == 0
            ? 0.0
            : static_cast<double>(result.ignored_deletes_total) /
                  static_cast<double>(result.op_count);
    return result;
}

AdditiveCosts hadd(const State &state, const GroundTask &task) {
    DeleteRelaxation relaxation(task);
    relaxation.compute(state);
    return relaxation.costs();
}

RelaxedPlanResult ff(const State &state, const GroundTask &task) {
    DeleteRelaxation relaxation(task);
    relaxation.compute(state);
    return relaxation.extract_relaxed_plan(state);
}

long long goal_count(const State &state, const GroundTask &task) {
    long long unsatisfied = 0;
    for (int g : task.goal)
        if (!state.test(g))
            ++unsatisfied;
    return unsatisfied;
}

}
