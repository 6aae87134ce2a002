#include "lhplan/search/search.h"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <unordered_map>

using namespace std;
using lhplan::ground::GroundAction;
using lhplan::ground::GroundTask;
using lhplan::ground::State;

namespace lhplan::search {

string to_string(ResultKind kind) {
    switch (kind) {
    case ResultKind::solved: return "solved";
    case ResultKind::exhausted_unsolvable: return "exhausted_unsolvable";
    case ResultKind::timeout: return "timeout";
    case ResultKind::node_limit: return "node_limit";
    }
    return "unknown";
}

namespace {

using Clock = chrono::steady_clock;

struct NodeRecord {
    const State *state;
    int parent;       // index into records, -1 for the root
    int action;       // action that produced this node
    long long g;
    bool closed = false;
};

class SearchSpace {
public:
    // Returns (record index, inserted?).
    pair<int, bool> insert(const State &state) {
        auto [it, inserted] = index_.try_emplace(state, -1);
        if (inserted) {
            it->second = static_cast<int>(records_.size());
            records_.push_back(NodeRecord{&it->first, -1, -1, 0});
        }
        return {it->second, inserted};
    }

    NodeRecord &operator[](int id) { return records_[id]; }

    Plan extract_plan(int goal_id, const GroundTask &task) const {
        Plan plan;
        int id = goal_id;
        while (records_[id].parent != -1) {
            plan.actions.push_back(records_[id].action);
            id = records_[id].parent;
        }
        reverse(plan.actions.begin(), plan.actions.end());
        for (int action : plan.actions)
            plan.cost += task.actions[action].cost;
        return plan;
    }

private:
    unordered_map<State, int, ground::StateHash> index_;
    vector<NodeRecord> records_;
};

struct QueueEntry {
    double key;
    long long tie;  // insertion counter: FIFO among equal keys
    int id;
};

struct QueueOrder {
    bool operator()(const QueueEntry &a, const QueueEntry &b) const {
        if (a.key != b.key)
            return a.key > b.key;
        return a.tie > b.tie;
    }
};

double elapsed_seconds(Clock::time_point start) {
    return chrono::duration<double>(Clock::now() - start).count();
}

SearchResult finish(SearchStats stats, ResultKind kind, optional<Plan> plan,
                    Clock::time_point start) {
    stats.result = kind;
    stats.wall_time = elapsed_seconds(start);
    return SearchResult{move(plan), stats};
}

}  // namespace

SearchResult uniform_cost_search(const GroundTask &task, const SearchLimits &limits) {
    auto start = Clock::now();
    SearchStats stats;
    if (task.provably_unsolvable) {
        stats.generated = 1;
        stats.evaluated = 1;
        return finish(stats, ResultKind::exhausted_unsolvable, nullopt, start);
    }

    SearchSpace space;
    priority_queue<QueueEntry, vector<QueueEntry>, QueueOrder> open;
    long long tie = 0;

    auto [root, _] = space.insert(task.init);
    stats.generated = 1;
    stats.evaluated = 1;
    open.push({0.0, tie++, root});

    while (!open.empty()) {
        if (limits.wall_clock_seconds && stats.expanded % 1024 == 0 &&
            elapsed_seconds(start) > *limits.wall_clock_seconds)
            return finish(stats, ResultKind::timeout, nullopt, start);

        QueueEntry entry = open.top();
        open.pop();
        NodeRecord &node = space[entry.id];
        if (node.closed || static_cast<long long>(entry.key) > node.g)
            continue;  // stale queue entry
        node.closed = true;
        ++stats.expanded;

        if (is_goal(*node.state, task)) {
            Plan plan = space.extract_plan(entry.id, task);
            return finish(stats, ResultKind::solved, move(plan), start);
        }

        long long g = node.g;
        const State state = *node.state;  // copy: inserts below may rehash
        for (size_t i = 0; i < task.actions.size(); ++i) {
            const GroundAction &action = task.actions[i];
            if (!applicable(state, action))
                continue;
            State successor = apply(state, action);
            ++stats.generated;
            if (limits.max_generated && stats.generated > *limits.max_generated)
                return finish(stats, ResultKind::node_limit, nullopt, start);
            long long g2 = g + action.cost;
            ++stats.evaluated;
            auto [id, inserted] = space.insert(successor);
            NodeRecord &succ = space[id];
            if (inserted || (!succ.closed && g2 < succ.g)) {
                succ.parent = entry.id;
                succ.action = static_cast<int>(i);
                succ.g = g2;
                open.push({static_cast<double>(g2), tie++, id});
            }
        }
    }
    return finish(stats, ResultKind::exhausted_unsolvable, nullopt, start);
}

SearchResult greedy_best_first(const GroundTask &task, Evaluator &heuristic,
                               const SearchLimits &limits) {
    auto start = Clock::now();
    SearchStats stats;
    if (task.provably_unsolvable) {
        stats.generated = 1;
        stats.evaluated = 1;
        return finish(stats, ResultKind::exhausted_unsolvable, nullopt, start);
    }

    SearchSpace space;
    priority_queue<QueueEntry, vector<QueueEntry>, QueueOrder> open;
    long long tie = 0;

    auto [root, _] = space.insert(task.init);
    stats.generated = 1;
    double h0 = heuristic.evaluate(task.init);
    stats.evaluated = 1;
    if (h0 != kInfiniteHeuristic)
        open.push({h0, tie++, root});

    while (!open.empty()) {
        if (limits.wall_clock_seconds && stats.expanded % 1024 == 0 &&
            elapsed_seconds(start) > *limits.wall_clock_seconds)
            return finish(stats, ResultKind::timeout, nullopt, start);

        QueueEntry entry = open.top();
        open.pop();
        ++stats.expanded;
        if (is_goal(*space[entry.id].state, task)) {
            Plan plan = space.extract_plan(entry.id, task);
            return finish(stats, ResultKind::solved, move(plan), start);
        }

        const State state = *space[entry.id].state;
        for (size_t i = 0; i < task.actions.size(); ++i) {
            const GroundAction &action = task.actions[i];
            if (!applicable(state, action))
                continue;
            State successor = apply(state, action);
            ++stats.generated;
            if (limits.max_generated && stats.generated > *limits.max_generated)
                return finish(stats, ResultKind::node_limit, nullopt, start);
            auto [id, inserted] = space.insert(successor);
            if (!inserted)
                continue;  // first evaluation wins; no reopening
            double h = heuristic.evaluate(*space[id].state);
            ++stats.evaluated;
            space[id].parent = entry.id;
            space[id].action = static_cast<int>(i);
            if (h != kInfiniteHeuristic)
                open.push({h, tie++, id});
        }
    }
    return finish(stats, ResultKind::exhausted_unsolvable, nullopt, start);
}

vector<State> trace_states(const GroundTask &task, const Plan &plan) {
    vector<State> states;
    states.push_back(task.init);
    for (size_t i = 0; i < plan.actions.size(); ++i) {
        const GroundAction &action = task.actions[plan.actions[i]];
        if (!applicable(states.back(), action))
            throw runtime_error("plan action inapplicable at step " +
                                std::to_string(i) + " (" + action.name + ")");
        states.push_back(apply(states.back(), action));
    }
    return states;
}

bool validate_plan(const GroundTask &task, const Plan &plan) {
    try {
        vector<State> states = trace_states(task, plan);
        if (!is_goal(states.back(), task))
            return false;
    } catch (const runtime_error &) {
        return false;
    }
    long long cost = 0;
    for (int action : plan.actions)
        cost += task.actions[action].cost;
    return cost == plan.cost;
}

}
