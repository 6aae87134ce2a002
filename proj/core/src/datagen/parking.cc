#include "lhplan/datagen/generators.h"

#include "lhplan/ground/grounder.h"
#include "lhplan/search/search.h"
#include "lhplan/util/rng.h"

#include <string>

using namespace std;
using lhplan::pddl::ActionSchema;
using lhplan::pddl::Atom;
using lhplan::pddl::DomainAst;
using lhplan::pddl::ProblemAst;

namespace lhplan::datagen {

namespace {

// Node budget for the generation-time solvability check. Deliberately a
// node count, not a timeout, so generation stays a pure function of the
// config.
constexpr long long kVerificationBudget = 2'000'000;
constexpr int kMaxRetries = 20;

Atom atom(const string &predicate, const vector<string> &args) {
    return Atom{predicate, args};
}

DomainAst parking_domain() {
    DomainAst domain;
    domain.name = "parking";
    domain.types = {{"car", "object"}, {"curb", "object"}};
    domain.predicates = {
        {"at-curb", {{"?car", "car"}}},
        {"at-curb-num", {{"?car", "car"}, {"?curb", "curb"}}},
        {"behind-car", {{"?car", "car"}, {"?front-car", "car"}}},
        {"car-clear", {{"?car", "car"}}},
        {"curb-clear", {{"?curb", "curb"}}},
    };

    ActionSchema curb_to_curb;
    curb_to_curb.name = "move-curb-to-curb";
    curb_to_curb.params = {{"?car", "car"}, {"?curbsrc", "curb"}, {"?curbdest", "curb"}};
    curb_to_curb.pre = {atom("car-clear", {"?car"}), atom("curb-clear", {"?curbdest"}),
                        atom("at-curb-num", {"?car", "?curbsrc"})};
    curb_to_curb.add = {atom("curb-clear", {"?curbsrc"}),
                        atom("at-curb-num", {"?car", "?curbdest"})};
    curb_to_curb.del = {atom("curb-clear", {"?curbdest"}),
                        atom("at-curb-num", {"?car", "?curbsrc"})};

    ActionSchema curb_to_car;
    curb_to_car.name = "move-curb-to-car";
    curb_to_car.params = {{"?car", "car"}, {"?curbsrc", "curb"}, {"?cardest", "car"}};
    curb_to_car.pre = {atom("car-clear", {"?car"}), atom("car-clear", {"?cardest"}),
                       atom("at-curb-num", {"?car", "?curbsrc"}),
                       atom("at-curb", {"?cardest"})};
    curb_to_car.add = {atom("curb-clear", {"?curbsrc"}),
                       atom("behind-car", {"?car", "?cardest"})};
    curb_to_car.del = {atom("car-clear", {"?cardest"}),
                       atom("at-curb-num", {"?car", "?curbsrc"}),
                       atom("at-curb", {"?car"})};

    ActionSchema car_to_curb;
    car_to_curb.name = "move-car-to-curb";
    car_to_curb.params = {{"?car", "car"}, {"?carsrc", "car"}, {"?curbdest", "curb"}};
    car_to_curb.pre = {atom("car-clear", {"?car"}), atom("curb-clear", {"?curbdest"}),
                       atom("behind-car", {"?car", "?carsrc"})};
    car_to_curb.add = {atom("car-clear", {"?carsrc"}),
                       atom("at-curb-num", {"?car", "?curbdest"}),
                       atom("at-curb", {"?car"})};
    car_to_curb.del = {atom("curb-clear", {"?curbdest"}),
                       atom("behind-car", {"?car", "?carsrc"})};

    ActionSchema car_to_car;
    car_to_car.name = "move-car-to-car";
    car_to_car.params = {{"?car", "car"}, {"?carsrc", "car"}, {"?cardest", "car"}};
    car_to_car.pre = {atom("car-clear", {"?car"}), atom("car-clear", {"?cardest"}),
                      atom("behind-car", {"?car", "?carsrc"}),
                      atom("at-curb", {"?cardest"})};
    car_to_car.add = {atom("car-clear", {"?carsrc"}),
                      atom("behind-car", {"?car", "?cardest"})};
    car_to_car.del = {atom("car-clear", {"?cardest"}),
                      atom("behind-car", {"?car", "?carsrc"})};

    domain.actions = {curb_to_curb, curb_to_car, car_to_curb, car_to_car};
    return domain;
}

// front[c] / back[c]: car index at the curb / behind it, -1 when free.
struct Layout {
    vector<int> front;
    vector<int> back;
};

Layout random_layout(int curbs, int cars, RandomNumberGenerator &rng) {
    Layout layout{vector<int>(curbs, -1), vector<int>(curbs, -1)};
    for (int car = 0; car < cars; ++car) {
        // Valid slots: any free curb head, or the back of an occupied curb
        // whose back is free.
        vector<pair<int, bool>> slots;  // (curb, is_back)
        for (int c = 0; c < curbs; ++c) {
            if (layout.front[c] == -1)
                slots.push_back({c, false});
            else if (layout.back[c] == -1)
                slots.push_back({c, true});
        }
        auto [curb, is_back] = slots[rng.uniform_int(static_cast<int>(slots.size()))];
        (is_back ? layout.back : layout.front)[curb] = car;
    }
    return layout;
}

void layout_atoms(const Layout &layout, bool as_goal, ProblemAst &problem) {
    auto car_name = [](int i) { return "car" + to_string(i); };
    auto curb_name = [](int i) { return "curb" + to_string(i); };
    int curbs = static_cast<int>(layout.front.size());
    for (int c = 0; c < curbs; ++c) {
        int front = layout.front[c];
        int back = layout.back[c];
        auto &sink = as_goal ? problem.goal : problem.init;
        if (front == -1) {
            if (!as_goal)
                sink.push_back(atom("curb-clear", {curb_name(c)}));
            continue;
        }
        sink.push_back(atom("at-curb-num", {car_name(front), curb_name(c)}));
        if (back != -1)
            sink.push_back(atom("behind-car", {car_name(back), car_name(front)}));
        if (!as_goal) {
            sink.push_back(atom("at-curb", {car_name(front)}));
            if (back != -1)
                sink.push_back(atom("car-clear", {car_name(back)}));
            else
                sink.push_back(atom("car-clear", {car_name(front)}));
        }
    }
}

}  // namespace

pair<DomainAst, ProblemAst> gen_parking(const ParkingConfig &config) {
    if (config.curbs < 2)
        throw GenerationError("parking: need at least 2 curbs");
    if (config.cars < 1 || config.cars > 2 * config.curbs - 2)
        throw GenerationError("parking: cars must be between 1 and 2*curbs - 2 = " +
                              to_string(2 * config.curbs - 2));

    DomainAst domain = parking_domain();
    RandomNumberGenerator rng(config.seed);

    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        ProblemAst problem;
        problem.domain_name = domain.name;
        problem.name = "parking-c" + to_string(config.curbs) + "-n" +
                       to_string(config.cars) + "-s" + to_string(config.seed);
        for (int i = 0; i < config.cars; ++i)
            problem.objects.push_back({"car" + to_string(i), "car"});
        for (int i = 0; i < config.curbs; ++i)
            problem.objects.push_back({"curb" + to_string(i), "curb"});

        Layout init = random_layout(config.curbs, config.cars, rng);
        Layout goal = random_layout(config.curbs, config.cars, rng);
        layout_atoms(init, false, problem);
        layout_atoms(goal, true, problem);

        ground::GroundTask task = ground::ground(domain, problem);
        search::SearchLimits limits;
        limits.max_generated = kVerificationBudget;
        search::SearchResult result = search::uniform_cost_search(task, limits);
        if (result.stats.result == search::ResultKind::solved)
            return {move(domain), move(problem)};
    }
    throw GenerationError("parking: no solvable instance found after " +
                          to_string(kMaxRetries) + " attempts; try fewer cars");
}

pddl::ProblemAst random_walk_problem(const ground::GroundTask &task,
                                     const ground::State &goal_state,
                                     const ProblemAst &base_problem,
                                     const WalkConfig &config) {
    if (!is_goal(goal_state, task))
        throw GenerationError("random walk: starting state does not satisfy the "
                              "goal");
    RandomNumberGenerator rng(config.seed);

    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        ground::State state = goal_state;
        for (int step = 0; step < config.walk_length; ++step) {
            vector<int> applicable_actions;
            for (size_t i = 0; i < task.actions.size(); ++i)
                if (applicable(state, task.actions[i]))
                    applicable_actions.push_back(static_cast<int>(i));
            if (applicable_actions.empty()) {
                if (step == 0)
                    throw GenerationError("random walk: no applicable action in the "
                                          "goal state");
                break;  // walk stops early
            }
            int choice = applicable_actions[rng.uniform_int(
                static_cast<int>(applicable_actions.size()))];
            state = apply(state, task.actions[choice]);
        }

        ProblemAst problem;
        problem.name = base_problem.name + "-walk" + to_string(config.walk_length) +
                       "-s" + to_string(config.seed);
        problem.domain_name = base_problem.domain_name;
        problem.objects = base_problem.objects;
        problem.has_total_cost_init = base_problem.has_total_cost_init;
        for (size_t i = 0; i < task.atoms.size(); ++i)
            if (state.test(static_cast<int>(i)))
                problem.init.push_back(task.atoms[i]);
        for (int g : task.goal)
            problem.goal.push_back(task.atoms[g]);

        // The goal region is reachable for reversible domains, but the walk
        // itself is no proof; verify with a bounded uniform-cost search.
        ground::GroundTask walk_task = task;
        walk_task.init = state;
        search::SearchLimits limits;
        limits.max_generated = kVerificationBudget;
        search::SearchResult result = search::uniform_cost_search(walk_task, limits);
        if (result.stats.result == search::ResultKind::solved)
            return problem;
    }
    throw GenerationError("random walk: walks kept reaching states from which "
                          "the goal was not recovered within the budget");
}

}
