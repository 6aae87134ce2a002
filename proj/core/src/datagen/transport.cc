#include "lhplan/datagen/generators.h"

#include "lhplan/util/rng.h"

#include <algorithm>
#include <set>
#include <string>

using namespace std;
using lhplan::pddl::ActionSchema;
using lhplan::pddl::Atom;
using lhplan::pddl::DomainAst;
using lhplan::pddl::PredicateDecl;
using lhplan::pddl::ProblemAst;

namespace lhplan::datagen {

namespace {

Atom atom(const string &predicate, const vector<string> &args) {
    return Atom{predicate, args};
}

DomainAst transport_domain() {
    DomainAst domain;
    domain.name = "transport";
    domain.uses_action_costs = true;
    domain.types = {{"locatable", "object"},
                    {"location", "object"},
                    {"capacity-number", "object"},
                    {"vehicle", "locatable"},
                    {"package", "locatable"}};
    domain.predicates = {
        {"road", {{"?a", "location"}, {"?b", "location"}}},
        {"at", {{"?x", "locatable"}, {"?l", "location"}}},
        {"in", {{"?p", "package"}, {"?v", "vehicle"}}},
        {"capacity", {{"?v", "vehicle"}, {"?s", "capacity-number"}}},
        {"capacity-predecessor", {{"?s1", "capacity-number"}, {"?s2", "capacity-number"}}},
    };

    ActionSchema drive;
    drive.name = "drive";
    drive.params = {{"?v", "vehicle"}, {"?a", "location"}, {"?b", "location"}};
    drive.pre = {atom("at", {"?v", "?a"}), atom("road", {"?a", "?b"})};
    drive.add = {atom("at", {"?v", "?b"})};
    drive.del = {atom("at", {"?v", "?a"})};
    drive.cost = 1;

    ActionSchema pick_up;
    pick_up.name = "pick-up";
    pick_up.params = {{"?v", "vehicle"}, {"?l", "location"}, {"?p", "package"},
                      {"?s1", "capacity-number"}, {"?s2", "capacity-number"}};
    pick_up.pre = {atom("at", {"?v", "?l"}), atom("at", {"?p", "?l"}),
                   atom("capacity-predecessor", {"?s1", "?s2"}),
                   atom("capacity", {"?v", "?s2"})};
    pick_up.add = {atom("in", {"?p", "?v"}), atom("capacity", {"?v", "?s1"})};
    pick_up.del = {atom("at", {"?p", "?l"}), atom("capacity", {"?v", "?s2"})};
    pick_up.cost = 1;

    ActionSchema drop;
    drop.name = "drop";
    drop.params = {{"?v", "vehicle"}, {"?l", "location"}, {"?p", "package"},
                   {"?s1", "capacity-number"}, {"?s2", "capacity-number"}};
    drop.pre = {atom("at", {"?v", "?l"}), atom("in", {"?p", "?v"}),
                atom("capacity-predecessor", {"?s1", "?s2"}),
                atom("capacity", {"?v", "?s1"})};
    drop.add = {atom("at", {"?p", "?l"}), atom("capacity", {"?v", "?s2"})};
    drop.del = {atom("in", {"?p", "?v"}), atom("capacity", {"?v", "?s1"})};
    drop.cost = 1;

    domain.actions = {drive, pick_up, drop};
    return domain;
}

}  // namespace

pair<DomainAst, ProblemAst> gen_transport(const TransportConfig &config) {
    if (config.locations < 2)
        throw GenerationError("transport: need at least 2 locations");
    if (config.trucks < 1 || config.packages < 1 || config.capacity < 1)
        throw GenerationError("transport: trucks, packages and capacity must be "
                              "positive");
    long long max_edges =
        static_cast<long long>(config.locations) * (config.locations - 1) / 2;
    if (config.edges < config.locations - 1)
        throw GenerationError("transport: need at least locations - 1 edges for a "
                              "connected road graph");
    if (config.edges > max_edges)
        throw GenerationError("transport: too many edges for " +
                              to_string(config.locations) + " locations");

    RandomNumberGenerator rng(config.seed);

    // Random spanning tree first, then extra distinct edges.
    set<pair<int, int>> edges;
    for (int i = 1; i < config.locations; ++i) {
        int j = rng.uniform_int(i);
        edges.insert({min(i, j), max(i, j)});
    }
    while (static_cast<int>(edges.size()) < config.edges) {
        int a = rng.uniform_int(config.locations);
        int b = rng.uniform_int(config.locations);
        if (a != b)
            edges.insert({min(a, b), max(a, b)});
    }

    DomainAst domain = transport_domain();
    ProblemAst problem;
    problem.domain_name = domain.name;
    problem.name = "transport-l" + to_string(config.locations) + "-t" +
                   to_string(config.trucks) + "-p" + to_string(config.packages) +
                   "-s" + to_string(config.seed);
    problem.has_total_cost_init = true;

    auto location = [](int i) { return "l" + to_string(i); };
    auto truck = [](int i) { return "t" + to_string(i); };
    auto package = [](int i) { return "p" + to_string(i); };
    auto capacity_number = [](int i) { return "c" + to_string(i); };

    for (int i = 0; i < config.locations; ++i)
        problem.objects.push_back({location(i), "location"});
    for (int i = 0; i < config.trucks; ++i)
        problem.objects.push_back({truck(i), "vehicle"});
    for (int i = 0; i < config.packages; ++i)
        problem.objects.push_back({package(i), "package"});
    for (int i = 0; i <= config.capacity; ++i)
        problem.objects.push_back({capacity_number(i), "capacity-number"});

    for (const auto &[a, b] : edges) {
        problem.init.push_back(atom("road", {location(a), location(b)}));
        problem.init.push_back(atom("road", {location(b), location(a)}));
    }
    for (int i = 0; i < config.capacity; ++i)
        problem.init.push_back(
            atom("capacity-predecessor", {capacity_number(i), capacity_number(i + 1)}));
    for (int i = 0; i < config.trucks; ++i) {
        problem.init.push_back(
            atom("at", {truck(i), location(rng.uniform_int(config.locations))}));
        problem.init.push_back(
            atom("capacity", {truck(i), capacity_number(config.capacity)}));
    }
    for (int i = 0; i < config.packages; ++i) {
        int origin = rng.uniform_int(config.locations);
        int destination = rng.uniform_int(config.locations - 1);
        if (destination >= origin)
            ++destination;  // goal differs from the origin
        problem.init.push_back(atom("at", {package(i), location(origin)}));
        problem.goal.push_back(atom("at", {package(i), location(destination)}));
    }
    return {move(domain), move(problem)};
}

}
