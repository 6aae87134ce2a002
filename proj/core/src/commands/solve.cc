#include "lhplan/commands/commands.h"

#include "common.h"
#include "lhplan/ground/grounder.h"
#include "lhplan/pddl/parser.h"
#include "lhplan/pddl/plan_io.h"
#include "lhplan/search/search.h"
#include "lhplan/util/numeric_io.h"

#include <fstream>
#include <ostream>

using namespace std;

namespace lhplan::commands {

namespace {

void write_stats_file(const string &path, const search::SearchStats &stats,
                      const optional<search::Plan> &plan) {
    if (path.empty())
        return;
    ofstream out(path, ios::binary);
    if (!out)
        throw runtime_error("cannot write stats file '" + path + "'");
    out << "result: " << search::to_string(stats.result) << "\n";
    if (plan)
        out << "plan_cost: " << plan->cost << "\n";
    out << "generated: " << stats.generated << "\n";
    out << "expanded: " << stats.expanded << "\n";
    out << "evaluated: " << stats.evaluated << "\n";
    out << "wall_time: " << double_to_string(stats.wall_time) << "\n";
}

}  // namespace

int cmd_solve(const SolveOptions &options, ostream &out, ostream &err) {
    ground::GroundTask task;
    unique_ptr<search::Evaluator> heuristic;
    try {
        pddl::DomainAst domain = pddl::parse_domain_file(options.domain_path);
        pddl::ProblemAst problem = pddl::parse_problem_file(options.problem_path);
        task = ground::ground(domain, problem);
        if (!options.dump_grounding_path.empty()) {
            ofstream dump(options.dump_grounding_path, ios::binary);
            task.dump(dump);
        }
        if (options.search != "ucs" && options.search != "gbfs")
            throw runtime_error("unknown search '" + options.search +
                                "' (expected gbfs or ucs)");
        if (options.search == "gbfs")
            heuristic = make_evaluator(options.heuristic, task);
    } catch (const exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    search::SearchLimits limits;
    limits.wall_clock_seconds = options.timeout_seconds;
    limits.max_generated = options.max_generated;

    search::SearchResult result =
        options.search == "ucs"
            ? search::uniform_cost_search(task, limits)
            : search::greedy_best_first(task, *heuristic, limits);

    write_stats_file(options.stats_path, result.stats, result.plan);

    switch (result.stats.result) {
    case search::ResultKind::solved: {
        if (!search::validate_plan(task, *result.plan)) {
            err << "error: search returned an invalid plan\n";
            return 3;
        }
        string plan_text = pddl::print_plan(task, *result.plan);
        if (!options.plan_path.empty()) {
            ofstream plan_file(options.plan_path, ios::binary);
            if (!plan_file) {
                err << "error: cannot write plan file '" << options.plan_path
                    << "'\n";
                return 3;
            }
            plan_file << plan_text;
        }
        out << plan_text;
        out << "generated: " << result.stats.generated
            << " expanded: " << result.stats.expanded << "\n";
        return 0;
    }
    case search::ResultKind::timeout:
    case search::ResultKind::node_limit:
        err << "resource limit reached (" << search::to_string(result.stats.result)
            << ") after generating " << result.stats.generated << " states\n";
        return 1;
    case search::ResultKind::exhausted_unsolvable:
        err << "problem is provably unsolvable\n";
        return 2;
    }
    return 3;
}

}
