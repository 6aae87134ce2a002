#include "lhplan/commands/commands.h"

#include "common.h"
#include "lhplan/ground/grounder.h"
#include "lhplan/heuristics/features.h"
#include "lhplan/learn/dataset.h"
#include "lhplan/pddl/parser.h"
#include "lhplan/search/search.h"

#include <filesystem>
#include <ostream>

using namespace std;
namespace fs = std::filesystem;

namespace lhplan::commands {

int cmd_collect(const CollectOptions &options, ostream &out, ostream &err) {
    pddl::DomainAst domain;
    heuristics::FeatureSchema schema;
    vector<string> problem_files;
    try {
        domain = pddl::parse_domain_file(options.domain_path);
        schema = heuristics::schema_from_string(options.schema);
        problem_files = list_problem_files(options.problems_dir);
        if (problem_files.empty())
            throw runtime_error("no problems in '" + options.problems_dir + "'");
    } catch (const exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    search::SearchLimits limits;
    limits.wall_clock_seconds = options.timeout_seconds;
    limits.max_generated = options.max_generated;

    learn::Dataset dataset;
    dataset.schema = schema;
    vector<string> skipped;
    int solved = 0;
    for (const string &path : problem_files) {
        string problem_id = fs::path(path).stem().string();
        try {
            pddl::ProblemAst problem = pddl::parse_problem_file(path);
            ground::GroundTask task = ground::ground(domain, problem);
            search::SearchResult result = search::uniform_cost_search(task, limits);
            if (result.stats.result != search::ResultKind::solved) {
                err << "warning: skipping " << problem_id << " ("
                    << search::to_string(result.stats.result) << ")\n";
                skipped.push_back(problem_id);
                continue;
            }
            heuristics::TaskFeatures task_features =
                heuristics::compute_task_features(task);
            heuristics::DeleteRelaxation relaxation(task);
            auto labeled = learn::label_trace(task, *result.plan);
            int step = 0;
            for (const auto &[state, cost_to_go] : labeled) {
                heuristics::FeatureVector features = heuristics::extract_features(
                    state, task, schema, &task_features, &relaxation);
                learn::Dataset::Row row;
                row.features = features.values;
                row.label = static_cast<double>(cost_to_go);
                row.problem_id = problem_id;
                row.step = step++;
                dataset.rows.push_back(move(row));
            }
            ++solved;
        } catch (const exception &e) {
            err << "warning: skipping " << problem_id << " (" << e.what() << ")\n";
            skipped.push_back(problem_id);
        }
    }

    try {
        dataset.save(options.out_path);
    } catch (const exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    out << "collected " << solved << " problems, " << dataset.rows.size()
        << " states";
    if (!skipped.empty()) {
        out << " (skipped";
        for (const string &name : skipped)
            out << " " << name;
        out << ")";
    }
    out << "\n";
    return 0;
}

}
