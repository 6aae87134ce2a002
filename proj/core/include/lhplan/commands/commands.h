#ifndef LHPLAN_COMMANDS_COMMANDS_H
#define LHPLAN_COMMANDS_COMMANDS_H

#include "lhplan/learn/training.h"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lhplan::commands {

/*
  Exit codes shared by the commands:
    0  success
    1  resource exhaustion (timeout or node limit)
    2  proven unsolvability
    3  input diagnostics (parse, grounding, model or option errors)
  Commands print diagnostics to err and write their artifacts to explicit
  paths; given identical inputs and seeds the artifacts are byte-identical
  (wall-clock fields excepted).
*/

struct SolveOptions {
    std::string domain_path;
    std::string problem_path;
    // "goal-count", "ff", "standalone:<model file>", "ff-correction:<model file>"
    std::string heuristic = "ff";
    std::string search = "gbfs";  // "gbfs" | "ucs"
    std::optional<double> timeout_seconds;
    std::optional<long long> max_generated;
    std::string plan_path;          // optional
    std::string stats_path;         // optional
    std::string dump_grounding_path;  // optional debug dump
};

int cmd_solve(const SolveOptions &options, std::ostream &out, std::ostream &err);

struct CollectOptions {
    std::string domain_path;
    std::string problems_dir;
    std::string schema = "ff";  // "simple" | "ff"
    std::string out_path;
    std::optional<double> timeout_seconds;
    std::optional<long long> max_generated;
};

int cmd_collect(const CollectOptions &options, std::ostream &out, std::ostream &err);

struct TrainOptions {
    std::string dataset_path;
    std::string kind;  // "ridge" | "mlp"
    std::string out_path;
    learn::TrainConfig config;
};

int cmd_train(const TrainOptions &options, std::ostream &out, std::ostream &err);

struct GenerateOptions {
    std::string kind;  // "transport" | "parking" | "walk"
    std::string out_dir;
    int count = 1;
    uint64_t seed = 0;
    // transport
    int locations = 3, edges = 2, trucks = 1, packages = 1, capacity = 1;
    // parking
    int curbs = 3, cars = 4;
    // walk
    std::string domain_path;   // base instance to walk from
    std::string problem_path;
    int walk_length = 5;
};

int cmd_generate(const GenerateOptions &options, std::ostream &out,
                 std::ostream &err);

struct EvalJobConfig {
    std::string label;
    std::string search = "gbfs";
    std::string heuristic = "ff";
};

struct EvaluateOptions {
    std::string suite_dir;  // domain subdirectories, or one flat suite
    std::vector<EvalJobConfig> configs;
    double timeout_seconds = 60.0;
    std::optional<long long> max_generated;
    int workers = 1;
    std::string out_path;
};

int cmd_evaluate(const EvaluateOptions &options, std::ostream &out,
                 std::ostream &err);

struct ReportOptions {
    std::string report_path;
    // Pairs of config labels; the summary reports geomean(generated(first) /
    // generated(second)) over the problems solved by both.
    std::vector<std::pair<std::string, std::string>> ratios;
    std::vector<std::string> subset;  // problem names for the restricted aggregate
};

int cmd_report(const ReportOptions &options, std::ostream &out, std::ostream &err);

// exp(mean(log(r))) -- the aggregation used by the evaluation summary.
double geometric_mean(const std::vector<double> &ratios);

// "label=search:heuristic" (label optional). Throws std::runtime_error.
EvalJobConfig parse_eval_config(const std::string &spec);

}

#endif
