#ifndef LHPLAN_COMMANDS_COMMON_H
#define LHPLAN_COMMANDS_COMMON_H

#include "lhplan/ground/task.h"
#include "lhplan/search/evaluator.h"
#include "lhplan/search/types.h"

#include <memory>
#include <string>
#include <vector>

namespace lhplan::commands {

// Builds the evaluator named by a heuristic spec; validates model roles
// against the recorded feature schema. Throws on bad specs.
std::unique_ptr<search::Evaluator> make_evaluator(const std::string &spec,
                                                  const ground::GroundTask &task);

struct ReportRow {
    std::string domain;
    std::string problem;
    std::string config;
    std::string result;  // solved | exhausted_unsolvable | timeout | node_limit | error
    std::optional<long long> plan_cost;
    long long generated = 0;
    long long expanded = 0;
    double wall_time = 0;
};

extern const char *const kReportHeader;

std::string format_report_row(const ReportRow &row);
ReportRow parse_report_row(const std::string &line);  // throws on malformed rows

// Problem files of a suite directory, sorted; skips domain.pddl and
// non-.pddl entries.
std::vector<std::string> list_problem_files(const std::string &dir);

}

#endif
