#include "common.h"

#include "lhplan/heuristics/evaluators.h"
#include "lhplan/learn/model.h"
#include "lhplan/util/numeric_io.h"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <stdexcept>

using namespace std;
namespace fs = std::filesystem;

namespace lhplan::commands {

unique_ptr<search::Evaluator> make_evaluator(const string &spec,
                                             const ground::GroundTask &task) {
    if (spec == "goal-count")
        return make_unique<heuristics::GoalCountHeuristic>(task);
    if (spec == "ff")
        return make_unique<heuristics::FfHeuristic>(task);
    static const string kStandalone = "standalone:";
    static const string kCorrection = "ff-correction:";
    if (spec.rfind(kStandalone, 0) == 0) {
        learn::Model model = learn::load_model_file_checked(
            spec.substr(kStandalone.size()), heuristics::FeatureSchema::simple);
        return make_unique<heuristics::LearnedHeuristic>(task, move(model));
    }
    if (spec.rfind(kCorrection, 0) == 0) {
        learn::Model model = learn::load_model_file_checked(
            spec.substr(kCorrection.size()), heuristics::FeatureSchema::ff);
        return make_unique<heuristics::LearnedHeuristic>(task, move(model));
    }
    throw runtime_error("unknown heuristic '" + spec +
                        "' (expected goal-count, ff, standalone:<file> or "
                        "ff-correction:<file>)");
}

const char *const kReportHeader =
    "domain,problem,config,result,plan_cost,generated,expanded,wall_time";

string format_report_row(const ReportRow &row) {
    ostringstream out;
    out << row.domain << "," << row.problem << "," << row.config << ","
        << row.result << ",";
    if (row.plan_cost)
        out << *row.plan_cost;
    out << "," << row.generated << "," << row.expanded << ","
        << double_to_string(row.wall_time);
    return out.str();
}

ReportRow parse_report_row(const string &line) {
    vector<string> fields;
    string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    if (fields.size() != 8)
        throw runtime_error("report row has " + to_string(fields.size()) +
                            " fields, expected 8: " + line);
    ReportRow row;
    row.domain = fields[0];
    row.problem = fields[1];
    row.config = fields[2];
    row.result = fields[3];
    if (!fields[4].empty())
        row.plan_cost = parse_int(fields[4]);
    row.generated = parse_int(fields[5]);
    row.expanded = parse_int(fields[6]);
    row.wall_time = parse_double(fields[7]);
    return row;
}

vector<string> list_problem_files(const string &dir) {
    vector<string> files;
    for (const fs::directory_entry &entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        fs::path path = entry.path();
        if (path.extension() != ".pddl")
            continue;
        if (path.filename() == "domain.pddl")
            continue;
        files.push_back(path.string());
    }
    sort(files.begin(), files.end());
    return files;
}

}
