#include "lhplan/commands/commands.h"

#include "common.h"
#include "lhplan/pddl/parser.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

using namespace std;

namespace lhplan::commands {

double geometric_mean(const vector<double> &ratios) {
    double log_sum = 0;
    for (double r : ratios)
        log_sum += log(r);
    return exp(log_sum / static_cast<double>(ratios.size()));
}

namespace {

struct Key {
    string domain, problem, config;
};

void print_ratio_line(ostream &out, const string &label_a, const string &label_b,
                      const vector<double> &ratios, const char *suffix) {
    out << "ratio " << label_a << "/" << label_b << suffix << " = ";
    if (ratios.empty())
        out << "n/a (no problems solved by both)";
    else
        out << fixed << setprecision(6) << geometric_mean(ratios)
            << defaultfloat << " (n=" << ratios.size() << ")";
    out << "\n";
}

}  // namespace

int cmd_report(const ReportOptions &options, ostream &out, ostream &err) {
    vector<ReportRow> rows;
    try {
        string text = pddl::read_text_file(options.report_path);
        istringstream in(text);
        string line;
        if (!getline(in, line))
            throw runtime_error("empty report file");
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line != kReportHeader)
            throw runtime_error("unexpected report header: " + line);
        while (getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
                line.pop_back();
            if (line.empty())
                continue;
            rows.push_back(parse_report_row(line));
        }
    } catch (const exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    // Coverage table: configs as rows, domains as columns, solved counts.
    set<string> domain_set, config_set;
    map<pair<string, string>, int> solved;  // (config, domain) -> count
    map<pair<string, string>, int> total;
    for (const ReportRow &row : rows) {
        domain_set.insert(row.domain);
        config_set.insert(row.config);
        ++total[{row.config, row.domain}];
        if (row.result == "solved")
            ++solved[{row.config, row.domain}];
    }

    size_t config_width = string("config").size();
    for (const string &config : config_set)
        config_width = max(config_width, config.size());

    out << "coverage (problems solved)\n";
    out << left << setw(static_cast<int>(config_width) + 2) << "config";
    for (const string &domain : domain_set)
        out << setw(max<int>(static_cast<int>(domain.size()) + 2, 8)) << domain;
    out << "\n";
    for (const string &config : config_set) {
        out << setw(static_cast<int>(config_width) + 2) << config;
        for (const string &domain : domain_set) {
            auto it = solved.find({config, domain});
            int count = it == solved.end() ? 0 : it->second;
            ostringstream cell;
            cell << count << "/" << total[{config, domain}];
            out << setw(max<int>(static_cast<int>(domain.size()) + 2, 8))
                << cell.str();
        }
        out << "\n";
    }

    // Generated-state ratios over commonly solved problems.
    map<tuple<string, string, string>, const ReportRow *> by_key;
    for (const ReportRow &row : rows)
        by_key[{row.config, row.domain, row.problem}] = &row;
    set<string> subset(options.subset.begin(), options.subset.end());

    for (const auto &[label_a, label_b] : options.ratios) {
        if (!config_set.count(label_a) || !config_set.count(label_b)) {
            err << "error: ratio pair " << label_a << "/" << label_b
                << " names an unknown config\n";
            return 3;
        }
        vector<double> ratios, subset_ratios;
        for (const ReportRow &row : rows) {
            if (row.config != label_a || row.result != "solved")
                continue;
            auto it = by_key.find({label_b, row.domain, row.problem});
            if (it == by_key.end() || it->second->result != "solved")
                continue;
            double ratio = static_cast<double>(row.generated) /
                           static_cast<double>(it->second->generated);
            ratios.push_back(ratio);
            if (subset.count(row.problem))
                subset_ratios.push_back(ratio);
        }
        print_ratio_line(out, label_a, label_b, ratios, "");
        if (!subset.empty())
            print_ratio_line(out, label_a, label_b, subset_ratios, " [subset]");
    }
    return 0;
}

}
