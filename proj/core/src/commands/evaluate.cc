#include "lhplan/commands/commands.h"

#include "common.h"
#include "lhplan/ground/grounder.h"
#include "lhplan/pddl/parser.h"
#include "lhplan/search/search.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

using namespace std;
namespace fs = std::filesystem;

namespace lhplan::commands {

EvalJobConfig parse_eval_config(const string &spec) {
    EvalJobConfig config;
    string body = spec;
    size_t eq = spec.find('=');
    if (eq != string::npos) {
        config.label = spec.substr(0, eq);
        body = spec.substr(eq + 1);
    } else {
        config.label = spec;
    }
    if (config.label.empty() || config.label.find('/') != string::npos ||
        config.label.find(',') != string::npos)
        throw runtime_error("config label '" + config.label +
                            "' must be nonempty and free of '/' and ','");
    size_t colon = body.find(':');
    if (colon == string::npos) {
        config.search = body;
        config.heuristic = "ff";
    } else {
        config.search = body.substr(0, colon);
        config.heuristic = body.substr(colon + 1);
    }
    if (config.search != "gbfs" && config.search != "ucs")
        throw runtime_error("config '" + spec + "': unknown search '" +
                            config.search + "'");
    return config;
}

namespace {

struct Job {
    string domain_path;
    string problem_path;
    string domain_name;
    string problem_name;
    EvalJobConfig config;
};

ReportRow run_job(const Job &job, const search::SearchLimits &limits) {
    ReportRow row;
    row.domain = job.domain_name;
    row.problem = job.problem_name;
    row.config = job.config.label;
    try {
        pddl::DomainAst domain = pddl::parse_domain_file(job.domain_path);
        pddl::ProblemAst problem = pddl::parse_problem_file(job.problem_path);
        ground::GroundTask task = ground::ground(domain, problem);
        search::SearchResult result;
        if (job.config.search == "ucs") {
            result = search::uniform_cost_search(task, limits);
        } else {
            unique_ptr<search::Evaluator> heuristic =
                make_evaluator(job.config.heuristic, task);
            result = search::greedy_best_first(task, *heuristic, limits);
        }
        row.result = search::to_string(result.stats.result);
        if (result.plan)
            row.plan_cost = result.plan->cost;
        row.generated = result.stats.generated;
        row.expanded = result.stats.expanded;
        row.wall_time = result.stats.wall_time;
    } catch (const exception &) {
        row.result = "error";
    }
    return row;
}

}  // namespace

int cmd_evaluate(const EvaluateOptions &options, ostream &out, ostream &err) {
    vector<Job> jobs;
    try {
        if (options.configs.empty())
            throw runtime_error("no planner configs given");
        if (options.workers < 1)
            throw runtime_error("workers must be positive");

        // Either one flat suite (domain.pddl next to problems) or one
        // subdirectory per domain.
        vector<pair<string, string>> suites;  // (domain name, directory)
        fs::path root(options.suite_dir);
        if (fs::exists(root / "domain.pddl")) {
            suites.emplace_back(root.filename().string(), root.string());
        } else {
            for (const fs::directory_entry &entry : fs::directory_iterator(root))
                if (entry.is_directory() &&
                    fs::exists(entry.path() / "domain.pddl"))
                    suites.emplace_back(entry.path().filename().string(),
                                        entry.path().string());
            sort(suites.begin(), suites.end());
        }
        if (suites.empty())
            throw runtime_error("no suite with a domain.pddl under '" +
                                options.suite_dir + "'");

        for (const auto &[domain_name, dir] : suites) {
            vector<string> problems = list_problem_files(dir);
            for (const string &problem_path : problems)
                for (const EvalJobConfig &config : options.configs) {
                    Job job;
                    job.domain_path = (fs::path(dir) / "domain.pddl").string();
                    job.problem_path = problem_path;
                    job.domain_name = domain_name;
                    job.problem_name = fs::path(problem_path).stem().string();
                    job.config = config;
                    jobs.push_back(move(job));
                }
        }
    } catch (const exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    search::SearchLimits limits;
    limits.wall_clock_seconds = options.timeout_seconds;
    limits.max_generated = options.max_generated;

    // One search per worker; rows land in preassigned slots, so the result
    // is independent of scheduling.
    vector<ReportRow> rows(jobs.size());
    atomic<size_t> next_job{0};
    auto worker = [&]() {
        while (true) {
            size_t index = next_job.fetch_add(1);
            if (index >= jobs.size())
                return;
            rows[index] = run_job(jobs[index], limits);
        }
    };
    if (options.workers == 1) {
        worker();
    } else {
        vector<thread> pool;
        for (int i = 0; i < options.workers; ++i)
            pool.emplace_back(worker);
        for (thread &t : pool)
            t.join();
    }

    stable_sort(rows.begin(), rows.end(), [](const ReportRow &a, const ReportRow &b) {
        return tie(a.domain, a.problem, a.config) < tie(b.domain, b.problem, b.config);
    });

    try {
        ofstream file(options.out_path, ios::binary);
        if (!file)
            throw runtime_error("cannot write report '" + options.out_path + "'");
        file << kReportHeader << "\n";
        for (const ReportRow &row : rows)
            file << format_report_row(row) << "\n";
    } catch (const exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    out << "evaluated " << jobs.size() << " (problem, config) pairs\n";
    return 0;
}

}
