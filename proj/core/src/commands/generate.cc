#include "lhplan/commands/commands.h"

#include "lhplan/datagen/generators.h"
#include "lhplan/ground/grounder.h"
#include "lhplan/pddl/parser.h"
#include "lhplan/pddl/writer.h"
#include "lhplan/search/search.h"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

using namespace std;
namespace fs = std::filesystem;

namespace lhplan::commands {

namespace {

void write_file(const fs::path &path, const string &content) {
    ofstream out(path, ios::binary);
    if (!out)
        throw runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

string problem_file_name(const string &kind, int index) {
    ostringstream name;
    name << kind << "-";
    if (index < 10)
        name << "00";
    else if (index < 100)
        name << "0";
    name << index << ".pddl";
    return name.str();
}

}  // namespace

int cmd_generate(const GenerateOptions &options, ostream &out, ostream &err) {
    try {
        fs::create_directories(options.out_dir);
        fs::path dir(options.out_dir);
        ostringstream manifest;
        manifest << "problem,seed,config\n";

        if (options.kind == "transport" || options.kind == "parking") {
            bool wrote_domain = false;
            for (int i = 0; i < options.count; ++i) {
                uint64_t seed = options.seed + static_cast<uint64_t>(i);
                pddl::DomainAst domain;
                pddl::ProblemAst problem;
                string config_string;
                if (options.kind == "transport") {
                    datagen::TransportConfig config;
                    config.locations = options.locations;
                    config.edges = options.edges;
                    config.trucks = options.trucks;
                    config.packages = options.packages;
                    config.capacity = options.capacity;
                    config.seed = seed;
                    tie(domain, problem) = datagen::gen_transport(config);
                    ostringstream cfg;
                    cfg << "locations=" << config.locations
                        << " edges=" << config.edges << " trucks=" << config.trucks
                        << " packages=" << config.packages
                        << " capacity=" << config.capacity;
                    config_string = cfg.str();
                } else {
                    datagen::ParkingConfig config;
                    config.curbs = options.curbs;
                    config.cars = options.cars;
                    config.seed = seed;
                    tie(domain, problem) = datagen::gen_parking(config);
                    ostringstream cfg;
                    cfg << "curbs=" << config.curbs << " cars=" << config.cars;
                    config_string = cfg.str();
                }
                if (!wrote_domain) {
                    write_file(dir / "domain.pddl",
                               pddl::write_domain(domain));
                    wrote_domain = true;
                }
                string file_name = problem_file_name(options.kind, i);
                write_file(dir / file_name,
                           pddl::write_problem(problem, domain.uses_action_costs));
                manifest << file_name << "," << seed << "," << config_string << "\n";
            }
        } else if (options.kind == "walk") {
            pddl::DomainAst domain = pddl::parse_domain_file(options.domain_path);
            pddl::ProblemAst base = pddl::parse_problem_file(options.problem_path);
            ground::GroundTask task = ground::ground(domain, base);
            search::SearchResult solved =
                search::uniform_cost_search(task, search::SearchLimits{});
            if (solved.stats.result != search::ResultKind::solved)
                throw runtime_error("walk: base problem is unsolvable");
            ground::State goal_state =
                search::trace_states(task, *solved.plan).back();
            write_file(dir / "domain.pddl",
                       pddl::read_text_file(options.domain_path));
            for (int i = 0; i < options.count; ++i) {
                datagen::WalkConfig config;
                config.walk_length = options.walk_length;
                config.seed = options.seed + static_cast<uint64_t>(i);
                pddl::ProblemAst problem =
                    datagen::random_walk_problem(task, goal_state, base, config);
                string file_name = problem_file_name(options.kind, i);
                write_file(dir / file_name,
                           pddl::write_problem(problem, domain.uses_action_costs));
                manifest << file_name << "," << config.seed
                         << ",walk_length=" << config.walk_length << "\n";
            }
        } else {
            err << "error: unknown generator '" << options.kind
                << "' (expected transport, parking or walk)\n";
            return 3;
        }

        write_file(dir / "manifest.csv", manifest.str());
        out << "generated " << options.count << " " << options.kind
            << " instances in " << options.out_dir << "\n";
        return 0;
    } catch (const exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}
