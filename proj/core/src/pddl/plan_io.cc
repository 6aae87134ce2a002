#include "lhplan/pddl/plan_io.h"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

using namespace std;

namespace lhplan::pddl {

string print_plan(const ground::GroundTask &task, const search::Plan &plan) {
    ostringstream out;
    for (int action : plan.actions)
        out << "(" << task.actions[action].name << ")\n";
    out << "; cost = " << plan.cost << "\n";
    return out.str();
}

search::Plan parse_plan(const ground::GroundTask &task, const string &text) {
    unordered_map<string, int> by_name;
    for (size_t i = 0; i < task.actions.size(); ++i)
        by_name.emplace(task.actions[i].name, static_cast<int>(i));

    search::Plan plan;
    optional<long long> stated_cost;
    istringstream in(text);
    string line;
    int line_number = 0;
    while (getline(in, line)) {
        ++line_number;
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == string::npos)
            continue;
        if (line[begin] == ';') {
            size_t eq = line.find('=', begin);
            if (line.find("cost", begin) != string::npos && eq != string::npos)
                stated_cost = stoll(line.substr(eq + 1));
            continue;
        }
        size_t open = line.find('(', begin);
        size_t close = line.rfind(')');
        if (open == string::npos || close == string::npos || close <= open)
            throw runtime_error("plan line " + to_string(line_number) +
                                ": expected (name args...)");
        string name = line.substr(open + 1, close - open - 1);
        // Collapse internal whitespace runs to single spaces.
        string normalized;
        bool in_space = true;
        for (char c : name) {
            if (c == ' ' || c == '\t') {
                if (!in_space)
                    normalized += ' ';
                in_space = true;
            } else {
                normalized += c;
                in_space = false;
            }
        }
        while (!normalized.empty() && normalized.back() == ' ')
            normalized.pop_back();
        auto it = by_name.find(normalized);
        if (it == by_name.end())
            throw runtime_error("plan line " + to_string(line_number) +
                                ": unknown action '" + normalized + "'");
        plan.actions.push_back(it->second);
        plan.cost += task.actions[it->second].cost;
    }
    if (stated_cost && *stated_cost != plan.cost)
        throw runtime_error("plan cost line says " + to_string(*stated_cost) +
                            " but actions sum to " + to_string(plan.cost));
    return plan;
}

}
