#include "lhplan/pddl/writer.h"

#include <sstream>

using namespace std;

namespace lhplan::pddl {

namespace {

void write_typed_list(ostringstream &out, const vector<TypedName> &entries) {
    // Adjacent entries of equal type share one "- type" tail.
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i > 0)
            out << " ";
        out << entries[i].name;
        if (i + 1 == entries.size() || entries[i + 1].type != entries[i].type)
            out << " - " << entries[i].type;
    }
}

void write_atom_list(ostringstream &out, const vector<Atom> &atoms,
                     const string &indent) {
    for (const Atom &atom : atoms)
        out << indent << format_atom(atom) << "\n";
}

}  // namespace

string write_domain(const DomainAst &domain) {
    ostringstream out;
    out << "(define (domain " << domain.name << ")\n";
    out << "  (:requirements :strips :typing";
    if (domain.uses_action_costs)
        out << " :action-costs";
    out << ")\n";
    if (!domain.types.empty()) {
        out << "  (:types ";
        write_typed_list(out, domain.types);
        out << ")\n";
    }
    if (!domain.predicates.empty()) {
        out << "  (:predicates\n";
        for (const PredicateDecl &pred : domain.predicates) {
            out << "    (" << pred.name;
            if (!pred.params.empty()) {
                out << " ";
                write_typed_list(out, pred.params);
            }
            out << ")\n";
        }
        out << "  )\n";
    }
    if (domain.uses_action_costs)
        out << "  (:functions (total-cost) - number)\n";
    for (const ActionSchema &action : domain.actions) {
        out << "  (:action " << action.name << "\n";
        out << "    :parameters (";
        write_typed_list(out, action.params);
        out << ")\n";
        out << "    :precondition (and\n";
        write_atom_list(out, action.pre, "      ");
        out << "    )\n";
        out << "    :effect (and\n";
        write_atom_list(out, action.add, "      ");
        for (const Atom &atom : action.del)
            out << "      (not " << format_atom(atom) << ")\n";
        if (domain.uses_action_costs)
            out << "      (increase (total-cost) " << action.cost << ")\n";
        out << "    )\n";
        out << "  )\n";
    }
    out << ")\n";
    return out.str();
}

string write_problem(const ProblemAst &problem, bool emit_total_cost_metric) {
    ostringstream out;
    out << "(define (problem " << problem.name << ")\n";
    out << "  (:domain " << problem.domain_name << ")\n";
    if (!problem.objects.empty()) {
        out << "  (:objects ";
        write_typed_list(out, problem.objects);
        out << ")\n";
    }
    out << "  (:init\n";
    if (problem.has_total_cost_init)
        out << "    (= (total-cost) 0)\n";
    write_atom_list(out, problem.init, "    ");
    out << "  )\n";
    out << "  (:goal (and\n";
    write_atom_list(out, problem.goal, "    ");
    out << "  ))\n";
    if (emit_total_cost_metric)
        out << "  (:metric minimize (total-cost))\n";
    out << ")\n";
    return out.str();
}

}
