#ifndef LHPLAN_PDDL_AST_H
#define LHPLAN_PDDL_AST_H

#include <string>
#include <vector>

namespace lhplan::pddl {

/*
  Syntax trees for the supported PDDL subset: typed STRIPS with positive
  preconditions and goals, plus unit-increase action costs on total-cost.
  Identifiers are lower-cased by the lexer; argument entries starting with
  '?' are variables, everything else is a constant.
*/

struct Atom {
    std::string predicate;
    std::vector<std::string> args;

    bool operator==(const Atom &) const = default;
    bool operator<(const Atom &other) const {
        if (predicate != other.predicate)
            return predicate < other.predicate;
        return args < other.args;
    }
};

// "(at t1 a)"
std::string format_atom(const Atom &atom);

struct TypedName {
    std::string name;
    std::string type;

    bool operator==(const TypedName &) const = default;
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedName> params;

    bool operator==(const PredicateDecl &) const = default;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedName> params;
    std::vector<Atom> pre;
    std::vector<Atom> add;
    std::vector<Atom> del;
    long long cost = 1;

    bool operator==(const ActionSchema &) const = default;
};

struct DomainAst {
    std::string name;
    // (type, parent) pairs; parents referenced but never declared are
    // appended as children of "object".
    std::vector<TypedName> types;
    std::vector<PredicateDecl> predicates;
    std::vector<ActionSchema> actions;
    bool uses_action_costs = false;

    bool operator==(const DomainAst &) const = default;
    bool has_type(const std::string &name) const;
    const PredicateDecl *find_predicate(const std::string &name) const;
};

struct ProblemAst {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<Atom> init;   // duplicates collapsed, declaration order kept
    std::vector<Atom> goal;
    bool has_total_cost_init = false;

    bool operator==(const ProblemAst &) const = default;
};

}

#endif
