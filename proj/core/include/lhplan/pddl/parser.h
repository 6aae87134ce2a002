#ifndef LHPLAN_PDDL_PARSER_H
#define LHPLAN_PDDL_PARSER_H

#include "lhplan/pddl/ast.h"
#include "lhplan/pddl/errors.h"

#include <string>

namespace lhplan::pddl {

/*
  Accepted requirements: :strips, :typing, :action-costs. Everything else
  is rejected with a positioned diagnostic. Atoms are accepted both in the
  standard form "(at ?v ?a)" and in the inline form "at(?v ?a)".
*/
DomainAst parse_domain(const std::string &text);
ProblemAst parse_problem(const std::string &text);

DomainAst parse_domain_file(const std::string &path);
ProblemAst parse_problem_file(const std::string &path);

// Reads a whole file; throws std::runtime_error when unreadable.
std::string read_text_file(const std::string &path);

}

#endif
