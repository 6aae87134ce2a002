#ifndef LHPLAN_PDDL_WRITER_H
#define LHPLAN_PDDL_WRITER_H

#include "lhplan/pddl/ast.h"

#include <string>

namespace lhplan::pddl {

// Canonical text form; write_domain(parse_domain(x)) reparses to an equal AST.
std::string write_domain(const DomainAst &domain);
std::string write_problem(const ProblemAst &problem, bool emit_total_cost_metric);

}

#endif
