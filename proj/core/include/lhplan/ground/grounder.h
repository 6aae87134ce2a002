#ifndef LHPLAN_GROUND_GROUNDER_H
#define LHPLAN_GROUND_GROUNDER_H

#include "lhplan/ground/task.h"
#include "lhplan/pddl/ast.h"

#include <stdexcept>

namespace lhplan::ground {

class GroundError : public std::runtime_error {
public:
    explicit GroundError(const std::string &message)
        : std::runtime_error(message) {}
};

/*
  Instantiates every type-consistent binding of every schema, prunes the
  actions whose preconditions stay unreachable under a delete-relaxed
  fixpoint from the initial state, and indexes the atoms that occur in the
  initial state, the goal or a surviving action. Atom order is lexicographic
  by predicate then arguments; action order follows schema declaration order
  and then argument declaration order, so the output is deterministic.

  An unreachable goal atom marks the task provably unsolvable instead of
  raising an error. Mutex groups are synthesized as part of grounding.
*/
GroundTask ground(const pddl::DomainAst &domain, const pddl::ProblemAst &problem);

}

#endif
