#ifndef LHPLAN_PDDL_PLAN_IO_H
#define LHPLAN_PDDL_PLAN_IO_H

#include "lhplan/ground/task.h"
#include "lhplan/search/types.h"

#include <string>

namespace lhplan::pddl {

// One "(name arg ...)" line per action, then "; cost = C". The output
// reparses to the same plan with parse_plan.
std::string print_plan(const ground::GroundTask &task, const search::Plan &plan);

// Throws std::runtime_error on unknown action names or a cost line that
// contradicts the actions.
search::Plan parse_plan(const ground::GroundTask &task, const std::string &text);

}

#endif
