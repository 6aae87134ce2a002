#ifndef LHPLAN_GROUND_TASK_H
#define LHPLAN_GROUND_TASK_H

#include "lhplan/ground/state.h"
#include "lhplan/pddl/ast.h"

#include <iosfwd>
#include <string>
#include <vector>

namespace lhplan::ground {

struct GroundAction {
    std::string name;        // "drive t1 a b"
    std::vector<int> pre;    // sorted, unique atom indices
    std::vector<int> add;
    std::vector<int> del;    // disjoint from add
    long long cost = 1;
};

// Set of atoms of which at most one is true in any reachable state.
// open means some action can delete a member without adding one, so the
// group can also be entirely false (an implicit "none" value).
struct MutexGroup {
    std::vector<int> atom_indices;
    bool open = false;
};

struct GroundTask {
    std::vector<pddl::Atom> atoms;    // index = bit position; sorted by name
    std::vector<GroundAction> actions;
    State init;
    std::vector<int> goal;            // sorted, unique
    std::vector<MutexGroup> mutex_groups;
    // A goal atom is unreachable even ignoring delete effects.
    bool provably_unsolvable = false;

    std::string atom_name(int index) const { return pddl::format_atom(atoms[index]); }
    // Linear scan; intended for tests and debug output.
    int find_atom(const std::string &formatted_name) const;

    void dump(std::ostream &out) const;
};

bool applicable(const State &state, const GroundAction &action);

// state ∪ add \ del; requires applicable(state, action).
State apply(const State &state, const GroundAction &action);

bool is_goal(const State &state, const GroundTask &task);

}

#endif
