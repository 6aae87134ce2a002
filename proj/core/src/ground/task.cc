#include "lhplan/ground/task.h"

#include <cassert>
#include <ostream>

using namespace std;

namespace lhplan::ground {

int GroundTask::find_atom(const string &formatted_name) const {
    for (size_t i = 0; i < atoms.size(); ++i)
        if (pddl::format_atom(atoms[i]) == formatted_name)
            return static_cast<int>(i);
    return -1;
}

void GroundTask::dump(ostream &out) const {
    out << "atoms " << atoms.size() << "\n";
    for (size_t i = 0; i < atoms.size(); ++i)
        out << "  " << i << " " << pddl::format_atom(atoms[i])
            << (init.test(static_cast<int>(i)) ? " [init]" : "") << "\n";
    out << "goal";
    for (int g : goal)
        out << " " << g;
    out << "\n";
    out << "actions " << actions.size() << "\n";
    for (size_t i = 0; i < actions.size(); ++i) {
        const GroundAction &a = actions[i];
        out << "  " << i << " (" << a.name << ") cost=" << a.cost << " pre=";
        for (int p : a.pre)
            out << p << ",";
        out << " add=";
        for (int p : a.add)
            out << p << ",";
        out << " del=";
        for (int p : a.del)
            out << p << ",";
        out << "\n";
    }
    out << "mutex_groups " << mutex_groups.size() << "\n";
    for (const MutexGroup &group : mutex_groups) {
        out << " ";
        for (int index : group.atom_indices)
            out << " " << index;
        out << (group.open ? " open" : " closed") << "\n";
    }
    if (provably_unsolvable)
        out << "provably_unsolvable\n";
}

bool applicable(const State &state, const GroundAction &action) {
    for (int p : action.pre)
        if (!state.test(p))
            return false;
    return true;
}

State apply(const State &state, const GroundAction &action) {
    assert(applicable(state, action));
    State result = state;
    for (int p : action.del)
        result.clear(p);
    for (int p : action.add)
        result.set(p);
    return result;
}

bool is_goal(const State &state, const GroundTask &task) {
    for (int g : task.goal)
        if (!state.test(g))
            return false;
    return true;
}

}
