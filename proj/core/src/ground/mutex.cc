#include "lhplan/ground/mutex.h"

#include <algorithm>
#include <map>

using namespace std;

namespace lhplan::ground {

namespace {

struct CandidateGroup {
    vector<int> atom_indices;  // sorted
};

// Balance check: accepted iff no action adds two members, every action
// that adds a member deletes exactly one member, and at most one member
// is true in the initial state.
bool balanced(const vector<int> &members, const GroundTask &task) {
    vector<char> in_group(task.atoms.size(), 0);
    for (int index : members)
        in_group[index] = 1;
    for (const GroundAction &action : task.actions) {
        int adds = 0;
        int dels = 0;
        for (int p : action.add)
            adds += in_group[p];
        for (int p : action.del)
            dels += in_group[p];
        if (adds >= 2)
            return false;
        if (adds == 1 && dels != 1)
            return false;
    }
    int initially_true = 0;
    for (int index : members)
        if (task.init.test(index))
            ++initially_true;
    return initially_true <= 1;
}

bool open_group(const vector<int> &members, const GroundTask &task) {
    vector<char> in_group(task.atoms.size(), 0);
    for (int index : members)
        in_group[index] = 1;
    for (const GroundAction &action : task.actions) {
        int adds = 0;
        int dels = 0;
        for (int p : action.add)
            adds += in_group[p];
        for (int p : action.del)
            dels += in_group[p];
        if (dels >= 1 && adds == 0)
            return true;
    }
    return false;
}

}  // namespace

vector<MutexGroup> detect_mutex_groups(const GroundTask &task) {
    // Bucket atoms of one predicate by their arguments with one position
    // blanked out; each bucket of two or more atoms is a candidate.
    map<vector<string>, vector<int>> buckets;
    vector<CandidateGroup> accepted;

    size_t max_arity = 0;
    for (const pddl::Atom &atom : task.atoms)
        max_arity = max(max_arity, atom.args.size());

    for (size_t position = 0; position < max_arity; ++position) {
        buckets.clear();
        for (size_t i = 0; i < task.atoms.size(); ++i) {
            const pddl::Atom &atom = task.atoms[i];
            if (atom.args.size() <= position)
                continue;
            vector<string> key;
            key.push_back(atom.predicate);
            for (size_t j = 0; j < atom.args.size(); ++j)
                key.push_back(j == position ? "*" : atom.args[j]);
            buckets[key].push_back(static_cast<int>(i));
        }
        for (auto &[key, members] : buckets) {
            if (members.size() < 2)
                continue;
            if (balanced(members, task))
                accepted.push_back({members});
        }
    }

    // Greedy disjointness: larger groups claim their atoms first; what is
    // left of a later group survives only with two or more atoms.
    stable_sort(accepted.begin(), accepted.end(),
                [](const CandidateGroup &a, const CandidateGroup &b) {
                    if (a.atom_indices.size() != b.atom_indices.size())
                        return a.atom_indices.size() > b.atom_indices.size();
                    return a.atom_indices.front() < b.atom_indices.front();
                });

    vector<char> claimed(task.atoms.size(), 0);
    vector<MutexGroup> groups;
    for (const CandidateGroup &candidate : accepted) {
        vector<int> remaining;
        for (int index : candidate.atom_indices)
            if (!claimed[index])
                remaining.push_back(index);
        if (remaining.size() < 2)
            continue;
        for (int index : remaining)
            claimed[index] = 1;
        MutexGroup group;
        group.open = open_group(remaining, task);
        group.atom_indices = move(remaining);
        groups.push_back(move(group));
    }
    return groups;
}

vector<long long> variable_domain_sizes(const vector<MutexGroup> &groups,
                                        const GroundTask &task) {
    vector<char> grouped(task.atoms.size(), 0);
    vector<long long> sizes;
    for (const MutexGroup &group : groups) {
        sizes.push_back(static_cast<long long>(group.atom_indices.size()) +
                        (group.open ? 1 : 0));
        for (int index : group.atom_indices)
            grouped[index] = 1;
    }
    for (size_t i = 0; i < task.atoms.size(); ++i)
        if (!grouped[i])
            sizes.push_back(2);
    sort(sizes.begin(), sizes.end());
    return sizes;
}

}
