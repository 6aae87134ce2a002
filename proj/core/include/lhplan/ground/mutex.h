#ifndef LHPLAN_GROUND_MUTEX_H
#define LHPLAN_GROUND_MUTEX_H

#include "lhplan/ground/task.h"

#include <vector>

namespace lhplan::ground {

/*
  Candidate groups collect the ground atoms of one predicate that agree on
  every argument except one position. A candidate is accepted when every
  action that adds a member also deletes exactly one member, no action adds
  two members, and at most one member is true initially. That balance keeps
  the member count from ever exceeding one along any applicable sequence.
  Accepted groups are made disjoint greedily by descending size (ties by
  first atom index); groups shrunk below two atoms are dropped.
*/
std::vector<MutexGroup> detect_mutex_groups(const GroundTask &task);

// One entry per finite-domain variable: group size plus one when open;
// every atom outside all groups contributes a binary variable of size 2.
// Sorted ascending.
std::vector<long long> variable_domain_sizes(const std::vector<MutexGroup> &groups,
                                             const GroundTask &task);

}

#endif
