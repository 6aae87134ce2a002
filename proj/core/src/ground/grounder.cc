#include "lhplan/ground/grounder.h"

#include "lhplan/ground/mutex.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

using namespace std;

namespace lhplan::ground {

namespace {

struct Candidate {
    string name;
    vector<int> pre, add, del;
    long long cost;
};

class AtomInterner {
public:
    int intern(const pddl::Atom &atom) {
        string key = pddl::format_atom(atom);
        auto it = index_.find(key);
        if (it != index_.end())
            return it->second;
        int id = static_cast<int>(atoms_.size());
        index_.emplace(move(key), id);
        atoms_.push_back(atom);
        return id;
    }

    const vector<pddl::Atom> &atoms() const { return atoms_; }

private:
    unordered_map<string, int> index_;
    vector<pddl::Atom> atoms_;
};

void sort_unique(vector<int> &values) {
    sort(values.begin(), values.end());
    values.erase(unique(values.begin(), values.end()), values.end());
}

class Grounder {
public:
    Grounder(const pddl::DomainAst &domain, const pddl::ProblemAst &problem)
        : domain_(domain), problem_(problem) {}

    GroundTask run() {
        if (problem_.domain_name != domain_.name)
            throw GroundError("problem '" + problem_.name + "' is for domain '" +
                              problem_.domain_name + "', not '" + domain_.name + "'");
        build_type_table();
        validate_objects();
        vector<int> init_ids = intern_checked_atoms(problem_.init, ":init");
        vector<int> goal_ids = intern_checked_atoms(problem_.goal, ":goal");
        enumerate_candidates();
        vector<char> reached = relaxed_fixpoint(init_ids);

        GroundTask task;
        for (int g : goal_ids)
            if (!reached[g])
                task.provably_unsolvable = true;

        // Survivors keep enumeration order: schema declaration order, then
        // argument declaration order.
        vector<const Candidate *> survivors;
        for (const Candidate &candidate : candidates_)
            if (all_of(candidate.pre.begin(), candidate.pre.end(),
                       [&](int p) { return reached[p] != 0; }))
                survivors.push_back(&candidate);

        // Atom universe: init, goal, and anything a survivor mentions.
        vector<char> in_universe(interner_.atoms().size(), 0);
        for (int p : init_ids)
            in_universe[p] = 1;
        for (int p : goal_ids)
            in_universe[p] = 1;
        for (const Candidate *candidate : survivors)
            for (const vector<int> *part :
                 {&candidate->pre, &candidate->add, &candidate->del})
                for (int p : *part)
                    in_universe[p] = 1;

        vector<int> universe;
        for (size_t i = 0; i < in_universe.size(); ++i)
            if (in_universe[i])
                universe.push_back(static_cast<int>(i));
        sort(universe.begin(), universe.end(), [&](int a, int b) {
            return interner_.atoms()[a] < interner_.atoms()[b];
        });
        vector<int> remap(interner_.atoms().size(), -1);
        for (size_t i = 0; i < universe.size(); ++i) {
            remap[universe[i]] = static_cast<int>(i);
            task.atoms.push_back(interner_.atoms()[universe[i]]);
        }

        task.init = State(static_cast<int>(task.atoms.size()));
        for (int p : init_ids)
            task.init.set(remap[p]);
        for (int g : goal_ids)
            task.goal.push_back(remap[g]);
        sort_unique(task.goal);

        for (const Candidate *candidate : survivors) {
            GroundAction action;
            action.name = candidate->name;
            action.cost = candidate->cost;
            for (int p : candidate->pre)
                action.pre.push_back(remap[p]);
            for (int p : candidate->add)
                action.add.push_back(remap[p]);
            for (int p : candidate->del)
                action.del.push_back(remap[p]);
            sort_unique(action.pre);
            sort_unique(action.add);
            sort_unique(action.del);
            task.actions.push_back(move(action));
        }

        task.mutex_groups = detect_mutex_groups(task);
        return task;
    }

private:
    const pddl::DomainAst &domain_;
    const pddl::ProblemAst &problem_;
    map<string, string> parent_of_;
    map<string, int> object_index_;
    AtomInterner interner_;
    vector<Candidate> candidates_;

    void build_type_table() {
        parent_of_["object"] = "";
        for (const pddl::TypedName &t : domain_.types)
            parent_of_[t.name] = t.type;
        for (const pddl::TypedName &t : domain_.types)
            if (!parent_of_.count(t.type))
                parent_of_[t.type] = "object";
    }

    bool subtype_of(string type, const string &ancestor) const {
        while (true) {
            if (type == ancestor)
                return true;
            auto it = parent_of_.find(type);
            if (it == parent_of_.end() || it->second.empty())
                return false;
            type = it->second;
        }
    }

    void validate_objects() {
        for (size_t i = 0; i < problem_.objects.size(); ++i) {
            const pddl::TypedName &obj = problem_.objects[i];
            if (!parent_of_.count(obj.type))
                throw GroundError("undeclared object type '" + obj.type +
                                  "' for object '" + obj.name + "'");
            object_index_[obj.name] = static_cast<int>(i);
        }
    }

    // Checks predicate, arity and argument types of ground atoms.
    vector<int> intern_checked_atoms(const vector<pddl::Atom> &atoms,
                                     const char *where) {
        vector<int> ids;
        for (const pddl::Atom &atom : atoms) {
            const pddl::PredicateDecl *decl = domain_.find_predicate(atom.predicate);
            if (!decl)
                throw GroundError("unknown predicate '" + atom.predicate + "' in " +
                                  where);
            if (decl->params.size() != atom.args.size())
                throw GroundError("arity mismatch for predicate '" + atom.predicate +
                                  "' in " + where);
            for (size_t i = 0; i < atom.args.size(); ++i) {
                auto it = object_index_.find(atom.args[i]);
                if (it == object_index_.end())
                    throw GroundError("undeclared object '" + atom.args[i] + "' in " +
                                      where);
                const string &obj_type = problem_.objects[it->second].type;
                if (!subtype_of(obj_type, decl->params[i].type))
                    throw GroundError("object '" + atom.args[i] + "' of type '" +
                                      obj_type + "' is not a '" +
                                      decl->params[i].type + "' (predicate '" +
                                      atom.predicate + "' in " + where + ")");
            }
            ids.push_back(interner_.intern(atom));
        }
        sort_unique(ids);
        return ids;
    }

    void enumerate_candidates() {
        // Objects per type in declaration order.
        map<string, vector<int>> objects_by_type;
        auto objects_of = [&](const string &type) -> const vector<int> & {
            auto it = objects_by_type.find(type);
            if (it != objects_by_type.end())
                return it->second;
            vector<int> list;
            for (size_t i = 0; i < problem_.objects.size(); ++i)
                if (subtype_of(problem_.objects[i].type, type))
                    list.push_back(static_cast<int>(i));
            return objects_by_type.emplace(type, move(list)).first->second;
        };

        for (const pddl::ActionSchema &schema : domain_.actions) {
            vector<const vector<int> *> pools;
            for (const pddl::TypedName &param : schema.params)
                pools.push_back(&objects_of(param.type));
            bool empty_pool = any_of(pools.begin(), pools.end(),
                                     [](const vector<int> *p) { return p->empty(); });
            if (empty_pool)
                continue;

            vector<size_t> odometer(pools.size(), 0);
            while (true) {
                map<string, string> binding;
                for (size_t i = 0; i < pools.size(); ++i)
                    binding[schema.params[i].name] =
                        problem_.objects[(*pools[i])[odometer[i]]].name;
                add_candidate(schema, binding);

                size_t level = pools.size();
                while (level > 0) {
                    --level;
                    if (++odometer[level] < pools[level]->size())
                        break;
                    odometer[level] = 0;
                    if (level == 0) {
                        level = pools.size() + 1;  // signal: done
                        break;
                    }
                }
                if (pools.empty() || level > pools.size())
                    break;
            }
        }
    }

    void add_candidate(const pddl::ActionSchema &schema,
                       const map<string, string> &binding) {
        Candidate candidate;
        candidate.name = schema.name;
        for (const pddl::TypedName &param : schema.params)
            candidate.name += " " + binding.at(param.name);
        candidate.cost = schema.cost;

        auto instantiate = [&](const vector<pddl::Atom> &atoms, vector<int> &out) {
            for (const pddl::Atom &atom : atoms) {
                pddl::Atom ground_atom;
                ground_atom.predicate = atom.predicate;
                for (const string &arg : atom.args) {
                    if (!arg.empty() && arg[0] == '?') {
                        ground_atom.args.push_back(binding.at(arg));
                    } else {
                        if (!object_index_.count(arg))
                            throw GroundError("unknown constant '" + arg +
                                              "' in action '" + schema.name + "'");
                        ground_atom.args.push_back(arg);
                    }
                }
                out.push_back(interner_.intern(ground_atom));
            }
        };
        instantiate(schema.pre, candidate.pre);
        instantiate(schema.add, candidate.add);
        instantiate(schema.del, candidate.del);
        sort_unique(candidate.pre);
        sort_unique(candidate.add);
        sort_unique(candidate.del);
        // Distinct schema literals can collide after binding (e.g. a move
        // with equal source and destination); adds win, as in STRIPS
        // progression.
        vector<int> remaining;
        for (int p : candidate.del)
            if (!binary_search(candidate.add.begin(), candidate.add.end(), p))
                remaining.push_back(p);
        candidate.del = move(remaining);
        candidates_.push_back(move(candidate));
    }

    // Atoms reachable from init ignoring delete effects, over all candidates.
    vector<char> relaxed_fixpoint(const vector<int> &init_ids) {
        size_t num_atoms = interner_.atoms().size();
        vector<char> reached(num_atoms, 0);
        vector<vector<int>> consumers(num_atoms);  // atom -> candidate indices
        vector<int> unsat(candidates_.size(), 0);
        vector<int> queue;

        for (size_t a = 0; a < candidates_.size(); ++a) {
            unsat[a] = static_cast<int>(candidates_[a].pre.size());
            for (int p : candidates_[a].pre)
                consumers[p].push_back(static_cast<int>(a));
        }
        auto reach = [&](int p) {
            if (!reached[p]) {
                reached[p] = 1;
                queue.push_back(p);
            }
        };
        auto fire = [&](size_t a) {
            for (int p : candidates_[a].add)
                reach(p);
        };
        for (int p : init_ids)
            reach(p);
        for (size_t a = 0; a < candidates_.size(); ++a)
            if (unsat[a] == 0)
                fire(a);
        while (!queue.empty()) {
            int p = queue.back();
            queue.pop_back();
            for (int a : consumers[p])
                if (--unsat[a] == 0)
                    fire(a);
        }
        return reached;
    }
};

}  // namespace

GroundTask ground(const pddl::DomainAst &domain, const pddl::ProblemAst &problem) {
    Grounder grounder(domain, problem);
    return grounder.run();
}

}
