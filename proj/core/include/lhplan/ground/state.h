#ifndef LHPLAN_GROUND_STATE_H
#define LHPLAN_GROUND_STATE_H

#include <cstdint>
#include <vector>

namespace lhplan::ground {

/*
  Fixed-width bit vector over the atom universe of one grounded task.
  Value semantics; equality and hash depend only on the bit content.
  Bits beyond num_atoms stay zero, so word-wise comparison is exact.
*/
class State {
public:
    State() = default;
    explicit State(int num_atoms)
        : num_atoms_(num_atoms), words_((num_atoms + 63) / 64, 0) {}

    int num_atoms() const { return num_atoms_; }

    bool test(int index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }

    void set(int index) { words_[index >> 6] |= uint64_t(1) << (index & 63); }

    void clear(int index) { words_[index >> 6] &= ~(uint64_t(1) << (index & 63)); }

    bool operator==(const State &other) const { return words_ == other.words_; }

    size_t hash() const {
        // FNV-1a over the words.
        uint64_t h = 1469598103934665603ull;
        for (uint64_t word : words_) {
            h ^= word;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }

private:
    int num_atoms_ = 0;
    std::vector<uint64_t> words_;
};

struct StateHash {
    size_t operator()(const State &s) const { return s.hash(); }
};

}

#endif
