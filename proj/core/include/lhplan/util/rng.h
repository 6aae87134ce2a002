#ifndef LHPLAN_UTIL_RNG_H
#define LHPLAN_UTIL_RNG_H

#include <cstdint>
#include <random>
#include <vector>

namespace lhplan {

/*
  Seeded random number generator with hand-rolled distributions.

  The standard <random> distributions are implementation-defined, so two
  standard libraries can produce different streams from the same engine.
  Everything here is specified in terms of the mt19937_64 output sequence
  alone, which keeps generated instances, initial weights and shuffles
  reproducible across toolchains.
*/
class RandomNumberGenerator {
public:
    explicit RandomNumberGenerator(uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) with 53 bits of randomness.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [0, bound); bound must be positive.
    int uniform_int(int bound) {
        int result = static_cast<int>(uniform() * bound);
        return result < bound ? result : bound - 1;
    }

    template <typename T>
    void shuffle(std::vector<T> &values) {
        for (int i = static_cast<int>(values.size()) - 1; i > 0; --i) {
            int j = uniform_int(i + 1);
            std::swap(values[i], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}

#endif
