#ifndef LHPLAN_LEARN_STANDARDIZER_H
#define LHPLAN_LEARN_STANDARDIZER_H

#include <vector>

namespace lhplan::learn {

// Per-column z-score transform fitted on training data and stored inside
// each model, so the planner applies the identical transform at search time.
struct Standardizer {
    std::vector<double> means;
    std::vector<double> stds;  // population std; zeros replaced by 1

    static Standardizer fit(const std::vector<std::vector<double>> &rows);

    std::vector<double> apply(const std::vector<double> &values) const;

    static Standardizer identity(int length);
};

}

#endif
