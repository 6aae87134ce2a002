#include "lhplan/learn/standardizer.h"

#include <cmath>

using namespace std;

namespace lhplan::learn {

Standardizer Standardizer::fit(const vector<vector<double>> &rows) {
    Standardizer standardizer;
    if (rows.empty())
        return standardizer;
    size_t width = rows.front().size();
    standardizer.means.assign(width, 0.0);
    standardizer.stds.assign(width, 0.0);
    for (const vector<double> &row : rows)
        for (size_t j = 0; j < width; ++j)
            standardizer.means[j] += row[j];
    for (size_t j = 0; j < width; ++j)
        standardizer.means[j] /= static_cast<double>(rows.size());
    for (const vector<double> &row : rows)
        for (size_t j = 0; j < width; ++j) {
            double d = row[j] - standardizer.means[j];
            standardizer.stds[j] += d * d;
        }
    for (size_t j = 0; j < width; ++j) {
        standardizer.stds[j] = sqrt(standardizer.stds[j] /
                                    static_cast<double>(rows.size()));
        if (standardizer.stds[j] == 0.0)
            standardizer.stds[j] = 1.0;
    }
    return standardizer;
}

vector<double> Standardizer::apply(const vector<double> &values) const {
    vector<double> out(values.size());
    for (size_t j = 0; j < values.size(); ++j)
        out[j] = (values[j] - means[j]) / stds[j];
    return out;
}

Standardizer Standardizer::identity(int length) {
    Standardizer standardizer;
    standardizer.means.assign(length, 0.0);
    standardizer.stds.assign(length, 1.0);
    return standardizer;
}

}
