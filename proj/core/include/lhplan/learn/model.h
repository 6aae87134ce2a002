#ifndef LHPLAN_LEARN_MODEL_H
#define LHPLAN_LEARN_MODEL_H

#include "lhplan/heuristics/features.h"
#include "lhplan/learn/errors.h"
#include "lhplan/learn/standardizer.h"

#include <string>
#include <variant>
#include <vector>

namespace lhplan::learn {

// y = w . standardize(x) + b
struct LinearModel {
    std::vector<double> weights;
    double bias = 0;
    Standardizer standardizer;
    heuristics::FeatureSchema schema = heuristics::FeatureSchema::ff;

    double predict(const std::vector<double> &features) const;
};

/*
  Fully connected feed-forward net with two rectified hidden layers and an
  affine output: n inputs -> n -> 3 -> 1. Weights are row-major (out x in).
  Evaluation is plain multiply-accumulate, no exponentiation anywhere.
*/
struct MlpModel {
    int n_features = 0;
    std::vector<double> w1, b1;  // n x n, n
    std::vector<double> w2, b2;  // 3 x n, 3
    std::vector<double> w3;      // 1 x 3
    double b3 = 0;
    Standardizer standardizer;
    heuristics::FeatureSchema schema = heuristics::FeatureSchema::ff;

    double predict(const std::vector<double> &features) const;
};

using Model = std::variant<LinearModel, MlpModel>;

double model_predict(const Model &model, const std::vector<double> &features);
heuristics::FeatureSchema model_schema(const Model &model);
std::string model_kind(const Model &model);  // "linear" | "mlp"

/*
  Versioned key-value text with hexadecimal float encoding, so loading
  reproduces every weight bit for bit. Distinct diagnostics for a format
  version mismatch, a corrupt payload and a schema mismatch.
*/
std::string save_model(const Model &model);
Model load_model(const std::string &bytes);

void save_model_file(const Model &model, const std::string &path);
Model load_model_file(const std::string &path);

// load + check the recorded schema; throws ModelIoError(schema_mismatch).
Model load_model_file_checked(const std::string &path,
                              heuristics::FeatureSchema expected);

}

#endif
