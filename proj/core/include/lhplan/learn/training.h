#ifndef LHPLAN_LEARN_TRAINING_H
#define LHPLAN_LEARN_TRAINING_H

#include "lhplan/ground/task.h"
#include "lhplan/learn/dataset.h"
#include "lhplan/learn/model.h"
#include "lhplan/search/types.h"

#include <cstdint>
#include <utility>
#include <vector>

namespace lhplan::learn {

struct TrainConfig {
    double learning_rate = 0.01;
    int epochs = 500;
    uint64_t seed = 0;
    double ridge_lambda = 1.0;
    bool shuffle_each_epoch = true;
};

// Cost to go of every state along the plan: total cost minus the cost of
// the already executed prefix; the final state is labeled 0. The plan must
// be optimal for noise-free labels.
std::vector<std::pair<ground::State, long long>>
label_trace(const ground::GroundTask &task, const search::Plan &plan);

/*
  Closed-form ridge regression on standardized features. The bias is not
  regularized; it absorbs the label mean, so lambda -> infinity drives the
  predictions to mean(y). A singular system with lambda = 0 raises
  TrainError advising lambda > 0.
*/
LinearModel ridge_fit(const Dataset &dataset, double lambda);

// Glorot-uniform weights from a seeded generator, biases zero; layer order
// and row-major element order fix the stream, so equal seeds give equal
// models.
MlpModel mlp_init(int n_features, uint64_t seed,
                  heuristics::FeatureSchema schema);

double mlp_forward(const MlpModel &model, const std::vector<double> &features);

struct MlpTrainResult {
    MlpModel model;
    std::vector<double> loss_curve;  // mean squared error per epoch
};

/*
  Per-example stochastic gradient descent on the squared error, rows
  reshuffled every epoch by the seeded generator. The ReLU subgradient at 0
  is taken as 0. A non-finite loss raises TrainError naming the epoch and
  advising a smaller learning_rate.
*/
MlpTrainResult mlp_train(const Dataset &dataset, const TrainConfig &config);

// Backprop gradient of the squared error on one row, flattened in the
// order w1, b1, w2, b2, w3, b3. Exposed for gradient checking.
std::vector<double> mlp_gradient(const MlpModel &model,
                                 const std::vector<double> &features,
                                 double label);
std::vector<double *> mlp_parameters(MlpModel &model);

double dataset_mse(const Model &model, const Dataset &dataset);

}

#endif
