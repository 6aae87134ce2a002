#include "lhplan/learn/training.h"

#include "lhplan/search/search.h"
#include "lhplan/util/rng.h"

#include <Eigen/Dense>

#include <cmath>

using namespace std;

namespace lhplan::learn {

vector<pair<ground::State, long long>>
label_trace(const ground::GroundTask &task, const search::Plan &plan) {
    vector<ground::State> states = search::trace_states(task, plan);
    vector<pair<ground::State, long long>> labeled;
    labeled.reserve(states.size());
    long long remaining = plan.cost;
    for (size_t i = 0; i < states.size(); ++i) {
        labeled.emplace_back(states[i], remaining);
        if (i < plan.actions.size())
            remaining -= task.actions[plan.actions[i]].cost;
    }
    return labeled;
}

LinearModel ridge_fit(const Dataset &dataset, double lambda) {
    if (dataset.rows.empty())
        throw TrainError("ridge_fit: dataset has no rows");
    if (lambda < 0)
        throw TrainError("ridge_fit: lambda must be nonnegative");

    size_t n = dataset.rows.size();
    size_t d = dataset.rows.front().features.size();

    vector<vector<double>> feature_rows;
    feature_rows.reserve(n);
    for (const Dataset::Row &row : dataset.rows)
        feature_rows.push_back(row.features);
    Standardizer standardizer = Standardizer::fit(feature_rows);

    Eigen::MatrixXd X(n, d);
    Eigen::VectorXd y(n);
    for (size_t i = 0; i < n; ++i) {
        vector<double> standardized = standardizer.apply(feature_rows[i]);
        for (size_t j = 0; j < d; ++j)
            X(i, j) = standardized[j];
        y(i) = dataset.rows[i].label;
    }
    double label_mean = y.mean();
    Eigen::VectorXd centered = y.array() - label_mean;

    Eigen::MatrixXd gram = X.transpose() * X;
    Eigen::VectorXd rhs = X.transpose() * centered;
    Eigen::MatrixXd system =
        gram + lambda * Eigen::MatrixXd::Identity(d, d);

    Eigen::VectorXd w;
    if (lambda == 0) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
        if (!lu.isInvertible())
            throw TrainError("ridge_fit: singular normal equations with "
                             "lambda = 0; use lambda > 0");
        w = lu.solve(rhs);
    } else {
        w = system.ldlt().solve(rhs);
    }

    LinearModel model;
    model.schema = dataset.schema;
    model.standardizer = move(standardizer);
    model.weights.assign(w.data(), w.data() + d);
    model.bias = label_mean;
    return model;
}

MlpModel mlp_init(int n_features, uint64_t seed, heuristics::FeatureSchema schema) {
    if (n_features < 1)
        throw TrainError("mlp_init: n_features must be at least 1");
    MlpModel model;
    model.n_features = n_features;
    model.schema = schema;
    model.standardizer = Standardizer::identity(n_features);

    RandomNumberGenerator rng(seed);
    auto glorot_fill = [&](vector<double> &weights, int fan_in, int fan_out) {
        double limit = sqrt(6.0 / (fan_in + fan_out));
        weights.resize(static_cast<size_t>(fan_in) * fan_out);
        for (double &w : weights)
            w = rng.uniform(-limit, limit);
    };
    glorot_fill(model.w1, n_features, n_features);
    model.b1.assign(n_features, 0.0);
    glorot_fill(model.w2, n_features, 3);
    model.b2.assign(3, 0.0);
    glorot_fill(model.w3, 3, 1);
    model.b3 = 0.0;
    return model;
}

double mlp_forward(const MlpModel &model, const vector<double> &features) {
    if (static_cast<int>(features.size()) != model.n_features)
        throw TrainError("mlp_forward: expected " + to_string(model.n_features) +
                         " features, got " + to_string(features.size()));
    return model.predict(features);
}

namespace {

struct ForwardPass {
    vector<double> x;   // standardized input
    vector<double> z1, h1;
    double z2[3], h2[3];
    double y;
};

ForwardPass run_forward(const MlpModel &model, const vector<double> &features) {
    ForwardPass pass;
    pass.x = model.standardizer.apply(features);
    int n = model.n_features;
    pass.z1.resize(n);
    pass.h1.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = model.b1[i];
        const double *row = &model.w1[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j)
            z += row[j] * pass.x[j];
        pass.z1[i] = z;
        pass.h1[i] = z > 0 ? z : 0;
    }
    for (int i = 0; i < 3; ++i) {
        double z = model.b2[i];
        const double *row = &model.w2[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j)
            z += row[j] * pass.h1[j];
        pass.z2[i] = z;
        pass.h2[i] = z > 0 ? z : 0;
    }
    pass.y = model.b3;
    for (int i = 0; i < 3; ++i)
        pass.y += model.w3[i] * pass.h2[i];
    return pass;
}

struct Gradients {
    vector<double> w1, b1, w2, b2, w3;
    double b3;
};

// d/dtheta of (y_hat - y)^2; the ReLU subgradient at exactly 0 is 0.
Gradients run_backward(const MlpModel &model, const ForwardPass &pass,
                       double label) {
    int n = model.n_features;
    Gradients grads;
    grads.w1.assign(static_cast<size_t>(n) * n, 0.0);
    grads.b1.assign(n, 0.0);
    grads.w2.assign(static_cast<size_t>(3) * n, 0.0);
    grads.b2.assign(3, 0.0);
    grads.w3.assign(3, 0.0);

    double delta_y = 2.0 * (pass.y - label);
    grads.b3 = delta_y;
    double delta2[3];
    for (int i = 0; i < 3; ++i) {
        grads.w3[i] = delta_y * pass.h2[i];
        delta2[i] = pass.z2[i] > 0 ? delta_y * model.w3[i] : 0.0;
        grads.b2[i] = delta2[i];
        for (int j = 0; j < n; ++j)
            grads.w2[static_cast<size_t>(i) * n + j] = delta2[i] * pass.h1[j];
    }
    for (int j = 0; j < n; ++j) {
        double delta1 = 0;
        for (int i = 0; i < 3; ++i)
            delta1 += delta2[i] * model.w2[static_cast<size_t>(i) * n + j];
        if (pass.z1[j] <= 0)
            delta1 = 0;
        grads.b1[j] = delta1;
        for (int k = 0; k < n; ++k)
            grads.w1[static_cast<size_t>(j) * n + k] = delta1 * pass.x[k];
    }
    return grads;
}

}  // namespace

vector<double> mlp_gradient(const MlpModel &model, const vector<double> &features,
                            double label) {
    ForwardPass pass = run_forward(model, features);
    Gradients grads = run_backward(model, pass, label);
    vector<double> flat;
    flat.insert(flat.end(), grads.w1.begin(), grads.w1.end());
    flat.insert(flat.end(), grads.b1.begin(), grads.b1.end());
    flat.insert(flat.end(), grads.w2.begin(), grads.w2.end());
    flat.insert(flat.end(), grads.b2.begin(), grads.b2.end());
    flat.insert(flat.end(), grads.w3.begin(), grads.w3.end());
    flat.push_back(grads.b3);
    return flat;
}

vector<double *> mlp_parameters(MlpModel &model) {
    vector<double *> params;
    for (double &w : model.w1)
        params.push_back(&w);
    for (double &b : model.b1)
        params.push_back(&b);
    for (double &w : model.w2)
        params.push_back(&w);
    for (double &b : model.b2)
        params.push_back(&b);
    for (double &w : model.w3)
        params.push_back(&w);
    params.push_back(&model.b3);
    return params;
}

MlpTrainResult mlp_train(const Dataset &dataset, const TrainConfig &config) {
    if (dataset.rows.empty())
        throw TrainError("mlp_train: dataset has no rows");
    int n = static_cast<int>(dataset.rows.front().features.size());

    MlpModel model = mlp_init(n, config.seed, dataset.schema);
    vector<vector<double>> feature_rows;
    feature_rows.reserve(dataset.rows.size());
    for (const Dataset::Row &row : dataset.rows)
        feature_rows.push_back(row.features);
    model.standardizer = Standardizer::fit(feature_rows);

    RandomNumberGenerator shuffle_rng(config.seed + 0x9e3779b97f4a7c15ull);
    vector<int> order(dataset.rows.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);

    MlpTrainResult result;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        if (config.shuffle_each_epoch)
            shuffle_rng.shuffle(order);
        double squared_error_sum = 0;
        for (int row_index : order) {
            const Dataset::Row &row = dataset.rows[row_index];
            ForwardPass pass = run_forward(model, row.features);
            double error = pass.y - row.label;
            squared_error_sum += error * error;
            Gradients grads = run_backward(model, pass, row.label);
            double lr = config.learning_rate;
            for (size_t i = 0; i < model.w1.size(); ++i)
                model.w1[i] -= lr * grads.w1[i];
            for (size_t i = 0; i < model.b1.size(); ++i)
                model.b1[i] -= lr * grads.b1[i];
            for (size_t i = 0; i < model.w2.size(); ++i)
                model.w2[i] -= lr * grads.w2[i];
            for (size_t i = 0; i < model.b2.size(); ++i)
                model.b2[i] -= lr * grads.b2[i];
            for (size_t i = 0; i < model.w3.size(); ++i)
                model.w3[i] -= lr * grads.w3[i];
            model.b3 -= lr * grads.b3;
        }
        double epoch_loss = squared_error_sum / dataset.rows.size();
        if (!isfinite(epoch_loss))
            throw TrainError("mlp_train: loss diverged at epoch " +
                             to_string(epoch) + "; try a smaller learning_rate");
        result.loss_curve.push_back(epoch_loss);
    }
    result.model = move(model);
    return result;
}

double dataset_mse(const Model &model, const Dataset &dataset) {
    if (dataset.rows.empty())
        return 0;
    double total = 0;
    for (const Dataset::Row &row : dataset.rows) {
        double error = model_predict(model, row.features) - row.label;
        total += error * error;
    }
    return total / dataset.rows.size();
}

}
