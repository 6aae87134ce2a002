#include "lhplan/commands/commands.h"

#include "lhplan/learn/dataset.h"
#include "lhplan/learn/model.h"
#include "lhplan/util/numeric_io.h"

#include <algorithm>
#include <ostream>

using namespace std;

namespace lhplan::commands {

int cmd_train(const TrainOptions &options, ostream &out, ostream &err) {
    try {
        learn::Dataset dataset = learn::Dataset::load(options.dataset_path);
        learn::Model model;
        if (options.kind == "ridge") {
            model = learn::ridge_fit(dataset, options.config.ridge_lambda);
        } else if (options.kind == "mlp") {
            learn::MlpTrainResult result = learn::mlp_train(dataset, options.config);
            // Loss curve at roughly ten checkpoints plus the final epoch.
            size_t stride = max<size_t>(1, result.loss_curve.size() / 10);
            for (size_t epoch = 0; epoch < result.loss_curve.size(); ++epoch)
                if (epoch % stride == 0 || epoch + 1 == result.loss_curve.size())
                    out << "epoch " << epoch << " loss "
                        << double_to_string(result.loss_curve[epoch]) << "\n";
            model = move(result.model);
        } else {
            err << "error: unknown model kind '" << options.kind
                << "' (expected ridge or mlp)\n";
            return 3;
        }
        learn::save_model_file(model, options.out_path);
        out << "final training mse: "
            << double_to_string(learn::dataset_mse(model, dataset)) << "\n";
        out << "model written to " << options.out_path << "\n";
        return 0;
    } catch (const exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}
