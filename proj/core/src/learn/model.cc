#include "lhplan/learn/model.h"

#include "lhplan/util/numeric_io.h"

#include <fstream>
#include <map>
#include <sstream>

using namespace std;
using lhplan::heuristics::FeatureSchema;

namespace lhplan::learn {

double LinearModel::predict(const vector<double> &features) const {
    vector<double> x = standardizer.apply(features);
    double result = bias;
    for (size_t j = 0; j < weights.size(); ++j)
        result += weights[j] * x[j];
    return result;
}

double MlpModel::predict(const vector<double> &features) const {
    vector<double> x = standardizer.apply(features);
    int n = n_features;
    vector<double> h1(n);
    for (int i = 0; i < n; ++i) {
        double z = b1[i];
        const double *row = &w1[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j)
            z += row[j] * x[j];
        h1[i] = z > 0 ? z : 0;
    }
    double h2[3];
    for (int i = 0; i < 3; ++i) {
        double z = b2[i];
        const double *row = &w2[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j)
            z += row[j] * h1[j];
        h2[i] = z > 0 ? z : 0;
    }
    double y = b3;
    for (int i = 0; i < 3; ++i)
        y += w3[i] * h2[i];
    return y;
}

double model_predict(const Model &model, const vector<double> &features) {
    return visit([&](const auto &m) { return m.predict(features); }, model);
}

FeatureSchema model_schema(const Model &model) {
    return visit([](const auto &m) { return m.schema; }, model);
}

string model_kind(const Model &model) {
    return holds_alternative<LinearModel>(model) ? "linear" : "mlp";
}

namespace {

constexpr int kFormatVersion = 1;

void write_array(ostringstream &out, const string &key,
                 const vector<double> &values) {
    out << key << ":";
    for (double v : values)
        out << " " << double_to_hex(v);
    out << "\n";
}

class FieldReader {
public:
    explicit FieldReader(const string &bytes) {
        istringstream in(bytes);
        string line;
        while (getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            size_t colon = line.find(':');
            if (colon == string::npos)
                throw ModelIoError(ModelIoError::Kind::corrupt,
                                   "corrupt model: malformed line '" + line + "'");
            string key = line.substr(0, colon);
            string value = line.substr(colon + 1);
            if (!value.empty() && value.front() == ' ')
                value.erase(value.begin());
            if (!fields_.emplace(key, value).second)
                throw ModelIoError(ModelIoError::Kind::corrupt,
                                   "corrupt model: duplicate key '" + key + "'");
            order_.push_back(key);
        }
    }

    const string &get(const string &key) const {
        auto it = fields_.find(key);
        if (it == fields_.end())
            throw ModelIoError(ModelIoError::Kind::corrupt,
                               "corrupt model: missing key '" + key + "'");
        return it->second;
    }

    vector<double> get_array(const string &key, size_t expected_size) const {
        istringstream in(get(key));
        vector<double> values;
        string token;
        while (in >> token) {
            try {
                values.push_back(parse_hex_double(token));
            } catch (const invalid_argument &) {
                throw ModelIoError(ModelIoError::Kind::corrupt,
                                   "corrupt model: bad number in '" + key + "'");
            }
        }
        if (values.size() != expected_size)
            throw ModelIoError(ModelIoError::Kind::corrupt,
                               "corrupt model: '" + key + "' has " +
                                   to_string(values.size()) + " entries, expected " +
                                   to_string(expected_size));
        return values;
    }

    double get_scalar(const string &key) const {
        return get_array(key, 1).front();
    }

    long long get_int(const string &key) const {
        try {
            return parse_int(get(key));
        } catch (const invalid_argument &) {
            throw ModelIoError(ModelIoError::Kind::corrupt,
                               "corrupt model: bad integer in '" + key + "'");
        }
    }

private:
    std::map<string, string> fields_;
    vector<string> order_;
};

FeatureSchema parse_schema_field(const string &value) {
    if (value == "simple")
        return FeatureSchema::simple;
    if (value == "ff")
        return FeatureSchema::ff;
    throw ModelIoError(ModelIoError::Kind::corrupt,
                       "corrupt model: unknown schema '" + value + "'");
}

}  // namespace

string save_model(const Model &model) {
    ostringstream out;
    out << "format_version: " << kFormatVersion << "\n";
    out << "kind: " << model_kind(model) << "\n";
    out << "schema: " << heuristics::to_string(model_schema(model)) << "\n";
    if (const auto *linear = get_if<LinearModel>(&model)) {
        out << "n_features: " << linear->weights.size() << "\n";
        write_array(out, "standardizer_means", linear->standardizer.means);
        write_array(out, "standardizer_stds", linear->standardizer.stds);
        write_array(out, "weights", linear->weights);
        write_array(out, "bias", {linear->bias});
    } else {
        const auto &mlp = get<MlpModel>(model);
        out << "n_features: " << mlp.n_features << "\n";
        write_array(out, "standardizer_means", mlp.standardizer.means);
        write_array(out, "standardizer_stds", mlp.standardizer.stds);
        write_array(out, "layer1_weights", mlp.w1);
        write_array(out, "layer1_biases", mlp.b1);
        write_array(out, "layer2_weights", mlp.w2);
        write_array(out, "layer2_biases", mlp.b2);
        write_array(out, "output_weights", mlp.w3);
        write_array(out, "output_bias", {mlp.b3});
    }
    return out.str();
}

Model load_model(const string &bytes) {
    FieldReader reader(bytes);
    long long version = reader.get_int("format_version");
    if (version != kFormatVersion)
        throw ModelIoError(ModelIoError::Kind::version_mismatch,
                           "model format version " + to_string(version) +
                               " is not supported (expected " +
                               to_string(kFormatVersion) + ")");
    string kind = reader.get("kind");
    FeatureSchema schema = parse_schema_field(reader.get("schema"));
    long long n = reader.get_int("n_features");
    if (n <= 0 || n != heuristics::schema_length(schema))
        throw ModelIoError(ModelIoError::Kind::corrupt,
                           "corrupt model: n_features " + to_string(n) +
                               " does not match schema " +
                               heuristics::to_string(schema));
    size_t width = static_cast<size_t>(n);
    Standardizer standardizer;
    standardizer.means = reader.get_array("standardizer_means", width);
    standardizer.stds = reader.get_array("standardizer_stds", width);

    if (kind == "linear") {
        LinearModel model;
        model.schema = schema;
        model.standardizer = move(standardizer);
        model.weights = reader.get_array("weights", width);
        model.bias = reader.get_scalar("bias");
        return model;
    }
    if (kind == "mlp") {
        MlpModel model;
        model.schema = schema;
        model.standardizer = move(standardizer);
        model.n_features = static_cast<int>(n);
        model.w1 = reader.get_array("layer1_weights", width * width);
        model.b1 = reader.get_array("layer1_biases", width);
        model.w2 = reader.get_array("layer2_weights", 3 * width);
        model.b2 = reader.get_array("layer2_biases", 3);
        model.w3 = reader.get_array("output_weights", 3);
        model.b3 = reader.get_scalar("output_bias");
        return model;
    }
    throw ModelIoError(ModelIoError::Kind::corrupt,
                       "corrupt model: unknown kind '" + kind + "'");
}

void save_model_file(const Model &model, const string &path) {
    ofstream out(path, ios::binary);
    if (!out)
        throw ModelIoError(ModelIoError::Kind::corrupt,
                           "cannot write model file '" + path + "'");
    out << save_model(model);
}

Model load_model_file(const string &path) {
    ifstream in(path, ios::binary);
    if (!in)
        throw ModelIoError(ModelIoError::Kind::corrupt,
                           "cannot read model file '" + path + "'");
    ostringstream buffer;
    buffer << in.rdbuf();
    return load_model(buffer.str());
}

Model load_model_file_checked(const string &path, FeatureSchema expected) {
    Model model = load_model_file(path);
    if (model_schema(model) != expected)
        throw ModelIoError(ModelIoError::Kind::schema_mismatch,
                           "model schema mismatch: '" + path + "' records schema " +
                               heuristics::to_string(model_schema(model)) +
                               ", expected " + heuristics::to_string(expected));
    return model;
}

}
