#include "lhplan/learn/dataset.h"

#include "lhplan/util/numeric_io.h"

#include <fstream>
#include <sstream>

using namespace std;
using lhplan::heuristics::FeatureSchema;

namespace lhplan::learn {

namespace {

vector<string> split_csv(const string &line) {
    vector<string> fields;
    string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

}  // namespace

string Dataset::serialize() const {
    ostringstream out;
    vector<string> names = heuristics::feature_names(schema);
    for (const string &name : names)
        out << name << ",";
    out << "cost_to_go\n";
    string current_problem;
    bool first = true;
    for (const Row &row : rows) {
        if (first || row.problem_id != current_problem) {
            current_problem = row.problem_id;
            first = false;
            out << "# problem " << current_problem << "\n";
        }
        for (double value : row.features)
            out << double_to_string(value) << ",";
        out << double_to_string(row.label) << "\n";
    }
    return out.str();
}

Dataset Dataset::deserialize(const string &text) {
    istringstream in(text);
    string line;
    if (!getline(in, line))
        throw DatasetError("empty dataset");
    vector<string> header = split_csv(line);
    if (header.empty() || header.back() != "cost_to_go")
        throw DatasetError("dataset header must end with cost_to_go");
    header.pop_back();

    Dataset dataset;
    bool schema_found = false;
    for (FeatureSchema candidate : {FeatureSchema::simple, FeatureSchema::ff}) {
        if (header == heuristics::feature_names(candidate)) {
            dataset.schema = candidate;
            schema_found = true;
            break;
        }
    }
    if (!schema_found)
        throw DatasetError("dataset header matches no known feature schema");

    size_t width = header.size();
    string problem_id;
    int step = 0;
    int line_number = 1;
    while (getline(in, line)) {
        ++line_number;
        if (line.empty() || line == "\r")
            continue;
        if (line[0] == '#') {
            static const string kPrefix = "# problem ";
            if (line.rfind(kPrefix, 0) == 0) {
                problem_id = line.substr(kPrefix.size());
                while (!problem_id.empty() &&
                       (problem_id.back() == '\r' || problem_id.back() == ' '))
                    problem_id.pop_back();
                step = 0;
            }
            continue;
        }
        vector<string> fields = split_csv(line);
        if (fields.size() != width + 1)
            throw DatasetError("row " + to_string(line_number) + ": expected " +
                               to_string(width + 1) + " fields, got " +
                               to_string(fields.size()));
        Row row;
        try {
            for (size_t j = 0; j < width; ++j)
                row.features.push_back(parse_double(fields[j]));
            row.label = parse_double(fields.back());
        } catch (const invalid_argument &e) {
            throw DatasetError("row " + to_string(line_number) + ": " + e.what());
        }
        if (row.label < 0)
            throw DatasetError("row " + to_string(line_number) +
                               ": negative label");
        row.problem_id = problem_id;
        row.step = step++;
        dataset.rows.push_back(move(row));
    }
    return dataset;
}

void Dataset::save(const string &path) const {
    ofstream out(path, ios::binary);
    if (!out)
        throw DatasetError("cannot write dataset file '" + path + "'");
    out << serialize();
}

Dataset Dataset::load(const string &path) {
    ifstream in(path, ios::binary);
    if (!in)
        throw DatasetError("cannot read dataset file '" + path + "'");
    ostringstream buffer;
    buffer << in.rdbuf();
    return deserialize(buffer.str());
}

}
