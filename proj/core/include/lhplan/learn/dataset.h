#ifndef LHPLAN_LEARN_DATASET_H
#define LHPLAN_LEARN_DATASET_H

#include "lhplan/heuristics/features.h"
#include "lhplan/learn/errors.h"

#include <string>
#include <vector>

namespace lhplan::learn {

/*
  Labeled feature rows. On disk: comma-separated text whose header row is
  the schema feature names plus cost_to_go, one row per state; comment
  lines of the form "# problem <id>" carry the provenance of the rows that
  follow. Serialization is deterministic, so identical inputs produce
  byte-identical files.
*/
struct Dataset {
    struct Row {
        std::vector<double> features;
        double label = 0;           // nonnegative cost to go
        std::string problem_id;
        int step = 0;
    };

    heuristics::FeatureSchema schema = heuristics::FeatureSchema::ff;
    std::vector<Row> rows;

    std::string serialize() const;
    static Dataset deserialize(const std::string &text);

    void save(const std::string &path) const;
    static Dataset load(const std::string &path);
};

}

#endif
