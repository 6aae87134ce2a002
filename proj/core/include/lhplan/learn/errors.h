#ifndef LHPLAN_LEARN_ERRORS_H
#define LHPLAN_LEARN_ERRORS_H

#include <stdexcept>
#include <string>

namespace lhplan::learn {

class TrainError : public std::runtime_error {
public:
    explicit TrainError(const std::string &message)
        : std::runtime_error(message) {}
};

class ModelIoError : public std::runtime_error {
public:
    enum class Kind { version_mismatch, corrupt, schema_mismatch };

    ModelIoError(Kind kind, const std::string &message)
        : std::runtime_error(message), kind(kind) {}

    Kind kind;
};

class DatasetError : public std::runtime_error {
public:
    explicit DatasetError(const std::string &message)
        : std::runtime_error(message) {}
};

}

#endif
