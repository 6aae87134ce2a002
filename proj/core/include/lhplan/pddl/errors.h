#ifndef LHPLAN_PDDL_ERRORS_H
#define LHPLAN_PDDL_ERRORS_H

#include <stdexcept>
#include <string>

namespace lhplan::pddl {

// Positioned diagnostic; what() is "line:column: message".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string &message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                             ": " + message),
          line(line), column(column) {}

    int line;
    int column;
};

}

#endif
