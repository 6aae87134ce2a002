#ifndef LHPLAN_UTIL_NUMERIC_IO_H
#define LHPLAN_UTIL_NUMERIC_IO_H

#include <string>

namespace lhplan {

// Shortest decimal representation that parses back to the same double.
std::string double_to_string(double value);

// Exact hexadecimal float representation (round-trips bit for bit).
std::string double_to_hex(double value);

// Throw std::invalid_argument on malformed input or trailing garbage.
double parse_double(const std::string &text);
double parse_hex_double(const std::string &text);
long long parse_int(const std::string &text);

}

#endif
