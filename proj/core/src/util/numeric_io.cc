#include "lhplan/util/numeric_io.h"

#include <array>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <system_error>

using namespace std;

namespace lhplan {

string double_to_string(double value) {
    array<char, 64> buffer;
    auto [ptr, ec] = to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != errc())
        throw runtime_error("double_to_string: conversion failed");
    return string(buffer.data(), ptr);
}

string double_to_hex(double value) {
    array<char, 64> buffer;
    auto [ptr, ec] = to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                              chars_format::hex);
    if (ec != errc())
        throw runtime_error("double_to_hex: conversion failed");
    return string(buffer.data(), ptr);
}

double parse_double(const string &text) {
    double value = 0;
    const char *begin = text.data();
    const char *end = begin + text.size();
    auto [ptr, ec] = from_chars(begin, end, value);
    if (ec != errc() || ptr != end)
        throw invalid_argument("malformed number '" + text + "'");
    return value;
}

double parse_hex_double(const string &text) {
    double value = 0;
    const char *begin = text.data();
    const char *end = begin + text.size();
    auto [ptr, ec] = from_chars(begin, end, value, chars_format::hex);
    if (ec != errc() || ptr != end)
        throw invalid_argument("malformed hex number '" + text + "'");
    return value;
}

long long parse_int(const string &text) {
    long long value = 0;
    const char *begin = text.data();
    const char *end = begin + text.size();
    auto [ptr, ec] = from_chars(begin, end, value);
    if (ec != errc() || ptr != end)
        throw invalid_argument("malformed integer '" + text + "'");
    return value;
}

}
