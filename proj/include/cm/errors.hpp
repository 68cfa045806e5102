#pragma once

#include <stdexcept>
#include <string>

namespace cm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every off-diagonal distance is infinite; the minimal positive distance
/// does not exist and quotient-based analysis refuses to run.
struct NoFiniteDistance : Error {
    NoFiniteDistance() : Error("no finite positive distance in window") {}
};

struct OutOfWindow : Error {
    explicit OutOfWindow(const std::string& what) : Error(what) {}
};

struct SingleClass : Error {
    SingleClass() : Error("quotient has a single class; no nonconstant contractive map exists") {}
};

struct NotContractive : Error {
    NotContractive() : Error("map is not contractive") {}
};

struct ImageUnresolvable : Error {
    explicit ImageUnresolvable(const std::string& what) : Error(what) {}
};

struct UnknownExample : Error {
    explicit UnknownExample(const std::string& name) : Error("unknown example: " + name) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace cm
