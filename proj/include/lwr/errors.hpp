#pragma once

#include <stdexcept>
#include <string>

namespace lwr {

// Base class for all validation and numeric errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DuplicateLabel : public Error {
public:
    explicit DuplicateLabel(const std::string& label)
        : Error("duplicate label: " + label) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NonFiniteEntry : public Error {
public:
    explicit NonFiniteEntry(const std::string& msg) : Error(msg) {}
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string& label)
        : Error("unknown label: " + label) {}
};

class NotUniqueMinimizer : public Error {
public:
    explicit NotUniqueMinimizer(const std::string& msg) : Error(msg) {}
};

class InvalidProbability : public Error {
public:
    explicit InvalidProbability(const std::string& msg) : Error(msg) {}
};

class EmptyScenarioSet : public Error {
public:
    explicit EmptyScenarioSet(const std::string& msg) : Error(msg) {}
};

class TooManyProjects : public Error {
public:
    explicit TooManyProjects(const std::string& msg) : Error(msg) {}
};

class OutOfBounds : public Error {
public:
    explicit OutOfBounds(const std::string& msg) : Error(msg) {}
};

class NumericFailure : public Error {
public:
    explicit NumericFailure(const std::string& msg) : Error(msg) {}
};

class IterationLimit : public Error {
public:
    explicit IterationLimit(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class UnknownScenario : public Error {
public:
    explicit UnknownScenario(const std::string& label)
        : Error("unknown scenario: " + label) {}
};

}  // namespace lwr
