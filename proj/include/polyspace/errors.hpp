#pragma once

#include <stdexcept>
#include <string>

namespace polyspace {

// Invalid user input (bad token, malformed code, out-of-range value).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A length vector admitting a balanced bipartition.
class NonGenericError : public std::invalid_argument {
public:
    explicit NonGenericError(const std::string& what) : std::invalid_argument(what) {}
};

// The engine detected that a genetic code violates the structural guarantees
// (top-degree rank, pairing nondegeneracy) or that formulas and the engine
// disagree. Either the code is unrealizable or there is a bug; fail loudly.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyspace
