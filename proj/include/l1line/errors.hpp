#pragma once

#include <stdexcept>
#include <string>

namespace l1line {

/// Caller violated a documented precondition (bad dimension, negative lambda, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. The message carries the row/column location.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every entry of the preserved column is zero, so no ratio column exists.
class EmptyPivot : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A claimed optimum failed its dual-certificate check.
class OptimalityRefuted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace l1line
