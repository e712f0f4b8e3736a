#pragma once

#include <stdexcept>
#include <string>

namespace posethom {

/// Invalid argument to an operation (out of range, malformed value).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The characteristic p divides q, or a group does not act on the given poset.
class IncompatibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (rank set, group order) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (group files, table files, CLI syntax).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but is mathematically inconsistent (bad table, wrong order).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical guarantee failed at run time. Indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace posethom
