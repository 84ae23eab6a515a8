#pragma once

#include <stdexcept>
#include <string>

namespace gramburst {

// Usage problems map to exit code 1, data problems to exit code 2
// (see tools/main.cpp).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : DataError {
  using DataError::DataError;
};

struct BadN : DataError {
  using DataError::DataError;
};

struct UnknownGram : DataError {
  using DataError::DataError;
};

struct OracleUnavailable : DataError {
  using DataError::DataError;
};

struct BadSpec : DataError {
  using DataError::DataError;
};

enum class RecordErrorKind { Malformed, MissingField, BadTimestamp };

// One bad input line. load_corpus() catches these and tallies the line
// as malformed instead of aborting the batch.
struct RecordError : DataError {
  RecordErrorKind kind;
  RecordError(RecordErrorKind k, const std::string& msg) : DataError(msg), kind(k) {}
};

}  // namespace gramburst
