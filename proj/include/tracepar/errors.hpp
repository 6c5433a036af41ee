#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tracepar {

/// Base class of every error thrown by the library. `kind()` is a short
/// stable tag used in machine-readable error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed alphabet or relation.
class GraphError : public Error {
 public:
  explicit GraphError(const std::string& message) : Error("graph", message) {}
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message) : Error("resource", message) {}
};

/// Input has the wrong structure for the requested operation.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& message) : Error("shape", message) {}
};

/// Document ingestion failure, with position information in the message.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse", message) {}
};

/// Exact or interval computation could not reach the requested guarantee.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& message) : Error("numeric", message) {}
};

}  // namespace tracepar
