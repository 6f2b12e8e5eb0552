#pragma once

#include <stdexcept>
#include <string>

namespace gatelim {

/// Bad arguments or violated operation preconditions.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed circuit or subspace file.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A runtime assertion tied to an algorithm's correctness argument failed.
/// Carries the refutation trace collected up to the failure point.
class internal_error : public std::runtime_error {
public:
  explicit internal_error(const std::string& what, std::string trace = {})
      : std::runtime_error(what), trace_(std::move(trace)) {}

  const std::string& trace() const { return trace_; }

private:
  std::string trace_;
};

} // namespace gatelim
