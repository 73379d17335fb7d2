#ifndef CHORCHECK_ERRORS_HPP
#define CHORCHECK_ERRORS_HPP

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace chorcheck {

/// 1-based source position; attached to every parse error.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;

  std::string to_string() const;
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(SourceSpan span, const std::string& message);
  const SourceSpan& span() const { return span_; }

private:
  SourceSpan span_;
};

/// A recursive term reached an operation that only handles the
/// recursion-free fragment (or reachability was asked to run unbounded).
class RecursionError : public Error {
public:
  using Error::Error;
};

class TimeoutError : public Error {
public:
  using Error::Error;
};

/// Cooperative deadline threaded through long-running searches.
class Deadline {
public:
  Deadline() = default;

  static Deadline never() { return {}; }
  static Deadline after(std::chrono::milliseconds d) {
    Deadline dl;
    dl.at_ = std::chrono::steady_clock::now() + d;
    return dl;
  }

  bool expired() const {
    return at_ && std::chrono::steady_clock::now() >= *at_;
  }

  /// Throws TimeoutError when expired.
  void check(const char* what) const {
    if (expired()) throw TimeoutError(std::string("timeout during ") + what);
  }

private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

} // namespace chorcheck

#endif
