#ifndef CHORCHECK_VALUE_HPP
#define CHORCHECK_VALUE_HPP

#include <cstdint>
#include <string>
#include <variant>

namespace chorcheck {

/// A runtime value: integer, boolean, or string. The empty string is
/// the word epsilon.
class Value {
public:
  Value() : v_(std::int64_t{0}) {}
  explicit Value(std::int64_t i) : v_(i) {}
  explicit Value(bool b) : v_(b) {}
  explicit Value(std::string s) : v_(std::move(s)) {}

  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }

  friend auto operator<=>(const Value&, const Value&) = default;

private:
  std::variant<std::int64_t, bool, std::string> v_;
};

} // namespace chorcheck

#endif
