#ifndef NBLOW_TOML_LITE_HPP
#define NBLOW_TOML_LITE_HPP

#include <map>
#include <string>
#include <vector>

#include "nblow/monomial.hpp"  // error types

namespace nblow::toml {

/// Small TOML reader covering what the fixture files use: [table] and
/// [[array-of-table]] headers (dotted), dotted/quoted keys, and string /
/// integer / boolean / single-line array values. Errors carry line numbers.
struct Value {
  enum class Type { Table, Array, String, Integer, Boolean };
  Type type = Type::Table;
  std::map<std::string, Value> table;
  std::vector<Value> array;
  std::string str;
  long long integer = 0;
  bool boolean = false;

  bool has(const std::string& key) const { return table.count(key) > 0; }
  const Value& at(const std::string& key) const;
  const Value& operator[](size_t i) const;

  const std::string& as_string() const;
  long long as_integer() const;
  bool as_boolean() const;
  const std::vector<Value>& as_array() const;

  long long get_or(const std::string& key, long long fallback) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  bool get_or(const std::string& key, bool fallback) const;
};

Value parse(const std::string& text);
Value parse_file(const std::string& path);

}  // namespace nblow::toml

#endif
