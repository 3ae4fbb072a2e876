#include "nblow/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nblow::toml {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw InputError("toml line " + std::to_string(line) + ": " + message);
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// dotted key with optional quoted segments: slots."0" -> {slots, 0}
std::vector<std::string> split_key(const std::string& key, int line) {
  std::vector<std::string> parts;
  size_t i = 0;
  while (i < key.size()) {
    std::string part;
    if (key[i] == '"') {
      size_t end = key.find('"', i + 1);
      if (end == std::string::npos) fail(line, "unterminated quoted key");
      part = key.substr(i + 1, end - i - 1);
      i = end + 1;
    } else {
      while (i < key.size() && key[i] != '.') part += key[i++];
      part = trim(part);
    }
    if (part.empty()) fail(line, "empty key segment");
    parts.push_back(part);
    if (i < key.size()) {
      if (key[i] != '.') fail(line, "expected '.' between key segments");
      ++i;
    }
  }
  if (parts.empty()) fail(line, "empty key");
  return parts;
}

Value parse_scalar(const std::string& raw, int line) {
  std::string s = trim(raw);
  Value v;
  if (s.empty()) fail(line, "missing value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"') fail(line, "unterminated string");
    v.type = Value::Type::String;
    v.str = s.substr(1, s.size() - 2);
    return v;
  }
  if (s == "true" || s == "false") {
    v.type = Value::Type::Boolean;
    v.boolean = (s == "true");
    return v;
  }
  if (s.front() == '[') {
    if (s.back() != ']') fail(line, "arrays must close on the same line");
    v.type = Value::Type::Array;
    std::string inner = s.substr(1, s.size() - 2);
    std::string piece;
    bool in_string = false;
    for (char c : inner) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        if (!trim(piece).empty()) v.array.push_back(parse_scalar(piece, line));
        piece.clear();
      } else {
        piece += c;
      }
    }
    if (!trim(piece).empty()) v.array.push_back(parse_scalar(piece, line));
    return v;
  }
  try {
    size_t used = 0;
    long long n = std::stoll(s, &used);
    if (used == s.size()) {
      v.type = Value::Type::Integer;
      v.integer = n;
      return v;
    }
  } catch (const std::exception&) {
  }
  fail(line, "unsupported value '" + s + "'");
}

Value* descend(Value* root, const std::vector<std::string>& path, int line, bool as_array) {
  Value* cur = root;
  for (size_t i = 0; i < path.size(); ++i) {
    const std::string& part = path[i];
    bool last = (i + 1 == path.size());
    Value& slot = cur->table[part];
    if (last && as_array) {
      if (slot.type == Value::Type::Table && slot.table.empty() && slot.array.empty()) {
        slot.type = Value::Type::Array;
      }
      if (slot.type != Value::Type::Array) fail(line, "'" + part + "' is not a table array");
      slot.array.emplace_back();
      slot.array.back().type = Value::Type::Table;
      return &slot.array.back();
    }
    if (slot.type == Value::Type::Array) {
      if (slot.array.empty()) fail(line, "empty table array '" + part + "'");
      cur = &slot.array.back();
    } else if (slot.type == Value::Type::Table) {
      cur = &slot;
    } else {
      fail(line, "'" + part + "' is not a table");
    }
  }
  return cur;
}

}  // namespace

const Value& Value::at(const std::string& key) const {
  auto it = table.find(key);
  if (it == table.end()) throw InputError("missing toml key '" + key + "'");
  return it->second;
}

const Value& Value::operator[](size_t i) const {
  if (type != Type::Array || i >= array.size()) throw InputError("toml array index out of range");
  return array[i];
}

const std::string& Value::as_string() const {
  if (type != Type::String) throw InputError("toml value is not a string");
  return str;
}

long long Value::as_integer() const {
  if (type != Type::Integer) throw InputError("toml value is not an integer");
  return integer;
}

bool Value::as_boolean() const {
  if (type != Type::Boolean) throw InputError("toml value is not a boolean");
  return boolean;
}

const std::vector<Value>& Value::as_array() const {
  if (type != Type::Array) throw InputError("toml value is not an array");
  return array;
}

long long Value::get_or(const std::string& key, long long fallback) const {
  return has(key) ? at(key).as_integer() : fallback;
}

std::string Value::get_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? at(key).as_string() : fallback;
}

bool Value::get_or(const std::string& key, bool fallback) const {
  return has(key) ? at(key).as_boolean() : fallback;
}

Value parse(const std::string& text) {
  Value root;
  root.type = Value::Type::Table;
  Value* current = &root;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      bool array_header = line.size() > 1 && line[1] == '[';
      size_t open = array_header ? 2 : 1;
      std::string closer = array_header ? "]]" : "]";
      size_t close = line.find(closer, open);
      if (close == std::string::npos || trim(line.substr(close + closer.size())) != "") {
        fail(line_no, "malformed table header");
      }
      std::vector<std::string> path = split_key(trim(line.substr(open, close - open)), line_no);
      current = descend(&root, path, line_no, array_header);
      continue;
    }
    size_t eq = std::string::npos;
    bool in_string = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_string = !in_string;
      if (line[i] == '=' && !in_string) {
        eq = i;
        break;
      }
    }
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    std::vector<std::string> path = split_key(trim(line.substr(0, eq)), line_no);
    Value* target = current;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      Value& slot = target->table[path[i]];
      if (slot.type != Value::Type::Table) fail(line_no, "key path crosses a non-table");
      target = &slot;
    }
    if (target->table.count(path.back())) fail(line_no, "duplicate key '" + path.back() + "'");
    target->table[path.back()] = parse_scalar(line.substr(eq + 1), line_no);
  }
  return root;
}

Value parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

}  // namespace nblow::toml
