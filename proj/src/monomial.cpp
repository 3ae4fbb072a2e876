#include "nblow/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

namespace nblow {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_) {
    if (e < 0) throw InputError("monomial exponent must be non-negative");
  }
}

long long Monomial::degree() const {
  long long d = 0;
  for (int e : exp_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<int> e(exp_.size());
  for (size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] > std::numeric_limits<int>::max() - other.exp_[i]) {
      throw DomainError("monomial exponent overflow in product");
    }
    e[i] = exp_[i] + other.exp_[i];
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exp_.size());
  for (size_t i = 0; i < exp_.size(); ++i) e[i] = std::max(exp_[i], other.exp_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<int> e(exp_.size());
  for (size_t i = 0; i < exp_.size(); ++i) e[i] = std::min(exp_[i], other.exp_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  std::vector<int> e(exp_.size());
  for (size_t i = 0; i < exp_.size(); ++i) e[i] = std::max(exp_[i] - other.exp_[i], 0);
  return Monomial(std::move(e));
}

namespace {

// Divisibility antichain in decreasing lex order.
std::vector<Monomial> minimalize(int vars, std::vector<Monomial> gens) {
  for (const Monomial& g : gens) {
    if (g.vars() != vars) {
      throw InputError("generator has " + std::to_string(g.vars()) +
                       " variables, ideal expects " + std::to_string(vars));
    }
  }
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return b.lex_less(a); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // keep exactly the minimal elements of the divisibility order
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t k = 0; k < gens.size() && !redundant; ++k) {
      if (k != i && gens[k].divides(gens[i])) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int vars, std::vector<Monomial> gens) : vars_(vars) {
  if (vars < 1) throw InputError("ideal needs at least one variable");
  gens_ = minimalize(vars, std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(int vars) {
  return MonomialIdeal(vars, {Monomial(std::vector<int>(static_cast<size_t>(vars), 0))});
}

MonomialIdeal MonomialIdeal::zero(int vars) { return MonomialIdeal(vars, {}); }

MonomialIdeal MonomialIdeal::max_power(int vars, int k) {
  if (k < 0) throw InputError("negative ideal power");
  std::vector<Monomial> gens;
  std::vector<int> e(static_cast<size_t>(vars), 0);
  // enumerate exponent vectors of total degree k
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == vars - 1) {
      e[static_cast<size_t>(pos)] = left;
      gens.emplace_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, k);
  return MonomialIdeal(vars, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::is_artinian() const {
  if (is_unit()) return true;
  if (is_zero()) return false;
  for (int v = 0; v < vars_; ++v) {
    bool has_pure_power = false;
    for (const Monomial& g : gens_) {
      bool pure = g.exponent(v) > 0;
      for (int w = 0; pure && w < vars_; ++w) {
        if (w != v && g.exponent(w) != 0) pure = false;
      }
      if (pure) {
        has_pure_power = true;
        break;
      }
    }
    if (!has_pure_power) return false;
  }
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.vars() != vars_) throw InputError("monomial/ideal variable mismatch");
  for (const Monomial& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::subset_of(const MonomialIdeal& other) const {
  if (vars_ != other.vars_) throw InputError("ideal variable mismatch");
  for (const Monomial& g : gens_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

std::optional<long long> MonomialIdeal::colength() const {
  if (is_zero()) return std::nullopt;
  if (is_unit()) return 0;
  // minimal pure power of each variable bounds the staircase box
  std::vector<int> box(static_cast<size_t>(vars_), -1);
  for (int v = 0; v < vars_; ++v) {
    for (const Monomial& g : gens_) {
      bool pure = g.exponent(v) > 0;
      for (int w = 0; pure && w < vars_; ++w) {
        if (w != v && g.exponent(w) != 0) pure = false;
      }
      if (pure) {
        int d = g.exponent(v);
        if (box[static_cast<size_t>(v)] < 0 || d < box[static_cast<size_t>(v)]) {
          box[static_cast<size_t>(v)] = d;
        }
      }
    }
    if (box[static_cast<size_t>(v)] < 0) return std::nullopt;
  }
  long long count = 0;
  std::vector<int> e(static_cast<size_t>(vars_), 0);
  while (true) {
    if (!contains(Monomial(e))) ++count;
    int pos = 0;
    while (pos < vars_) {
      if (++e[static_cast<size_t>(pos)] < box[static_cast<size_t>(pos)]) break;
      e[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == vars_) break;
  }
  return count;
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << monomial_to_string(gens_[i], vars_);
  }
  os << ')';
  return os.str();
}

namespace {
void require_same_vars(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) {
    throw InputError("ideals live in different variable counts (" +
                     std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) + ")");
  }
}
}  // namespace

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& g : a.gens()) {
    for (const Monomial& h : b.gens()) gens.push_back(g.times(h));
  }
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& g : a.gens()) {
    for (const Monomial& h : b.gens()) gens.push_back(g.lcm(h));
  }
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a, b);
  if (b.is_zero()) throw DomainError("colon by the zero ideal");
  // (a : b) = intersection over generators m of b of (a : m),
  // and (a : m) is generated by g/gcd(g, m).
  bool first = true;
  MonomialIdeal result = MonomialIdeal::unit(a.vars());
  for (const Monomial& m : b.gens()) {
    std::vector<Monomial> q;
    q.reserve(a.gens().size());
    for (const Monomial& g : a.gens()) q.push_back(g.quotient_by(m));
    MonomialIdeal part(a.vars(), std::move(q));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw InputError("negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit(a.vars());
  for (int i = 0; i < k; ++i) result = multiply(result, a);
  return result;
}

namespace {

int variable_index(const std::string& name, int vars) {
  if (vars <= 2) {
    if (name == "x") return 0;
    if (name == "y" && vars == 2) return 1;
  } else {
    if (name.size() >= 2 && name[0] == 'x') {
      int idx = 0;
      for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
        idx = idx * 10 + (name[i] - '0');
      }
      if (idx >= 1 && idx <= vars) return idx - 1;
    }
  }
  return -1;
}

}  // namespace

Monomial parse_monomial(const std::string& text, int vars) {
  std::vector<int> e(static_cast<size_t>(vars), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '1' && text.substr(i) == "1") return Monomial(e);
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])))) ++i;
    std::string name = text.substr(start, i - start);
    if (name.empty()) throw InputError("bad monomial syntax: '" + text + "'");
    int var = variable_index(name, vars);
    if (var < 0) throw InputError("unknown variable '" + name + "' for v=" + std::to_string(vars));
    int exp = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      size_t estart = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (estart == i) throw InputError("missing exponent in '" + text + "'");
      exp = std::stoi(text.substr(estart, i - estart));
    }
    e[static_cast<size_t>(var)] += exp;
    any = true;
  }
  if (!any) throw InputError("empty monomial in '" + text + "'");
  return Monomial(e);
}

MonomialIdeal parse_ideal(const std::string& text, int vars) {
  std::vector<Monomial> gens;
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  if (trimmed == "0" || trimmed.empty()) return MonomialIdeal::zero(vars);
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    bool blank = true;
    for (char c : piece) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) gens.push_back(parse_monomial(piece, vars));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MonomialIdeal(vars, std::move(gens));
}

std::string monomial_to_string(const Monomial& m, int vars) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < vars; ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (!first) os << ' ';
    first = false;
    if (vars <= 2) {
      os << (v == 0 ? 'x' : 'y');
    } else {
      os << 'x' << (v + 1);
    }
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace nblow
