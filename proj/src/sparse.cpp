#include "nblow/sparse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nblow {

SparseSetWindow::SparseSetWindow(std::vector<long long> members, long long horizon)
    : members_(std::move(members)), horizon_(horizon) {
  if (horizon < 0) throw InputError("window horizon must be non-negative");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= horizon)) {
    throw InputError("set member outside the window [0, horizon)");
  }
}

long long SparseSetWindow::prefix_count(long long n) const {
  if (n < 0 || n > horizon_) {
    throw InputError("prefix count outside the window");
  }
  return std::lower_bound(members_.begin(), members_.end(), n) - members_.begin();
}

bool SparseSetWindow::contains(long long value) const {
  return std::binary_search(members_.begin(), members_.end(), value);
}

BoundingFunction BoundingFunction::monomial(long long coefficient, int power) {
  if (coefficient < 1 || power < 1) throw InputError("bound must be positive and increasing");
  BoundingFunction b;
  b.kind_ = Kind::Monomial;
  b.coefficient_ = coefficient;
  b.power_ = power;
  return b;
}

BoundingFunction BoundingFunction::finite_set(long long size) {
  BoundingFunction b;
  b.kind_ = Kind::FiniteSet;
  b.coefficient_ = std::max<long long>(size, 1);
  b.power_ = 1;
  return b;
}

BoundingFunction BoundingFunction::table(std::vector<long long> values) {
  if (values.empty()) throw InputError("empty bound table");
  BoundingFunction b;
  b.kind_ = Kind::Table;
  b.values_ = std::move(values);
  return b;
}

BoundingFunction BoundingFunction::union_of(long long d, std::vector<BoundingFunction> parts) {
  if (d < 1 || parts.empty()) throw InputError("union bound needs d >= 1 and parts");
  BoundingFunction b;
  b.kind_ = Kind::Union;
  b.union_d_ = d;
  b.parts_ = std::move(parts);
  return b;
}

BoundingFunction BoundingFunction::derived(std::map<long long, BoundingFunction> per_distance) {
  if (per_distance.empty()) throw InputError("derived bound needs per-distance bounds");
  BoundingFunction b;
  b.kind_ = Kind::Derived;
  b.per_distance_ = std::move(per_distance);
  return b;
}

long long BoundingFunction::operator()(long long m) const {
  if (m < 1) throw InputError("bounds are defined for m >= 1");
  switch (kind_) {
    case Kind::Monomial:
    case Kind::FiniteSet: {
      long long v = coefficient_;
      for (int i = 0; i < power_; ++i) v *= m;
      return v;
    }
    case Kind::Table: {
      size_t idx = static_cast<size_t>(std::min<long long>(m, static_cast<long long>(values_.size())));
      return values_[idx - 1];
    }
    case Kind::Union: {
      long long best = 1;
      for (const auto& p : parts_) best = std::max(best, p(m * union_d_));
      return best;
    }
    case Kind::Derived: {
      auto it = per_distance_.find(3 * m);
      if (it == per_distance_.end()) {
        throw InputError("derived bound missing distance " + std::to_string(3 * m));
      }
      return std::max(3 * m, it->second(3 * m));
    }
  }
  return 1;
}

std::string BoundingFunction::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Monomial:
      os << coefficient_ << "*m";
      if (power_ > 1) os << '^' << power_;
      break;
    case Kind::FiniteSet:
      os << coefficient_ << "*m (finite set of size <= " << coefficient_
         << "; the constant reading fails below n = " << coefficient_ << "m)";
      break;
    case Kind::Table:
      os << "table[" << values_.size() << "]";
      break;
    case Kind::Union:
      os << "max_i N_i(" << union_d_ << "m) over " << parts_.size() << " parts";
      break;
    case Kind::Derived:
      os << "max(3m, N_{3m}(3m))";
      break;
  }
  return os.str();
}

bool BoundingFunction::monotone_on(long long m_max) const {
  long long prev = (*this)(1);
  for (long long m = 2; m <= m_max; ++m) {
    long long cur = (*this)(m);
    if (cur < prev) return false;
    prev = cur;
  }
  return true;
}

BoundCheck check_bounding(const SparseSetWindow& s, const BoundingFunction& bound,
                          long long m_max, long long horizon) {
  BoundCheck out;
  horizon = std::min(horizon, s.horizon());
  if (!bound.monotone_on(m_max)) {
    out.note = "bound is not monotone on 1..m_max";
    return out;
  }
  for (long long m = 1; m <= m_max; ++m) {
    long long from = bound(m);
    if (from > horizon) {
      if (out.vacuous_from_m == 0) out.vacuous_from_m = m;
      continue;
    }
    for (long long n = from; n <= horizon; ++n) {
      if (s.prefix_count(n) * m > n) {
        out.first_failure = {m, n};
        return out;
      }
    }
  }
  out.ok = true;
  if (out.vacuous_from_m > 0) {
    out.note = "vacuous for m >= " + std::to_string(out.vacuous_from_m) +
               ": N(m) exceeds the window";
  }
  return out;
}

UnionBound union_bound(const std::vector<std::pair<SparseSetWindow, BoundingFunction>>& parts) {
  if (parts.empty()) throw InputError("union of no sets");
  long long horizon = parts[0].first.horizon();
  std::vector<long long> members;
  std::vector<BoundingFunction> bounds;
  for (const auto& [set, bound] : parts) {
    horizon = std::min(horizon, set.horizon());
    members.insert(members.end(), set.members().begin(), set.members().end());
    bounds.push_back(bound);
  }
  std::vector<long long> clipped;
  for (long long v : members) {
    if (v < horizon) clipped.push_back(v);
  }
  return UnionBound{SparseSetWindow(std::move(clipped), horizon),
                    BoundingFunction::union_of(static_cast<long long>(parts.size()),
                                               std::move(bounds))};
}

SparseSetWindow shifted_self(const SparseSetWindow& s, long long d) {
  if (d < 1) throw InputError("shift distance must be >= 1");
  std::vector<long long> out;
  const auto& mem = s.members();
  // the nearest member below decides membership
  for (size_t i = 1; i < mem.size(); ++i) {
    if (mem[i - 1] >= mem[i] - d) out.push_back(mem[i]);
  }
  return SparseSetWindow(std::move(out), s.horizon());
}

BoundingFunction derived_bound(const SparseSetWindow& s,
                               const std::map<long long, BoundingFunction>& per_distance,
                               long long m_max) {
  for (long long m = 1; m <= m_max; ++m) {
    auto it = per_distance.find(3 * m);
    if (it == per_distance.end()) {
      throw InputError("derived bound needs a bound for distance d = " +
                       std::to_string(3 * m));
    }
    BoundCheck pre = check_bounding(shifted_self(s, 3 * m), it->second, 3 * m, s.horizon());
    if (!pre.ok) {
      throw DomainError("supplied bound for distance " + std::to_string(3 * m) +
                        " fails on the shifted self-intersection");
    }
  }
  return BoundingFunction::derived(per_distance);
}

EstimatePair verify_estimates(const SparseSetWindow& s, long long d, long long horizon) {
  EstimatePair out{true, true, std::nullopt};
  if (d < 1) throw InputError("distance must be >= 1");
  horizon = std::min(horizon, s.horizon());
  SparseSetWindow sd = shifted_self(s, d);
  for (long long n = 1; n <= horizon; ++n) {
    long long in_s = s.prefix_count(n);
    long long in_sd = sd.prefix_count(n);
    long long complement = n - in_s;
    long long isolated = in_s - in_sd;  // members of S \ S_d below n
    if (complement < d * (isolated - 1)) {
      out.complement_ok = false;
      if (!out.first_failure_n) out.first_failure_n = n;
    }
    if ((d + 1) * in_s > n + d + d * in_sd) {
      out.density_ok = false;
      if (!out.first_failure_n) out.first_failure_n = n;
    }
  }
  return out;
}

SparseSetWindow make_set(const std::string& spec, long long horizon) {
  std::vector<long long> members;
  if (spec == "squares") {
    for (long long k = 0; k * k < horizon; ++k) members.push_back(k * k);
  } else if (spec == "powers") {
    for (long long v = 1; v < horizon; v *= 2) members.push_back(v);
  } else if (spec == "evens") {
    for (long long v = 0; v < horizon; v += 2) members.push_back(v);
  } else if (spec.rfind("arithmetic:", 0) == 0) {
    std::istringstream in(spec.substr(11));
    long long a = 0, b = 1;
    char comma = 0;
    if (!(in >> a >> comma >> b) || comma != ',' || b < 1) {
      throw InputError("arithmetic set expects 'arithmetic:start,step'");
    }
    for (long long v = a; v < horizon; v += b) members.push_back(v);
  } else if (spec.rfind("list:", 0) == 0) {
    std::istringstream in(spec.substr(5));
    std::string piece;
    while (std::getline(in, piece, ',')) {
      if (!piece.empty()) members.push_back(std::stoll(piece));
    }
  } else if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw InputError("cannot open set file '" + spec.substr(5) + "'");
    nlohmann::json j;
    in >> j;
    // accept a bare array, {"set": [...]}, or a report nesting it under "result"
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
      arr = j.contains("set") ? &j.at("set") : &j.at("result").at("set");
    }
    for (const auto& v : *arr) members.push_back(v.get<long long>());
  } else {
    throw InputError("unknown set spec '" + spec + "'");
  }
  return SparseSetWindow(std::move(members), horizon);
}

BoundingFunction parse_bound(const std::string& text) {
  // forms: "m", "c*m", "c*m^k", "m^k"
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  long long coeff = 1;
  size_t pos = 0;
  if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
    size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    coeff = std::stoll(t.substr(start, pos - start));
    if (pos < t.size() && t[pos] == '*') ++pos;
  }
  if (pos >= t.size() || t[pos] != 'm') throw InputError("bound must mention m: '" + text + "'");
  ++pos;
  int power = 1;
  if (pos < t.size() && t[pos] == '^') {
    ++pos;
    size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (start == pos) throw InputError("missing exponent in bound '" + text + "'");
    power = std::stoi(t.substr(start, pos - start));
  }
  if (pos != t.size()) throw InputError("trailing characters in bound '" + text + "'");
  return BoundingFunction::monomial(coeff, power);
}

}  // namespace nblow
