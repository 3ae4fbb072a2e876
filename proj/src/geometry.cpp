#include "nblow/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace nblow {

ProjectivePoint::ProjectivePoint(std::vector<mpz_class> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw InputError("projective point needs at least 2 coordinates");
  mpz_class g = 0;
  for (const mpz_class& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw InputError("projective point cannot be all zero");
  for (mpz_class& c : coords_) c /= g;
  for (const mpz_class& c : coords_) {
    if (c != 0) {
      if (c < 0) {
        for (mpz_class& x : coords_) x = -x;
      }
      break;
    }
  }
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << " : ";
    os << coords_[i].get_str();
  }
  os << ')';
  return os.str();
}

namespace {

mpz_class determinant_bareiss(std::vector<std::vector<mpz_class>> a) {
  const int n = static_cast<int>(a.size());
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r) {
      if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(k)]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        mpz_class num = a[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                            a[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                        a[static_cast<size_t>(r)][static_cast<size_t>(k)] *
                            a[static_cast<size_t>(k)][static_cast<size_t>(c)];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] = q;
      }
      a[static_cast<size_t>(r)][static_cast<size_t>(k)] = 0;
    }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return sign > 0 ? prev : mpz_class(-prev);
}

}  // namespace

LinearAutomorphism::LinearAutomorphism(std::vector<std::vector<mpz_class>> matrix)
    : matrix_(std::move(matrix)) {
  const size_t n = matrix_.size();
  if (n < 2) throw InputError("automorphism matrix needs size >= 2");
  for (const auto& row : matrix_) {
    if (row.size() != n) throw InputError("automorphism matrix must be square");
  }
  det_ = determinant_bareiss(matrix_);
  if (det_ == 0) throw DomainError("automorphism matrix is singular");
}

ProjectivePoint LinearAutomorphism::apply(const ProjectivePoint& p) const {
  const size_t n = matrix_.size();
  if (p.coords().size() != n) throw InputError("point/matrix size mismatch");
  std::vector<mpz_class> out(n, 0);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) out[r] += matrix_[r][c] * p.coords()[c];
  }
  return ProjectivePoint(std::move(out));
}

LinearAutomorphism LinearAutomorphism::inverse() const {
  const int n = static_cast<int>(matrix_.size());
  // adjugate via cofactors: integer matrix inverting the projective action
  std::vector<std::vector<mpz_class>> adj(static_cast<size_t>(n),
                                          std::vector<mpz_class>(static_cast<size_t>(n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::vector<std::vector<mpz_class>> minor;
      for (int i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<mpz_class> row;
        for (int j = 0; j < n; ++j) {
          if (j == c) continue;
          row.push_back(matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        minor.push_back(std::move(row));
      }
      mpz_class cof = minor.empty() ? mpz_class(1) : determinant_bareiss(std::move(minor));
      if ((r + c) % 2 != 0) cof = -cof;
      adj[static_cast<size_t>(c)][static_cast<size_t>(r)] = cof;  // transpose
    }
  }
  return LinearAutomorphism(std::move(adj));
}

HomogeneousForm::HomogeneousForm(int vars, int degree,
                                 std::map<std::vector<int>, mpz_class> coeffs)
    : vars_(vars), degree_(degree) {
  if (vars < 2 || degree < 0) throw InputError("form needs vars >= 2 and degree >= 0");
  for (auto& [e, c] : coeffs) {
    if (static_cast<int>(e.size()) != vars) throw InputError("form exponent tuple length");
    long long total = 0;
    for (int x : e) {
      if (x < 0) throw InputError("negative exponent in form");
      total += x;
    }
    if (total != degree) throw InputError("form is not homogeneous of the stated degree");
    if (c != 0) coeffs_.insert({e, c});
  }
}

mpz_class HomogeneousForm::evaluate(const ProjectivePoint& p) const {
  if (static_cast<int>(p.coords().size()) != vars_) {
    throw InputError("form/point variable mismatch");
  }
  mpz_class total = 0;
  for (const auto& [e, c] : coeffs_) {
    mpz_class term = c;
    for (int v = 0; v < vars_; ++v) {
      for (int k = 0; k < e[static_cast<size_t>(v)]; ++k) {
        term *= p.coords()[static_cast<size_t>(v)];
      }
    }
    total += term;
  }
  return total;
}

HomogeneousForm HomogeneousForm::times(const HomogeneousForm& other) const {
  if (vars_ != other.vars_) throw InputError("form variable mismatch");
  std::map<std::vector<int>, mpz_class> out;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : other.coeffs_) {
      std::vector<int> e(e1);
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      out[e] += c1 * c2;
    }
  }
  return HomogeneousForm(vars_, degree_ + other.degree_, std::move(out));
}

std::string HomogeneousForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << '-';
    first = false;
    mpz_class a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << a.get_str();
      printed = true;
    }
    for (int v = 0; v < vars_; ++v) {
      int k = e[static_cast<size_t>(v)];
      if (k == 0) continue;
      if (printed) os << '*';
      os << 'x' << v;
      if (k > 1) os << '^' << k;
      printed = true;
    }
    if (!printed) os << '1';
  }
  return os.str();
}

namespace {

// "coeff:e0,e1,..;coeff:e0,e1,.." tuples
HomogeneousForm parse_tuple_form(const std::string& text, int vars) {
  std::map<std::vector<int>, mpz_class> coeffs;
  int degree = -1;
  std::istringstream terms(text);
  std::string term;
  while (std::getline(terms, term, ';')) {
    size_t colon = term.find(':');
    if (colon == std::string::npos) throw InputError("expected coeff:tuple in form");
    mpz_class c(term.substr(0, colon));
    std::vector<int> e;
    std::istringstream nums(term.substr(colon + 1));
    std::string piece;
    while (std::getline(nums, piece, ',')) e.push_back(std::stoi(piece));
    long long total = 0;
    for (int x : e) total += x;
    if (degree < 0) degree = static_cast<int>(total);
    coeffs[e] += c;
  }
  if (degree < 0) throw InputError("empty form");
  return HomogeneousForm(vars, degree, std::move(coeffs));
}

// algebraic text in x0..xs
HomogeneousForm parse_text_form(const std::string& text, int vars) {
  std::map<std::vector<int>, mpz_class> coeffs;
  int degree = -1;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool expect_term = true;
  int sign = 1;
  skip();
  while (i < text.size()) {
    skip();
    if (!expect_term) {
      if (text[i] == '+') sign = 1;
      else if (text[i] == '-') sign = -1;
      else throw InputError("expected + or - in form at '" + text.substr(i) + "'");
      ++i;
      expect_term = true;
      continue;
    }
    if (text[i] == '-') {
      sign = -sign;
      ++i;
      continue;
    }
    if (text[i] == '+') {
      ++i;
      continue;
    }
    // one term: [int][*] (xV[^k] [*|space])*
    mpz_class c = sign;
    std::vector<int> e(static_cast<size_t>(vars), 0);
    bool saw_factor = false;
    while (i < text.size()) {
      skip();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        c *= mpz_class(text.substr(start, i - start));
        saw_factor = true;
        continue;
      }
      if (text[i] == 'x') {
        ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw InputError("variable index missing in form");
        int v = std::stoi(text.substr(start, i - start));
        if (v < 0 || v >= vars) {
          throw InputError("variable x" + std::to_string(v) + " outside x0..x" +
                           std::to_string(vars - 1));
        }
        int k = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          size_t estart = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (estart == i) throw InputError("missing exponent in form");
          k = std::stoi(text.substr(estart, i - estart));
        }
        e[static_cast<size_t>(v)] += k;
        saw_factor = true;
        continue;
      }
      throw InputError("unexpected character in form: '" + text.substr(i, 1) + "'");
    }
    if (!saw_factor) throw InputError("empty term in form");
    long long total = 0;
    for (int x : e) total += x;
    if (degree < 0) degree = static_cast<int>(total);
    coeffs[e] += c;
    sign = 1;
    expect_term = false;
  }
  if (degree < 0) throw InputError("empty form");
  return HomogeneousForm(vars, degree, std::move(coeffs));
}

}  // namespace

HomogeneousForm parse_form(const std::string& text, int vars) {
  if (text.find(':') != std::string::npos) return parse_tuple_form(text, vars);
  return parse_text_form(text, vars);
}

HomogeneousForm line_through(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.dim() != 2 || b.dim() != 2) throw InputError("line_through works in P^2");
  if (a == b) throw InputError("line through equal points is not unique");
  const auto& p = a.coords();
  const auto& q = b.coords();
  std::map<std::vector<int>, mpz_class> coeffs;
  coeffs[{1, 0, 0}] = p[1] * q[2] - p[2] * q[1];
  coeffs[{0, 1, 0}] = p[2] * q[0] - p[0] * q[2];
  coeffs[{0, 0, 1}] = p[0] * q[1] - p[1] * q[0];
  return HomogeneousForm(3, 1, std::move(coeffs));
}

Orbit orbit(const ProjectivePoint& x, const LinearAutomorphism& map, int count,
            OrbitDirection direction) {
  if (count < 1) throw InputError("orbit length must be >= 1");
  LinearAutomorphism step =
      direction == OrbitDirection::Forward ? map : map.inverse();
  Orbit out;
  std::map<ProjectivePoint, int> seen;
  ProjectivePoint current = x;
  for (int i = 0; i < count; ++i) {
    auto it = seen.find(current);
    if (it != seen.end() && !out.repeats) {
      out.repeats = true;
      out.first_repeat_index = i;
      out.period = i - it->second;
    }
    seen.emplace(current, i);
    out.points.push_back(current);
    if (i + 1 < count) current = step.apply(current);
  }
  return out;
}

SparseSetWindow incidence_set(const std::vector<ProjectivePoint>& points,
                              const HomogeneousForm& form) {
  if (form.is_zero()) throw InputError("incidence against the zero form");
  std::vector<long long> members;
  for (size_t i = 0; i < points.size(); ++i) {
    if (form.evaluate(points[i]) == 0) members.push_back(static_cast<long long>(i));
  }
  return SparseSetWindow(std::move(members), static_cast<long long>(points.size()));
}

int integer_rank(std::vector<std::vector<mpz_class>> a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        mpz_class num = a[static_cast<size_t>(rank)][static_cast<size_t>(col)] *
                            a[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                        a[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                            a[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw DomainError("fraction-free elimination lost exactness");
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] = q;
      }
      a[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
    }
    prev = a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<int>> degree_monomials(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == vars - 1) {
      e[static_cast<size_t>(pos)] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace

SeparationCheck separates(const std::vector<ProjectivePoint>& points, int degree) {
  if (points.empty()) throw InputError("no points to separate");
  if (degree < 0) throw InputError("separation degree must be >= 0");
  const int vars = static_cast<int>(points[0].coords().size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].coords().size()) != vars) {
      throw InputError("points have mixed ambient dimensions");
    }
    for (size_t k = i + 1; k < points.size(); ++k) {
      if (points[i] == points[k]) throw InputError("duplicate points");
    }
  }
  std::vector<std::vector<int>> monos = degree_monomials(vars, degree);
  std::vector<std::vector<mpz_class>> eval(monos.size(),
                                           std::vector<mpz_class>(points.size()));
  for (size_t r = 0; r < monos.size(); ++r) {
    for (size_t c = 0; c < points.size(); ++c) {
      mpz_class term = 1;
      for (int v = 0; v < vars; ++v) {
        for (int k = 0; k < monos[r][static_cast<size_t>(v)]; ++k) {
          term *= points[c].coords()[static_cast<size_t>(v)];
        }
      }
      eval[r][c] = term;
    }
  }
  SeparationCheck out;
  out.rank = integer_rank(eval);
  for (size_t drop = 0; drop < points.size(); ++drop) {
    std::vector<std::vector<mpz_class>> reduced(monos.size());
    for (size_t r = 0; r < monos.size(); ++r) {
      for (size_t c = 0; c < points.size(); ++c) {
        if (c != drop) reduced[r].push_back(eval[r][c]);
      }
    }
    if (integer_rank(reduced) >= out.rank) {
      out.failing_index = static_cast<int>(drop);
      return out;
    }
  }
  out.ok = true;
  return out;
}

SeparationProfile separation_profile(const ProjectivePoint& x, const LinearAutomorphism& map,
                                     long long delta_num, long long delta_den, int n_max,
                                     bool check_translates) {
  SeparationProfile out;
  out.delta_num = delta_num;
  out.delta_den = delta_den;
  if (delta_num <= 0 || delta_den <= 0) {
    out.error = "delta must be a positive rational";
    return out;
  }
  Orbit back = orbit(x, map, n_max, OrbitDirection::Backward);
  if (back.repeats) {
    out.error = "orbit repeats at index " + std::to_string(back.first_repeat_index) +
                " (finite orbit)";
    return out;
  }
  auto profile_for = [&](const std::vector<ProjectivePoint>& pts) {
    std::vector<int> degrees;
    for (int n = 1; n <= static_cast<int>(pts.size()); ++n) {
      std::vector<ProjectivePoint> window(pts.begin(), pts.begin() + n);
      int d = 0;
      while (!separates(window, d).ok) ++d;
      degrees.push_back(d);
    }
    return degrees;
  };
  out.min_degree = profile_for(back.points);

  // empirical threshold for D(n) <= floor(delta n)
  for (int n0 = 1; n0 <= n_max; ++n0) {
    bool all = true;
    for (int n = n0; n <= n_max; ++n) {
      long long allowed = (delta_num * n) / delta_den;
      if (out.min_degree[static_cast<size_t>(n - 1)] > allowed) {
        all = false;
        break;
      }
    }
    if (all) {
      out.threshold = n0;
      break;
    }
  }

  if (check_translates) {
    for (int p : {-3, -2, -1, 1, 2, 3}) {
      LinearAutomorphism shift = p > 0 ? map : map.inverse();
      ProjectivePoint y = x;
      for (int k = 0; k < std::abs(p); ++k) y = shift.apply(y);
      Orbit tb = orbit(y, map, n_max, OrbitDirection::Backward);
      if (tb.repeats) continue;
      if (profile_for(tb.points) != out.min_degree) {
        out.translation_invariant = false;
        break;
      }
    }
  }
  out.ok = true;
  return out;
}

}  // namespace nblow
