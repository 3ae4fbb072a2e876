#include "nblow/manifest.hpp"

#include <cstdlib>
#include <fstream>

namespace nblow {

namespace {

#ifndef NBLOW_FIXTURE_DIR
#define NBLOW_FIXTURE_DIR "fixtures"
#endif

class ManifestEvaluator {
 public:
  ManifestEvaluator(const json& manifest, const Fixture& fixture,
                    const AnalysisReport& report)
      : fixture_(fixture), report_(report), vars_(fixture.seq.vars()) {
    named_ = fixture.named;
    if (manifest.contains("define")) {
      for (const auto& def : manifest.at("define")) {
        named_.insert_or_assign(def.at("name").get<std::string>(),
                                ideal_expr(def.at("expr")));
      }
    }
  }

  MonomialIdeal ideal_expr(const json& e) const {
    if (e.is_string()) return parse_ideal(e.get<std::string>(), vars_);
    if (e.contains("named")) return named_.at(e.at("named").get<std::string>());
    if (e.contains("power")) {
      const auto& args = e.at("power");
      return power(ideal_expr(args.at(0)), args.at(1).get<int>());
    }
    if (e.contains("max_power")) return MonomialIdeal::max_power(vars_, e.at("max_power").get<int>());
    if (e.contains("product")) {
      MonomialIdeal out = MonomialIdeal::unit(vars_);
      for (const auto& part : e.at("product")) out = multiply(out, ideal_expr(part));
      return out;
    }
    if (e.contains("sum")) {
      MonomialIdeal out = MonomialIdeal::zero(vars_);
      for (const auto& part : e.at("sum")) out = add(out, ideal_expr(part));
      return out;
    }
    if (e.contains("intersect")) {
      const auto& parts = e.at("intersect");
      MonomialIdeal out = ideal_expr(parts.at(0));
      for (size_t i = 1; i < parts.size(); ++i) out = intersect(out, ideal_expr(parts.at(i)));
      return out;
    }
    if (e.contains("colon")) {
      const auto& args = e.at("colon");
      return colon(ideal_expr(args.at(0)), ideal_expr(args.at(1)));
    }
    if (e.contains("seq_slot")) {
      const auto& s = e.at("seq_slot");
      return fixture_.seq.at(s.at("n").get<int>())
          .slot(s.value("orbit", "a"), s.at("slot").get<int>());
    }
    if (e.contains("tors_slot")) {
      const auto& s = e.at("tors_slot");
      return torsion_side(s.value("side", "right"))
          .seq->at(s.at("n").get<int>())
          .slot(s.value("orbit", "a"), s.at("slot").get<int>());
    }
    throw InputError("unknown ideal expression: " + e.dump());
  }

  OrbitIdealData data_expr(const json& e) const {
    if (e.contains("data")) {
      OrbitIdealData out(vars_);
      for (const auto& [orbit, slots] : e.at("data").items()) {
        for (const auto& [slot, ideal] : slots.items()) {
          out.set_slot(orbit, std::stoi(slot), ideal_expr(ideal));
        }
      }
      return out;
    }
    if (e.contains("seq_at")) return fixture_.seq.at(e.at("seq_at").get<int>());
    if (e.contains("tors_seed")) {
      return torsion_side(e.at("tors_seed").get<std::string>()).seq->at(1);
    }
    if (e.contains("product")) {
      OrbitIdealData out = OrbitIdealData::unit(vars_);
      for (const auto& part : e.at("product")) out = multiply_data(out, data_expr(part));
      return out;
    }
    if (e.contains("twist")) {
      const auto& args = e.at("twist");
      return twist(data_expr(args.at(0)), args.at(1).get<int>());
    }
    if (e.contains("colon")) {
      const auto& args = e.at("colon");
      return colon_data(data_expr(args.at(0)), data_expr(args.at(1)));
    }
    throw InputError("unknown data expression: " + e.dump());
  }

  const TorsionComputation& torsion_side(const std::string& side) const {
    const std::optional<TorsionComputation>& t =
        side == "left" ? report_.left : report_.right;
    if (!t || !t->ok || !t->seq) throw DomainError("torsion side not available: " + side);
    return *t;
  }

  CheckOutcome run_check(const json& check) const {
    CheckOutcome out;
    out.kind = check.at("kind").get<std::string>();
    out.basis = check.value("basis", "");
    out.note = check.value("note", "");
    try {
      run_check_inner(check, out);
    } catch (const std::exception& ex) {
      out.pass = false;
      out.detail = std::string("check raised: ") + ex.what();
    }
    return out;
  }

 private:
  void expect_equal(const MonomialIdeal& got, const MonomialIdeal& want,
                    CheckOutcome& out) const {
    out.pass = got == want;
    if (!out.pass) {
      out.detail = "got " + got.to_string() + ", expected " + want.to_string();
    }
  }

  void run_check_inner(const json& check, CheckOutcome& out) const {
    const std::string& kind = out.kind;
    if (kind == "ideal_eq") {
      expect_equal(ideal_expr(check.at("lhs")), ideal_expr(check.at("rhs")), out);
    } else if (kind == "ideal_neq") {
      MonomialIdeal lhs = ideal_expr(check.at("lhs"));
      MonomialIdeal rhs = ideal_expr(check.at("rhs"));
      out.pass = lhs != rhs;
      if (!out.pass) out.detail = "both sides equal " + lhs.to_string();
    } else if (kind == "not_member") {
      MonomialIdeal ideal = ideal_expr(check.at("ideal"));
      Monomial mono = parse_monomial(check.at("monomial").get<std::string>(), vars_);
      out.pass = !ideal.contains(mono);
      if (!out.pass) out.detail = "monomial unexpectedly contained";
    } else if (kind == "data_eq") {
      OrbitIdealData lhs = data_expr(check.at("lhs"));
      OrbitIdealData rhs = data_expr(check.at("rhs"));
      out.pass = lhs == rhs;
      if (!out.pass) {
        out.detail = "got " + lhs.to_string() + ", expected " + rhs.to_string();
      }
    } else if (kind == "validation") {
      out.pass = report_.validation.ok == check.value("ok", true) &&
                 report_.validation.t_effective == check.at("t_effective").get<int>();
      if (!out.pass) {
        out.detail = "t_effective = " + std::to_string(report_.validation.t_effective);
      }
    } else if (kind == "decomposition") {
      if (!report_.decomposition || !report_.decomposition->ok) {
        out.detail = "decomposition unavailable";
        return;
      }
      const StableDecomposition& d = *report_.decomposition;
      if (d.w != check.at("w").get<int>()) {
        out.detail = "w = " + std::to_string(d.w);
        return;
      }
      for (const auto& [orbit, expect] : check.at("orbits").items()) {
        const OrbitDecomposition& od = d.orbits.at(orbit);
        std::vector<MonomialIdeal> head, tail;
        for (const auto& e : expect.at("head")) head.push_back(ideal_expr(e));
        for (const auto& e : expect.at("tail")) tail.push_back(ideal_expr(e));
        MonomialIdeal body = ideal_expr(expect.at("body"));
        if (od.head != head || od.tail != tail || od.body != body) {
          out.detail = "orbit " + orbit + " decomposition differs";
          return;
        }
      }
      out.pass = true;
    } else if (kind == "torsion") {
      const TorsionComputation& t = torsion_side(check.value("side", "right"));
      if (check.contains("seed")) {
        OrbitIdealData want = data_expr(check.at("seed"));
        if (t.seq->at(1) != want) {
          out.detail = "torsion seed is " + t.seq->at(1).to_string() + ", expected " +
                       want.to_string();
          return;
        }
      }
      if (check.contains("equals_sequence") &&
          t.equals_sequence != check.at("equals_sequence").get<bool>()) {
        out.detail = "equals_sequence mismatch";
        return;
      }
      if (check.contains("naive_with_seed") &&
          t.naive_with_seed != check.at("naive_with_seed").get<bool>()) {
        out.detail = "naive_with_seed mismatch";
        return;
      }
      if (check.contains("t_effective") &&
          t.seq_validation.t_effective != check.at("t_effective").get<int>()) {
        out.detail = "t_effective = " + std::to_string(t.seq_validation.t_effective);
        return;
      }
      if (check.contains("tail")) {
        for (const auto& [orbit, list] : check.at("tail").items()) {
          std::vector<MonomialIdeal> want;
          for (const auto& e : list) want.push_back(ideal_expr(e));
          if (t.tail.at(orbit) != want) {
            out.detail = "tail block differs on orbit " + orbit;
            return;
          }
        }
      }
      out.pass = true;
    } else if (kind == "verdicts") {
      if (!report_.verdict) {
        out.detail = "verdict unavailable";
        return;
      }
      out.pass = report_.verdict->right_closed == check.at("right_closed").get<bool>() &&
                 report_.verdict->left_closed == check.at("left_closed").get<bool>();
      if (!out.pass) {
        out.detail = std::string("right_closed = ") +
                     (report_.verdict->right_closed ? "true" : "false") +
                     ", left_closed = " +
                     (report_.verdict->left_closed ? "true" : "false");
      }
    } else if (kind == "closure") {
      if (!report_.closure || !report_.closure->ok) {
        out.detail = "closure unavailable";
        return;
      }
      const ClosureReport& c = *report_.closure;
      if (c.converged_same != check.at("converged_same").get<bool>()) {
        out.detail = "converged_same mismatch";
        return;
      }
      const auto& fixed = check.at("fixed_seeds");
      if (fixed.size() != c.fixed_points.size()) {
        out.detail = "found " + std::to_string(c.fixed_points.size()) + " fixed points";
        return;
      }
      for (size_t i = 0; i < fixed.size(); ++i) {
        OrbitIdealData want = data_expr(fixed.at(i));
        if (c.fixed_points[i] != want) {
          out.detail = "fixed point " + std::to_string(i) + " is " +
                       c.fixed_points[i].to_string() + ", expected " + want.to_string();
          return;
        }
      }
      out.pass = true;
    } else if (kind == "idealizer") {
      if (!report_.idealizer || !report_.idealizer->ok) {
        out.detail = "idealizer unavailable";
        return;
      }
      out.pass = report_.idealizer->n0 == check.at("n0").get<int>();
      if (!out.pass) out.detail = "n0 = " + std::to_string(report_.idealizer->n0);
    } else if (kind == "torsion_multiplicative") {
      // torsion entries multiply the original sequence back onto itself
      const TorsionComputation& t = torsion_side(check.value("side", "right"));
      const IdealSequence& tors = t.extended ? *t.extended : *t.seq;
      const IdealSequence& seq = fixture_.seq;
      int r_min = check.value("r_min", 1);
      int horizon = std::min(tors.horizon(), seq.horizon());
      for (int n = 0; n <= horizon; ++n) {
        for (int r = r_min; n + r <= horizon; ++r) {
          OrbitIdealData prod = multiply_data(tors.at(n), twist(seq.at(r), n * seq.step()));
          if (prod != seq.at(n + r)) {
            out.detail = "fails at n=" + std::to_string(n) + ", r=" + std::to_string(r);
            return;
          }
        }
      }
      out.pass = true;
    } else if (kind == "torsion_equals_window") {
      // torsion entry n agrees (or not) with the sequence for all n in a range
      const TorsionComputation& t = torsion_side(check.value("side", "right"));
      bool want_equal = check.at("equal").get<bool>();
      int from = check.value("from", 1);
      int to = std::min(check.value("to", t.seq->horizon()), t.seq->horizon());
      for (int n = from; n <= to; ++n) {
        bool eq = t.seq->at(n) == fixture_.seq.at(n);
        if (eq != want_equal) {
          out.detail = "entry " + std::to_string(n) + (eq ? " equals" : " differs");
          return;
        }
      }
      out.pass = true;
    } else if (kind == "veronese") {
      const TorsionComputation& t = torsion_side(check.value("of", "right"));
      VeroneseResult v = veronese(*t.seq, check.at("p").get<int>());
      out.pass = v.ok && v.naive_with_seed == check.at("naive_with_seed").get<bool>();
      if (!out.pass) {
        out.detail = v.ok ? "naive_with_seed mismatch" : v.error;
      }
    } else if (kind == "gen_naive_t") {
      const TorsionComputation& t = torsion_side(check.value("of", "right"));
      std::vector<OrbitIdealData> entries;
      for (int n = 0; n <= t.seq->horizon(); ++n) entries.push_back(t.seq->at(n));
      bool pass_ok =
          validate_gen_naive(IdealSequence::table(entries, check.at("t_pass").get<int>())).ok;
      bool fail_ok = true;
      if (check.contains("t_fail")) {
        fail_ok = !validate_gen_naive(
                       IdealSequence::table(entries, check.at("t_fail").get<int>()))
                       .ok;
      }
      out.pass = pass_ok && fail_ok;
      if (!out.pass) {
        out.detail = pass_ok ? "smaller constant unexpectedly accepted"
                             : "declared constant rejected";
      }
    } else {
      out.detail = "unknown check kind '" + kind + "'";
    }
  }

  const Fixture& fixture_;
  const AnalysisReport& report_;
  int vars_;
  std::map<std::string, MonomialIdeal> named_;
};

}  // namespace

ManifestRun run_manifest(const json& manifest, const Fixture& fixture,
                         const AnalysisReport& report) {
  ManifestEvaluator eval(manifest, fixture, report);
  ManifestRun out;
  out.all_passed = true;
  for (const auto& check : manifest.at("checks")) {
    CheckOutcome c = eval.run_check(check);
    out.all_passed = out.all_passed && c.pass;
    out.checks.push_back(std::move(c));
  }
  return out;
}

json load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open manifest '" + path + "'");
  json j;
  in >> j;
  return j;
}

std::string fixture_directory(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("NBLOW_FIXTURES")) return env;
  return NBLOW_FIXTURE_DIR;
}

}  // namespace nblow
