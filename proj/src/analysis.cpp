#include "nblow/analysis.hpp"

#include <iomanip>
#include <sstream>

namespace nblow {

AnalysisReport analyze_sequence(const IdealSequence& seq, const std::string& source,
                                std::map<std::string, int> normalization_shifts,
                                int closure_max_iter) {
  AnalysisReport out;
  out.source = source;
  out.normalization_shifts = std::move(normalization_shifts);
  out.seq = seq;
  out.validation = validate_gen_naive(seq);
  if (!out.validation.ok) return out;
  out.input_ok = true;
  out.decomposition = decompose_stable(seq);
  out.right = right_torsion(seq);
  out.left = left_torsion(seq);
  if (out.right->ok && out.left->ok) {
    out.verdict = torsion_verdict(seq, *out.right, *out.left);
    out.closure = closure_orbit(seq, closure_max_iter);
    if (out.right->extended) {
      out.idealizer = idealizer_check(seq, *out.right->extended);
    } else if (out.right->seq) {
      std::vector<OrbitIdealData> clipped;
      for (int n = 0; n <= out.right->seq->horizon(); ++n) clipped.push_back(seq.at(n));
      IdealSequence clipped_seq =
          IdealSequence::table(clipped, seq.declared_t(), seq.step(), seq.saturating());
      out.idealizer = idealizer_check(clipped_seq, *out.right->seq);
    }
  }
  return out;
}

namespace {

json witness_to_json(const std::optional<SequenceWitness>& w) {
  if (!w) return nullptr;
  return json{{"m", w->m}, {"n", w->n}, {"orbit", w->orbit}, {"slot", w->slot},
              {"detail", w->detail}};
}

json validation_to_json(const ValidationReport& v) {
  return json{{"ok", v.ok},
              {"trivial", v.trivial},
              {"t_effective", v.t_effective},
              {"first_violation", witness_to_json(v.first_violation)}};
}

json torsion_to_json(const TorsionComputation& t) {
  json out{{"ok", t.ok}};
  if (!t.ok) {
    out["error"] = t.error;
    out["witness"] = witness_to_json(t.witness);
    return out;
  }
  out["seed"] = data_to_json(t.seq->at(1));
  out["horizon"] = t.seq->horizon();
  out["equals_sequence"] = t.equals_sequence;
  out["naive_with_seed"] = t.naive_with_seed;
  out["t_effective"] = t.seq_validation.t_effective;
  json tail = json::object();
  for (const auto& [id, ideals] : t.tail) {
    json list = json::array();
    for (const auto& ideal : ideals) list.push_back(ideal_to_json(ideal));
    tail[id] = list;
  }
  out["tail"] = tail;
  return out;
}

}  // namespace

json report_to_json(const AnalysisReport& report) {
  json out;
  out["source"] = report.source;
  out["input_ok"] = report.input_ok;
  if (report.seq) {
    const IdealSequence& seq = *report.seq;
    json input{{"vars", seq.vars()},
               {"kind", seq.kind() == SequenceKind::Naive ? "naive" : "table"},
               {"t", seq.declared_t()},
               {"step", seq.step()},
               {"horizon", seq.horizon()},
               {"saturating", seq.saturating()}};
    if (seq.kind() == SequenceKind::Naive) input["seed"] = data_to_json(seq.seed());
    json shifts = json::object();
    for (const auto& [id, s] : report.normalization_shifts) shifts[id] = s;
    input["normalization_shifts"] = shifts;
    out["input"] = input;
    if (report.input_ok) {
      json entries = json::array();
      for (int n = 0; n <= seq.horizon(); ++n) {
        entries.push_back({{"n", n}, {"data", data_to_json(seq.at(n))}});
      }
      out["entries"] = entries;
    }
  }
  out["validation"] = validation_to_json(report.validation);
  if (report.decomposition) {
    const StableDecomposition& d = *report.decomposition;
    json dec{{"ok", d.ok}, {"w", d.w}, {"M", d.M}};
    if (!d.ok) {
      dec["error"] = d.error;
      dec["witness"] = witness_to_json(d.witness);
    } else {
      json orbits = json::object();
      for (const auto& [id, od] : d.orbits) {
        json head = json::array(), tail = json::array();
        for (const auto& ideal : od.head) head.push_back(ideal_to_json(ideal));
        for (const auto& ideal : od.tail) tail.push_back(ideal_to_json(ideal));
        orbits[id] = {{"w", od.w},
                      {"head", head},
                      {"body", ideal_to_json(od.body)},
                      {"tail", tail}};
      }
      dec["orbits"] = orbits;
    }
    out["decomposition"] = dec;
  }
  if (report.right) out["right_torsion"] = torsion_to_json(*report.right);
  if (report.left) out["left_torsion"] = torsion_to_json(*report.left);
  if (report.verdict) {
    out["verdict"] = {{"right_closed", report.verdict->right_closed},
                      {"left_closed", report.verdict->left_closed},
                      {"right_witness", witness_to_json(report.verdict->right_witness)},
                      {"left_witness", witness_to_json(report.verdict->left_witness)},
                      {"interpretation", report.verdict->interpretation}};
  }
  if (report.closure) {
    const ClosureReport& c = *report.closure;
    json steps_json = json::array();
    auto order_to_json = [](const std::vector<ClosureStep>& steps) {
      json list = json::array();
      for (const auto& s : steps) {
        list.push_back({{"op", s.op},
                        {"datum", data_to_json(s.datum)},
                        {"changed", s.changed},
                        {"horizon", s.horizon}});
      }
      return list;
    };
    json fixed = json::array();
    for (const auto& d : c.fixed_points) fixed.push_back(data_to_json(d));
    out["closure"] = {{"ok", c.ok},
                      {"error", c.error},
                      {"right_first", order_to_json(c.right_first)},
                      {"left_first", order_to_json(c.left_first)},
                      {"converged_same", c.converged_same},
                      {"fixed_points", fixed}};
  }
  if (report.idealizer) {
    out["idealizer"] = {{"ok", report.idealizer->ok},
                        {"n0", report.idealizer->n0},
                        {"error", report.idealizer->error},
                        {"first_failure", witness_to_json(report.idealizer->first_failure)}};
  }
  return out;
}

std::string report_to_table(const AnalysisReport& report) {
  std::ostringstream os;
  os << "source: " << report.source << '\n';
  if (!report.seq) return os.str();
  const IdealSequence& seq = *report.seq;
  os << "vars: " << seq.vars() << "   horizon: " << seq.horizon()
     << "   t: " << seq.declared_t() << "   step: " << seq.step()
     << "   saturating (declared): " << (seq.saturating() ? "yes" : "no") << '\n';
  for (const auto& [id, s] : report.normalization_shifts) {
    if (s != 0) os << "orbit " << id << " normalized by shift " << s << '\n';
  }
  if (!report.validation.ok) {
    os << "validation: FAILED";
    if (report.validation.first_violation) {
      os << "  " << report.validation.first_violation->to_string();
    }
    os << '\n';
    return os.str();
  }
  os << "validation: ok, t_effective = " << report.validation.t_effective
     << (report.validation.trivial ? " (trivial sequence)" : "") << '\n';
  os << '\n' << "entries:" << '\n';
  for (int n = 0; n <= seq.horizon(); ++n) {
    os << "  n = " << std::setw(2) << n << "   " << seq.at(n).to_string() << '\n';
  }
  if (report.decomposition && report.decomposition->ok) {
    const auto& d = *report.decomposition;
    os << '\n' << "stable decomposition (w = " << d.w << ", M = " << d.M << "):\n";
    for (const auto& [id, od] : d.orbits) {
      os << "  orbit " << id << ": head = [";
      for (size_t i = 0; i < od.head.size(); ++i) {
        os << (i ? ", " : "") << od.head[i].to_string();
      }
      os << "], body = " << od.body.to_string() << ", tail = [";
      for (size_t i = 0; i < od.tail.size(); ++i) {
        os << (i ? ", " : "") << od.tail[i].to_string();
      }
      os << "]\n";
    }
  }
  auto torsion_block = [&](const char* label, const TorsionComputation& t) {
    os << '\n' << label << ": ";
    if (!t.ok) {
      os << "FAILED (" << t.error << ")\n";
      return;
    }
    os << (t.equals_sequence ? "equals the sequence" : "proper extension") << '\n';
    os << "  seed: " << t.seq->at(1).to_string() << '\n';
    os << "  t_effective: " << t.seq_validation.t_effective
       << ", generated by first entry: " << (t.naive_with_seed ? "yes" : "no") << '\n';
  };
  if (report.right) torsion_block("right torsion", *report.right);
  if (report.left) torsion_block("left torsion", *report.left);
  if (report.verdict) {
    os << '\n' << "verdict: right_closed = " << (report.verdict->right_closed ? "true" : "false")
       << ", left_closed = " << (report.verdict->left_closed ? "true" : "false") << '\n';
    os << "  " << report.verdict->interpretation << '\n';
  }
  if (report.closure && report.closure->ok) {
    os << '\n' << "closure orbit: " << (report.closure->converged_same
                                    ? "both orders reach the same datum"
                                    : "orders reach different fixed points") << '\n';
    for (const auto& d : report.closure->fixed_points) {
      os << "  fixed: " << d.to_string() << '\n';
    }
  } else if (report.closure) {
    os << '\n' << "closure orbit: " << report.closure->error << '\n';
  }
  if (report.idealizer && report.idealizer->ok) {
    os << '\n' << "idealizer shift n0 = " << report.idealizer->n0 << '\n';
  }
  return os.str();
}

}  // namespace nblow
