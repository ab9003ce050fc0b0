#include "gyro/report.hpp"

#include <ctime>

#include "json.hpp"

namespace gyro {
namespace {

using nlohmann::ordered_json;

ordered_json mask_array(std::uint64_t mask, int order) {
  ordered_json out = ordered_json::array();
  for (int x = 0; x < order; ++x)
    if (mask >> x & 1) out.push_back(x);
  return out;
}

ordered_json mask_list(const std::vector<std::uint64_t>& masks, int order) {
  ordered_json out = ordered_json::array();
  for (std::uint64_t m : masks) out.push_back(mask_array(m, order));
  return out;
}

ordered_json velocity_json(const EinsteinVelocity& v) {
  return ordered_json::array({v.v[0], v.v[1], v.v[2]});
}

ordered_json axiom_failure_json(const AxiomFailure& f) {
  ordered_json out;
  out["stage"] = f.stage;
  out["witness"] = f.witness;
  out["detail"] = f.detail;
  return out;
}

ordered_json continuity_json(const ContinuityReport& r, int order) {
  ordered_json out;
  out["holds"] = r.holds;
  if (r.witness) {
    ordered_json w;
    w["at"] = r.witness->at;
    w["produced"] = mask_array(r.witness->produced, order);
    w["required"] = mask_array(r.witness->required, order);
    out["witness"] = std::move(w);
  }
  return out;
}

ordered_json separation_json(const SeparationRecord& s, int order) {
  ordered_json out;
  out["t0"] = s.t0;
  out["t1"] = s.t1;
  out["hausdorff"] = s.hausdorff;
  out["regular"] = s.regular;
  if (s.t0_witness) out["t0_witness"] = *s.t0_witness;
  if (s.t1_witness) out["t1_witness"] = *s.t1_witness;
  if (s.hausdorff_witness) out["hausdorff_witness"] = *s.hausdorff_witness;
  if (s.regular_witness) {
    ordered_json w;
    w["point"] = s.regular_witness->first;
    w["closed_set"] = mask_array(s.regular_witness->second, order);
    out["regular_witness"] = std::move(w);
  }
  return out;
}

ordered_json certificate_json(const SubgyroCertificate& c, int order) {
  ordered_json out;
  out["subset"] = mask_array(c.subset, order);
  out["is_subgyrogroup"] = c.is_subgyrogroup;
  out["is_l_subgyrogroup"] = c.is_l_subgyrogroup;
  out["is_invariant"] = c.is_invariant;
  ordered_json violations = ordered_json::array();
  for (const auto& v : c.violations) {
    ordered_json item;
    item["kind"] = v.kind;
    item["witness"] = v.witness;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out;
}

ordered_json classification_json(const TopoClassification& c, int order) {
  ordered_json out;
  out["paratopological"] = c.paratopological;
  out["strongly_paratopological"] = c.strongly_paratopological;
  out["topological"] = c.topological;
  out["gyrocommutative"] = c.gyrocommutative;
  out["add_jointly_continuous"] = continuity_json(c.add_jointly_continuous, order);
  out["inverse_continuous"] = continuity_json(c.inverse_continuous, order);
  out["inverse_continuous_at_zero"] = continuity_json(c.inverse_continuous_at_zero, order);
  out["topologically_periodic"] = continuity_json(c.topologically_periodic, order);
  out["strong_base"] =
      c.strong_base ? continuity_json(*c.strong_base, order) : ordered_json(nullptr);
  out["separation"] = separation_json(c.separation, order);
  return out;
}

ResultEntry make_entry(std::string_view name, std::string_view status, ordered_json payload) {
  return ResultEntry{std::string(name), std::string(status), payload.dump()};
}

}  // namespace

int exit_code(const std::vector<ResultEntry>& results) {
  for (const auto& r : results)
    if (r.status == "fail" || r.status == "REFUTATION") return 1;
  return 0;
}

std::string iso8601_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render_run_report(const RunMeta& meta, const std::vector<ResultEntry>& results) {
  ordered_json doc;
  doc["command"] = meta.command;
  if (meta.with_timestamp) doc["timestamp"] = iso8601_utc_now();
  ordered_json inputs = ordered_json::array();
  for (const auto& in : meta.inputs) {
    ordered_json item;
    item["path"] = in.path;
    item["fnv1a64"] = in.digest;
    inputs.push_back(std::move(item));
  }
  doc["inputs"] = std::move(inputs);
  if (meta.seed) doc["seed"] = *meta.seed;
  ordered_json out = ordered_json::array();
  for (const auto& r : results) {
    ordered_json item;
    item["name"] = r.name;
    item["status"] = r.status;
    ordered_json payload = ordered_json::parse(r.payload);
    for (auto& kv : payload.items()) item[kv.key()] = kv.value();
    out.push_back(std::move(item));
  }
  doc["results"] = std::move(out);
  doc["exit_status"] = exit_code(results) == 0 ? "pass" : "violation";
  return doc.dump(2) + "\n";
}

std::string render_error_report(const RunMeta& meta, const std::string& message) {
  ordered_json doc;
  doc["command"] = meta.command;
  if (meta.with_timestamp) doc["timestamp"] = iso8601_utc_now();
  doc["error"] = message;
  doc["exit_status"] = "input_error";
  return doc.dump(2) + "\n";
}

ResultEntry result_validation(const ValidationOutcome& outcome) {
  ordered_json payload;
  payload["ok"] = outcome.ok();
  if (outcome.ok()) payload["order"] = outcome.group->order();
  if (outcome.failure) payload["failure"] = axiom_failure_json(*outcome.failure);
  return make_entry("validate", outcome.ok() ? "pass" : "fail", std::move(payload));
}

ResultEntry result_law_suite(const LawSuiteResult<int>& suite,
                             const std::vector<std::string>& labels) {
  ordered_json payload;
  payload["mode"] = suite.mode == LawSuiteMode::exhaustive ? "exhaustive" : "sampled";
  if (suite.mode == LawSuiteMode::sampled) {
    payload["samples"] = suite.samples;
    payload["seed"] = suite.seed;
  }
  bool any_fail = false;
  ordered_json laws = ordered_json::array();
  for (const auto& rep : suite.reports) {
    ordered_json item;
    item["id"] = law_name(rep.id);
    item["status"] = law_status_name(rep.status);
    item["samples_checked"] = rep.samples_checked;
    if (!rep.witness.empty()) {
      item["witness"] = rep.witness;
      ordered_json names = ordered_json::array();
      for (int x : rep.witness) names.push_back(labels.at(static_cast<std::size_t>(x)));
      item["witness_labels"] = std::move(names);
    }
    if (!rep.note.empty()) item["note"] = rep.note;
    any_fail = any_fail || rep.status == LawStatus::fail;
    laws.push_back(std::move(item));
  }
  payload["laws"] = std::move(laws);
  return make_entry("laws", any_fail ? "fail" : "pass", std::move(payload));
}

ResultEntry result_law_suite(const LawSuiteResult<EinsteinVelocity>& suite, double c) {
  ordered_json payload;
  payload["backend"] = "einstein";
  payload["c"] = c;
  payload["mode"] = suite.mode == LawSuiteMode::exhaustive ? "exhaustive" : "sampled";
  payload["samples"] = suite.samples;
  payload["seed"] = suite.seed;
  bool any_fail = false;
  ordered_json laws = ordered_json::array();
  for (const auto& rep : suite.reports) {
    ordered_json item;
    item["id"] = law_name(rep.id);
    item["status"] = law_status_name(rep.status);
    item["samples_checked"] = rep.samples_checked;
    if (!rep.witness.empty()) {
      ordered_json w = ordered_json::array();
      for (const auto& v : rep.witness) w.push_back(velocity_json(v));
      item["witness"] = std::move(w);
    }
    if (!rep.note.empty()) item["note"] = rep.note;
    any_fail = any_fail || rep.status == LawStatus::fail;
    laws.push_back(std::move(item));
  }
  payload["laws"] = std::move(laws);
  return make_entry("laws", any_fail ? "fail" : "pass", std::move(payload));
}

ResultEntry result_certificate(const SubgyroCertificate& cert, int order) {
  return make_entry("subgyro", "info", certificate_json(cert, order));
}

ResultEntry result_quotient(const QuotientResult& q, int order) {
  ordered_json payload;
  payload["ok"] = q.ok();
  payload["cosets"] = mask_list(q.cosets, order);
  payload["coset_of"] = q.coset_of;
  payload["projection_is_homomorphism"] = q.projection_is_homomorphism;
  if (q.well_definedness) {
    ordered_json w;
    w["kind"] = q.well_definedness->kind;
    w["witness"] = q.well_definedness->witness;
    payload["well_definedness"] = std::move(w);
  }
  if (q.validation_failure)
    payload["validation_failure"] = axiom_failure_json(*q.validation_failure);
  if (q.quotient) {
    ordered_json sub;
    sub["order"] = q.quotient->order();
    sub["elements"] = q.quotient->labels();
    sub["add"] = q.quotient->table_rows();
    payload["quotient"] = std::move(sub);
  }
  return make_entry("quotient", q.ok() ? "pass" : "fail", std::move(payload));
}

ResultEntry result_quotient_topology(const QuotientTopologyResult& q, int order) {
  ordered_json payload;
  const int k = q.space.order();
  payload["blocks"] = mask_list(q.blocks, order);
  payload["block_of"] = q.block_of;
  ordered_json space;
  space["order"] = k;
  space["opens"] = mask_list(q.space.opens(), k);
  payload["space"] = std::move(space);
  payload["projection_open"] = q.projection_open;
  if (q.open_map_witness)
    payload["open_map_witness"] = mask_array(*q.open_map_witness, order);
  return make_entry("quotient-topology", "info", std::move(payload));
}

ResultEntry result_classification(const TopoClassification& c, std::string_view check,
                                  int order) {
  bool pass = false;
  if (check == "paratopological") pass = c.paratopological;
  else if (check == "strong") pass = c.strongly_paratopological;
  else if (check == "topological") pass = c.topological;
  else throw std::invalid_argument("result_classification: unknown check");
  return make_entry(check, pass ? "pass" : "fail", classification_json(c, order));
}

ResultEntry result_separation(const SeparationRecord& s, int order) {
  return make_entry("separation", "info", separation_json(s, order));
}

ResultEntry result_lemmas(const StrongLemmaReport& r, int order) {
  ordered_json payload;
  payload["paratopological"] = r.paratopological;
  payload["strongly"] = r.strongly;
  payload["invariant_open_family"] = r.invariant_open_family;
  payload["family_truncated"] = r.family_truncated;
  ordered_json items = ordered_json::array();
  for (const auto& item : r.items) {
    ordered_json out;
    out["id"] = item.id;
    out["statement"] = item.statement;
    out["status"] = item.status;
    if (!item.note.empty()) out["note"] = item.note;
    if (!item.witness_points.empty()) out["witness_points"] = item.witness_points;
    if (!item.witness_sets.empty())
      out["witness_sets"] = mask_list(item.witness_sets, order);
    out["sampled"] = item.sampled;
    items.push_back(std::move(out));
  }
  payload["items"] = std::move(items);
  return make_entry("lemmas", r.all_pass() ? "pass" : "fail", std::move(payload));
}

ResultEntry result_theorems(const TheoremSuiteReport& r) {
  ordered_json payload;
  ordered_json instances = ordered_json::array();
  for (const auto& inst : r.instances) {
    ordered_json out;
    out["id"] = inst.id;
    out["description"] = inst.description;
    ordered_json hyps = ordered_json::array();
    for (const auto& h : inst.hypotheses) {
      ordered_json hj;
      hj["name"] = h.name;
      hj["holds"] = h.holds;
      hyps.push_back(std::move(hj));
    }
    out["hypotheses"] = std::move(hyps);
    out["applicable"] = inst.applicable;
    if (inst.applicable) out["conclusion_holds"] = inst.conclusion_holds;
    out["status"] = inst.status;
    if (!inst.note.empty()) out["note"] = inst.note;
    if (!inst.details.empty()) out["details"] = inst.details;
    instances.push_back(std::move(out));
  }
  payload["instances"] = std::move(instances);
  return make_entry("theorems", r.any_refutation() ? "REFUTATION" : "pass",
                    std::move(payload));
}

ResultEntry result_b(const BReport& b, int order) {
  ordered_json payload;
  payload["b"] = mask_array(b.b, order);
  payload["paratopological"] = b.paratopological;
  payload["gyrocommutative"] = b.gyrocommutative;
  payload["certificate"] = certificate_json(b.certificate, order);
  return make_entry("B", "info", std::move(payload));
}

ResultEntry result_search(const SearchReport& r) {
  ordered_json payload;
  payload["target"] = r.target;
  payload["max_order"] = r.max_order;
  payload["budget"] = r.budget;
  payload["seed"] = r.seed;
  payload["tables_examined"] = r.tables_examined;
  payload["pairs_examined"] = r.pairs_examined;
  payload["truncated"] = r.truncated;
  payload["tables_complete"] = r.tables_complete;
  payload["statement"] = r.statement;
  if (r.counterexample) {
    const Counterexample& ce = *r.counterexample;
    ordered_json out;
    out["order"] = ce.order;
    out["table"] = ce.table;
    out["min_nbhds"] = mask_list(ce.min_nbhds, ce.order);
    out["opens"] = mask_list(ce.opens, ce.order);
    out["classification"] = classification_json(ce.classification, ce.order);
    out["reverified"] = ce.reverified;
    payload["counterexample"] = std::move(out);
  } else {
    payload["counterexample"] = nullptr;
  }
  return make_entry("search", r.counterexample ? "REFUTATION" : "pass", std::move(payload));
}

namespace {

ordered_json einstein_args_json(
    const std::vector<std::pair<std::string, EinsteinVelocity>>& args) {
  ordered_json out;
  for (const auto& [name, v] : args) out[name] = velocity_json(v);
  return out;
}

}  // namespace

ResultEntry result_einstein_value(std::string_view op,
                                  const std::vector<std::pair<std::string, EinsteinVelocity>>& args,
                                  const EinsteinVelocity& value, bool near_boundary) {
  ordered_json payload;
  payload["op"] = std::string(op);
  payload["c"] = value.c;
  payload["args"] = einstein_args_json(args);
  payload["value"] = velocity_json(value);
  payload["near_boundary"] = near_boundary;
  return make_entry(op, "info", std::move(payload));
}

ResultEntry result_einstein_scalar(std::string_view op,
                                   const std::vector<std::pair<std::string, EinsteinVelocity>>& args,
                                   double value) {
  ordered_json payload;
  payload["op"] = std::string(op);
  if (!args.empty()) payload["c"] = args.front().second.c;
  payload["args"] = einstein_args_json(args);
  payload["value"] = value;
  return make_entry(op, "info", std::move(payload));
}

}  // namespace gyro
