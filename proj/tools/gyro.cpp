#include <array>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "gyro/backend.hpp"
#include "gyro/cayley.hpp"
#include "gyro/continuity.hpp"
#include "gyro/einstein.hpp"
#include "gyro/json_io.hpp"
#include "gyro/laws.hpp"
#include "gyro/report.hpp"
#include "gyro/search.hpp"
#include "gyro/subgyro.hpp"
#include "gyro/theorems.hpp"
#include "gyro/topology.hpp"

namespace {

std::uint64_t parse_subset(const std::string& csv, int order) {
  std::uint64_t mask = 0;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(csv.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("subset: expected comma-separated element indices");
    }
    if (v < 0 || v >= order) throw std::invalid_argument("subset: index out of range");
    mask |= std::uint64_t{1} << v;
    pos += used;
    if (pos < csv.size()) {
      if (csv[pos] != ',')
        throw std::invalid_argument("subset: expected comma-separated element indices");
      ++pos;
    }
  }
  if (mask == 0) throw std::invalid_argument("subset: must be nonempty");
  return mask;
}

std::array<double, 3> parse_vec3(const std::string& csv, const char* name) {
  std::array<double, 3> out{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    try {
      out[i] = std::stod(csv.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(name) + ": expected three comma-separated numbers");
    }
    pos += used;
    if (i < 2) {
      if (pos >= csv.size() || csv[pos] != ',')
        throw std::invalid_argument(std::string(name) + ": expected three comma-separated numbers");
      ++pos;
    }
  }
  if (pos != csv.size())
    throw std::invalid_argument(std::string(name) + ": expected three comma-separated numbers");
  return out;
}

gyro::TableData load_table(const std::string& path, gyro::RunMeta& meta) {
  std::string bytes = gyro::read_file(path);
  meta.inputs.push_back({path, gyro::fnv1a64_hex(bytes)});
  return gyro::parse_table_json(bytes);
}

gyro::FiniteTopology load_topology(const std::string& path, gyro::RunMeta& meta) {
  std::string bytes = gyro::read_file(path);
  meta.inputs.push_back({path, gyro::fnv1a64_hex(bytes)});
  return gyro::parse_topology_json(bytes);
}

void require_same_order(const gyro::FiniteGyrogroup& g, const gyro::FiniteTopology& t) {
  if (g.order() != t.order())
    throw std::invalid_argument("table and topology have different orders");
}

int finish(const gyro::RunMeta& meta, const std::vector<gyro::ResultEntry>& entries) {
  std::fputs(gyro::render_run_report(meta, entries).c_str(), stdout);
  for (const auto& e : entries) std::fprintf(stderr, "%s: %s\n", e.name.c_str(), e.status.c_str());
  const int code = gyro::exit_code(entries);
  std::fprintf(stderr, "exit_status: %s\n", code == 0 ? "pass" : "violation");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gyrogroup computation and verification workbench"};
  app.require_subcommand(1);
  bool no_timestamp = false;
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp from the report");

  std::string table_path;
  std::string topology_path;
  std::string subset_csv;
  std::string check = "topological";
  std::string target;
  std::string op;
  std::string u_csv, v_csv, w_csv;
  bool einstein = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1000000;
  int max_order = 3;
  double c = 1.0;
  double tol = 1e-9;

  auto* cmd_validate = app.add_subcommand("validate", "check the gyrogroup axioms of a table");
  cmd_validate->add_option("table", table_path, "table json file")->required();

  auto* cmd_laws = app.add_subcommand("laws", "evaluate the law suite on a carrier");
  cmd_laws->add_option("table", table_path, "table json file");
  cmd_laws->add_flag("--einstein", einstein, "use the einstein velocity carrier");
  auto* laws_samples = cmd_laws->add_option("--samples", samples, "samples per law (sampled mode)");
  cmd_laws->add_option("--seed", seed, "rng seed for sampled mode");
  cmd_laws->add_option("--c", c, "speed limit for --einstein");
  cmd_laws->add_option("--tol", tol, "equality tolerance for --einstein");

  auto* cmd_subgyro = app.add_subcommand("subgyro", "certify a subset of a table");
  cmd_subgyro->add_option("table", table_path, "table json file")->required();
  cmd_subgyro->add_option("--subset", subset_csv, "comma-separated element indices")->required();

  auto* cmd_quotient = app.add_subcommand("quotient", "quotient a table by a subgyrogroup");
  cmd_quotient->add_option("table", table_path, "table json file")->required();
  cmd_quotient->add_option("--subset", subset_csv, "comma-separated element indices")->required();
  cmd_quotient->add_option("--topology", topology_path, "topology json file");

  auto* cmd_topo = app.add_subcommand("topo", "run a topological check on a (table, topology) pair");
  cmd_topo->add_option("table", table_path, "table json file")->required();
  cmd_topo->add_option("--topology", topology_path, "topology json file")->required();
  cmd_topo->add_option("--check", check, "what to check")
      ->required()
      ->check(CLI::IsMember({"paratopological", "strong", "topological", "separation",
                             "lemmas", "theorems", "B"}));
  cmd_topo->add_option("--seed", seed, "rng seed for sampled subset sweeps");

  auto* cmd_theorems = app.add_subcommand("theorems", "run the theorem and lemma suites");
  cmd_theorems->add_option("table", table_path, "table json file")->required();
  cmd_theorems->add_option("--topology", topology_path, "topology json file")->required();
  cmd_theorems->add_option("--seed", seed, "rng seed for sampled subset sweeps");

  auto* cmd_search = app.add_subcommand("search", "search for a counterexample to an open question");
  cmd_search->add_option("--target", target, "question id")
      ->required()
      ->check(CLI::IsMember({"question-3.3", "question-3.18"}));
  cmd_search->add_option("--max-order", max_order, "largest carrier order to try")
      ->check(CLI::Range(1, 8));
  cmd_search->add_option("--budget", budget, "maximum (table, topology) pairs to examine");
  cmd_search->add_option("--seed", seed, "recorded in the report for reproducibility");

  auto* cmd_einstein = app.add_subcommand("einstein", "evaluate one einstein velocity operation");
  cmd_einstein->add_option("--op", op, "operation")
      ->required()
      ->check(CLI::IsMember({"gamma", "add", "neg", "gyr", "coadd", "cosub"}));
  cmd_einstein->add_option("--u", u_csv, "first velocity, e.g. 0.5,0,0")->required();
  cmd_einstein->add_option("--v", v_csv, "second velocity");
  cmd_einstein->add_option("--w", w_csv, "third velocity (gyr only)");
  cmd_einstein->add_option("--c", c, "speed limit");
  cmd_einstein->add_option("--tol", tol, "equality tolerance");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  gyro::RunMeta meta;
  meta.with_timestamp = !no_timestamp;
  meta.command = app.get_subcommands().front()->get_name();

  try {
    std::vector<gyro::ResultEntry> entries;

    if (*cmd_validate) {
      gyro::TableData td = load_table(table_path, meta);
      entries.push_back(gyro::result_validation(gyro::validate_table(td.add, td.labels)));
      return finish(meta, entries);
    }

    if (*cmd_laws) {
      if (einstein == !table_path.empty())
        throw std::invalid_argument("laws: pass exactly one of a table file or --einstein");
      if (einstein) {
        meta.seed = seed;
        gyro::EinsteinGyrogroup eg({c, tol});
        gyro::LawSuiteOptions opt{gyro::LawSuiteMode::sampled, samples, seed};
        entries.push_back(gyro::result_law_suite(run_law_suite(eg, opt), c));
        return finish(meta, entries);
      }
      gyro::TableData td = load_table(table_path, meta);
      gyro::ValidationOutcome outcome = gyro::validate_table(td.add, td.labels);
      if (!outcome.ok()) {
        entries.push_back(gyro::result_validation(outcome));
        return finish(meta, entries);
      }
      gyro::LawSuiteOptions opt;
      if (laws_samples->count() > 0) {
        opt = {gyro::LawSuiteMode::sampled, samples, seed};
        meta.seed = seed;
      }
      entries.push_back(
          gyro::result_law_suite(run_law_suite(*outcome.group, opt), outcome.group->labels()));
      return finish(meta, entries);
    }

    if (*cmd_subgyro || *cmd_quotient) {
      gyro::TableData td = load_table(table_path, meta);
      gyro::ValidationOutcome outcome = gyro::validate_table(td.add, td.labels);
      if (!outcome.ok()) {
        entries.push_back(gyro::result_validation(outcome));
        return finish(meta, entries);
      }
      const gyro::FiniteGyrogroup& g = *outcome.group;
      const std::uint64_t mask = parse_subset(subset_csv, g.order());
      if (*cmd_subgyro) {
        entries.push_back(gyro::result_certificate(gyro::certify_subset(g, mask), g.order()));
        return finish(meta, entries);
      }
      gyro::QuotientResult q = gyro::quotient_gyrogroup(g, mask);
      entries.push_back(gyro::result_quotient(q, g.order()));
      if (!topology_path.empty()) {
        gyro::FiniteTopology t = load_topology(topology_path, meta);
        require_same_order(g, t);
        entries.push_back(
            gyro::result_quotient_topology(gyro::quotient_topology(t, q.cosets), g.order()));
      }
      return finish(meta, entries);
    }

    if (*cmd_topo || *cmd_theorems) {
      if (*cmd_theorems) check = "theorems";
      gyro::TableData td = load_table(table_path, meta);
      gyro::ValidationOutcome outcome = gyro::validate_table(td.add, td.labels);
      if (!outcome.ok()) {
        entries.push_back(gyro::result_validation(outcome));
        return finish(meta, entries);
      }
      const gyro::FiniteGyrogroup& g = *outcome.group;
      gyro::FiniteTopology t = load_topology(topology_path, meta);
      require_same_order(g, t);
      if (check == "paratopological" || check == "strong" || check == "topological") {
        entries.push_back(gyro::result_classification(gyro::classify(g, t), check, g.order()));
      } else if (check == "separation") {
        entries.push_back(gyro::result_separation(gyro::check_separation(t), t.order()));
      } else if (check == "lemmas") {
        meta.seed = seed;
        entries.push_back(gyro::result_lemmas(gyro::check_strong_lemmas(g, t, seed), g.order()));
      } else if (check == "theorems") {
        meta.seed = seed;
        entries.push_back(gyro::result_theorems(gyro::check_theorem_instances(g, t)));
        entries.push_back(gyro::result_lemmas(gyro::check_strong_lemmas(g, t, seed), g.order()));
      } else {
        entries.push_back(gyro::result_b(gyro::compute_b_set(g, t), g.order()));
      }
      return finish(meta, entries);
    }

    if (*cmd_search) {
      meta.seed = seed;
      gyro::SearchOptions opt;
      opt.max_order = max_order;
      opt.budget = budget;
      opt.seed = seed;
      entries.push_back(gyro::result_search(gyro::search_counterexample(target, opt)));
      return finish(meta, entries);
    }

    if (*cmd_einstein) {
      gyro::EinsteinGyrogroup eg({c, tol});
      auto vel = [&](const std::string& csv, const char* name) {
        if (csv.empty())
          throw std::invalid_argument(std::string("einstein: --") + name +
                                      " is required for op " + op);
        std::array<double, 3> x = parse_vec3(csv, name);
        return eg.velocity(x[0], x[1], x[2]);
      };
      const gyro::EinsteinVelocity u = vel(u_csv, "u");
      if (op == "gamma") {
        entries.push_back(gyro::result_einstein_scalar("gamma", {{"u", u}}, gyro::lorentz_gamma(u)));
      } else if (op == "neg") {
        gyro::EinsteinVelocity value = eg.neg(u);
        entries.push_back(
            gyro::result_einstein_value("neg", {{"u", u}}, value, eg.near_boundary(u)));
      } else if (op == "gyr") {
        const gyro::EinsteinVelocity v = vel(v_csv, "v");
        const gyro::EinsteinVelocity w = vel(w_csv, "w");
        gyro::EinsteinVelocity value = gyro::gyr(eg, u, v, w);
        bool near = eg.near_boundary(u) || eg.near_boundary(v) || eg.near_boundary(w) ||
                    eg.near_boundary(value);
        entries.push_back(
            gyro::result_einstein_value("gyr", {{"u", u}, {"v", v}, {"w", w}}, value, near));
      } else {
        const gyro::EinsteinVelocity v = vel(v_csv, "v");
        gyro::EinsteinVelocity value;
        if (op == "add") value = eg.add(u, v);
        else if (op == "coadd") value = gyro::coadd(eg, u, v);
        else value = gyro::cosub(eg, u, v);
        bool near = eg.near_boundary(u) || eg.near_boundary(v) || eg.near_boundary(value);
        entries.push_back(gyro::result_einstein_value(op, {{"u", u}, {"v", v}}, value, near));
      }
      return finish(meta, entries);
    }

    throw std::logic_error("unhandled subcommand");
  } catch (const std::exception& e) {
    std::fputs(gyro::render_error_report(meta, e.what()).c_str(), stdout);
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
