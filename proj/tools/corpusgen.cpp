#include <array>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gyro/cayley.hpp"
#include "gyro/continuity.hpp"
#include "gyro/enumerate.hpp"
#include "gyro/json_io.hpp"
#include "gyro/topology.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return rows;
}

std::vector<std::vector<int>> klein_table() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

// Permutations of three points under composition, identity first.
std::pair<std::vector<std::vector<int>>, std::vector<std::string>> sym3_table() {
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  const std::vector<std::string> labels = {"e", "r", "r2", "s", "rs", "r2s"};
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> composed{};
      for (int i = 0; i < 3; ++i) composed[i] = perms[a][perms[b][i]];
      for (int k = 0; k < n; ++k)
        if (perms[k] == composed) rows[a][b] = k;
    }
  return {rows, labels};
}

gyro::FiniteGyrogroup checked(const std::vector<std::vector<int>>& rows,
                              std::vector<std::string> labels = {}) {
  gyro::ValidationOutcome out = gyro::validate_table(rows, std::move(labels));
  if (!out.ok()) throw std::logic_error("corpusgen: built an invalid table");
  return *out.group;
}

void write_table(const std::string& dir, const std::string& name,
                 const gyro::FiniteGyrogroup& g) {
  gyro::write_file(dir + "/" + name, gyro::table_to_json(g));
  std::fprintf(stderr, "wrote %s/%s (order %d)\n", dir.c_str(), name.c_str(), g.order());
}

void write_topology(const std::string& dir, const std::string& name,
                    const gyro::FiniteTopology& t) {
  gyro::write_file(dir + "/" + name, gyro::topology_to_json(t));
  std::fprintf(stderr, "wrote %s/%s (order %d, %zu opens)\n", dir.c_str(), name.c_str(),
               t.order(), t.opens().size());
}

std::uint64_t lowbits(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

// Grows the seed neighborhoods until they are transitive and their
// pointwise sums stay inside the neighborhood of the sum. Both rules only
// ever add points, so the result is the least paratopological family above
// the seed, and families that already satisfy both rules come back
// unchanged.
std::vector<std::uint64_t> close_para(const gyro::FiniteGyrogroup& g,
                                      std::vector<std::uint64_t> mins) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      std::uint64_t grown = mins[x];
      for (int y = 0; y < n; ++y)
        if (mins[x] >> y & 1) grown |= mins[y];
      if (grown != mins[x]) {
        mins[x] = grown;
        changed = true;
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const std::uint64_t prod = g.add_sets(mins[a], mins[b]);
        const int c = g.add(a, b);
        if (prod & ~mins[c]) {
          mins[c] |= prod;
          changed = true;
        }
      }
  }
  return mins;
}

// Every paratopological topology on the carrier, up to the cap. The
// paratopological neighborhood families are exactly the fixed points of
// close_para, and for fixed points N < M there is a point z missing from
// some N[x] but present in M[x]; adding it and re-closing lands strictly
// above N yet still below M. Walking those one-point enlargements from the
// discrete family therefore visits every fixed point.
std::vector<gyro::FiniteTopology> para_topologies(const gyro::FiniteGyrogroup& g,
                                                  std::size_t cap, bool& complete) {
  const int n = g.order();
  std::vector<std::uint64_t> discrete(n);
  for (int x = 0; x < n; ++x) discrete[x] = 1ULL << x;
  std::set<std::vector<std::uint64_t>> seen{discrete};
  std::vector<std::vector<std::uint64_t>> frontier{discrete};
  complete = true;
  while (!frontier.empty() && complete) {
    std::vector<std::uint64_t> cur = std::move(frontier.back());
    frontier.pop_back();
    for (int x = 0; x < n && complete; ++x)
      for (int z = 0; z < n; ++z) {
        if (cur[x] >> z & 1) continue;
        std::vector<std::uint64_t> next = cur;
        next[x] |= 1ULL << z;
        next = close_para(g, std::move(next));
        if (seen.count(next)) continue;
        if (seen.size() >= cap) {
          complete = false;
          break;
        }
        frontier.push_back(next);
        seen.insert(std::move(next));
      }
  }
  std::vector<gyro::FiniteTopology> out;
  out.reserve(seen.size());
  for (const auto& mins : seen)
    out.push_back(gyro::FiniteTopology::from_min_nbhds(n, mins));
  return out;
}

struct ScanHit {
  gyro::FiniteGyrogroup table;
  gyro::FiniteTopology topology;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generates the frozen data corpus"};
  std::string out = "data";
  int count_max_order = 6;
  std::uint64_t count_budget = 4000000000ULL;
  int discover_max_order = 8;
  std::uint64_t discover_budget = 4000000000ULL;
  int scan_limit = 40;
  int para_limit = 100000;
  std::vector<std::string> reuse_files;
  app.add_option("--out", out, "output directory (must exist)");
  app.add_option("--nonassoc-file", reuse_files,
                 "reuse these non-associative tables instead of re-discovering them");
  app.add_option("--count-max-order", count_max_order, "largest order to count classes for")
      ->check(CLI::Range(1, 7));
  app.add_option("--count-budget", count_budget, "node budget per order for counting");
  app.add_option("--discover-max-order", discover_max_order,
                 "largest order to search for a non-associative table")
      ->check(CLI::Range(2, 10));
  app.add_option("--discover-budget", discover_budget, "node budget per order for discovery");
  app.add_option("--scan-limit", scan_limit, "non-associative tables to scan for fixtures");
  app.add_option("--para-limit", para_limit,
                 "paratopological topologies to enumerate per table");
  CLI11_PARSE(app, argc, argv);

  try {
    write_table(out, "z2.json", checked(cyclic_table(2)));
    write_table(out, "z3.json", checked(cyclic_table(3)));
    write_table(out, "z4.json", checked(cyclic_table(4)));
    write_table(out, "z5.json", checked(cyclic_table(5)));
    write_table(out, "z6.json", checked(cyclic_table(6)));
    write_table(out, "z8.json", checked(cyclic_table(8)));
    write_table(out, "k4.json", checked(klein_table(), {"0", "a", "b", "c"}));
    auto [s3_rows, s3_labels] = sym3_table();
    gyro::FiniteGyrogroup s3 = checked(s3_rows, s3_labels);
    write_table(out, "s3.json", s3);

    write_topology(out, "discrete2.json", gyro::FiniteTopology::discrete(2));
    write_topology(out, "discrete4.json", gyro::FiniteTopology::discrete(4));
    write_topology(out, "indiscrete4.json", gyro::FiniteTopology::indiscrete(4));
    write_topology(out, "sierpinski2.json",
                   gyro::FiniteTopology::from_opens(2, {0, 1, 3}));
    write_topology(out, "open01_3.json", gyro::FiniteTopology::from_opens(3, {0, 3, 7}));
    write_topology(out, "open02_4.json", gyro::FiniteTopology::from_opens(4, {0, 5, 15}));
    write_topology(out, "cosets02_4.json",
                   gyro::FiniteTopology::from_opens(4, {0, 5, 10, 15}));
    // Left cosets of the non-normal subgroup {e, s} of the permutation table.
    {
      std::vector<std::uint64_t> mins(6);
      const std::uint64_t h = 0b001001;  // {e, s}
      for (int x = 0; x < 6; ++x) mins[x] = s3.left_translate(x, h);
      write_topology(out, "s3_left_cosets_es.json",
                     gyro::FiniteTopology::from_min_nbhds(6, mins));
    }

    ordered_json counts = ordered_json::array();
    for (int n = 1; n <= count_max_order; ++n) {
      gyro::EnumerationOptions opt;
      opt.node_budget = count_budget;
      std::uint64_t classes = 0;
      gyro::EnumerationStats st =
          gyro::enumerate_gyrogroups(n, opt, [&](const gyro::FiniteGyrogroup&) {
            ++classes;
            return true;
          });
      ordered_json row;
      row["order"] = n;
      row["classes"] = classes;
      row["nodes"] = st.nodes;
      row["complete"] = st.complete;
      counts.push_back(std::move(row));
      std::fprintf(stderr, "order %d: %llu classes (%llu nodes, complete=%d)\n", n,
                   static_cast<unsigned long long>(classes),
                   static_cast<unsigned long long>(st.nodes), int(st.complete));
    }
    ordered_json counts_doc;
    counts_doc["node_budget"] = count_budget;
    counts_doc["orders"] = std::move(counts);
    gyro::write_file(out + "/enumeration_counts.json", counts_doc.dump(2) + "\n");

    // Smallest non-associative table, walking orders upward.
    std::vector<gyro::FiniteGyrogroup> nonassoc;
    int nonassoc_order = 0;
    bool discovery_complete = true;
    std::uint64_t tables_seen = 0;
    if (!reuse_files.empty()) {
      for (const std::string& path : reuse_files) {
        gyro::TableData td = gyro::load_table_file(path);
        gyro::FiniteGyrogroup g = checked(td.add, td.labels);
        if (g.is_associative()) throw std::invalid_argument(path + ": table is associative");
        nonassoc.push_back(std::move(g));
      }
      nonassoc_order = nonassoc.front().order();
      tables_seen = nonassoc.size();
    } else {
      for (int n = 4; n <= discover_max_order && nonassoc.empty(); ++n) {
        gyro::EnumerationOptions opt;
        opt.node_budget = discover_budget;
        gyro::EnumerationStats st =
            gyro::enumerate_gyrogroups(n, opt, [&](const gyro::FiniteGyrogroup& g) {
              ++tables_seen;
              if (!g.is_associative()) nonassoc.push_back(g);
              return static_cast<int>(nonassoc.size()) < scan_limit;
            });
        if (!nonassoc.empty()) nonassoc_order = n;
        discovery_complete = st.complete || static_cast<int>(nonassoc.size()) >= scan_limit;
        std::fprintf(stderr, "discovery order %d: %zu non-associative so far (%llu nodes)\n", n,
                     nonassoc.size(), static_cast<unsigned long long>(st.nodes));
      }
    }

    ordered_json scan;
    scan["discovery"] = ordered_json{{"smallest_nonassociative_order",
                                      nonassoc.empty() ? ordered_json(nullptr)
                                                       : ordered_json(nonassoc_order)},
                                     {"tables_collected", nonassoc.size()},
                                     {"tables_seen", tables_seen},
                                     {"complete", discovery_complete}};

    if (!nonassoc.empty()) {
      for (std::size_t i = 0; i < nonassoc.size(); ++i) {
        std::string name = "nongroup" + std::to_string(nonassoc_order);
        if (i > 0) name += "_" + std::string(1, static_cast<char>('a' + i));
        write_table(out, name + ".json", nonassoc[i]);
      }

      // Associative carriers cannot separate these properties: their
      // gyrations are identities, so a paratopological group topology has a
      // trivially gyration-invariant base and, being finite, a continuous
      // inverse. Only the non-associative tables are worth scanning.
      std::optional<ScanHit> para_not_strong;
      std::optional<ScanHit> para_not_invcont;
      std::uint64_t topologies_scanned = 0;
      bool scan_complete = true;
      for (const auto& g : nonassoc) {
        bool complete = true;
        for (const auto& t :
             para_topologies(g, static_cast<std::size_t>(para_limit), complete)) {
          ++topologies_scanned;
          if (!gyro::check_paratopological(g, t).holds)
            throw std::logic_error(
                "corpusgen: paratopological closure produced a non-paratopological family");
          if (!para_not_strong && !gyro::check_strongly_paratopological(g, t).holds)
            para_not_strong = ScanHit{g, t};
          if (!para_not_invcont && !gyro::check_inverse_continuous(g, t).holds)
            para_not_invcont = ScanHit{g, t};
        }
        scan_complete = scan_complete && complete;
        if (para_not_strong && para_not_invcont) break;
      }

      auto record = [&](const char* key, const std::optional<ScanHit>& hit,
                        const std::string& stem) {
        if (hit) {
          write_table(out, stem + "_table.json", hit->table);
          write_topology(out, stem + "_topology.json", hit->topology);
          scan[key] = ordered_json{{"found", true},
                                   {"table", stem + "_table.json"},
                                   {"topology", stem + "_topology.json"}};
        } else {
          scan[key] = ordered_json{{"found", false},
                                   {"tables_scanned", nonassoc.size()},
                                   {"topologies_scanned", topologies_scanned},
                                   {"complete", scan_complete}};
        }
      };
      record("para_not_strong", para_not_strong, "para_not_strong");
      record("para_not_inverse_continuous", para_not_invcont, "para_not_invcont");
    }
    gyro::write_file(out + "/fixture_scan.json", scan.dump(2) + "\n");
    std::fprintf(stderr, "wrote %s/fixture_scan.json\n", out.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "corpusgen: %s\n", e.what());
    return 1;
  }
  return 0;
}
