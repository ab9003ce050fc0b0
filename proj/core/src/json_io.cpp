#include "gyro/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gyro {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument(what);
}

ordered_json parse_document(const std::string& text, const char* kind) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) bad(std::string(kind) + " file: not valid json");
  if (!doc.is_object()) bad(std::string(kind) + " file: top level must be an object");
  return doc;
}

void reject_unknown_keys(const ordered_json& doc, const char* kind,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known) bad(std::string(kind) + " file: unexpected key \"" + item.key() + "\"");
  }
}

int read_order(const ordered_json& doc, const char* kind) {
  if (!doc.contains("order")) bad(std::string(kind) + " file: missing \"order\"");
  const auto& o = doc.at("order");
  if (!o.is_number_integer()) bad(std::string(kind) + " file: \"order\" must be an integer");
  const auto n = o.get<std::int64_t>();
  if (n < 1 || n > 64) bad(std::string(kind) + " file: \"order\" out of range");
  return static_cast<int>(n);
}

}  // namespace

TableData parse_table_json(const std::string& text) {
  ordered_json doc = parse_document(text, "table");
  reject_unknown_keys(doc, "table", {"order", "elements", "add"});
  const int n = read_order(doc, "table");

  TableData data;
  if (doc.contains("elements")) {
    const auto& elems = doc.at("elements");
    if (!elems.is_array() || static_cast<int>(elems.size()) != n)
      bad("table file: \"elements\" must list one label per element");
    std::set<std::string> seen;
    for (const auto& e : elems) {
      if (!e.is_string() || e.get<std::string>().empty())
        bad("table file: labels must be nonempty strings");
      if (!seen.insert(e.get<std::string>()).second)
        bad("table file: duplicate label \"" + e.get<std::string>() + "\"");
      data.labels.push_back(e.get<std::string>());
    }
  }

  if (!doc.contains("add")) bad("table file: missing \"add\"");
  const auto& add = doc.at("add");
  if (!add.is_array() || static_cast<int>(add.size()) != n)
    bad("table file: \"add\" must hold one row per element");
  for (const auto& row : add) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad("table file: ragged row in \"add\"");
    std::vector<int> out;
    out.reserve(row.size());
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) bad("table file: entries must be integers");
      const auto v = cell.get<std::int64_t>();
      if (v < 0 || v >= n) bad("table file: entry out of range");
      out.push_back(static_cast<int>(v));
    }
    data.add.push_back(std::move(out));
  }
  return data;
}

TableData load_table_file(const std::string& path) {
  return parse_table_json(read_file(path));
}

std::string table_to_json(const FiniteGyrogroup& g) {
  ordered_json doc;
  doc["order"] = g.order();
  doc["elements"] = g.labels();
  doc["add"] = g.table_rows();
  return doc.dump(2) + "\n";
}

FiniteTopology parse_topology_json(const std::string& text) {
  ordered_json doc = parse_document(text, "topology");
  reject_unknown_keys(doc, "topology", {"order", "opens"});
  const int n = read_order(doc, "topology");
  if (n > 20) bad("topology file: \"order\" out of range");

  if (!doc.contains("opens")) bad("topology file: missing \"opens\"");
  const auto& opens = doc.at("opens");
  if (!opens.is_array()) bad("topology file: \"opens\" must be an array of index lists");
  std::vector<std::uint64_t> masks;
  masks.reserve(opens.size());
  for (const auto& open : opens) {
    if (!open.is_array()) bad("topology file: each open must be an index list");
    std::uint64_t mask = 0;
    std::int64_t prev = -1;
    for (const auto& cell : open) {
      if (!cell.is_number_integer()) bad("topology file: indices must be integers");
      const auto v = cell.get<std::int64_t>();
      if (v < 0 || v >= n) bad("topology file: index out of range");
      if (v <= prev) bad("topology file: opens must be strictly increasing index lists");
      prev = v;
      mask |= std::uint64_t{1} << v;
    }
    masks.push_back(mask);
  }
  return FiniteTopology::from_opens(n, masks);
}

FiniteTopology load_topology_file(const std::string& path) {
  return parse_topology_json(read_file(path));
}

std::string topology_to_json(const FiniteTopology& t) {
  ordered_json doc;
  doc["order"] = t.order();
  ordered_json opens = ordered_json::array();
  for (std::uint64_t mask : t.opens()) {
    ordered_json open = ordered_json::array();
    for (int x = 0; x < t.order(); ++x)
      if (mask >> x & 1) open.push_back(x);
    opens.push_back(std::move(open));
  }
  doc["opens"] = std::move(opens);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read file: " + path);
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("cannot write file: " + path);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  const std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) out[i] = digits[h >> (60 - 4 * i) & 0xf];
  return out;
}

}  // namespace gyro
