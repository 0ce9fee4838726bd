#include "hh/io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace hh {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text, int first_number = 1) {
  std::vector<Line> lines;
  int number = first_number;
  while (!text.empty()) {
    auto const end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

std::string_view trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  auto const last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

int parse_count(std::string_view token, int line) {
  token = trim(token);
  int value = 0;
  auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0)
    throw ParseError(line, "expected a vertex count, got '" + std::string(token) + "'");
  if (value > kMaxVertices)
    throw ParseError(line, "vertex count " + std::to_string(value) + " exceeds " +
                               std::to_string(kMaxVertices));
  return value;
}

void expect_trailing_blank(std::vector<Line> const& lines, std::size_t from) {
  for (std::size_t i = from; i < lines.size(); ++i)
    if (!blank(lines[i].text)) throw ParseError(lines[i].number, "unexpected content after digraph");
}

Digraph parse_matrix(std::vector<Line> const& lines) {
  int const n = parse_count(lines[0].text, lines[0].number);
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    std::size_t const idx = static_cast<std::size_t>(i) + 1;
    if (idx >= lines.size()) {
      int const at = lines.back().number + static_cast<int>(idx - lines.size()) + 1;
      throw ParseError(at, "missing row " + std::to_string(i) + " of " + std::to_string(n));
    }
    auto const& row = lines[idx];
    if (static_cast<int>(row.text.size()) != n)
      throw ParseError(row.number, "row has length " + std::to_string(row.text.size()) +
                                       ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      char const c = row.text[j];
      if (c == '1')
        d.add_edge(i, j);
      else if (c != '0')
        throw ParseError(row.number, std::string("invalid character '") + c + "' in row");
    }
  }
  expect_trailing_blank(lines, static_cast<std::size_t>(n) + 1);
  return d;
}

Digraph parse_edge_list(std::vector<Line> const& lines) {
  std::string_view header = trim(lines[0].text);
  header.remove_prefix(2);
  int const n = parse_count(header, lines[0].number);
  Digraph d(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const& line = lines[i];
    if (blank(line.text)) continue;
    std::istringstream in{std::string(line.text)};
    long long u = -1;
    long long v = -1;
    std::string rest;
    if (!(in >> u >> v) || (in >> rest))
      throw ParseError(line.number, "expected 'u v', got '" + std::string(line.text) + "'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line.number, "edge endpoint out of range 0.." + std::to_string(n - 1));
    if (d.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    d.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return d;
}

Digraph parse_lines(std::vector<Line> const& lines) {
  if (lines.empty() || blank(lines[0].text))
    throw ParseError(lines.empty() ? 1 : lines[0].number, "missing vertex count");
  if (trim(lines[0].text).starts_with("n=")) return parse_edge_list(lines);
  return parse_matrix(lines);
}

}  // namespace

Digraph parse_digraph(std::string_view text) { return parse_lines(split_lines(text)); }

std::string write_digraph(Digraph const& d) {
  std::string out = std::to_string(d.size()) + "\n";
  for (Vertex i = 0; i < d.size(); ++i) {
    for (Vertex j = 0; j < d.size(); ++j) out += d.has_edge(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::vector<Digraph> parse_digraph_stream(std::string_view text) {
  std::vector<Digraph> out;
  std::vector<Line> record;
  for (auto const& line : split_lines(text)) {
    if (blank(line.text)) {
      if (!record.empty()) out.push_back(parse_lines(record));
      record.clear();
    } else {
      record.push_back(line);
    }
  }
  if (!record.empty()) out.push_back(parse_lines(record));
  return out;
}

std::string write_digraph_stream(std::vector<Digraph> const& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += '\n';
    out += write_digraph(ds[i]);
  }
  return out;
}

nlohmann::json to_json(Witness const& w) {
  nlohmann::json map = nlohmann::json::object();
  auto const domain = w.hom.domain();
  for (Vertex v : domain) map[std::to_string(v)] = w.hom[v];
  nlohmann::json j;
  j["domain"] = domain;
  j["map"] = map;
  j["blocked_vertex"] = w.blocked_vertex ? nlohmann::json(*w.blocked_vertex) : nlohmann::json();
  return j;
}

nlohmann::json to_json(Verdict const& v) {
  nlohmann::json j;
  j["hh"] = v.hh;
  if (!v.hh && v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

nlohmann::json to_json(Family const& f) {
  nlohmann::json j;
  switch (f.type) {
    case Family::Type::kKn:
      j["family"] = "kKn";
      j["k"] = f.k;
      j["n"] = f.n;
      break;
    case Family::Type::kC3:
      j["family"] = "kC3";
      j["k"] = f.k;
      break;
    case Family::Type::none:
      j["family"] = "none";
      break;
  }
  return j;
}

nlohmann::json to_json(CensusReport const& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (auto const& row : r.rows) {
    nlohmann::json j;
    j["n"] = row.n;
    j["total"] = row.total;
    j["by_kind"] = {{"graph", row.graphs}, {"proper", row.proper}, {"improper", row.improper}};
    if (r.hh_checked) {
      j["hh_checker"] = row.hh_checker;
      j["hh_recognizer"] = row.hh_recognizer;
      j["improper_refuted"] = row.improper_refuted;
      j["bad_witnesses"] = row.bad_witnesses;
      nlohmann::json families = nlohmann::json::array();
      for (auto const& f : row.hh_families) families.push_back(to_json(f));
      j["hh_families"] = families;
      nlohmann::json disagreements = nlohmann::json::array();
      for (auto const& dis : row.disagreements)
        disagreements.push_back({{"digraph", write_digraph(dis.digraph)},
                                 {"checker", to_json(dis.checker)},
                                 {"recognizer", to_json(dis.recognizer)}});
      j["disagreements"] = disagreements;
    }
    rows.push_back(j);
  }
  nlohmann::json out;
  out["hh_checked"] = r.hh_checked;
  out["rows"] = rows;
  if (r.hh_checked) out["disagreement_count"] = r.disagreement_count();
  return out;
}

std::string summary_table(CensusReport const& r) {
  std::ostringstream out;
  out << std::setw(3) << "n" << std::setw(10) << "total" << std::setw(9) << "graph"
      << std::setw(9) << "proper" << std::setw(10) << "improper";
  if (r.hh_checked)
    out << std::setw(9) << "hh(bf)" << std::setw(9) << "hh(cf)" << std::setw(10) << "refuted"
        << std::setw(8) << "disagr";
  out << '\n';
  for (auto const& row : r.rows) {
    out << std::setw(3) << row.n << std::setw(10) << row.total << std::setw(9) << row.graphs
        << std::setw(9) << row.proper << std::setw(10) << row.improper;
    if (r.hh_checked)
      out << std::setw(9) << row.hh_checker << std::setw(9) << row.hh_recognizer << std::setw(10)
          << row.improper_refuted << std::setw(8) << row.disagreements.size();
    out << '\n';
  }
  return out.str();
}

}  // namespace hh
