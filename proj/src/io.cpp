#include "spectral/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "spectral/error.hpp"

namespace spectral::io {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t tab = line.find('\t', begin);
    fields.push_back(line.substr(begin, tab == std::string_view::npos ? std::string_view::npos : tab - begin));
    if (tab == std::string_view::npos) break;
    begin = tab + 1;
  }
  return fields;
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double parse_real(std::string_view text, std::size_t line) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InputError(where(line) + "cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

// Calls `f(fields, line_number)` for each data line.
template <typename F>
void for_each_record(std::istream& in, F&& f) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    for (std::string_view field : fields) {
      if (field.empty()) throw InputError(where(number) + "empty field");
    }
    f(fields, number);
  }
  if (in.bad()) throw InputError("read error");
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void check_label(const std::string& label) {
  if (label.find_first_of("\t\n\r") != std::string::npos) {
    throw InputError("label '" + label + "' contains a TAB or newline and cannot be written");
  }
}

}  // namespace

std::vector<EdgeRecord> parse_edge_list(std::istream& in) {
  std::vector<EdgeRecord> records;
  for_each_record(in, [&](const std::vector<std::string_view>& f, std::size_t line) {
    if (f.size() > 3) throw InputError(where(line) + "expected 'src<TAB>dst[<TAB>weight]'");
    EdgeRecord r;
    r.source = std::string(f[0]);
    r.line = line;
    if (f.size() >= 2) r.target = std::string(f[1]);
    if (f.size() == 3) r.weight = parse_real(f[2], line);
    records.push_back(std::move(r));
  });
  return records;
}

SparseGraph read_graph(std::istream& in) { return build_graph(parse_edge_list(in)); }

SparseGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  try {
    return read_graph(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const SparseGraph& g) {
  // Declarations first so that first-appearance order reproduces the labels.
  for (const std::string& label : g.labels()) {
    check_label(label);
    out << label << '\n';
  }
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) {
    out << g.label(i) << '\t' << g.label(j) << '\t' << format_real(w) << '\n';
  });
}

std::vector<std::pair<std::string, double>> parse_label_values(std::istream& in) {
  std::vector<std::pair<std::string, double>> entries;
  for_each_record(in, [&](const std::vector<std::string_view>& f, std::size_t line) {
    if (f.size() != 2) throw InputError(where(line) + "expected 'label<TAB>value'");
    const double v = parse_real(f[1], line);
    if (!std::isfinite(v)) throw InputError(where(line) + "non-finite value");
    entries.emplace_back(std::string(f[0]), v);
  });
  return entries;
}

std::vector<std::pair<std::string, double>> read_label_values(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  try {
    return parse_label_values(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ScoreVector align_to_graph(const SparseGraph& g, const std::vector<std::pair<std::string, double>>& entries,
                           bool require_all) {
  ScoreVector out{std::vector<double>(g.size(), 0.0), Normalization::None};
  std::vector<bool> seen(g.size(), false);
  for (const auto& [label, value] : entries) {
    const auto i = g.index_of(label);
    if (!i) throw InputError("unknown node label '" + label + "'");
    out.values[*i] += value;
    seen[*i] = true;
  }
  if (require_all) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!seen[i]) throw InputError("no value given for node '" + g.label(i) + "'");
    }
  }
  return out;
}

MatchList parse_matches(std::istream& in) {
  MatchList matches;
  for_each_record(in, [&](const std::vector<std::string_view>& f, std::size_t line) {
    if (f.size() != 3) throw InputError(where(line) + "expected 'team_i<TAB>team_j<TAB>outcome'");
    const double outcome = parse_real(f[2], line);
    if (outcome != 0.0 && outcome != 0.5 && outcome != 1.0) {
      throw InputError(where(line) + "outcome must be 0, 0.5 or 1");
    }
    if (f[0] == f[1]) throw InputError(where(line) + "a team cannot play itself");
    matches.push_back({std::string(f[0]), std::string(f[1]), outcome});
  });
  return matches;
}

MatchList read_matches(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  try {
    return parse_matches(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace spectral::io
