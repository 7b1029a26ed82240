#include "canspec/io.hpp"

#include "canspec/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace canspec {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string resolve_output_path(const std::string& path) {
  const std::filesystem::path p(path);
  const char* dir = std::getenv("CANSPEC_OUT_DIR");
  if (p.is_absolute() || dir == nullptr || *dir == '\0') return path;
  return (std::filesystem::path(dir) / p).string();
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<Vector<double>>& columns) {
  if (header.size() != columns.size()) throw std::invalid_argument("write_csv: header mismatch");
  const Index rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& col : columns)
    if (col.size() != rows) throw std::invalid_argument("write_csv: ragged columns");
  for (size_t j = 0; j < header.size(); ++j) os << (j ? "," : "") << header[j];
  os << '\n';
  for (Index i = 0; i < rows; ++i) {
    for (size_t j = 0; j < columns.size(); ++j) os << (j ? "," : "") << format_double(columns[j][i]);
    os << '\n';
  }
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<Vector<double>>& columns) {
  const std::string resolved = resolve_output_path(path);
  const auto parent = std::filesystem::path(resolved).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream os(resolved);
  if (!os) throw InvalidInput("cannot open " + resolved + " for writing");
  write_csv(os, header, columns);
}

SampleTable read_samples(std::istream& is) {
  SampleTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double t, v;
    if (!(ls >> t)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InvalidInput("sample line " + std::to_string(lineno) + ": expected two numbers");
    }
    std::string rest;
    if (!(ls >> v) || (ls >> rest))
      throw InvalidInput("sample line " + std::to_string(lineno) + ": expected two numbers");
    table.ts.push_back(t);
    table.values.push_back(v);
  }
  if (table.ts.size() < 2) throw InvalidInput("sample file needs at least two rows");
  return table;
}

SampleTable read_samples(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidInput("cannot read " + path);
  return read_samples(is);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw InvalidInput("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

}  // namespace canspec
