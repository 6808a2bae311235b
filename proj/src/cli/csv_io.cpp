#include "fht/cli/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "fht/errors.hpp"

namespace fht::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(std::string_view field, std::size_t line) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "not a number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(v)) throw ParseError(line, "non-finite value");
  return v;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvTable parse_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t columns = 0;
  CsvTable table;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (columns == 0) {
      if (body == "x,value") {
        columns = 2;
      } else if (body == "x,value,reference") {
        columns = 3;
        table.reference.emplace();
      } else {
        throw ParseError(lineno, "expected header 'x,value' or 'x,value,reference'");
      }
      continue;
    }
    if (body.empty()) continue;
    const auto fields = split(body);
    if (fields.size() != columns) {
      throw ParseError(lineno, "expected " + std::to_string(columns) + " fields, got " +
                                   std::to_string(fields.size()));
    }
    table.x.push_back(parse_number(fields[0], lineno));
    table.value.push_back(parse_number(fields[1], lineno));
    if (columns == 3) table.reference->push_back(parse_number(fields[2], lineno));
  }
  if (columns == 0) throw ParseError(1, "empty file");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  return parse_csv(in);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  out << (table.reference ? "x,value,reference\n" : "x,value\n");
  for (std::size_t i = 0; i < table.rows(); ++i) {
    out << format_double(table.x[i]) << ',' << format_double(table.value[i]);
    if (table.reference) out << ',' << format_double((*table.reference)[i]);
    out << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  auto out = open_out(path);
  write_csv(out, table);
}

void write_columns(const std::filesystem::path& path,
                   const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns) {
  auto out = open_out(path);
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << format_double(columns[c][r]);
    }
    out << '\n';
  }
}

}  // namespace fht::cli
