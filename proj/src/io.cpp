#include "spinchain/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinchain {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string histogram_tsv(const Histogram& h) {
  std::ostringstream out;
  out << "# " << format_value(h.spec.lo) << ' ' << format_value(h.spec.hi) << ' ' << h.spec.bins
      << ' ' << format_value(h.captured_fraction) << '\n';
  for (int j = 0; j < h.spec.bins; ++j)
    out << format_value(h.bin_center(j)) << '\t' << format_value(h.density[j]) << '\n';
  return out.str();
}

std::string curve_tsv(const std::vector<std::string>& column_names,
                      const std::vector<std::vector<double>>& columns) {
  if (columns.empty()) throw std::invalid_argument("no columns");
  std::ostringstream out;
  out << '#';
  for (const std::string& name : column_names) out << ' ' << name;
  out << '\n';
  size_t rows = columns[0].size();
  for (const auto& col : columns)
    if (col.size() != rows) throw std::invalid_argument("ragged columns");
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < columns.size(); ++c) {
      if (c) out << '\t';
      out << format_value(columns[c][r]);
    }
    out << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << contents;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace spinchain
