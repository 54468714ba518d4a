#pragma once

#include <string>
#include <vector>

#include "spinchain/la.hpp"
#include "spinchain/spectra.hpp"

namespace spinchain {

/// Fixed-format float printing ("%.12g") so reruns are byte-identical.
std::string format_value(double v);

/// Histogram TSV: `# lo hi bins captured_fraction` header, then
/// `bin_center<TAB>density` rows.
std::string histogram_tsv(const Histogram& h);

/// Generic curve TSV: optional `# name` header then x<TAB>col1[<TAB>col2...].
std::string curve_tsv(const std::vector<std::string>& column_names,
                      const std::vector<std::vector<double>>& columns);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace spinchain
