#ifndef HYPERFIB_IO_HPP
#define HYPERFIB_IO_HPP

#include <string>
#include <vector>

#include "hyperfib/hypergraph.hpp"
#include "hyperfib/partition.hpp"
#include "hyperfib/topoedit.hpp"

namespace hyperfib {

// Locale-independent formatting with 12 significant digits.
std::string format_double(double value);

// Partition JSON: {"classes": [[labels...], ...]} in canonical order.
std::string partition_to_json(const Partition& p, const Hypergraph& h);
Partition partition_from_json(const std::string& text, const Hypergraph& h);

std::string edit_report_to_json(const EditReport& r, const Hypergraph& original);

std::string trajectory_to_csv(const std::vector<double>& times,
                              const std::vector<std::vector<double>>& rows,
                              const std::vector<std::string>& column_labels);

// First row alpha3 values, first column alpha2 values.
std::string sweep_to_csv(const std::vector<double>& alpha2_values,
                         const std::vector<double>& alpha3_values,
                         const std::vector<std::vector<double>>& matrix);

// Temp file + rename so readers never observe partial output.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hyperfib

#endif
