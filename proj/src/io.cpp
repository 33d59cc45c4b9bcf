#include "hyperfib/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperfib/error.hpp"
#include "json.hpp"

namespace hyperfib {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

std::string partition_to_json(const Partition& p, const Hypergraph& h) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : p.classes) {
    nlohmann::json members = nlohmann::json::array();
    for (int i : cls) members.push_back(h.label(i));
    classes.push_back(std::move(members));
  }
  nlohmann::json out;
  out["classes"] = std::move(classes);
  return out.dump(2) + "\n";
}

Partition partition_from_json(const std::string& text, const Hypergraph& h) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedLine, std::string("bad partition JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
    throw Error(ErrorCode::MalformedLine, "partition JSON must contain a \"classes\" array");

  std::unordered_map<std::string, int> by_label;
  for (int i = 0; i < h.node_count(); ++i) by_label[h.label(i)] = i;

  std::vector<int> labels(h.node_count(), -1);
  int next_class = 0;
  for (const auto& cls : j["classes"]) {
    if (!cls.is_array())
      throw Error(ErrorCode::MalformedLine, "each partition class must be an array");
    for (const auto& member : cls) {
      std::string name = member.is_string()
                             ? member.get<std::string>()
                             : nlohmann::json(member).dump();
      auto it = by_label.find(name);
      if (it == by_label.end())
        throw Error(ErrorCode::MalformedLine, "unknown node label: " + name);
      if (labels[it->second] != -1)
        throw Error(ErrorCode::MalformedLine, "node listed twice: " + name);
      labels[it->second] = next_class;
    }
    ++next_class;
  }
  for (int i = 0; i < h.node_count(); ++i)
    if (labels[i] == -1)
      throw Error(ErrorCode::MalformedLine, "node missing from partition: " + h.label(i));
  return Partition::from_labels(labels);
}

namespace {

nlohmann::json edges_as_labels(const std::vector<std::vector<int>>& edges,
                               const Hypergraph& h) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : edges) {
    nlohmann::json members = nlohmann::json::array();
    for (int i : e) members.push_back(h.label(i));
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::string edit_report_to_json(const EditReport& r, const Hypergraph& original) {
  nlohmann::json out;
  out["added"] = edges_as_labels(r.added, original);
  out["removed"] = edges_as_labels(r.removed, original);
  out["converged"] = r.converged;
  out["iterations"] = r.iterations;
  return out.dump(2) + "\n";
}

std::string trajectory_to_csv(const std::vector<double>& times,
                              const std::vector<std::vector<double>>& rows,
                              const std::vector<std::string>& column_labels) {
  std::ostringstream out;
  out << 't';
  for (const auto& label : column_labels) out << ',' << label;
  out << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << format_double(times[r]);
    for (double v : rows[r]) out << ',' << format_double(v);
    out << '\n';
  }
  return out.str();
}

std::string sweep_to_csv(const std::vector<double>& alpha2_values,
                         const std::vector<double>& alpha3_values,
                         const std::vector<std::vector<double>>& matrix) {
  std::ostringstream out;
  for (double a3 : alpha3_values) out << ',' << format_double(a3);
  out << '\n';
  for (std::size_t a = 0; a < alpha2_values.size(); ++a) {
    out << format_double(alpha2_values[a]);
    for (double v : matrix[a]) out << ',' << format_double(v);
    out << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + tmp + " for writing");
    out << content;
    if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "rename failed: " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hyperfib
