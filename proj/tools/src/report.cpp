#include "report.hpp"

#include "wbary/instance_io.hpp"

#include <iomanip>
#include <limits>

namespace wbary::cli {

nlohmann::json json_integer(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

std::string subset_label(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((mask >> i & 1U) == 0) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

bool Report::match() const {
  for (const auto& v : values) {
    if (v.chi_c != values.front().chi_c) return false;
  }
  return true;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json doc;
  doc["command"] = report.command;
  doc["instance"] = nlohmann::json::parse(instance_document(report.instance));
  if (report.vertices) doc["vertices"] = *report.vertices;
  nlohmann::json values = nlohmann::json::object();
  for (const auto& v : report.values) values[v.method] = json_integer(v.chi_c);
  doc["chi_c"] = values;
  if (report.degree) doc["degree"] = json_integer(*report.degree);
  if (report.topological_chi) doc["topological_chi"] = *report.topological_chi;
  if (!report.breakdown.empty()) {
    nlohmann::json breakdown = nlohmann::json::object();
    for (const auto& [method, terms] : report.breakdown) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& t : terms) {
        nlohmann::json subset = nlohmann::json::array();
        for (std::size_t i = 0; i < 64; ++i) {
          if (t.mask >> i & 1U) subset.push_back(i + 1);
        }
        list.push_back({{"subset", subset}, {"value", json_integer(t.value)}});
      }
      breakdown[method] = list;
    }
    doc["breakdown"] = breakdown;
  }
  if (report.descriptor) doc["descriptor"] = *report.descriptor;
  if (report.descriptor_chi) doc["descriptor_chi"] = json_integer(*report.descriptor_chi);
  doc["verdict"] = report.match() ? "MATCH" : "MISMATCH";
  return doc;
}

std::string describe_instance(const ValidatedInstance& instance) {
  std::string out = "chi_c=" + to_string(instance.chi_c()) + " weights=[";
  for (std::size_t i = 0; i < instance.r(); ++i) {
    if (i > 0) out += ",";
    out += to_string(instance.weights()[i]);
  }
  out += "] rho=" + to_string(instance.rho()) + " space=" + std::string(to_string(instance.space().kind));
  for (const auto& c : instance.space().components) {
    std::uint64_t mask = 0;
    for (std::size_t i : c.singular_indices) mask |= std::uint64_t{1} << i;
    out += " [" + to_string(c.chi_c) + (c.is_compact ? " compact" : c.even_dim_interior ? " even" : " open") +
           " " + subset_label(mask) + "]";
  }
  return out;
}

void print_text(const Report& report, std::ostream& out) {
  out << "instance    " << describe_instance(report.instance) << "\n";
  if (report.vertices) out << "vertices    " << *report.vertices << "\n";
  for (const auto& v : report.values) out << std::left << std::setw(12) << v.method << to_string(v.chi_c) << "\n";
  if (report.degree) out << "d_rho       " << to_string(*report.degree) << "\n";
  if (report.descriptor) {
    out << "homotopy    " << *report.descriptor;
    if (report.descriptor_chi) out << "  (chi " << to_string(*report.descriptor_chi) << ")";
    out << "\n";
  }
  if (report.topological_chi) out << "topological chi: " << (*report.topological_chi ? "yes" : "no") << "\n";
  for (const auto& [method, terms] : report.breakdown) {
    out << "breakdown " << method << (method == "direct" ? " (chi_c = 1 - sum)" : " (chi_c = sum)") << "\n";
    for (const auto& t : terms) out << "  " << std::left << std::setw(16) << subset_label(t.mask) << to_string(t.value) << "\n";
  }
  out << (report.match() ? "MATCH" : "MISMATCH") << "\n";
}

}  // namespace wbary::cli
