#include "hurwitz/io.hpp"

#include <sstream>

namespace hurwitz::io {
namespace {

std::string degrees_text(const Multidegree& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ";" : "") + std::to_string(m[i]);
  return out;
}

// RFC 4180: quote fields containing separators, quotes or line breaks.
std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename Visit>
void for_each_selected(const HurwitzTable& table, const TableFilter& filter, Visit&& visit) {
  const auto& parts = table.partitions();
  for (const auto& m : table.multidegrees()) {
    if (filter.degrees && *filter.degrees != m) continue;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (filter.mu && *filter.mu != parts[i]) continue;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (filter.nu && *filter.nu != parts[j]) continue;
        visit(m, parts[i], parts[j], table.at(m, i, j));
      }
    }
  }
}

}  // namespace

Json record(int n, const Partition& mu, const Partition& nu, const Multidegree& degrees, const Scalar& value) {
  Json out;
  out["n"] = n;
  out["mu"] = mu.to_string();
  out["nu"] = nu.to_string();
  out["degrees"] = degrees;
  out["value"] = value.to_string();
  return out;
}

Json table_json(const HurwitzTable& table, const TableFilter& filter) {
  Json out = Json::array();
  for_each_selected(table, filter, [&](const Multidegree& m, const Partition& mu, const Partition& nu, const Scalar& v) {
    out.push_back(record(table.n(), mu, nu, m, v));
  });
  return out;
}

std::string table_csv(const HurwitzTable& table, const TableFilter& filter) {
  std::ostringstream out;
  out << "n,mu,nu,degrees,value\n";
  for_each_selected(table, filter, [&](const Multidegree& m, const Partition& mu, const Partition& nu, const Scalar& v) {
    out << table.n() << ',' << csv_field(mu.to_string()) << ',' << csv_field(nu.to_string()) << ','
        << csv_field(degrees_text(m)) << ',' << csv_field(v.to_string()) << '\n';
  });
  return out.str();
}

Json chartable_json(const CharacterTable& table) {
  Json out;
  out["n"] = table.n();
  Json labels = Json::array();
  for (const auto& p : table.partitions()) labels.push_back(p.to_string());
  out["labels"] = labels;
  Json matrix = Json::array();
  for (std::size_t l = 0; l < table.size(); ++l) {
    Json row = Json::array();
    for (std::size_t m = 0; m < table.size(); ++m) row.push_back(table(l, m));
    matrix.push_back(row);
  }
  out["matrix"] = matrix;
  return out;
}

std::string chartable_csv(const CharacterTable& table) {
  std::ostringstream out;
  out << csv_field("lambda\\mu");
  for (const auto& p : table.partitions()) out << ',' << csv_field(p.to_string());
  out << '\n';
  for (std::size_t l = 0; l < table.size(); ++l) {
    out << csv_field(table.partitions()[l].to_string());
    for (std::size_t m = 0; m < table.size(); ++m) out << ',' << table(l, m);
    out << '\n';
  }
  return out.str();
}

Json path_counts_json(int n, int d, const Partition& mu, const Partition& nu,
                      const std::map<Partition, PathCount>& counts) {
  Json out;
  out["n"] = n;
  out["d"] = d;
  out["mu"] = mu.to_string();
  out["nu"] = nu.to_string();
  Json signatures = Json::array();
  // Canonical (reverse lexicographic) signature order.
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    Json entry;
    entry["signature"] = it->first.to_string();
    entry["m"] = format_rational(it->second.ordered);
    entry["m_tilde"] = format_rational(it->second.all);
    signatures.push_back(entry);
  }
  out["signatures"] = signatures;
  return out;
}

Json triangle_json(const TriangleReport& report) {
  Json out;
  out["n"] = report.n;
  Json species = Json::array();
  for (const auto& s : report.config.species) species.push_back(s.to_string());
  out["species"] = species;
  out["max_degree"] = report.max_degree;
  out["entries_checked"] = report.entries_checked;
  out["ok"] = report.ok();
  Json discrepancies = Json::array();
  for (const auto& d : report.discrepancies) {
    Json entry;
    entry["degrees"] = d.degrees;
    entry["mu"] = d.mu.to_string();
    entry["nu"] = d.nu.to_string();
    entry["geometric"] = d.geometric.to_string();
    entry["combinatorial"] = d.combinatorial.to_string();
    entry["tau"] = d.tau.to_string();
    discrepancies.push_back(entry);
  }
  out["discrepancies"] = discrepancies;
  out["structure_violations"] = report.structure_violations;
  return out;
}

}  // namespace hurwitz::io
