#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "hurwitz/characters.hpp"
#include "hurwitz/combinatorial.hpp"
#include "hurwitz/hurwitz_table.hpp"
#include "hurwitz/triangle.hpp"

namespace hurwitz::io {

using Json = nlohmann::ordered_json;

// {n, mu, nu, degrees, value}; value is "num/den" in rational mode.
Json record(int n, const Partition& mu, const Partition& nu, const Multidegree& degrees, const Scalar& value);

// Selection of table entries to emit. Unset fields select everything.
struct TableFilter {
  std::optional<Multidegree> degrees;
  std::optional<Partition> mu;
  std::optional<Partition> nu;
};

Json table_json(const HurwitzTable& table, const TableFilter& filter = {});
std::string table_csv(const HurwitzTable& table, const TableFilter& filter = {});

Json chartable_json(const CharacterTable& table);
std::string chartable_csv(const CharacterTable& table);

Json path_counts_json(int n, int d, const Partition& mu, const Partition& nu,
                      const std::map<Partition, PathCount>& counts);

Json triangle_json(const TriangleReport& report);

}  // namespace hurwitz::io
