#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ultradyn/julia.hpp"
#include "ultradyn/newton.hpp"
#include "ultradyn/tower.hpp"

namespace ultradyn {

using Json = nlohmann::ordered_json;

/// Rows of text cells with a header, printable as CSV or aligned columns.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& os) const;
  void write_aligned(std::ostream& os) const;
};

Json ext_array(const std::vector<ExtRat>& values);

Json polygon_json(const NewtonPolygon& np);
Table polygon_table(const NewtonPolygon& np);

Json radii_json(const RadiiTrace& trace, JuliaVerdict verdict);
Table radii_table(const RadiiTrace& trace);

/// verdict is "wildly_ramified", "bounded" or, for traces shorter than
/// three terms, "undetermined".
std::string trace_verdict(const TowerTrace& trace);
Json trace_json(const TowerTrace& trace);
Table trace_table(const TowerTrace& trace);

}  // namespace ultradyn
