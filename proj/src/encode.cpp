#include "ultradyn/encode.hpp"

#include <algorithm>

namespace ultradyn {

namespace {

// Cells never contain commas or quotes except in the free-text reason
// column, which is quoted when needed.
std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (const char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ',';
      os << csv_cell(cells[i]);
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void Table::write_aligned(std::ostream& os) const {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], cells[i].size());
    }
  };
  measure(header);
  for (const auto& row : rows) measure(row);

  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) text += "  ";
      text += cells[i];
      if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
    }
    os << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

Json ext_array(const std::vector<ExtRat>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

Json polygon_json(const NewtonPolygon& np) {
  Json vertices = Json::array();
  for (const auto& v : np.vertices) vertices.push_back(Json::array({v.x, v.y.to_string()}));
  Json segments = Json::array();
  for (const auto& s : np.segments) {
    segments.push_back({{"slope", s.slope.to_string()}, {"width", s.width}});
  }
  return {{"vertices", std::move(vertices)}, {"segments", std::move(segments)}};
}

Table polygon_table(const NewtonPolygon& np) {
  Table t{{"x0", "y0", "x1", "y1", "slope", "width"}, {}};
  for (std::size_t i = 0; i < np.segments.size(); ++i) {
    const auto& a = np.vertices[i];
    const auto& b = np.vertices[i + 1];
    t.rows.push_back({std::to_string(a.x), a.y.to_string(), std::to_string(b.x), b.y.to_string(),
                      np.segments[i].slope.to_string(), std::to_string(np.segments[i].width)});
  }
  return t;
}

Json radii_json(const RadiiTrace& trace, JuliaVerdict verdict) {
  Json rho = Json::array();
  for (const auto& r : trace.rho_seq) rho.push_back(r.value.to_string());
  return {{"v_c", trace.v_c.to_string()},
          {"rho_seq", std::move(rho)},
          {"rho_limit", trace.rho_limit.value.to_string()},
          {"band_n", trace.band_n},
          {"verdict", std::string(julia_verdict_name(verdict))}};
}

Table radii_table(const RadiiTrace& trace) {
  Table t{{"m", "rho", "rho_minus_limit"}, {}};
  for (std::size_t m = 0; m < trace.rho_seq.size(); ++m) {
    const ExtRat& rho = trace.rho_seq[m].value;
    const ExtRat& limit = trace.rho_limit.value;
    const std::string gap = limit.is_neg_inf() ? "inf" : (rho - limit).to_string();
    t.rows.push_back({std::to_string(m), rho.to_string(), gap});
  }
  return t;
}

std::string trace_verdict(const TowerTrace& trace) {
  if (trace.den_p_val_seq.size() < 3) return "undetermined";
  return is_wildly_ramified(trace) ? "wildly_ramified" : "bounded";
}

Json trace_json(const TowerTrace& trace) {
  return {{"mode", std::string(tower_mode_name(trace.mode))},
          {"v_alpha_seq", ext_array(trace.v_alpha_seq)},
          {"v_d_seq", ext_array(trace.v_d_seq)},
          {"den_p_val_seq", trace.den_p_val_seq},
          {"ambiguous", trace.ambiguous},
          {"verdict", trace_verdict(trace)}};
}

Table trace_table(const TowerTrace& trace) {
  Table t{{"n", "v_y", "v_d", "den_p_val", "n0"}, {}};
  for (std::size_t n = 0; n < trace.v_d_seq.size(); ++n) {
    const auto& n0 = trace.n0_seq[n];
    t.rows.push_back({std::to_string(n), trace.v_alpha_seq[n + 1].to_string(),
                      trace.v_d_seq[n].to_string(), std::to_string(trace.den_p_val_seq[n]),
                      n0 ? std::to_string(*n0) : "-"});
  }
  return t;
}

}  // namespace ultradyn
