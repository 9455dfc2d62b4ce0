#include "ultradyn/cli.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include <CLI11.hpp>

#include "ultradyn/encode.hpp"
#include "ultradyn/error.hpp"
#include "ultradyn/julia.hpp"
#include "ultradyn/newton.hpp"
#include "ultradyn/reduction.hpp"
#include "ultradyn/selftest.hpp"
#include "ultradyn/tower.hpp"

namespace ultradyn::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::int64_t p = 0;
  std::int64_t ell = 0;
  std::string vc, vy, vd, valpha, valphab;
  std::int64_t steps = 0;
  std::string mode = "hybrid";
  std::string format = "table";
  std::string grid;
  std::string depth = "quick";
  std::string fault;
};

/// What a verb produces: a summary of named values, an optional table, and
/// the JSON document.
struct Report {
  std::vector<std::pair<std::string, std::string>> summary;
  Table table;
  Json json;
  int status = kOk;
  std::string status_message;
};

ExtRat parse_flag(const std::string& name, const std::string& text) {
  try {
    return ExtRat::parse(text);
  } catch (const DomainError&) {
    throw UsageError("--" + name + ": '" + text + "' is not an extended rational");
  }
}

std::optional<ExtRat> parse_optional(const std::string& name, const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_flag(name, text);
}

std::vector<ExtRat> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) {
    throw UsageError("--grid: expected start:stop:count, got '" + text + "'");
  }
  const ExtRat start = parse_flag("grid", text.substr(0, first));
  const ExtRat stop = parse_flag("grid", text.substr(first + 1, second - first - 1));
  const std::string count_text = text.substr(second + 1);
  if (count_text.empty() ||
      !std::all_of(count_text.begin(), count_text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError("--grid: count must be a nonnegative integer");
  }
  if (!start.is_finite() || !stop.is_finite()) {
    throw UsageError("--grid: start and stop must be finite");
  }
  const long count = std::stol(count_text);
  if (count == 0) throw DomainError(Errc::EmptyGrid, "grid '" + text + "' has no points");
  std::vector<ExtRat> values;
  for (long i = 0; i < count; ++i) {
    values.push_back(count == 1 ? start : start + (stop - start) * mpq_class(i, count - 1));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

TowerMode parse_mode(const std::string& text) {
  if (auto mode = parse_tower_mode(text)) return *mode;
  throw UsageError("--mode must be closest, furthest or hybrid");
}

std::string join(const std::vector<ExtRat>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + values[i].to_string();
  return out;
}

void add_params(CLI::App* sub, Flags& f) {
  sub->add_option("--p", f.p, "residue characteristic (prime)")->required();
  sub->add_option("--ell", f.ell, "degree of z^ell - c")->required();
}

void add_format(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

Report do_cutoffs(const Flags& f) {
  const UnicritParams params = decompose(f.p, f.ell);
  const Cutoffs cut = cutoffs(params);
  const auto levels = c_levels(params);
  Report r;
  r.summary = {{"p", std::to_string(params.p())},
               {"ell", std::to_string(params.ell())},
               {"N", std::to_string(params.big_n())},
               {"k", std::to_string(params.k())},
               {"nu_infty", cut.nu_infty.to_string()},
               {"nu_good", cut.nu_good.to_string()},
               {"c_levels", join(levels)}};
  r.json = {{"p", params.p()},
            {"ell", params.ell()},
            {"N", params.big_n()},
            {"k", params.k()},
            {"nu_infty", cut.nu_infty.to_string()},
            {"nu_good", cut.nu_good.to_string()},
            {"c_levels", ext_array(levels)}};
  return r;
}

Report do_polygon(const Flags& f) {
  const UnicritParams params = decompose(f.p, f.ell);
  const ExtRat v_y = parse_flag("vy", f.vy);
  const ExtRat v_d = parse_flag("vd", f.vd);
  const NewtonPolygon hull = lower_hull(difference_points(params, v_y, v_d));
  const PredictedNP predicted = predicted_polygon(params, v_y, v_d);
  if (hull.vertex_xs() != predicted.vertex_xs || hull.first_slope() != predicted.m1 ||
      hull.last_slope() != predicted.m_ell) {
    throw InternalInconsistency("hull and closed form disagree at v(y) = " + v_y.to_string() +
                                ", v(d) = " + v_d.to_string());
  }
  Report r;
  r.table = polygon_table(hull);
  r.json = polygon_json(hull);
  return r;
}

Report do_radii(const Flags& f) {
  const UnicritParams params = decompose(f.p, f.ell);
  const ExtRat v_c = parse_flag("vc", f.vc);
  const RadiiTrace trace = radii_sequence(params, v_c, f.steps);
  const JuliaVerdict verdict = julia_classify(params, v_c);
  Report r;
  r.summary = {{"v_c", v_c.to_string()},
               {"rho_limit", trace.rho_limit.value.to_string()},
               {"band_n", std::to_string(trace.band_n)},
               {"verdict", std::string(julia_verdict_name(verdict))}};
  r.table = radii_table(trace);
  r.json = radii_json(trace, verdict);
  return r;
}

Report do_julia(const Flags& f) {
  const UnicritParams params = decompose(f.p, f.ell);
  const ExtRat v_c = parse_flag("vc", f.vc);
  const Cutoffs cut = cutoffs(params);
  const JuliaVerdict verdict = julia_classify(params, v_c);
  const bool bad = v_c < cut.nu_good;
  const std::string band = bad ? std::to_string(c_level_band(params, v_c)) : "NA";
  const std::string limit = bad ? limit_log_radius(params, v_c).value.to_string() : "NA";
  Report r;
  r.summary = {{"v_c", v_c.to_string()},
               {"nu_infty", cut.nu_infty.to_string()},
               {"nu_good", cut.nu_good.to_string()},
               {"verdict", std::string(julia_verdict_name(verdict))},
               {"band_n", band},
               {"rho_limit", limit}};
  r.json = Json::object();
  for (const auto& [key, value] : r.summary) r.json[key] = value;
  return r;
}

// Without --valpha, v(alpha) follows from --valphab when given, else 0.
RootPointSpec root_from(const Flags& f, const UnicritParams& params, const ExtRat& v_c) {
  const auto v_ab = parse_optional("valphab", f.valphab);
  if (!f.valpha.empty()) return {parse_flag("valpha", f.valpha), v_ab};
  if (v_ab) return root_near_fixed_point(params, v_c, *v_ab);
  return {ExtRat(0), std::nullopt};
}

Report do_tower(const Flags& f) {
  const UnicritParams params = decompose(f.p, f.ell);
  const ExtRat v_c = parse_flag("vc", f.vc);
  const TowerTrace trace = tower_trace(params, v_c, root_from(f, params, v_c), parse_mode(f.mode), f.steps);
  Report r;
  r.summary = {{"mode", std::string(tower_mode_name(trace.mode))},
               {"ambiguous", trace.ambiguous ? "true" : "false"},
               {"verdict", trace_verdict(trace)}};
  r.table = trace_table(trace);
  r.json = trace_json(trace);
  return r;
}

Report do_classify(const Flags& f) {
  const UnicritParams params = decompose(f.p, f.ell);
  const ExtRat v_c = parse_flag("vc", f.vc);
  const ExtensionVerdict verdict = classify_extension(params, v_c, root_from(f, params, v_c));
  Report r;
  r.summary = {{"kind", std::string(extension_kind_name(verdict.kind))}, {"reason", verdict.reason}};
  r.json = {{"kind", r.summary[0].second}, {"reason", verdict.reason}};
  return r;
}

Report do_sweep(const Flags& f) {
  const UnicritParams params = decompose(f.p, f.ell);
  const std::vector<ExtRat> grid = parse_grid(f.grid);
  const Cutoffs cut = cutoffs(params);

  Report r;
  r.table.header = {"vc", "nu_infty", "nu_good", "julia_verdict", "rho_limit", "extension_verdict"};
  Json rows = Json::array();
  for (const auto& v_c : grid) {
    const JuliaVerdict julia = julia_classify(params, v_c);
    const std::string limit =
        v_c < cut.nu_good ? limit_log_radius(params, v_c).value.to_string() : "NA";
    std::string extension;
    try {
      extension = std::string(extension_kind_name(classify_extension(params, v_c, root_from(f, params, v_c)).kind));
    } catch (const DomainError& e) {
      extension = std::string(errc_name(e.code()));
      r.status = kDomain;
      r.status_message = e.what();
    }
    std::vector<std::string> row{v_c.to_string(),         cut.nu_infty.to_string(),
                                 cut.nu_good.to_string(), std::string(julia_verdict_name(julia)),
                                 limit,                   extension};
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.table.header[i]] = row[i];
    rows.push_back(std::move(obj));
    r.table.rows.push_back(std::move(row));
  }
  r.json = {{"p", params.p()}, {"ell", params.ell()}, {"rows", std::move(rows)}};
  return r;
}

Report do_selftest(const Flags& f) {
  selftest::Options options;
  if (f.depth == "full") options.depth = selftest::Depth::Full;
  if (f.fault == "lambda-tiebreak") options.predictor = selftest::predict_with_tiebreak_fault;

  const auto results = selftest::run_all(options);
  Report r;
  r.table.header = {"suite", "cases", "failures", "status"};
  Json suites = Json::array();
  bool all_passed = true;
  for (const auto& s : results) {
    all_passed = all_passed && s.passed();
    r.table.rows.push_back({s.name, std::to_string(s.cases), std::to_string(s.failures),
                            s.passed() ? "pass" : "FAIL"});
    suites.push_back({{"name", s.name},
                      {"cases", s.cases},
                      {"failures", s.failures},
                      {"counterexamples", s.counterexamples}});
  }
  r.json = {{"depth", f.depth}, {"passed", all_passed}, {"suites", std::move(suites)}};
  if (!all_passed) {
    r.status = kInternal;
    std::string message = "self-test failures";
    for (const auto& s : results) {
      for (const auto& c : s.counterexamples) message += "\n  " + s.name + " " + c;
    }
    r.status_message = message;
  }
  return r;
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.json.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    if (!r.table.header.empty()) {
      r.table.write_csv(out);
      return;
    }
    Table t;
    t.rows.emplace_back();
    for (const auto& [key, value] : r.summary) {
      t.header.push_back(key);
      t.rows.back().push_back(value);
    }
    t.write_csv(out);
    return;
  }
  std::size_t width = 0;
  for (const auto& kv : r.summary) width = std::max(width, kv.first.size());
  for (const auto& [key, value] : r.summary) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
  if (!r.table.header.empty()) {
    if (!r.summary.empty()) out << '\n';
    r.table.write_aligned(out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Valuation-level dynamics of z^ell - c over a discretely valued field", "ultradyn"};
  app.require_subcommand(1);

  auto* cutoffs_cmd = app.add_subcommand("cutoffs", "nu_infty, nu_good and the c levels");
  add_params(cutoffs_cmd, f);
  add_format(cutoffs_cmd, f);

  auto* polygon_cmd = app.add_subcommand("polygon", "Newton polygon of (z+y)^ell - y^ell - d");
  add_params(polygon_cmd, f);
  polygon_cmd->add_option("--vy", f.vy, "v(y)")->required();
  polygon_cmd->add_option("--vd", f.vd, "v(d)")->required();
  add_format(polygon_cmd, f);

  auto* radii_cmd = app.add_subcommand("radii", "log-radii of the preimage disks about a fixed point");
  add_params(radii_cmd, f);
  radii_cmd->add_option("--vc", f.vc, "v(c)")->required();
  radii_cmd->add_option("--steps", f.steps, "number of preimage steps")->default_val(10);
  add_format(radii_cmd, f);

  auto* julia_cmd = app.add_subcommand("julia", "shape of the Berkovich Julia set");
  add_params(julia_cmd, f);
  julia_cmd->add_option("--vc", f.vc, "v(c)")->required();
  add_format(julia_cmd, f);

  auto* tower_cmd = app.add_subcommand("tower", "valuations along a preimage chain");
  add_params(tower_cmd, f);
  tower_cmd->add_option("--vc", f.vc, "v(c)")->required();
  tower_cmd->add_option("--valpha", f.valpha, "v(alpha) of the root point")->required();
  tower_cmd->add_option("--valphab", f.valphab, "v(alpha - b) for a fixed point b");
  tower_cmd->add_option("--steps", f.steps, "number of distances")->default_val(12);
  tower_cmd->add_option("--mode", f.mode, "closest, furthest or hybrid");
  add_format(tower_cmd, f);

  auto* classify_cmd = app.add_subcommand("classify", "finite / finitely ramified / wildly ramified");
  add_params(classify_cmd, f);
  classify_cmd->add_option("--vc", f.vc, "v(c)")->required();
  classify_cmd->add_option("--valpha", f.valpha,
                           "v(alpha) of the root point; default min(v(alpha - b), v(b)) or 0");
  classify_cmd->add_option("--valphab", f.valphab, "v(alpha - b) for a fixed point b");
  add_format(classify_cmd, f);

  auto* sweep_cmd = app.add_subcommand("sweep", "regime table over a grid of v(c)");
  add_params(sweep_cmd, f);
  sweep_cmd->add_option("--grid", f.grid, "start:stop:count, endpoints included")->required();
  sweep_cmd->add_option("--valphab", f.valphab, "v(alpha - b), used on the ell = p boundary");
  add_format(sweep_cmd, f);

  auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");
  selftest_cmd->add_option("--depth", f.depth, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  selftest_cmd->add_option("--inject-fault", f.fault, "break a component on purpose")
      ->check(CLI::IsMember({"lambda-tiebreak"}));
  add_format(selftest_cmd, f);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ultradyn: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Report report;
    if (cutoffs_cmd->parsed()) report = do_cutoffs(f);
    else if (polygon_cmd->parsed()) report = do_polygon(f);
    else if (radii_cmd->parsed()) report = do_radii(f);
    else if (julia_cmd->parsed()) report = do_julia(f);
    else if (tower_cmd->parsed()) report = do_tower(f);
    else if (classify_cmd->parsed()) report = do_classify(f);
    else if (sweep_cmd->parsed()) report = do_sweep(f);
    else report = do_selftest(f);

    emit(report, f.format, out);
    if (report.status != kOk) err << "ultradyn: " << report.status_message << '\n';
    return report.status;
  } catch (const UsageError& e) {
    err << "ultradyn: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "ultradyn: " << e.what() << '\n';
    return kDomain;
  } catch (const InternalInconsistency& e) {
    err << "ultradyn: internal inconsistency: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace ultradyn::cli
