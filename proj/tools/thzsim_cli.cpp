// Scenario-driven command-line frontend. Subcommands evaluate one scenario
// file into CSV/JSON tables suitable for plotting; all outputs are
// deterministic for a fixed scenario and seed.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thzsim/commands.hpp"
#include "thzsim/errors.hpp"
#include "thzsim/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using thzsim::commands::Table;

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string table_to_csv(const Table& t) {
  std::string out;
  for (const auto& [k, v] : t.metadata) out += "# " + k + "=" + v + "\n";
  for (size_t i = 0; i < t.columns.size(); ++i) {
    out += t.columns[i];
    out += (i + 1 < t.columns.size()) ? "," : "\n";
  }
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out += format_number(row[i]);
      out += (i + 1 < row.size()) ? "," : "\n";
    }
  }
  return out;
}

json table_to_json(const Table& t) {
  json j;
  j["schema_version"] = 1;
  for (const auto& [k, v] : t.metadata) j["metadata"][k] = v;
  j["columns"] = t.columns;
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(row);
  j["rows"] = std::move(rows);
  return j;
}

// Single atomic write: temp file in the target directory, then rename.
void write_file(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw thzsim::config_error("cannot open output file: " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

struct CommonOptions {
  std::string scenario_path;
  std::string out_dir = ".";
  std::string format = "csv";
  std::uint64_t seed = 12345;
  std::size_t monte_carlo = 0;
  std::string mi_mode;    // as-printed | corrected
  std::string nlos_mode;  // as-printed | physical
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--scenario", opt.scenario_path, "Scenario file (JSON)")->required();
  cmd->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--format", opt.format, "Output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--seed", opt.seed, "Random seed for sampling paths")->capture_default_str();
  cmd->add_option("--monte-carlo", opt.monte_carlo,
                  "Monte-Carlo sample count for cross-check columns (0 = off)");
  cmd->add_option("--mode", opt.mi_mode, "Mutual-information variant: as-printed|corrected")
      ->check(CLI::IsMember({"as-printed", "corrected"}));
  cmd->add_option("--nlos-mode", opt.nlos_mode, "Scattered-channel prefactor: as-printed|physical")
      ->check(CLI::IsMember({"as-printed", "physical"}));
  cmd->add_option("--threads", opt.threads, "Worker threads for map evaluation (0 = auto)");
}

thzsim::scenario::Scenario load(const CommonOptions& opt) {
  thzsim::scenario::Scenario s = thzsim::scenario::load_scenario(opt.scenario_path);
  if (opt.mi_mode == "as-printed") s.secrecy.mi_variant = thzsim::secrecy::MiVariant::as_printed;
  if (opt.mi_mode == "corrected") s.secrecy.mi_variant = thzsim::secrecy::MiVariant::corrected;
  if (opt.nlos_mode == "as-printed") s.secrecy.nlos_mode = thzsim::secrecy::NlosMode::as_printed;
  if (opt.nlos_mode == "physical") s.secrecy.nlos_mode = thzsim::secrecy::NlosMode::physical;
  return s;
}

void emit(const CommonOptions& opt, const std::string& stem, const Table& t) {
  fs::create_directories(opt.out_dir);
  if (opt.format == "csv") {
    write_file(fs::path(opt.out_dir) / (stem + ".csv"), table_to_csv(t));
  } else {
    write_file(fs::path(opt.out_dir) / (stem + ".json"), table_to_json(t).dump(2) + "\n");
  }
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"thzsim: THz channel propagation and secrecy simulator"};
  app.set_version_flag("--version", thzsim::kVersion);
  app.require_subcommand(1);

  // gas-spectrum
  CommonOptions gas_opt;
  double f_start = 100.0, f_stop = 1200.0;
  int gas_points = 221;
  CLI::App* gas = app.add_subcommand("gas-spectrum", "Specific gaseous attenuation over a grid");
  add_common(gas, gas_opt);
  gas->add_option("--f-start", f_start, "Grid start, GHz")->capture_default_str();
  gas->add_option("--f-stop", f_stop, "Grid stop, GHz")->capture_default_str();
  gas->add_option("--points", gas_points, "Grid size")->capture_default_str();

  // weather-attenuation
  CommonOptions wx_opt;
  double rate_start = 0.0, rate_stop = 50.0;
  int rate_points = 26;
  std::vector<double> rate_list;
  CLI::App* wx = app.add_subcommand("weather-attenuation",
                                    "Hydrometeor attenuation split over a rate sweep");
  add_common(wx, wx_opt);
  wx->add_option("--rate-start", rate_start, "Sweep start, mm/hr")->capture_default_str();
  wx->add_option("--rate-stop", rate_stop, "Sweep stop, mm/hr")->capture_default_str();
  wx->add_option("--rate-points", rate_points, "Sweep size")->capture_default_str();
  wx->add_option("--rates", rate_list, "Explicit rate list, mm/hr (overrides the sweep)");

  // ber
  CommonOptions ber_opt;
  std::string sweep_kind = "snr";
  double sweep_start = 0.0, sweep_stop = 20.0;
  int sweep_points = 41;
  CLI::App* ber = app.add_subcommand("ber", "Bit error rate for ASK and 16-QAM over a sweep");
  add_common(ber, ber_opt);
  ber->add_option("--sweep", sweep_kind, "Sweep kind: distance|rate|snr")
      ->check(CLI::IsMember({"distance", "rate", "snr"}))
      ->capture_default_str();
  ber->add_option("--start", sweep_start, "Sweep start")->capture_default_str();
  ber->add_option("--stop", sweep_stop, "Sweep stop")->capture_default_str();
  ber->add_option("--points", sweep_points, "Sweep size")->capture_default_str();

  // secrecy-map
  CommonOptions map_opt;
  CLI::App* map = app.add_subcommand("secrecy-map",
                                     "Secrecy-capacity field over eavesdropper positions");
  add_common(map, map_opt);

  // outage
  CommonOptions out_opt;
  double r_start = 0.0, r_stop = 50.0;
  int r_points = 26;
  CLI::App* outage = app.add_subcommand("outage", "Secrecy outage probability over target rates");
  add_common(outage, out_opt);
  outage->add_option("--r-start", r_start, "Target rate sweep start, Gbps")->capture_default_str();
  outage->add_option("--r-stop", r_stop, "Target rate sweep stop, Gbps")->capture_default_str();
  outage->add_option("--r-points", r_points, "Sweep size")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (gas->parsed()) {
    const auto s = load(gas_opt);
    emit(gas_opt, "gas_spectrum", thzsim::commands::gas_spectrum(s, f_start, f_stop, gas_points));
  } else if (wx->parsed()) {
    const auto s = load(wx_opt);
    const std::vector<double> rates =
        rate_list.empty() ? linspace(rate_start, rate_stop, rate_points) : rate_list;
    emit(wx_opt, "weather_attenuation", thzsim::commands::weather_attenuation(s, rates));
  } else if (ber->parsed()) {
    const auto s = load(ber_opt);
    emit(ber_opt, "ber",
         thzsim::commands::ber(s, thzsim::commands::ber_sweep_from_name(sweep_kind), sweep_start,
                               sweep_stop, sweep_points));
  } else if (map->parsed()) {
    const auto s = load(map_opt);
    const thzsim::commands::SecrecyMapOutput res = thzsim::commands::secrecy_map(s, map_opt.threads);

    fs::create_directories(map_opt.out_dir);
    write_file(fs::path(map_opt.out_dir) / "secrecy_map.csv", table_to_csv(res.table));
    json j = table_to_json(res.table);
    j["grid"] = {{"x_min", res.map.grid.x_min}, {"x_max", res.map.grid.x_max},
                 {"nx", res.map.grid.nx},       {"y_min", res.map.grid.y_min},
                 {"y_max", res.map.grid.y_max}, {"ny", res.map.grid.ny}};
    j["summary"] = {{"msc_gbps", res.map.msc_gbps},
                    {"insecure_cells", res.map.insecure_cells},
                    {"insecure_fraction", res.map.insecure_fraction},
                    {"error_cells", res.map.error_cells}};
    write_file(fs::path(map_opt.out_dir) / "secrecy_map.json", j.dump(2) + "\n");
    std::cout << "msc_gbps=" << format_number(res.map.msc_gbps)
              << " insecure_cells=" << res.map.insecure_cells
              << " insecure_fraction=" << format_number(res.map.insecure_fraction) << "\n";
  } else if (outage->parsed()) {
    const auto s = load(out_opt);
    thzsim::commands::MonteCarloOptions mc;
    mc.seed = out_opt.seed;
    mc.samples = out_opt.monte_carlo;
    emit(out_opt, "outage",
         thzsim::commands::outage(s, linspace(r_start, r_stop, r_points), mc));
  }
  return 0;
}

void emit_error(const char* type, const std::exception& e) {
  json j;
  j["error"] = {{"type", type}, {"message", e.what()}};
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const thzsim::config_error& e) {
    emit_error("config", e);
    return 2;
  } catch (const std::invalid_argument& e) {
    emit_error("config", e);
    return 2;
  } catch (const std::domain_error& e) {
    emit_error("config", e);
    return 2;
  } catch (const thzsim::numerical_error& e) {
    emit_error("numerical", e);
    return 3;
  } catch (const thzsim::resource_error& e) {
    emit_error("numerical", e);
    return 3;
  } catch (const std::exception& e) {
    emit_error("internal", e);
    return 3;
  }
}
