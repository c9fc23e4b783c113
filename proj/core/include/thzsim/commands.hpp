#ifndef THZSIM_COMMANDS_HPP
#define THZSIM_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thzsim/scenario.hpp"
#include "thzsim/secrecy.hpp"

namespace thzsim::commands {

// Column-oriented numeric table plus the provenance metadata that goes into
// CSV header comments and JSON documents.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
};

void add_provenance(Table& t, const scenario::Scenario& s);

Table gas_spectrum(const scenario::Scenario& s, double f_start_ghz, double f_stop_ghz,
                   int n_points);

Table weather_attenuation(const scenario::Scenario& s, const std::vector<double>& rates_mm_hr);

enum class BerSweep { distance, rate, snr };
BerSweep ber_sweep_from_name(const std::string& name);

Table ber(const scenario::Scenario& s, BerSweep sweep, double start, double stop, int n_points);

struct SecrecyMapOutput {
  Table table;  // x_m, y_m, cs_gbps
  secrecy::SecrecyMapResult map;
};

SecrecyMapOutput secrecy_map(const scenario::Scenario& s, int threads = 0);

struct MonteCarloOptions {
  std::uint64_t seed = 12345;
  std::size_t samples = 0;  // 0 = disabled
};

Table outage(const scenario::Scenario& s, const std::vector<double>& target_rates_gbps,
             const MonteCarloOptions& mc = {});

}  // namespace thzsim::commands

#endif
