#ifndef MTCHAN_CONFIG_HPP
#define MTCHAN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mtchan {

/// Scenario configuration shared by all subcommands. Values come from
/// an optional key=value config file, overridden by same-named CLI
/// flags (CLI wins).
struct ExperimentConfig {
  std::optional<char> system;          // 'A', 'B', or 'C'
  double d = 20.0;                     // um
  double D = 150.0;                    // um^2/s (systems A/B)
  double Da = 930.0;                   // um^2/s (system C)
  double Db = 150.0;                   // um^2/s (system C)
  std::vector<double> delta = {1, 25, 50, 75, 100};  // s
  std::vector<double> gsnr_db = {0.0, 10.0};         // dB
  double p_clean = 0.99;
  std::uint64_t trials = 1'000'000;
  std::uint64_t geo_trials = 10'000'000;
  std::uint64_t seed = 20170301;
  double perturb_scale = 1.0;          // validate-only fault injection
  std::string out = "-";               // '-' = stdout

  void validate() const;  // throws std::invalid_argument
};

/// Parse a flat key=value file with '#' comments into cfg.
void load_config_file(const std::string& path, ExperimentConfig& cfg);

std::vector<double> parse_list(const std::string& text);

}  // namespace mtchan

#endif
