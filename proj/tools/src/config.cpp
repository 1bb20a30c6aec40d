#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mtchan {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void check_grid(const std::vector<double>& g, const char* name) {
  if (g.empty())
    throw std::invalid_argument(std::string(name) + " grid must be nonempty");
  if (!std::is_sorted(g.begin(), g.end()) ||
      std::adjacent_find(g.begin(), g.end()) != g.end())
    throw std::invalid_argument(std::string(name) +
                                " grid must be strictly increasing");
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size())
      throw std::invalid_argument("bad number in list: " + tok);
    out.push_back(v);
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (!(d > 0.0) || !(D > 0.0) || !(Da > 0.0) || !(Db > 0.0))
    throw std::invalid_argument("physical parameters must be positive");
  check_grid(delta, "delta");
  for (double dl : delta)
    if (!(dl > 0.0)) throw std::invalid_argument("delta values must be positive");
  check_grid(gsnr_db, "gsnr");
  if (!(p_clean > 0.0 && p_clean < 1.0))
    throw std::invalid_argument("p_clean must lie in (0, 1)");
  if (trials == 0 || geo_trials == 0)
    throw std::invalid_argument("trial counts must be positive");
  if (!(perturb_scale > 0.0))
    throw std::invalid_argument("perturb-scale must be positive");
  if (system && *system != 'A' && *system != 'B' && *system != 'C')
    throw std::invalid_argument("system must be A, B, or C");
}

void load_config_file(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "system")
      cfg.system = val.empty() ? std::optional<char>{} : std::optional<char>{val[0]};
    else if (key == "d")
      cfg.d = std::stod(val);
    else if (key == "D")
      cfg.D = std::stod(val);
    else if (key == "Da")
      cfg.Da = std::stod(val);
    else if (key == "Db")
      cfg.Db = std::stod(val);
    else if (key == "delta")
      cfg.delta = parse_list(val);
    else if (key == "gsnr")
      cfg.gsnr_db = parse_list(val);
    else if (key == "p_clean")
      cfg.p_clean = std::stod(val);
    else if (key == "trials")
      cfg.trials = std::stoull(val);
    else if (key == "geo_trials")
      cfg.geo_trials = std::stoull(val);
    else if (key == "seed")
      cfg.seed = std::stoull(val);
    else if (key == "perturb_scale")
      cfg.perturb_scale = std::stod(val);
    else if (key == "out")
      cfg.out = val;
    else
      throw std::invalid_argument("unknown config key: " + key);
  }
}

}  // namespace mtchan
