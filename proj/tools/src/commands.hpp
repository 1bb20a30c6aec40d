#ifndef MTCHAN_COMMANDS_HPP
#define MTCHAN_COMMANDS_HPP

#include "config.hpp"
#include "mtc/csv.hpp"

namespace mtchan {

mtc::csv::CsvTable cmd_curves(const ExperimentConfig& cfg);
mtc::csv::CsvTable cmd_const_gsnr(const ExperimentConfig& cfg);
mtc::csv::CsvTable cmd_ber_vs_gsnr(const ExperimentConfig& cfg);
mtc::csv::CsvTable cmd_case_study(const ExperimentConfig& cfg);
mtc::csv::CsvTable cmd_symbol_duration(const ExperimentConfig& cfg);

/// Runs the cross-route, KS, and Monte-Carlo-vs-analytic checks.
/// Returns the table and sets all_pass.
mtc::csv::CsvTable cmd_validate(const ExperimentConfig& cfg, bool& all_pass);

}  // namespace mtchan

#endif
