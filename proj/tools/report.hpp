#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace specnet::cli {

/// Summary tables from a rolling output directory and a portfolio report:
/// cosine_similarity.csv, frobenius.csv, modularity.csv, nmi.csv,
/// sharpe_curves.csv and cp_summary.csv. Returns the written file names.
std::vector<std::string> emit_report(const std::filesystem::path& results_dir,
                                     const std::filesystem::path& portfolio_csv,
                                     const std::filesystem::path& out_dir);

}  // namespace specnet::cli
