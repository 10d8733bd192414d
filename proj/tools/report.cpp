#include "report.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "specnet/coreperiphery.hpp"
#include "specnet/error.hpp"
#include "specnet/io.hpp"

namespace specnet::cli {

namespace {

struct Table {
  std::map<std::string, std::size_t> column;
  std::vector<std::vector<std::string>> rows;

  const std::string& get(const std::vector<std::string>& row, const std::string& name) const {
    return row[column.at(name)];
  }
};

Table load(const std::filesystem::path& path, const std::vector<std::string>& required) {
  if (!std::filesystem::exists(path))
    throw ValidationError("missing upstream artifact: " + path.string());
  std::istringstream in(read_text_file(path));
  std::string line;
  Table t;
  if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");
  const auto header = split_csv_line(line);
  for (std::size_t i = 0; i < header.size(); ++i) t.column[header[i]] = i;
  for (const auto& r : required)
    if (!t.column.count(r)) throw ParseError(path.string() + ": missing column " + r);
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw ParseError(path.string() + ": row " + std::to_string(row) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(header.size()));
    t.rows.push_back(std::move(fields));
  }
  return t;
}

struct Mean {
  double sum = 0.0;
  std::size_t count = 0;
  void add(double x) {
    sum += x;
    ++count;
  }
  std::string text() const { return count ? format_double(sum / static_cast<double>(count)) : ""; }
};

const std::vector<std::string> kModes = {"full", "market", "sector"};
const std::vector<std::string> kMethods = {"rossa", "rombach", "minres"};

}  // namespace

std::vector<std::string> emit_report(const std::filesystem::path& dir,
                                     const std::filesystem::path& portfolio_csv,
                                     const std::filesystem::path& out) {
  const Table windows =
      load(dir / "windows.csv", {"window", "mode", "available", "cp_centralization", "p_value",
                                 "detector", "modularity", "community_count", "nmi_vs_full"});
  const Table fits = load(dir / "cp_fit.csv", {"window", "mode", "method", "frobenius"});
  const Table coreness = load(dir / "coreness.csv", {"window", "mode", "method", "ticker", "score"});
  const Table sharpe =
      load(portfolio_csv, {"window", "strategy", "weighting", "holding_period", "sharpe"});
  std::filesystem::create_directories(out);
  std::vector<std::pair<std::string, std::string>> files;

  {
    // (window, mode, method) -> scores in file order
    std::map<std::tuple<std::string, std::string, std::string>, std::vector<double>> vec;
    for (const auto& r : coreness.rows)
      vec[{coreness.get(r, "window"), coreness.get(r, "mode"), coreness.get(r, "method")}].push_back(
          parse_double(coreness.get(r, "score")));
    std::map<std::tuple<std::string, std::string, std::string>, Mean> cos;
    for (const auto& [key, a] : vec) {
      const auto& [w, mode, ma] = key;
      for (const auto& mb : kMethods) {
        if (mb <= ma) continue;
        const auto it = vec.find({w, mode, mb});
        if (it == vec.end()) continue;
        cos[{mode, ma, mb}].add(cosine_similarity(a, it->second));
      }
    }
    std::string text = "mode,method_a,method_b,mean_cosine,windows\n";
    for (const auto& mode : kModes)
      for (const auto& [key, m] : cos)
        if (std::get<0>(key) == mode)
          text += mode + "," + std::get<1>(key) + "," + std::get<2>(key) + "," + m.text() + "," +
                  std::to_string(m.count) + "\n";
    files.emplace_back("cosine_similarity.csv", text);
  }

  {
    std::map<std::pair<std::string, std::string>, Mean> fro;
    for (const auto& r : fits.rows)
      fro[{fits.get(r, "mode"), fits.get(r, "method")}].add(parse_double(fits.get(r, "frobenius")));
    std::string text = "mode,rossa,rombach,minres\n";
    for (const auto& mode : kModes) {
      text += mode;
      for (const auto& method : kMethods) {
        const auto it = fro.find({mode, method});
        text += "," + (it == fro.end() ? std::string() : it->second.text());
      }
      text += "\n";
    }
    files.emplace_back("frobenius.csv", text);
  }

  {
    std::vector<std::string> detectors;
    std::map<std::pair<std::string, std::string>, Mean> q, count, nmi;
    std::map<std::string, Mean> cp, pval, sig;
    std::map<std::string, std::set<std::string>> cp_windows;
    for (const auto& r : windows.rows) {
      const auto& mode = windows.get(r, "mode");
      const auto& det = windows.get(r, "detector");
      if (windows.get(r, "available") == "1" && cp_windows[mode].insert(windows.get(r, "window")).second) {
        cp[mode].add(parse_double(windows.get(r, "cp_centralization")));
        if (!windows.get(r, "p_value").empty()) {
          const double p = parse_double(windows.get(r, "p_value"));
          pval[mode].add(p);
          sig[mode].add(p < 0.05 ? 1.0 : 0.0);
        }
      }
      if (det.empty()) continue;
      if (std::find(detectors.begin(), detectors.end(), det) == detectors.end()) detectors.push_back(det);
      q[{det, mode}].add(parse_double(windows.get(r, "modularity")));
      count[{det, mode}].add(parse_double(windows.get(r, "community_count")));
      if (!windows.get(r, "nmi_vs_full").empty())
        nmi[{det, mode}].add(parse_double(windows.get(r, "nmi_vs_full")));
    }
    std::string qt = "method,mode,mean_modularity,mean_community_count,windows\n";
    std::string nt = "method,comparison,mean_nmi,windows\n";
    for (const auto& det : detectors)
      for (const auto& mode : kModes) {
        const Mean& m = q[{det, mode}];
        qt += det + "," + mode + "," + m.text() + "," + count[{det, mode}].text() + "," +
              std::to_string(m.count) + "\n";
        if (mode == "full") continue;
        const Mean& n = nmi[{det, mode}];
        nt += det + ",full_vs_" + mode + "," + n.text() + "," + std::to_string(n.count) + "\n";
      }
    files.emplace_back("modularity.csv", qt);
    files.emplace_back("nmi.csv", nt);

    std::string ct = "mode,windows,mean_cp_centralization,min_cp_centralization,max_cp_centralization,mean_p_value,fraction_p_below_0.05\n";
    for (const auto& mode : kModes) {
      std::optional<double> lo, hi;
      for (const auto& r : windows.rows)
        if (windows.get(r, "mode") == mode && windows.get(r, "available") == "1") {
          const double v = parse_double(windows.get(r, "cp_centralization"));
          lo = lo ? std::min(*lo, v) : v;
          hi = hi ? std::max(*hi, v) : v;
        }
      ct += mode + "," + std::to_string(cp[mode].count) + "," + cp[mode].text() + "," +
            (lo ? format_double(*lo) : "") + "," + (hi ? format_double(*hi) : "") + "," +
            pval[mode].text() + "," + sig[mode].text() + "\n";
    }
    files.emplace_back("cp_summary.csv", ct);
  }

  {
    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::tuple<std::string, std::string, long>, Mean> curve;
    long max_h = 0;
    for (const auto& r : sharpe.rows) {
      std::pair key{sharpe.get(r, "strategy"), sharpe.get(r, "weighting")};
      if (std::find(order.begin(), order.end(), key) == order.end()) order.push_back(key);
      const long h = std::stol(sharpe.get(r, "holding_period"));
      max_h = std::max(max_h, h);
      curve[{key.first, key.second, h}].add(parse_double(sharpe.get(r, "sharpe")));
    }
    std::string text = "strategy,weighting,holding_period,mean_sharpe,windows\n";
    for (const auto& [s, w] : order)
      for (long h = 1; h <= max_h; ++h) {
        const Mean& m = curve[{s, w, h}];
        text += s + "," + w + "," + std::to_string(h) + "," + m.text() + "," +
                std::to_string(m.count) + "\n";
      }
    files.emplace_back("sharpe_curves.csv", text);
  }

  std::vector<std::string> names;
  for (const auto& [name, text] : files) {
    write_text_atomic(out / name, text);
    names.push_back(name);
  }
  return names;
}

}  // namespace specnet::cli
