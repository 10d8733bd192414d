#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "specnet/io.hpp"

namespace fs = std::filesystem;
using specnet::read_text_file;

namespace {

const fs::path kFixture = fs::path(SPECNET_DATA_DIR) / "fixture_prices.csv";

struct Run {
  int code = 0;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "specnet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream err, out;
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  const int code = specnet::cli::run_cli(static_cast<int>(argv.size()), argv.data());
  std::cerr.rdbuf(old_err);
  std::cout.rdbuf(old_out);
  return {code, err.str() + out.str()};
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("specnet_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::size_t lines(const fs::path& p) {
  const auto t = read_text_file(p);
  return static_cast<std::size_t>(std::count(t.begin(), t.end(), '\n'));
}

/// Returns the directory holding returns.csv for the fixture.
fs::path ingested(const std::string& name) {
  const auto dir = scratch(name);
  REQUIRE(run({"ingest", "--input", kFixture.string(), "--out", dir.string()}).code == 0);
  return dir;
}

}  // namespace

TEST_CASE("spectra writes eigenvalues and a manifest") {
  const auto dir = ingested("spectra");
  const auto r = run({"spectra", "--input", (dir / "returns.csv").string(), "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "eigenvalues.csv"));
  CHECK(fs::exists(dir / "spectra.manifest.json"));
  const auto m = nlohmann::json::parse(read_text_file(dir / "spectra.manifest.json"));
  CHECK(m.at("outputs").contains("eigenvalues.csv"));
  const auto first = read_text_file(dir / "spectra.manifest.json");
  fs::remove(dir / "eigenvalues.csv");
  CHECK(run({"spectra", "--input", (dir / "returns.csv").string(), "--out", dir.string()}).code == 0);
  CHECK(read_text_file(dir / "spectra.manifest.json") == first);
  CHECK(fs::exists(dir / "eigenvalues.csv"));
}

TEST_CASE("usage and input errors exit with 1") {
  const auto missing = run({"spectra", "--input", "/nonexistent/r.csv"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("/nonexistent/r.csv") != std::string::npos);
  CHECK(run({"spectra", "--input", "x.csv", "--bogus"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const auto dir = ingested("errors");
  CHECK(run({"pmfg", "--input", (dir / "returns.csv").string(), "--mode", "diagonal"}).code == 1);
  CHECK(run({"report", "--results", dir.string()}).code == 1);
}

TEST_CASE("thread cap comes from the environment") {
  const auto dir = ingested("threads");
  ::setenv("SPECNET_THREADS", "zero", 1);
  CHECK(run({"spectra", "--input", (dir / "returns.csv").string(), "--out", dir.string()}).code == 1);
  ::setenv("SPECNET_THREADS", "2", 1);
  CHECK(run({"spectra", "--input", (dir / "returns.csv").string(), "--out", dir.string()}).code == 0);
  ::unsetenv("SPECNET_THREADS");
}

TEST_CASE("config file values apply and flags override them") {
  const auto dir = ingested("config");
  const auto cfg = dir / "run.ini";
  specnet::write_text_atomic(cfg, "[pmfg]\nmode = market\ntransform = shifted\n");
  CHECK(run({"--config", cfg.string(), "pmfg", "--input", (dir / "returns.csv").string(), "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "pmfg_market.csv"));
  CHECK(run({"--config", cfg.string(), "pmfg", "--input", (dir / "returns.csv").string(), "--out", dir.string(),
             "--mode", "full"}).code == 0);
  CHECK(fs::exists(dir / "pmfg_full.csv"));
  const auto m = nlohmann::json::parse(read_text_file(dir / "pmfg.manifest.json"));
  CHECK(m.at("config").get<std::string>().find("shifted") != std::string::npos);
}

TEST_CASE("full pipeline on the bundled fixture yields six report tables") {
  const auto dir = ingested("pipeline");
  const std::string returns = (dir / "returns.csv").string();
  const std::string out = dir.string();
  CHECK(run({"pmfg", "--input", returns, "--out", out}).code == 0);
  CHECK(lines(dir / "pmfg_full.csv") == 1 + 3 * (16 - 2));
  CHECK(run({"coreperiphery", "--input", returns, "--out", out, "--rombach-samples", "100", "--significance",
             "--n-rand", "20", "--seed", "3"}).code == 0);
  CHECK(lines(dir / "coreness.csv") == 1 + 3 * 16);
  CHECK(run({"communities", "--input", returns, "--out", out, "--seed", "3"}).code == 0);
  CHECK(lines(dir / "partitions.csv") == 1 + 16 * 9);
  CHECK(run({"rolling", "--input", returns, "--out", out, "--window", "120", "--step", "60", "--rombach-samples", "50",
             "--significance", "on", "--n-rand", "10", "--seed", "3"}).code == 0);
  for (const char* f : {"windows.csv", "heatmap_cp.csv", "heatmap_nmi.csv", "communities.csv"}) CHECK(fs::exists(dir / f));
  CHECK(run({"portfolio", "--returns", returns, "--window", "120", "--step", "60", "--max-hold", "30", "--seed", "3",
             "--out", (dir / "portfolio.csv").string()}).code == 0);
  CHECK(run({"report", "--results", out}).code == 0);
  const auto rep = dir / "report";
  for (const char* f : {"cosine_similarity.csv", "frobenius.csv", "modularity.csv", "nmi.csv", "sharpe_curves.csv", "cp_summary.csv"})
    CHECK(fs::exists(rep / f));
  CHECK(lines(rep / "modularity.csv") == 1 + 3 * 3);
  CHECK(lines(rep / "frobenius.csv") == 1 + 3);
  CHECK(read_text_file(rep / "frobenius.csv").rfind("mode,rossa,rombach,minres\n", 0) == 0);
  CHECK(lines(rep / "sharpe_curves.csv") == 1 + 14 * 30);

  // the same seed reproduces the rolling outputs byte for byte
  const auto before = read_text_file(dir / "windows.csv");
  fs::remove(dir / "windows.csv");
  CHECK(run({"rolling", "--input", returns, "--out", out, "--window", "120", "--step", "60", "--rombach-samples", "50",
             "--significance", "on", "--n-rand", "10", "--seed", "3"}).code == 0);
  CHECK(read_text_file(dir / "windows.csv") == before);
}

TEST_CASE("comma lists work in config files and on the command line") {
  const auto dir = ingested("lists");
  const auto cfg = dir / "lists.ini";
  specnet::write_text_atomic(cfg, "[communities]\ndetectors = louvain,lpa\nmodes = full\n");
  CHECK(run({"--config", cfg.string(), "communities", "--input", (dir / "returns.csv").string(), "--out", dir.string()}).code == 0);
  const auto parts = read_text_file(dir / "partitions.csv");
  CHECK(parts.find(",lpa,") != std::string::npos);
  CHECK(parts.find(",gn,") == std::string::npos);
  CHECK(lines(dir / "partitions.csv") == 1 + 16 * 2);
  CHECK(run({"communities", "--input", (dir / "returns.csv").string(), "--out", dir.string(), "--detectors", "gn",
             "--modes", "full,market"}).code == 0);
  CHECK(lines(dir / "partitions.csv") == 1 + 16 * 2);
}
