// Serial reference kernels against their OpenMP counterparts.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "specnet/coreperiphery.hpp"
#include "specnet/pmfg.hpp"
#include "specnet/randomization.hpp"
#include "specnet/rolling.hpp"
#include "specnet/spectral.hpp"
#include "specnet/synthetic.hpp"

using namespace specnet;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  SyntheticMarketSpec spec;
  spec.n = 200;
  spec.t = 1000;
  const ReturnPanel big = synthetic_market(spec);

  CorrelationMatrix cs, cp;
  const double ts = seconds([&] { cs = correlation_matrix(big, Exec::serial); });
  const double tp = seconds([&] { cp = correlation_matrix(big, Exec::parallel); });
  row("correlation N=200", ts, tp, cs.values == cp.values);

  spec.n = 60;
  spec.t = 500;
  const ReturnPanel panel = synthetic_market(spec);
  const WeightedNetwork net = pmfg(correlation_matrix(panel).values, panel.tickers);

  CorenessVector rs, rp;
  RombachOptions ro;
  ro.num_samples = 2000;
  ro.exec = Exec::serial;
  const double r1 = seconds([&] { rs = rombach_coreness(net, ro); });
  ro.exec = Exec::parallel;
  const double r2 = seconds([&] { rp = rombach_coreness(net, ro); });
  row("rombach 2000 samples", r1, r2, rs.scores == rp.scores);

  SignificanceResult ss, sp;
  SignificanceOptions so;
  so.exec = Exec::serial;
  const double s1 = seconds([&] { ss = cp_significance(net, so); });
  so.exec = Exec::parallel;
  const double s2 = seconds([&] { sp = cp_significance(net, so); });
  row("significance 100 nulls", s1, s2, ss.null_values == sp.null_values);

  WindowConfig wc;
  wc.detectors = {Detector::louvain, Detector::lpa};
  const WindowSpec ws{250, 25};
  RollingResult a, b;
  RollingOptions opt;
  opt.exec = Exec::serial;
  const double w1 = seconds([&] { a = run_rolling(panel, ws, wc, opt); });
  opt.exec = Exec::parallel;
  const double w2 = seconds([&] { b = run_rolling(panel, ws, wc, opt); });
  bool same = a.windows.size() == b.windows.size();
  for (std::size_t i = 0; same && i < a.windows.size(); ++i)
    same = window_to_json(a.windows[i]) == window_to_json(b.windows[i]);
  row("rolling 11 windows", w1, w2, same);
  return 0;
}
