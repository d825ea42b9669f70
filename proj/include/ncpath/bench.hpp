#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ncpath/domination.hpp"
#include "ncpath/hamiltonicity.hpp"
#include "ncpath/recognition.hpp"
#include "ncpath/testkit/generators.hpp"

namespace ncpath::bench {

struct Row {
  int n = 0;
  std::int64_t m = 0;
  std::string op;
  std::int64_t wall_ns = 0;
};

inline const std::vector<std::string>& known_ops() {
  static const std::vector<std::string> ops{"recognize", "mcds", "mids", "hamcycle"};
  return ops;
}

// Runs op once on g; throws on unknown names.
inline void run_op(const std::string& op, const Graph& g) {
  if (op == "recognize") {
    auto c = recognize(g, TargetClass::NcPathTree);
    if (!verify_certificate(g, c)) throw std::logic_error("benchmark certificate failed verification");
  } else if (op == "mcds") {
    (void)mcds(g);
  } else if (op == "mids") {
    (void)mids(g);
  } else if (op == "hamcycle") {
    (void)hamiltonian_cycle(g);
  } else {
    throw GraphError("unknown benchmark operation '" + op + "'");
  }
}

/// Times each op on one generated instance per size, keeping the fastest of `repeats` runs.
inline std::vector<Row> run(const std::vector<int>& sizes, testkit::GenSpec base, const std::vector<std::string>& ops,
                            int repeats = 3) {
  std::vector<Row> rows;
  for (int n : sizes) {
    base.n = n;
    const Graph g = testkit::gen(base);
    for (const auto& op : ops) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int r = 0; r < std::max(1, repeats); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        run_op(op, g);
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min<std::int64_t>(best, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
      }
      rows.push_back({g.n(), g.m(), op, best});
    }
  }
  return rows;
}

/// Least-squares slope of log(wall time) against log(n + m) over the rows of one op.
inline double loglog_slope(const std::vector<Row>& rows, const std::string& op) {
  std::vector<double> xs, ys;
  for (const auto& r : rows)
    if (r.op == op) {
      xs.push_back(std::log(static_cast<double>(r.n + r.m)));
      ys.push_back(std::log(static_cast<double>(std::max<std::int64_t>(1, r.wall_ns))));
    }
  const double k = static_cast<double>(xs.size());
  if (xs.size() < 2) return std::nan("");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

inline void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << "n,m,op,wall_ns\n";
  for (const auto& r : rows) os << r.n << ',' << r.m << ',' << r.op << ',' << r.wall_ns << '\n';
}

}  // namespace ncpath::bench
