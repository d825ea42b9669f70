// Command-line front end. One JSON line per input file on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 negative verdict, 2 usage or input error, 3 verification failure.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ncpath/ncpath.hpp"

namespace {

using ncpath::io::Json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kVerifyFailed = 3;

struct Outcome {
  std::string text;
  int code = kOk;
};

struct Options {
  std::vector<std::string> files;
  std::string format = "edge-list";
  std::string cls = "nc-path-tree";
  int jobs = 1;
  bool dot = false;
  std::vector<int> terminals;
  std::string certificate;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    static std::mutex stdin_lock;
    std::lock_guard lock(stdin_lock);
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ncpath::GraphError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint64_t env_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("NCPATH_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ncpath::GraphError("NCPATH_SEED is not an unsigned integer");
    }
  }
  return fallback;
}

// A member certificate for the NC-path-tree class, checked before its model is used.
struct CheckedModel {
  ncpath::Certificate cert;
  bool verified = false;
};

CheckedModel checked_model(const ncpath::Graph& g) {
  CheckedModel out{ncpath::recognize(g, ncpath::TargetClass::NcPathTree), false};
  out.verified = static_cast<bool>(ncpath::verify_certificate(g, out.cert));
  return out;
}

Json non_member_result(const ncpath::Certificate& c) {
  return Json{{"error", "non-member"}, {"class", ncpath::to_string(c.target)}, {"witness", ncpath::io::to_json(*c.witness)}};
}

// Runs `body` on one input file and wraps the result in a report line.
template <class Body>
Outcome run_file(const std::string& command, const std::string& path, const Options& opt, Body body) {
  ncpath::io::RunReport report;
  report.command = command;
  report.input = path;
  int code = kOk;
  try {
    const std::string text = read_input(path);
    report.digest = ncpath::io::hex_digest(text);
    const auto t0 = std::chrono::steady_clock::now();
    const ncpath::Graph g = ncpath::parse_graph(text, ncpath::parse_format(opt.format));
    std::string raw;
    code = body(g, report, raw);
    report.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
    if (!raw.empty()) return {raw, code};
  } catch (const ncpath::GraphError& e) {
    std::cerr << "ncpath " << command << ": " << path << ": " << e.what() << '\n';
    return {"", kUsage};
  }
  return {ncpath::io::to_json(report).dump() + "\n", code};
}

template <class Body>
int run_all(const std::string& command, const Options& opt, Body body) {
  std::vector<Outcome> results(opt.files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < opt.files.size();) results[i] = run_file(command, opt.files[i], opt, body);
  };
  const int jobs = std::clamp(opt.jobs, 1, static_cast<int>(std::max<std::size_t>(1, opt.files.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  int code = kOk;
  for (const auto& r : results) {
    std::cout << r.text;
    code = std::max(code, r.code);
  }
  return code;
}

// Shared shape of the commands that need a verified model first.
template <class Solve>
auto with_model(Solve solve) {
  return [solve](const ncpath::Graph& g, ncpath::io::RunReport& report, std::string&) {
    auto cm = checked_model(g);
    report.verification = cm.verified ? "verified" : "failed";
    if (!cm.verified) {
      report.result = Json{{"error", "certificate failed verification"}};
      return kVerifyFailed;
    }
    if (cm.cert.verdict == ncpath::Verdict::NonMember) {
      report.result = non_member_result(cm.cert);
      return kNegative;
    }
    return solve(g, cm.cert.payload->model, report);
  };
}

void add_common(CLI::App* sub, Options& opt, bool dot) {
  sub->add_option("files", opt.files, "graph files, '-' for stdin")->required();
  sub->add_option("--format", opt.format, "edge-list or dimacs")->check(CLI::IsMember({"edge-list", "dimacs"}));
  sub->add_option("--jobs", opt.jobs, "files processed in parallel")->check(CLI::PositiveNumber);
  if (dot) sub->add_flag("--dot", opt.dot, "print the model as Graphviz DOT");
}

std::vector<int> parse_sizes(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.rfind("2^", 0) == 0)
      out.push_back(1 << std::stoi(tok.substr(2)));
    else
      out.push_back(std::stoi(tok));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifying recognition and optimization on NC-path-tree graphs"};
  app.require_subcommand(1);
  Options opt;

  auto* recognize_cmd = app.add_subcommand("recognize", "decide class membership with a certificate");
  add_common(recognize_cmd, opt, true);
  recognize_cmd->add_option("--class", opt.cls, "chordal | nc-path-tree | nc-path-rtree | proper-interval")
      ->check(CLI::IsMember({"chordal", "nc-path-tree", "nc-path-rtree", "proper-interval"}));
  auto* model_cmd = app.add_subcommand("model", "print the NC model");
  add_common(model_cmd, opt, true);
  auto* claw_cmd = app.add_subcommand("claw", "find an induced claw in a chordal graph");
  add_common(claw_cmd, opt, false);
  std::vector<std::pair<std::string, CLI::App*>> dom_cmds;
  for (const char* name : {"mds", "mids", "mcds"}) {
    auto* c = app.add_subcommand(name, std::string("minimum ") + (name == std::string("mcds") ? "connected " : "") +
                                           (name == std::string("mids") ? "independent " : "") + "dominating set");
    add_common(c, opt, false);
    dom_cmds.emplace_back(name, c);
  }
  auto* steiner_cmd = app.add_subcommand("steiner", "minimum Steiner tree for a terminal set");
  add_common(steiner_cmd, opt, false);
  steiner_cmd->add_option("-X,--terminals", opt.terminals, "terminal vertices, comma separated")->required()->delimiter(',');
  auto* hamcycle_cmd = app.add_subcommand("hamcycle", "Hamiltonian cycle or its obstruction");
  add_common(hamcycle_cmd, opt, false);
  auto* hampath_cmd = app.add_subcommand("hampath", "Hamiltonian path or its obstruction");
  add_common(hampath_cmd, opt, false);
  auto* minleaf_cmd = app.add_subcommand("minleaf", "spanning tree with the fewest leaves");
  add_common(minleaf_cmd, opt, false);
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
  add_common(verify_cmd, opt, false);
  verify_cmd->add_option("--certificate", opt.certificate, "certificate JSON, bare or inside a report line")->required();

  ncpath::testkit::GenSpec gen_spec;
  std::string gen_kind = "random-host-tree-nc-paths";
  std::uint64_t gen_seed = 0;
  bool all_graphs = false;
  auto* gen_cmd = app.add_subcommand("gen", "generate instances as edge lists");
  auto add_gen_options = [&](CLI::App* c) {
    c->add_option("--kind", gen_kind, "random-host-tree-nc-paths | random-proper-interval | random-chordal | exhaustive-small");
    c->add_option("--seed", gen_seed, "seed (default: NCPATH_SEED or 1)");
    c->add_option("--max-host-degree", gen_spec.params.max_host_degree);
    c->add_option("--max-path-length", gen_spec.params.max_path_length);
    c->add_option("--twin-multiplicity", gen_spec.params.twin_multiplicity);
    c->add_option("--min-cover", gen_spec.params.min_cover);
    c->add_option("--junction-rate", gen_spec.params.junction_rate);
    c->add_option("--singleton-rate", gen_spec.params.singleton_rate);
    c->add_option("--extra-rate", gen_spec.params.extra_rate);
  };
  add_gen_options(gen_cmd);
  gen_cmd->add_option("--n", gen_spec.n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--all", all_graphs, "exhaustive-small: include disconnected graphs");

  std::string bench_sizes = "2^14,2^15,2^16,2^17,2^18,2^19,2^20";
  std::vector<std::string> bench_ops{"recognize", "mcds", "hamcycle"};
  std::string bench_csv;
  int bench_repeats = 3;
  auto* bench_cmd = app.add_subcommand("bench", "time operations over growing instances");
  add_gen_options(bench_cmd);
  bench_cmd->add_option("--sizes", bench_sizes, "comma separated sizes, 2^k allowed");
  bench_cmd->add_option("--ops", bench_ops, "operations to time")->delimiter(',');
  bench_cmd->add_option("--csv", bench_csv, "write rows here instead of stdout");
  bench_cmd->add_option("--repeats", bench_repeats, "runs per measurement, fastest kept")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*recognize_cmd) {
      const auto target = ncpath::target_class_from_string(opt.cls);
      return run_all("recognize", opt, [&](const ncpath::Graph& g, ncpath::io::RunReport& report, std::string& raw) {
        auto c = ncpath::recognize(g, target);
        auto v = ncpath::verify_certificate(g, c);
        report.verification = v ? "verified" : "failed";
        if (!v) {
          report.result = Json{{"error", "certificate failed verification"}, {"reason", v.reason}};
          return kVerifyFailed;
        }
        if (opt.dot && c.payload) raw = ncpath::io::model_to_dot(c.payload->model);
        report.result = ncpath::io::to_json(c);
        return c.verdict == ncpath::Verdict::Member ? kOk : kNegative;
      });
    }
    if (*model_cmd)
      return run_all("model", opt, [&](const ncpath::Graph& g, ncpath::io::RunReport& report, std::string& raw) {
        auto cm = checked_model(g);
        report.verification = cm.verified ? "verified" : "failed";
        if (!cm.verified) {
          report.result = Json{{"error", "certificate failed verification"}};
          return kVerifyFailed;
        }
        if (cm.cert.verdict == ncpath::Verdict::NonMember) {
          report.result = non_member_result(cm.cert);
          return kNegative;
        }
        report.result = ncpath::io::model_to_json(cm.cert.payload->model);
        if (opt.dot) raw = ncpath::io::model_to_dot(cm.cert.payload->model);
        return kOk;
      });
    if (*claw_cmd)
      return run_all("claw", opt, [&](const ncpath::Graph& g, ncpath::io::RunReport& report, std::string&) {
        try {
          auto r = ncpath::find_claw_chordal(g);
          report.result = Json{{"claw", r.claw ? ncpath::io::to_json(*r.claw) : Json(nullptr)}};
          if (r.claw) {
            report.verification = ncpath::is_valid_witness(g, *r.claw) ? "verified" : "failed";
            return report.verification == "verified" ? kNegative : kVerifyFailed;
          }
          return kOk;
        } catch (const ncpath::NotChordalError& e) {
          report.result = Json{{"error", "not chordal"}, {"hole", e.hole.cycle}};
          report.verification = ncpath::is_hole(g, e.hole.cycle) ? "verified" : "failed";
          return report.verification == "verified" ? kNegative : kVerifyFailed;
        }
      });
    for (auto& [name, cmd] : dom_cmds) {
      if (!*cmd) continue;
      const std::string which = name;
      return run_all(which, opt, with_model([which](const ncpath::Graph& g, const ncpath::NcModel& m, ncpath::io::RunReport& report) {
        ncpath::DomResult r = which == "mcds" ? ncpath::mcds(g, m) : ncpath::mids(g, m);
        if (which == "mds") r.kind = ncpath::DomKind::MDS;
        report.result = ncpath::io::to_json(r);
        return kOk;
      }));
    }
    if (*steiner_cmd)
      return run_all("steiner", opt, with_model([&](const ncpath::Graph& g, const ncpath::NcModel& m, ncpath::io::RunReport& report) {
        report.result = ncpath::io::to_json(ncpath::steiner_tree(g, m, opt.terminals));
        return kOk;
      }));
    if (*hamcycle_cmd)
      return run_all("hamcycle", opt, with_model([](const ncpath::Graph& g, const ncpath::NcModel& m, ncpath::io::RunReport& report) {
        auto c = ncpath::hamiltonian_cycle(g, m);
        report.result = ncpath::io::to_json(c);
        return std::holds_alternative<ncpath::SpanResult>(c) ? kOk : kNegative;
      }));
    if (*hampath_cmd)
      return run_all("hampath", opt, with_model([](const ncpath::Graph& g, const ncpath::NcModel&, ncpath::io::RunReport& report) {
        auto p = ncpath::hamiltonian_path(g);
        report.result = ncpath::io::to_json(p);
        return std::holds_alternative<ncpath::SpanResult>(p) ? kOk : kNegative;
      }));
    if (*minleaf_cmd)
      return run_all("minleaf", opt, with_model([](const ncpath::Graph& g, const ncpath::NcModel&, ncpath::io::RunReport& report) {
        report.result = ncpath::io::to_json(ncpath::min_leaf_spanning_tree(g));
        return kOk;
      }));
    if (*verify_cmd) {
      Json j = Json::parse(read_input(opt.certificate));
      if (j.contains("result")) j = j.at("result");
      const auto cert = ncpath::io::certificate_from_json(j);
      return run_all("verify", opt, [&](const ncpath::Graph& g, ncpath::io::RunReport& report, std::string&) {
        auto v = ncpath::verify_certificate(g, cert);
        report.verification = v ? "verified" : "failed";
        report.result = Json{{"ok", static_cast<bool>(v)}, {"reason", v.reason}};
        return v ? kOk : kVerifyFailed;
      });
    }
    if (*gen_cmd) {
      gen_spec.kind = ncpath::testkit::gen_kind_from_string(gen_kind);
      gen_spec.seed = gen_seed ? gen_seed : env_seed(1);
      gen_spec.params.connected_only = !all_graphs;
      const auto graphs = ncpath::testkit::generate(gen_spec);
      std::cout << "# " << gen_spec.describe() << '\n';
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs.size() > 1) std::cout << (i ? "\n" : "") << "# graph " << i << '\n';
        std::cout << ncpath::serialize(graphs[i]);
      }
      return kOk;
    }
    if (*bench_cmd) {
      gen_spec.kind = ncpath::testkit::gen_kind_from_string(gen_kind);
      gen_spec.seed = gen_seed ? gen_seed : env_seed(1);
      const auto rows = ncpath::bench::run(parse_sizes(bench_sizes), gen_spec, bench_ops, bench_repeats);
      Json slopes = Json::object();
      for (const auto& op : bench_ops) slopes[op] = ncpath::bench::loglog_slope(rows, op);
      if (bench_csv.empty()) {
        ncpath::bench::write_csv(std::cout, rows);
        std::cerr << Json{{"command", "bench"}, {"loglog_slope", slopes}}.dump() << '\n';
      } else {
        std::ofstream out(bench_csv);
        if (!out) throw ncpath::GraphError("cannot write '" + bench_csv + "'");
        ncpath::bench::write_csv(out, rows);
        std::cout << Json{{"command", "bench"}, {"csv", bench_csv}, {"rows", rows.size()}, {"loglog_slope", slopes}}.dump() << '\n';
      }
      return kOk;
    }
  } catch (const ncpath::GraphError& e) {
    std::cerr << "ncpath: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "ncpath: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ncpath: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
