// Command-line front end: ABC index evaluation, extremal constructions,
// brute-force theorem checks, conjecture reports and figure sweeps.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abc/error.hpp"
#include "abc/families.hpp"
#include "abc/graph6.hpp"
#include "abc/index_math.hpp"
#include "abc/invariants.hpp"
#include "abc/report_json.hpp"
#include "abc/svg_chart.hpp"
#include "abc/sweep.hpp"
#include "abc/verifier.hpp"

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

// "-" means stdout.
void emit_json(const std::string& path, const nlohmann::json& doc) {
  if (path == "-") {
    std::cout << doc.dump(2) << '\n';
  } else {
    write_file(path, doc.dump(2) + "\n");
  }
}

abc::Family family_or_throw(const std::string& name) {
  if (auto f = abc::parse_family(name)) return *f;
  throw UsageError("unknown family '" + name + "' (expected independence, pendant, edgeconn, turan)");
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string describe(const abc::ExtremalReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << ' ' << abc::to_string(r.constraint.kind) << '=' << r.constraint.value
     << " class_size=" << r.class_size;
  if (r.max_value) os << " max=" << fixed12(*r.max_value);
  if (r.formula_value) os << " formula=" << fixed12(*r.formula_value);
  os << " iso_classes=" << r.maximizer_iso_classes.size();
  for (const auto& g : r.maximizer_iso_classes) os << ' ' << abc::write_graph6(g);
  if (r.runner_up_gap) os << " gap=" << abc::format_value(*r.runner_up_gap);
  if (r.informational) {
    os << " [informational: outside theorem hypotheses]";
  } else {
    os << (r.unique_and_matches ? " VERIFIED" : " MISMATCH");
  }
  return os.str();
}

int run_compute(const std::string& text) {
  const auto g = abc::parse_graph6(trim(text));
  std::cout << fixed12(abc::abc_index(g)) << '\n';
  return kOk;
}

int run_build(const std::string& family, int n, int param, bool summary) {
  const abc::Graph g = abc::build({family_or_throw(family), n, param});
  if (!summary) {
    std::cout << abc::write_graph6(g) << '\n';
    return kOk;
  }
  std::cout << "graph6: " << abc::write_graph6(g) << '\n'
            << "order: " << g.order() << '\n'
            << "edges: " << g.edge_count() << '\n'
            << "degrees:";
  for (int d : g.degree_sequence()) std::cout << ' ' << d;
  std::cout << '\n'
            << "independence_number: " << abc::independence_number(g) << '\n'
            << "pendant_count: " << abc::pendant_count(g) << '\n'
            << "edge_connectivity: " << abc::edge_connectivity(g) << '\n'
            << "chromatic_number: " << abc::chromatic_number(g) << '\n'
            << "abc_index: " << fixed12(abc::abc_index(g)) << '\n';
  return kOk;
}

int run_formula(const std::string& family, int n, int param) {
  double value = 0.0;
  if (family == "bipartite") {
    value = abc::formula_bipartite(n);
  } else {
    value = abc::formula({family_or_throw(family), n, param});
  }
  std::cout << fixed12(value) << '\n';
  return kOk;
}

int run_verify(const std::string& theorem, int n, const abc::ScanOptions& opts, const std::string& json_path) {
  const nlohmann::json inputs = {{"theorem", theorem}, {"n", n}, {"shards", opts.shards}};
  nlohmann::json results = nlohmann::json::array();
  bool ok = true;
  std::vector<std::string> lines;

  if (theorem == "edge-addition") {
    const auto r = abc::check_edge_addition_monotonicity(n);
    ok = r.holds;
    results.push_back(abc::to_json(r));
    lines.push_back("n=" + std::to_string(n) + " graphs=" + std::to_string(r.graphs) + " additions=" +
                    std::to_string(r.additions) + " strict=" + std::to_string(r.strict_increases) +
                    (r.holds ? " VERIFIED" : " VIOLATED"));
  } else {
    std::vector<abc::ExtremalReport> reports;
    if (theorem == "independence") {
      reports = abc::verify_independence(n, opts);
    } else if (theorem == "pendant") {
      reports = abc::verify_pendant(n, opts);
    } else if (theorem == "edgeconn") {
      reports = abc::verify_edgeconn(n, opts);
    } else if (theorem == "bipartite" || theorem == "chromatic") {
      reports.push_back(abc::verify_chromatic_bipartite(n, opts));
    } else {
      throw UsageError("unknown theorem '" + theorem + "' (expected independence, pendant, edgeconn, bipartite, edge-addition)");
    }
    ok = abc::all_verified(reports);
    for (const auto& r : reports) {
      results.push_back(abc::to_json(r));
      lines.push_back(describe(r));
    }
  }

  if (json_path != "-") {
    for (const auto& line : lines) std::cout << line << '\n';
  }
  if (!json_path.empty()) emit_json(json_path, abc::make_envelope("verify", inputs, results));
  return ok ? kOk : kVerifyFailed;
}

int run_conjecture_chromatic(int n, int chi, const abc::ScanOptions& opts, const std::string& json_path,
                             const std::string& witness_path) {
  std::vector<int> chis;
  if (chi > 0) {
    chis.push_back(chi);
  } else {
    for (int c = 3; c <= n; ++c) chis.push_back(c);
  }
  nlohmann::json results = nlohmann::json::array();
  std::string witnesses;
  for (int c : chis) {
    const auto r = abc::check_chromatic_conjecture(n, c, opts);
    results.push_back(abc::to_json(r));
    if (json_path != "-") {
      std::cout << "n=" << n << " chi=" << c << " class_size=" << r.class_size << " brute_max=" << fixed12(r.brute_max)
                << " turan=" << fixed12(r.turan_value) << (r.holds ? " holds" : " COUNTEREXAMPLE") << '\n';
    }
    if (!r.holds)
      for (const auto& g : r.witness) witnesses += abc::write_graph6(g) + "\n";
  }
  if (!witness_path.empty() && !witnesses.empty()) write_file(witness_path, witnesses);
  if (!json_path.empty()) {
    emit_json(json_path, abc::make_envelope("conjecture chromatic", {{"n", n}, {"chi", chi}}, results));
  }
  return kOk;
}

int run_conjecture_bridge(int n_max, const std::string& json_path) {
  const auto r = abc::check_bridge_monotonicity(n_max);
  if (json_path != "-") {
    std::cout << r.description() << " over " << r.domain() << ": " << r.points_checked() << " points, "
              << r.violations().size() << " violations\n";
    for (const auto& v : r.violations())
      std::cout << "  witness n=" << v.point[0] << " x=" << v.point[1] << " margin=" << v.margin << '\n';
  }
  if (!json_path.empty()) {
    emit_json(json_path, abc::make_envelope("conjecture bridge", {{"n_max", n_max}}, nlohmann::json::array({abc::to_json(r)})));
  }
  return kOk;
}

int run_sweep(const std::string& families, const std::string& orders, const std::string& csv_path,
              const std::string& svg_path, const std::string& json_path) {
  std::vector<int> ns;
  for (const auto& s : split(orders)) {
    try {
      ns.push_back(std::stoi(s));
    } catch (const std::exception&) {
      throw UsageError("--n expects a comma-separated list of integers, got '" + s + "'");
    }
  }
  if (ns.empty()) throw UsageError("--n needs at least one order");
  std::sort(ns.begin(), ns.end());

  std::vector<abc::SweepRow> rows;
  for (const auto& name : split(families)) {
    const auto kind = abc::parse_sweep_param(name);
    if (!kind) throw UsageError("unknown sweep family '" + name + "' (expected beta, p, k)");
    for (int n : ns) {
      abc::SweepRange range = abc::figure_range(*kind);
      const abc::SweepRange ok = abc::valid_range(n, *kind);
      if (range.hi > ok.hi) {
        std::cerr << "note: " << abc::to_string(*kind) << " range clamped to [" << range.lo << ", " << ok.hi
                  << "] at n=" << n << '\n';
        range.hi = ok.hi;
      }
      const int one[] = {n};
      const auto part = abc::sweep(one, *kind, range);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  if (rows.empty()) throw UsageError("--families needs at least one of beta, p, k");

  if (csv_path.empty() || csv_path == "-") {
    abc::write_csv(std::cout, rows);
  } else {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + csv_path + " for writing");
    abc::write_csv(out, rows);
  }
  if (!svg_path.empty()) {
    abc::ChartSpec spec;
    spec.title = "Maximum ABC index (" + families + ")";
    write_file(svg_path, abc::render_svg(rows, spec));
  }
  if (!json_path.empty()) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : rows) results.push_back(abc::to_json(r));
    emit_json(json_path, abc::make_envelope("sweep", {{"families", families}, {"n", ns}}, results));
  }
  return kOk;
}

int run_claim_grid(int n_max, const std::string& json_path) {
  const auto grid = abc::check_claim_grid(n_max);
  const auto poly = abc::check_big_h_positive(20, 23);
  if (json_path != "-") {
    for (const auto* r : {&grid, &poly}) {
      std::cout << r->description() << " over " << r->domain() << ": " << r->points_checked() << " points, "
                << r->violations().size() << " violations\n";
      for (const auto& v : r->violations()) {
        std::cout << "  violation at (";
        for (std::size_t i = 0; i < v.point.size(); ++i) std::cout << (i ? "," : "") << v.point[i];
        std::cout << ") margin=" << v.margin << '\n';
      }
    }
  }
  if (!json_path.empty()) {
    emit_json(json_path, abc::make_envelope("claim-grid", {{"n_max", n_max}},
                                            nlohmann::json::array({abc::to_json(grid), abc::to_json(poly)})));
  }
  return grid.passed() && poly.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atom-bond connectivity index: extremal constructions and brute-force verification"};
  app.require_subcommand(1);

  std::string graph6_text;
  auto* compute = app.add_subcommand("compute", "Print the ABC index of a graph6-encoded graph");
  compute->add_option("graph6", graph6_text, "headerless graph6 string")->required();

  std::string family;
  int n = 0;
  int param = 0;
  bool summary = false;
  bool as_graph6 = false;
  auto* build = app.add_subcommand("build", "Construct an extremal graph");
  build->add_option("family", family, "independence | pendant | edgeconn | turan")->required();
  build->add_option("--n", n, "order")->required();
  build->add_option("--param", param, "beta, p, k or t")->required();
  auto* summary_flag = build->add_flag("--summary", summary, "print invariants instead of graph6");
  build->add_flag("--graph6", as_graph6, "print graph6 (default)")->excludes(summary_flag);

  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form maximum");
  formula->add_option("family", family, "independence | pendant | edgeconn | turan | bipartite")->required();
  formula->add_option("--n", n, "order")->required();
  formula->add_option("--param", param, "beta, p, k or t (ignored for bipartite)");

  std::string theorem;
  abc::ScanOptions opts;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Brute-force check of a theorem; exit 1 on mismatch");
  verify->add_option("theorem", theorem, "independence | pendant | edgeconn | bipartite | edge-addition")->required();
  verify->add_option("--n", n, "order")->required();
  verify->add_option("--shards", opts.shards, "edge-mask partitions scanned in parallel")->check(CLI::PositiveNumber);
  verify->add_flag("--allow-n8", opts.allow_n8, "permit the 2^28-mask scan at n = 8");
  verify->add_option("--json", json_path, "write the JSON report envelope here ('-' for stdout)");

  std::string conjecture_kind;
  int chi = 0;
  int n_max = 0;
  std::string witness_path;
  auto* conjecture = app.add_subcommand("conjecture", "Conjecture support reports (always exit 0)");
  conjecture->add_option("kind", conjecture_kind, "chromatic | bridge")->required();
  conjecture->add_option("--n", n, "order (chromatic)");
  conjecture->add_option("--chi", chi, "chromatic number; all 3..n when omitted");
  conjecture->add_option("--n-max", n_max, "largest order (bridge)");
  conjecture->add_option("--shards", opts.shards, "edge-mask partitions")->check(CLI::PositiveNumber);
  conjecture->add_option("--json", json_path, "write the JSON report envelope here ('-' for stdout)");
  conjecture->add_option("--witness", witness_path, "graph6 file receiving counterexample maximizers");

  std::string families = "beta,p,k";
  std::string orders = "200,250,300,350";
  std::string csv_path;
  std::string svg_path;
  auto* sweep = app.add_subcommand("sweep", "Closed-form sweeps behind the maximum-ABC figures");
  sweep->add_option("--families", families, "comma list of beta, p, k");
  sweep->add_option("--n", orders, "comma list of orders");
  sweep->add_option("--csv", csv_path, "CSV output path (stdout when omitted)");
  sweep->add_option("--svg", svg_path, "SVG chart output path");
  sweep->add_option("--json", json_path, "JSON envelope output path");

  auto* claim = app.add_subcommand("claim-grid", "Scan the edge-cut inequality and H(n,k) positivity");
  claim->add_option("--n-max", n_max, "largest order")->required();
  claim->add_option("--json", json_path, "write the JSON report envelope here ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*compute) return run_compute(graph6_text);
    if (*build) return run_build(family, n, param, summary);
    if (*formula) return run_formula(family, n, param);
    if (*verify) return run_verify(theorem, n, opts, json_path);
    if (*conjecture) {
      if (conjecture_kind == "chromatic") {
        if (n == 0) throw UsageError("conjecture chromatic needs --n");
        return run_conjecture_chromatic(n, chi, opts, json_path, witness_path);
      }
      if (conjecture_kind == "bridge") {
        if (n_max == 0) throw UsageError("conjecture bridge needs --n-max");
        return run_conjecture_bridge(n_max, json_path);
      }
      throw UsageError("unknown conjecture '" + conjecture_kind + "' (expected chromatic or bridge)");
    }
    if (*sweep) return run_sweep(families, orders, csv_path, svg_path, json_path);
    if (*claim) return run_claim_grid(n_max, json_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
