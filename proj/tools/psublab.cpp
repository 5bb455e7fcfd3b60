#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "psublab/verify.hpp"

namespace {

using namespace psublab;

int exit_code_for(const Report& r) {
  if (!r.ok) return 2;
  return r.math_ok() ? 0 : 1;
}

int cmd_analyze(const std::string& path, const RunConfig& cfg, const std::string& format) {
  GroupFile f = load_group_file(path);
  RunConfig local = cfg;
  if (f.order_cap) local.order_cap = std::max(local.order_cap, *f.order_cap);
  if (f.lattice_cap) local.lattice_cap = std::max(local.lattice_cap, *f.lattice_cap);
  Report r = analyze_text(f.name, f.text, local);
  if (format == "json")
    std::cout << report_to_json(r).dump(2) << "\n";
  else
    std::cout << report_to_text(r);
  return exit_code_for(r);
}

int cmd_verify(const std::string& dir, const RunConfig& cfg, const std::string& format) {
  auto files = load_corpus_dir(dir);
  CorpusResult result = run_corpus(files, cfg);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["reports"] = nlohmann::ordered_json::array();
    for (const Report& r : result.reports) j["reports"].push_back(report_to_json(r));
    j["groups"] = result.reports.size();
    j["exit_code"] = result.exit_code;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const Report& r : result.reports)
      std::cout << report_summary_line(r) << "\n";
    int bad = 0;
    for (const Report& r : result.reports)
      if (!r.ok || !r.math_ok()) ++bad;
    std::cout << result.reports.size() << " groups, " << bad << " problem(s), exit "
              << result.exit_code << "\n";
  }
  return result.exit_code;
}

int cmd_lattice(const std::string& path, const RunConfig& cfg, const std::string& dot_path) {
  GroupFile f = load_group_file(path);
  RunConfig local = cfg;
  if (f.order_cap) local.order_cap = std::max(local.order_cap, *f.order_cap);
  if (f.lattice_cap) local.lattice_cap = std::max(local.lattice_cap, *f.lattice_cap);
  GroupSpec spec = parse(f.text);
  Analysis a = analyze(spec, local.order_cap, local.lattice_cap);
  std::vector<bool> marked(a.lattice.nodes.size(), false);
  for (std::size_t i = 0; i < marked.size(); ++i) marked[i] = a.psub.marked[i] != 0;
  std::string dot = to_dot(a.lattice, &marked);
  if (dot_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(dot_path);
    if (!out) throw Error("cannot write " + dot_path);
    out << dot;
  }
  return 0;
}

int cmd_zsigmondy(long long a, long long n) {
  if (a < 2 || n < 2) {
    std::cerr << "zsigmondy requires a > 1 and n > 1\n";
    return 2;
  }
  auto q = zsigmondy(a, n);
  if (q)
    std::cout << *q << "\n";
  else
    std::cout << "none\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"psublab: subgroup lattices, P-subnormal chains, and theorem checks"};
  app.require_subcommand(1);

  psublab::RunConfig cfg;
  if (const char* env = std::getenv("PSUBLAB_CAP")) cfg.order_cap = std::atoi(env);
  std::string format = "text";
  std::string dot_path;
  std::string path;
  long long za = 0, zn = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cfg.order_cap, "element count cap for group closure");
    cmd->add_option("--lattice-cap", cfg.lattice_cap, "order cap for lattice enumeration");
    cmd->add_option("--seed", cfg.seed, "seed for sampled lemma checks");
    cmd->add_option("--jobs", cfg.jobs, "parallel group pipelines");
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* an = app.add_subcommand("analyze", "report on a single group file");
  an->add_option("file", path, "group definition (.grp)")->required();
  add_common(an);
  an->add_flag("--rhs-all-nodes", cfg.rhs_all_nodes,
               "check supersolvability of every proper subgroup, not just maximal ones");

  CLI::App* ver = app.add_subcommand("verify", "run the full corpus verification");
  ver->add_option("dir", path, "directory of .grp files")->required();
  add_common(ver);

  CLI::App* lat = app.add_subcommand("lattice", "emit the Hasse diagram as DOT");
  lat->add_option("file", path, "group definition (.grp)")->required();
  lat->add_option("--dot", dot_path, "output path (stdout when omitted)");
  add_common(lat);

  CLI::App* zs = app.add_subcommand("zsigmondy", "least Zsigmondy prime for (a, n)");
  zs->add_option("a", za, "base, > 1")->required();
  zs->add_option("n", zn, "exponent, > 1")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (an->parsed()) return cmd_analyze(path, cfg, format);
    if (ver->parsed()) return cmd_verify(path, cfg, format);
    if (lat->parsed()) return cmd_lattice(path, cfg, dot_path);
    if (zs->parsed()) return cmd_zsigmondy(za, zn);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
