#ifndef PSUBLAB_VERIFY_HPP
#define PSUBLAB_VERIFY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psublab/groupdef.hpp"
#include "psublab/psubnormal.hpp"
#include "psublab/structure.hpp"

#include "json.hpp"

namespace psublab {

struct RunConfig {
  int order_cap = 5000;
  int lattice_cap = 2000;
  unsigned seed = 0;
  int jobs = 1;
  bool rhs_all_nodes = false;       // debug: check every proper subgroup, not
                                    // just the maximal ones
  int lemma2_exhaustive_limit = 200;
  int lemma2_samples = 500;
};

// One group taken through the whole pipeline. The Group is heap-allocated so
// the lattice's parent pointer survives moves.
struct Analysis {
  std::unique_ptr<Group> group;
  Lattice lattice;
  PSubnormalMap psub;
  StructureSummary summary;
};

Analysis analyze(const GroupSpec& spec, int order_cap, int lattice_cap);

struct ViolatorInfo {
  int node = -1;
  long long order = 0;
  int class_size = 0;
  std::vector<std::string> generators;
};

struct CertificateInfo {
  std::string key;
  std::vector<long long> orders;
  std::vector<long long> indexes;
};

struct TheoremVerdict {
  bool lhs = false;
  bool rhs = false;
  bool equivalent = false;
  bool rhs_residual_frattini_trivial = false;
  bool rhs_all_proper_supersolvable = false;
  std::optional<long long> rhs_witness_order;  // a non-supersolvable proper subgroup
  std::vector<ViolatorInfo> violators;         // one entry per conjugacy class
};

enum class Outcome { Pass, Fail, NotApplicable };
const char* to_string(Outcome o);

TheoremVerdict check_theorem(const Analysis& a, bool all_nodes = false);
Outcome check_corollary(const Analysis& a, const TheoremVerdict& v);
Outcome check_lemma2(const Analysis& a, const RunConfig& cfg,
                     std::vector<std::string>& notes);
Outcome check_lemma3(const Analysis& a, std::vector<std::string>& notes);
Outcome check_lemma4(const Analysis& a, std::vector<std::string>& notes);
Outcome check_lemma5_3(const Analysis& a, std::vector<std::string>& notes);
Outcome check_lemma6(const Analysis& a, std::vector<std::string>& notes);

struct Report {
  std::string name;
  std::string spec_text;
  bool ok = false;      // parsed, built, analyzed
  std::string error;    // set when !ok
  long long order = 0;
  long long frattini_order = 0;
  long long residual_order = 0;
  StructureSummary summary;
  TheoremVerdict theorem;
  Outcome corollary = Outcome::NotApplicable;
  std::vector<std::pair<std::string, Outcome>> lemmas;
  std::vector<std::string> notes;
  std::vector<CertificateInfo> certificates;  // one per 2-maximal class
  double timing_ms = 0;

  bool math_ok() const;
};

Report make_report(const std::string& name, const GroupSpec& spec,
                   const Analysis& a, const RunConfig& cfg);

// Parse/build/analyze one group definition; failures land in Report::error.
Report analyze_text(const std::string& name, const std::string& text,
                    const RunConfig& cfg);

// Group definition file with optional "#!" pragma lines
// ("#! lattice-cap N", "#! order-cap N") that raise the caps for this file.
struct GroupFile {
  std::string name;
  std::string text;
  std::optional<int> lattice_cap;
  std::optional<int> order_cap;
};

GroupFile load_group_file(const std::string& path);
std::vector<GroupFile> load_corpus_dir(const std::string& dir);  // sorted

struct CorpusResult {
  std::vector<Report> reports;
  int exit_code = 0;  // 0 ok, 1 mathematical violation, 2 operational error
};

CorpusResult run_corpus(const std::vector<GroupFile>& files, const RunConfig& cfg);

nlohmann::ordered_json report_to_json(const Report& r);
std::string report_to_text(const Report& r);
std::string report_summary_line(const Report& r);

}  // namespace psublab

#endif
