#include "psublab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "psublab/numtheory.hpp"

namespace psublab {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    default: return "not-applicable";
  }
}

Analysis analyze(const GroupSpec& spec, int order_cap, int lattice_cap) {
  Analysis a;
  a.group = std::make_unique<Group>(build(spec, order_cap));
  a.lattice = enumerate(*a.group, lattice_cap);
  a.psub = psubnormal_map(a.lattice);
  a.summary = summarize(*a.group, a.lattice);
  return a;
}

// ---------------------------------------------------------------------------
// Theorem and corollary

TheoremVerdict check_theorem(const Analysis& a, bool all_nodes) {
  const Lattice& L = a.lattice;
  TheoremVerdict v;

  LhsResult lhs = lhs_theorem(L, a.psub);
  v.lhs = lhs.holds;
  std::vector<char> seen_class(L.classes.size(), 0);
  for (int h : lhs.violators) {
    int c = L.class_of[h];
    if (seen_class[c]) continue;
    seen_class[c] = 1;
    ViolatorInfo vi;
    vi.node = L.classes[c][0];
    vi.order = L.nodes[vi.node].order;
    vi.class_size = int(L.classes[c].size());
    for (int e : L.node_gens[vi.node])
      vi.generators.push_back(cycle_string(L.parent->elements()[e]));
    v.violators.push_back(std::move(vi));
  }

  v.rhs_residual_frattini_trivial = a.summary.residual_frattini_trivial;
  v.rhs_all_proper_supersolvable = true;
  if (all_nodes) {
    for (int i = 0; i < L.full_node; ++i) {
      if (!group_is_supersolvable(L.node_group(i))) {
        v.rhs_all_proper_supersolvable = false;
        v.rhs_witness_order = L.nodes[i].order;
        break;
      }
    }
  } else {
    // Supersolvability is subgroup-closed, so the maximal subgroups decide.
    for (int m : L.maximal_subgroups()) {
      if (!group_is_supersolvable(L.node_group(m))) {
        v.rhs_all_proper_supersolvable = false;
        v.rhs_witness_order = L.nodes[m].order;
        break;
      }
    }
  }
  v.rhs = v.rhs_residual_frattini_trivial && v.rhs_all_proper_supersolvable;
  v.equivalent = (v.lhs == v.rhs);
  return v;
}

Outcome check_corollary(const Analysis& a, const TheoremVerdict& v) {
  if (!v.lhs || a.summary.pi.size() < 4) return Outcome::NotApplicable;
  return a.summary.supersolvable ? Outcome::Pass : Outcome::Fail;
}

// ---------------------------------------------------------------------------
// Lemma 2: closure properties of P-subnormality

namespace {

struct QuotientAnalysis {
  Quotient q;
  Lattice ql;
  PSubnormalMap qm;
};

}  // namespace

Outcome check_lemma2(const Analysis& a, const RunConfig& cfg,
                     std::vector<std::string>& notes) {
  const Lattice& L = a.lattice;
  const Group& G = *a.group;
  const int n = int(L.nodes.size());

  // Part 4 exactly: conjugate nodes carry identical marks.
  for (const auto& cls : L.classes) {
    for (int i : cls)
      if (a.psub.marked[i] != a.psub.marked[cls[0]]) {
        notes.push_back("L2(4): conjugation invariance broken");
        return Outcome::Fail;
      }
  }

  std::vector<int> normals;
  for (int i : L.normal_subgroups())
    if (i != L.trivial_node && i != L.full_node) normals.push_back(i);

  std::map<int, std::unique_ptr<QuotientAnalysis>> qcache;
  auto quot = [&](int nn) -> QuotientAnalysis& {
    auto& slot = qcache[nn];
    if (!slot) {
      slot = std::make_unique<QuotientAnalysis>();
      slot->q = quotient(G, L.nodes[nn]);
      slot->ql = enumerate(slot->q.group, G.order() + 1);
      slot->qm = psubnormal_map(slot->ql);
    }
    return *slot;
  };

  std::map<int, std::unique_ptr<PSubnormalMap>> subcache;
  auto sub_map = [&](int top) -> PSubnormalMap& {
    auto& slot = subcache[top];
    if (!slot) slot = std::make_unique<PSubnormalMap>(psubnormal_map(L, top));
    return *slot;
  };

  bool ok = true;
  auto check_parts12 = [&](int nn, int h) {
    QuotientAnalysis& qa = quot(nn);
    int img = qa.ql.node_index(qa.q.image_of(L.nodes[h].bits));
    if (img < 0) {
      notes.push_back("L2: image of a subgroup missing from quotient lattice");
      ok = false;
      return;
    }
    if (a.psub.marked[h]) {
      int hn = L.node_index(L.nodes[h].bits & L.nodes[nn].bits);
      if (!is_psubnormal(sub_map(nn), hn)) {
        notes.push_back("L2(1): intersection with normal subgroup not P-subnormal");
        ok = false;
      }
      if (!is_psubnormal(qa.qm, img)) {
        notes.push_back("L2(1): image in quotient not P-subnormal");
        ok = false;
      }
    }
    if (L.contains(h, nn) && is_psubnormal(qa.qm, img) && !a.psub.marked[h]) {
      notes.push_back("L2(2): lift from quotient not P-subnormal");
      ok = false;
    }
  };
  auto check_part3 = [&](int k, int h) {
    if (k == h || !L.contains(k, h)) return;
    if (is_psubnormal(sub_map(k), h) && a.psub.marked[k] && !a.psub.marked[h]) {
      notes.push_back("L2(3): transitivity broken");
      ok = false;
    }
  };

  if (n <= cfg.lemma2_exhaustive_limit) {
    for (int nn : normals)
      for (int h = 0; h < n && ok; ++h) check_parts12(nn, h);
    for (int k = 0; k < n && ok; ++k) {
      if (k == L.full_node || L.nodes[k].order == 1) continue;
      for (int h = 0; h < n && ok; ++h) check_part3(k, h);
    }
  } else {
    std::mt19937 rng(cfg.seed);
    std::map<int, std::vector<int>> under_cache;
    for (int s = 0; s < cfg.lemma2_samples && ok; ++s) {
      if (!normals.empty()) {
        int nn = normals[rng() % normals.size()];
        int h = int(rng() % n);
        check_parts12(nn, h);
      }
      int k = int(rng() % n);
      if (k == L.full_node || L.nodes[k].order == 1) continue;
      auto& under = under_cache[k];
      if (under.empty()) under = L.nodes_under(k);
      check_part3(k, under[rng() % under.size()]);
    }
  }
  return ok ? Outcome::Pass : Outcome::Fail;
}

// ---------------------------------------------------------------------------
// Lemma 3: prime-index subgroups of solvable groups

Outcome check_lemma3(const Analysis& a, std::vector<std::string>& notes) {
  const Lattice& L = a.lattice;
  const Group& G = *a.group;
  if (!a.summary.solvable) return Outcome::NotApplicable;

  bool any = false;
  for (int h = 0; h < int(L.nodes.size()); ++h) {
    if (h == L.full_node) continue;
    long long idx = L.index_in(L.full_node, h);
    if ((long long)L.nodes[h].order * idx != G.order() || !is_prime(idx)) continue;
    any = true;

    Bitset corebits = L.nodes[h].bits;
    for (int c : L.classes[L.class_of[h]]) corebits = corebits & L.nodes[c].bits;
    int corenode = L.node_index(corebits);
    bool ss = corenode == L.trivial_node
                  ? group_is_supersolvable(G)
                  : group_is_supersolvable(quotient(G, L.nodes[corenode]).group);
    if (!ss) {
      notes.push_back("L3: G/core not supersolvable at prime-index subgroup of order " +
                      std::to_string(L.nodes[h].order));
      return Outcome::Fail;
    }
  }
  return any ? Outcome::Pass : Outcome::NotApplicable;
}

// ---------------------------------------------------------------------------
// Lemma 4: no prime relative indexes above a non-normal Sylow normalizer

Outcome check_lemma4(const Analysis& a, std::vector<std::string>& notes) {
  const Lattice& L = a.lattice;
  const Group& G = *a.group;
  if (a.summary.pi.empty()) return Outcome::NotApplicable;
  long long p = a.summary.pi.back();
  int P = sylow(G, L, p);
  if (L.normal_flag[P]) return Outcome::NotApplicable;

  SubgroupRef N = normalizer(G, L.nodes[P]);
  int nn = L.node_index(N.bits);
  if (nn < 0) {
    notes.push_back("L4: normalizer missing from lattice");
    return Outcome::Fail;
  }
  std::vector<int> over;
  for (int i = 0; i < int(L.nodes.size()); ++i)
    if (L.contains(i, nn)) over.push_back(i);
  for (int h : over)
    for (int k : over) {
      if (h == k || !L.contains(h, k)) continue;
      long long idx = L.nodes[h].order / L.nodes[k].order;
      if (is_prime(idx)) {
        notes.push_back("L4: prime index " + std::to_string(idx) +
                        " above the Sylow normalizer");
        return Outcome::Fail;
      }
    }
  return Outcome::Pass;
}

// ---------------------------------------------------------------------------
// Lemma 5(3): supersolvable iff all Sylow normalizers P-subnormal

Outcome check_lemma5_3(const Analysis& a, std::vector<std::string>& notes) {
  const Lattice& L = a.lattice;
  const Group& G = *a.group;
  bool all_marked = true;
  for (long long p : a.summary.pi) {
    int P = sylow(G, L, p);
    SubgroupRef N = normalizer(G, L.nodes[P]);
    int nn = L.node_index(N.bits);
    if (nn < 0 || !a.psub.marked[nn]) {
      all_marked = false;
      break;
    }
  }
  if (all_marked != a.summary.supersolvable) {
    notes.push_back("L5.3: biconditional failed");
    return Outcome::Fail;
  }
  return Outcome::Pass;
}

// ---------------------------------------------------------------------------
// Lemma 6: structure of minimal non-supersolvable groups

namespace {

bool is_minimal_normal_bits(const Group& G, const Bitset& bits) {
  if (bits.count() <= 1) return false;
  if (!is_normal(G, bits)) return false;
  bool ok = true;
  bits.for_each([&](int x) {
    if (!ok || x == 0) return;
    std::vector<int> seed{x};
    if (normal_closure(G, seed, G.generator_indices()) != bits) ok = false;
  });
  return ok;
}

bool is_minimal_nonabelian(const Group& G) {
  if (G.is_abelian()) return false;
  Lattice L = enumerate(G, G.order() + 1);
  for (int m : L.maximal_subgroups())
    if (!subset_is_abelian(G, L.nodes[m].bits)) return false;
  return true;
}

bool is_cyclic_of_prime_power_order(const Group& G) {
  return group_is_cyclic(G) && prime_divisors(G.order()).size() <= 1;
}

}  // namespace

Outcome check_lemma6(const Analysis& a, std::vector<std::string>& notes) {
  const Lattice& L = a.lattice;
  const Group& G = *a.group;
  if (!a.summary.minimal_non_supersolvable) return Outcome::NotApplicable;
  bool ok = true;
  auto fail = [&](const std::string& what) {
    notes.push_back("L6(" + what + ")");
    ok = false;
  };

  // (1) solvable with at most three prime divisors
  if (!a.summary.solvable || a.summary.pi.size() > 3) fail("1: solvable, |pi|<=3");

  // (2) non-Schmidt groups have an ordered Sylow tower of supersolvable type
  if (!a.summary.schmidt && !a.summary.has_susolv_sylow_tower) fail("2: Sylow tower");

  // (3) unique normal Sylow subgroup equal to the residual
  std::vector<int> normal_sylows;
  for (long long p : a.summary.pi) {
    int s = sylow(G, L, p);
    if (L.normal_flag[s]) normal_sylows.push_back(s);
  }
  if (normal_sylows.size() != 1) {
    fail("3: unique normal Sylow");
    return Outcome::Fail;
  }
  int P = normal_sylows[0];
  if (P != a.summary.residual_node) fail("3: P = residual");
  long long pprime = prime_divisors(L.nodes[P].order)[0];

  // (4) |P/Phi(P)| > p and P/Phi(P) minimal normal in G/Phi(G)
  int PhiP = frattini_of_node(L, P);
  if (L.nodes[P].order / L.nodes[PhiP].order <= pprime) fail("4: |P/Phi(P)| > p");
  int PhiG = a.summary.frattini_node;
  if ((L.nodes[P].bits & L.nodes[PhiG].bits) != L.nodes[PhiP].bits)
    fail("4: P meet Phi(G) = Phi(P)");
  if (L.nodes[PhiG].order == 1) {
    if (!is_minimal_normal_bits(G, L.nodes[P].bits)) fail("4: minimal normal");
  } else {
    Quotient q = quotient(G, L.nodes[PhiG]);
    if (!is_minimal_normal_bits(q.group, q.image_of(L.nodes[P].bits)))
      fail("4: minimal normal");
  }

  // (5) Phi(P) supersolvably embedded: a G-normal chain with prime steps
  {
    std::vector<int> inside;
    for (int i : L.normal_subgroups())
      if (L.contains(PhiP, i)) inside.push_back(i);
    std::vector<char> reach(L.nodes.size(), 0);
    reach[L.trivial_node] = 1;
    for (int b : inside) {
      if (reach[b]) continue;
      for (int s : inside) {
        if (!reach[s] || !L.contains(b, s)) continue;
        if (is_prime(L.nodes[b].order / L.nodes[s].order)) {
          reach[b] = 1;
          break;
        }
      }
    }
    if (!reach[PhiP]) fail("5: Phi(P) supersolvably embedded");
  }

  // (6) complements: Q/(Q meet Phi(G)) minimal non-abelian or cyclic of
  //     prime power order; (7) non-prime-index maximal subgroups conjugate,
  //     and conjugate to Phi(P)Q
  std::vector<int> complement_reps;
  {
    std::vector<char> seen(L.classes.size(), 0);
    for (int i = 0; i < int(L.nodes.size()); ++i) {
      if ((long long)L.nodes[i].order * L.nodes[P].order != G.order()) continue;
      if ((L.nodes[i].bits & L.nodes[P].bits).count() != 1) continue;
      if (seen[L.class_of[i]]) continue;
      seen[L.class_of[i]] = 1;
      complement_reps.push_back(L.classes[L.class_of[i]][0]);
    }
  }
  if (complement_reps.empty()) {
    fail("6: no complement to P");
    return Outcome::Fail;
  }
  for (int Qn : complement_reps) {
    Group Gq = L.node_group(Qn);
    Bitset meet = L.nodes[Qn].bits & L.nodes[PhiG].bits;
    Bitset meet_in_q(Gq.order());
    meet.for_each([&](int e) {
      int idx = Gq.index_of(G.elements()[e]);
      if (idx < 0) throw Error("complement element missing from its own group");
      meet_in_q.set(idx);
    });
    Group Qbar = quotient(Gq, SubgroupRef{meet_in_q, meet_in_q.count()}).group;
    if (!is_cyclic_of_prime_power_order(Qbar) && !is_minimal_nonabelian(Qbar))
      fail("6: Q/(Q meet Phi(G)) shape");
  }

  {
    std::vector<int> nonprime_max;
    for (int m : L.maximal_subgroups())
      if (!is_prime(L.index_in(L.full_node, m))) nonprime_max.push_back(m);
    if (nonprime_max.empty()) {
      fail("7: no non-prime-index maximal subgroup");
    } else {
      int cls = L.class_of[nonprime_max[0]];
      for (int m : nonprime_max)
        if (L.class_of[m] != cls) fail("7: non-prime-index maximals not conjugate");
      for (int Qn : complement_reps) {
        Bitset prod(G.order());
        L.nodes[PhiP].bits.for_each([&](int x) {
          L.nodes[Qn].bits.for_each([&](int y) { prod.set(G.mul(x, y)); });
        });
        int pn = L.node_index(prod);
        if (pn < 0 || L.class_of[pn] != cls) fail("7: not conjugate to Phi(P)Q");
      }
    }
  }

  return ok ? Outcome::Pass : Outcome::Fail;
}

// ---------------------------------------------------------------------------
// Reports

bool Report::math_ok() const {
  if (!ok) return false;
  if (!theorem.equivalent) return false;
  if (corollary == Outcome::Fail) return false;
  for (auto& [name, o] : lemmas)
    if (o == Outcome::Fail) return false;
  for (auto& n : notes)
    if (n.rfind("certificate", 0) == 0) return false;
  return true;
}

Report make_report(const std::string& name, const GroupSpec& spec,
                   const Analysis& a, const RunConfig& cfg) {
  Report r;
  r.name = name;
  r.spec_text = print(spec);
  r.ok = true;
  r.order = a.group->order();
  r.summary = a.summary;
  r.frattini_order = a.lattice.nodes[a.summary.frattini_node].order;
  r.residual_order = a.lattice.nodes[a.summary.residual_node].order;
  r.theorem = check_theorem(a, cfg.rhs_all_nodes);
  r.corollary = check_corollary(a, r.theorem);
  r.lemmas.emplace_back("L2", check_lemma2(a, cfg, r.notes));
  r.lemmas.emplace_back("L3", check_lemma3(a, r.notes));
  r.lemmas.emplace_back("L4", check_lemma4(a, r.notes));
  r.lemmas.emplace_back("L5.3", check_lemma5_3(a, r.notes));
  r.lemmas.emplace_back("L6", check_lemma6(a, r.notes));

  const Lattice& L = a.lattice;
  std::vector<char> seen(L.classes.size(), 0);
  for (int h : L.two_maximal_subgroups()) {
    int c = L.class_of[h];
    if (seen[c] || !a.psub.marked[h]) continue;
    seen[c] = 1;
    int rep = L.classes[c][0];
    ChainCertificate cert = certificate(L, a.psub, rep);
    if (!verify_certificate(L, cert, rep, L.full_node)) {
      r.notes.push_back("certificate re-verification failed at node " +
                        std::to_string(rep));
      continue;
    }
    CertificateInfo ci;
    ci.key = "order" + std::to_string(L.nodes[rep].order) + "_class" + std::to_string(c);
    for (int node : cert.nodes) ci.orders.push_back(L.nodes[node].order);
    ci.indexes = cert.indexes;
    r.certificates.push_back(std::move(ci));
  }
  return r;
}

Report analyze_text(const std::string& name, const std::string& text,
                    const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    GroupSpec spec = parse(text);
    Analysis a = analyze(spec, cfg.order_cap, cfg.lattice_cap);
    r = make_report(name, spec, a, cfg);
  } catch (const std::exception& e) {
    r.name = name;
    r.ok = false;
    r.error = e.what();
  }
  r.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

// ---------------------------------------------------------------------------
// Corpus

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  GroupFile f;
  f.name = std::filesystem::path(path).stem().string();
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#!", 0) == 0) {
      std::istringstream iss(line.substr(2));
      std::string key;
      int value = 0;
      if (iss >> key >> value) {
        if (key == "lattice-cap") f.lattice_cap = value;
        if (key == "order-cap") f.order_cap = value;
      }
    }
    f.text += line;
    f.text += '\n';
  }
  return f;
}

std::vector<GroupFile> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".grp") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<GroupFile> out;
  for (const auto& p : paths) out.push_back(load_group_file(p.string()));
  return out;
}

CorpusResult run_corpus(const std::vector<GroupFile>& files, const RunConfig& cfg) {
  CorpusResult result;
  result.reports.resize(files.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      RunConfig local = cfg;
      if (files[i].order_cap) local.order_cap = std::max(local.order_cap, *files[i].order_cap);
      if (files[i].lattice_cap)
        local.lattice_cap = std::max(local.lattice_cap, *files[i].lattice_cap);
      result.reports[i] = analyze_text(files[i].name, files[i].text, local);
    }
  };
  int jobs = std::max(1, std::min(cfg.jobs, int(files.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  bool op_error = false, math_error = false;
  for (const Report& r : result.reports) {
    if (!r.ok)
      op_error = true;
    else if (!r.math_ok())
      math_error = true;
  }
  result.exit_code = math_error ? 1 : (op_error ? 2 : 0);
  return result;
}

// ---------------------------------------------------------------------------
// Rendering

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["group"] = r.name;
  if (!r.ok) {
    j["error"] = r.error;
    j["timing_ms"] = r.timing_ms;
    return j;
  }
  j["spec"] = r.spec_text;
  j["order"] = r.order;
  j["pi"] = r.summary.pi;
  nlohmann::ordered_json flags;
  flags["abelian"] = r.summary.abelian;
  flags["nilpotent"] = r.summary.nilpotent;
  flags["solvable"] = r.summary.solvable;
  flags["supersolvable"] = r.summary.supersolvable;
  flags["schmidt"] = r.summary.schmidt;
  flags["minimal_non_supersolvable"] = r.summary.minimal_non_supersolvable;
  flags["has_susolv_sylow_tower"] = r.summary.has_susolv_sylow_tower;
  flags["primitive"] = r.summary.primitive;
  flags["residual_frattini_trivial"] = r.summary.residual_frattini_trivial;
  j["flags"] = flags;
  nlohmann::ordered_json fact = nlohmann::ordered_json::array();
  for (auto& [p, e] : r.summary.factorization) fact.push_back({p, e});
  j["factorization"] = fact;
  j["frattini_order"] = r.frattini_order;
  j["residual_order"] = r.residual_order;

  nlohmann::ordered_json th;
  th["lhs"] = r.theorem.lhs;
  th["rhs"] = r.theorem.rhs;
  th["equivalent"] = r.theorem.equivalent;
  th["rhs_residual_frattini_trivial"] = r.theorem.rhs_residual_frattini_trivial;
  th["rhs_all_proper_supersolvable"] = r.theorem.rhs_all_proper_supersolvable;
  if (r.theorem.rhs_witness_order)
    th["rhs_witness_order"] = *r.theorem.rhs_witness_order;
  nlohmann::ordered_json viols = nlohmann::ordered_json::array();
  for (const auto& v : r.theorem.violators) {
    nlohmann::ordered_json jv;
    jv["order"] = v.order;
    jv["class_size"] = v.class_size;
    jv["generators"] = v.generators;
    viols.push_back(jv);
  }
  th["violators"] = viols;
  j["theorem"] = th;

  nlohmann::ordered_json lem;
  for (auto& [name, o] : r.lemmas) lem[name] = to_string(o);
  j["lemmas"] = lem;
  j["corollary"] = to_string(r.corollary);

  nlohmann::ordered_json certs;
  for (const auto& c : r.certificates) {
    nlohmann::ordered_json jc;
    jc["orders"] = c.orders;
    jc["indexes"] = c.indexes;
    certs[c.key] = jc;
  }
  j["certificates"] = certs;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["timing_ms"] = r.timing_ms;
  return j;
}

std::string report_summary_line(const Report& r) {
  std::ostringstream os;
  os << r.name;
  for (std::size_t i = r.name.size(); i < 18; ++i) os << ' ';
  if (!r.ok) {
    os << " ERROR: " << r.error;
    return os.str();
  }
  os << " order " << r.order;
  os << "  lhs=" << (r.theorem.lhs ? 1 : 0) << " rhs=" << (r.theorem.rhs ? 1 : 0)
     << " eq=" << (r.theorem.equivalent ? 1 : 0);
  for (auto& [name, o] : r.lemmas) os << "  " << name << "=" << to_string(o);
  os << "  cor=" << to_string(r.corollary);
  return os.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "group: " << r.name << "\n";
  if (!r.ok) {
    os << "error: " << r.error << "\n";
    return os.str();
  }
  os << "spec: " << r.spec_text << "\n";
  os << "order: " << r.order << "  pi: {";
  for (std::size_t i = 0; i < r.summary.pi.size(); ++i)
    os << (i ? " " : "") << r.summary.pi[i];
  os << "}\n";
  os << "flags: abelian=" << r.summary.abelian << " nilpotent=" << r.summary.nilpotent
     << " solvable=" << r.summary.solvable
     << " supersolvable=" << r.summary.supersolvable << " schmidt=" << r.summary.schmidt
     << " min_non_supersolvable=" << r.summary.minimal_non_supersolvable
     << " sylow_tower=" << r.summary.has_susolv_sylow_tower
     << " primitive=" << r.summary.primitive << "\n";
  os << "frattini order: " << r.frattini_order
     << "  residual order: " << r.residual_order
     << "  Phi(residual) trivial: " << r.summary.residual_frattini_trivial << "\n";
  os << "theorem: lhs=" << r.theorem.lhs << " rhs=" << r.theorem.rhs
     << " equivalent=" << r.theorem.equivalent << "\n";
  for (const auto& v : r.theorem.violators) {
    os << "  violator class: order " << v.order << ", " << v.class_size
       << " conjugates, generators";
    for (auto& g : v.generators) os << " " << g;
    os << "\n";
  }
  os << "lemmas:";
  for (auto& [name, o] : r.lemmas) os << " " << name << "=" << to_string(o);
  os << "  corollary=" << to_string(r.corollary) << "\n";
  for (auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace psublab
