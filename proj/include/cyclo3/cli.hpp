#pragma once

#include <algorithm>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "cyclo3/catalog.hpp"
#include "cyclo3/charsum.hpp"
#include "cyclo3/identities.hpp"
#include "cyclo3/paperbook.hpp"
#include "cyclo3/scheme.hpp"

namespace cyclo3::cli {

inline const std::vector<std::string>& all_targets() {
  static const std::vector<std::string> t{"fields", "partition", "lemma2", "gauss", "thm1",
                                          "thm2i",  "thm2ii",    "duals",  "im10",  "appendix"};
  return t;
}

struct RunConfig {
  unsigned s = 1;
  std::vector<std::string> targets;  // subset of all_targets(), any order
  bool targets_explicit = false;     // false for --all
  TowerModuli moduli;
  std::string json_path;
  bool big = false;
  std::uint64_t seed = 20240601;
  bool verbose = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Raised for configurations that are rejected before any work is done.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Field sizes each s admits: G up to s = 4, H up to s = 2 (s = 3 with --big).
inline bool g_allowed(const RunConfig& c) { return c.s <= 4; }
inline bool h_allowed(const RunConfig& c) { return c.s <= 2 || (c.s == 3 && c.big); }

namespace detail {

/// Lazily computed objects shared between targets.
class Pipeline {
 public:
  explicit Pipeline(const RunConfig& c) : cfg_(c) {
    threads_ = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  }

  unsigned threads() const { return threads_; }

  const FieldTower& tower() {
    if (!tower_) tower_ = build_tower(cfg_.s, cfg_.moduli);
    return *tower_;
  }

  const CyclotomicPartition& partition() {
    if (!partition_) partition_ = partition_by_psiD(tower(), D());
    return *partition_;
  }

  const InverseTraceSet& D() {
    if (!D_) D_ = compute_D(tower());
    return *D_;
  }

  const ClassContext& context(FieldLabel label) {
    auto& slot = contexts_[label];
    if (!slot) slot = std::make_unique<ClassContext>(class_context(tower(), label, threads_));
    return *slot;
  }

  const Reconciliation& reconciliation(const std::string& scheme) {
    auto& slot = reconciled_[scheme];
    if (!slot) slot = std::make_unique<Reconciliation>(reconcile(context(field_of(scheme)), partition(), scheme));
    return *slot;
  }

  const std::vector<std::int64_t>& class_sums(FieldLabel label) {
    auto& slot = class_sums_[label];
    if (slot.empty()) slot = lifted_class_sums(tower(), label, threads_);
    return slot;
  }

 private:
  const RunConfig& cfg_;
  unsigned threads_;
  std::optional<FieldTower> tower_;
  std::optional<CyclotomicPartition> partition_;
  std::optional<InverseTraceSet> D_;
  std::map<FieldLabel, std::unique_ptr<ClassContext>> contexts_;
  std::map<std::string, std::unique_ptr<Reconciliation>> reconciled_;
  std::map<FieldLabel, std::vector<std::int64_t>> class_sums_;
};

struct Outcome {
  std::vector<Report> reports;
  std::vector<std::string> notes;
};

inline Report fields_report(Pipeline& pl, const RunConfig& cfg) {
  const auto& t = pl.tower();
  Report r{"field tower at s = " + std::to_string(t.s)};
  r.add("Norm_{G/F}(gamma) = omega", t.G.norm(t.F.degree(), t.gamma) == t.embed_G.apply(t.omega));
  r.add("Norm_{H/F}(beta) = omega", t.H.norm(t.F.degree(), t.beta) == t.embed_H.apply(t.omega));
  r.add("gamma primitive in G", t.G.is_primitive_element(t.gamma));
  r.add("beta primitive in H", t.H.is_primitive_element(t.beta));

  for (auto label : {FieldLabel::E, FieldLabel::F, FieldLabel::G}) {
    const auto& K = t.field(label);
    if (K.degree() > 24) continue;
    std::int64_t sum = 0;
    for (Element u = 0; u < K.size(); ++u) sum += K.psi(u);
    r.add(std::string("sum of psi over ") + to_string(label) + " = 0", sum == 0, std::to_string(sum));
  }

  std::mt19937_64 rng(cfg.seed);
  const auto& F = t.F;
  const bool exhaustive = F.size() <= 64;
  const std::uint64_t samples = exhaustive ? F.size() * F.size() : 2000;
  bool hom_G = true, hom_H = true, frob = true;
  for (std::uint64_t n = 0; n < samples; ++n) {
    const Element a = exhaustive ? n / F.size() : rng() % F.size();
    const Element b = exhaustive ? n % F.size() : rng() % F.size();
    const auto& eG = t.embed_G;
    const auto& eH = t.embed_H;
    if (eG.apply(F.mul(a, b)) != t.G.mul(eG.apply(a), eG.apply(b)) || eG.apply(a ^ b) != (eG.apply(a) ^ eG.apply(b)))
      hom_G = false;
    if (eH.apply(F.mul(a, b)) != t.H.mul(eH.apply(a), eH.apply(b)) || eH.apply(a ^ b) != (eH.apply(a) ^ eH.apply(b)))
      hom_H = false;
    if (F.square(a ^ b) != (F.square(a) ^ F.square(b))) frob = false;
  }
  const std::string how = exhaustive ? " (exhaustive)" : " (" + std::to_string(samples) + " seeded samples)";
  r.add("F -> G embedding is a ring map" + how, hom_G && t.embed_G.apply(1) == 1);
  r.add("F -> H embedding is a ring map" + how, hom_H && t.embed_H.apply(1) == 1);
  r.add("Frobenius is additive on F" + how, frob);
  return r;
}

inline void add_flag_notes(Outcome& o, const SchemeRecord& r) {
  std::string srg;
  for (std::size_t k = 0; k < r.flags.srg_relations.size(); ++k) {
    if (r.flags.srg_relations[k]) srg += (srg.empty() ? "R" : ", R") + std::to_string(k + 1);
  }
  std::ostringstream os;
  os << r.id << " on " << r.field << ": primitive " << (r.flags.is_primitive ? "yes" : "no") << ", self-dual "
     << (r.flags.is_self_dual ? "yes" : "no") << ", strongly regular relations " << (srg.empty() ? "none" : srg);
  if (r.flags.p_squared_is_scalar) os << ", P^2 = |X| I " << (*r.flags.p_squared_is_scalar ? "yes" : "no");
  o.notes.push_back(os.str());
}

inline void scheme_target(Pipeline& pl, const std::string& id, Outcome& o) {
  const auto& rc = pl.reconciliation(id);
  o.reports.push_back(verify_record(rc.scheme));
  o.reports.push_back(reconcile_table(appendix().table_for(id), rc.scheme, pl.partition()));
  const auto& c = pl.context(field_of(id));
  if (c.K.degree() <= 12) {
    Report r{"pair-count oracle for " + id + " on " + c.field_name};
    const auto oracle = brute_force_intersection_oracle(c, FusionPattern::from_partition(pl.partition()));
    r.add("counts constant on every relation", oracle.constant, oracle.detail);
    r.add("oracle intersection numbers = eigenmatrix formula", oracle.B == rc.scheme.B);
    o.reports.push_back(r);
  }
  add_flag_notes(o, rc.scheme);
}

inline void gauss_target(Pipeline& pl, const RunConfig& cfg, Outcome& o) {
  const auto& t = pl.tower();
  const auto ring = make_cyclotomic_ring(t.M());
  const auto gF = gauss_sums(ring, pl.class_sums(FieldLabel::F));
  o.reports.push_back(verify_gauss_sum_modulus(gF, t.F.size(), "Gauss sums on F"));
  o.reports.push_back(verify_t1_gauss_identity(t, pl.partition(), gF));
  o.reports.push_back(verify_periods_from_sums(gF, gauss_periods(t, FieldLabel::F, pl.threads())));
  if (g_allowed(cfg)) {
    const auto gG = gauss_sums(ring, pl.class_sums(FieldLabel::G));
    o.reports.push_back(verify_hasse_davenport(gF, gG, 2));
    const auto& cG = pl.context(FieldLabel::G);
    GaussPeriodVector eG{FieldLabel::G, t.M(), cG.class_size, cG.eta};
    o.reports.push_back(verify_periods_from_sums(gG, eG));
    o.reports.push_back(eta_prime_law_check(t, pl.D(), eG));
    if (t.G.degree() <= BinaryField::kMaxLogTableDegree) {
      Report r{"streamed vs tabulated periods on G"};
      r.add("identical", table_periods(t.G, t.M(), t.base_exponent(FieldLabel::G)) == cG.eta);
      o.reports.push_back(r);
    }
  } else {
    o.notes.push_back("gauss: G skipped at s = " + std::to_string(cfg.s));
  }
  if (h_allowed(cfg)) {
    const auto gH = gauss_sums(ring, pl.class_sums(FieldLabel::H));
    o.reports.push_back(verify_hasse_davenport(gF, gH, 3));
    const auto& cH = pl.context(FieldLabel::H);
    GaussPeriodVector eH{FieldLabel::H, t.M(), cH.class_size, cH.eta};
    o.reports.push_back(verify_periods_from_sums(gH, eH));
    o.notes.push_back("gauss: periods on H take " + std::to_string(distinct_values(eH)) + " distinct values");
  } else {
    o.notes.push_back("gauss: H skipped at s = " + std::to_string(cfg.s) + (cfg.s == 3 ? " (needs --big)" : ""));
  }
}

inline void lemma2_target(Pipeline& pl, Outcome& o) {
  const auto& p = pl.partition();
  o.reports.push_back(verify_lemma2(p));
  o.reports.push_back(delta_square_check(p));
  Report remark = verify_remark_eqs(p);
  // The printed form of T1^2 T2^(-1) is known to be wrong; it is reported as
  // a note and the expanded identity is verified in its place.
  Report kept{remark.title};
  for (const auto& c : remark.checks) {
    if (c.name.rfind("T1^2 T2^(-1)", 0) == 0 && !c.passed) {
      o.notes.push_back("printed identity fails: " + c.name + " (" + c.detail + ")");
    } else {
      kept.checks.push_back(c);
    }
  }
  o.reports.push_back(kept);
  o.reports.push_back(t1sq_t2inv_expansion(p));
}

inline void im10_target(Pipeline& pl, const RunConfig& cfg, Outcome& o, Catalog& cat) {
  const auto& t = pl.tower();
  const auto im = im10_construct(t.F, im10_default_input(t.F), cfg.s, pl.threads());
  Report r{"three-class refinement of a two-class scheme on F"};
  r.add("input is a two-class scheme", im.two_class.flags.is_scheme);
  r.add("refinement is a three-class scheme", im.three_class.flags.is_scheme && im.three_class.d() == 3);
  r.add("refinement is self-dual", im.three_class.flags.is_self_dual);
  std::size_t srg = 0;
  for (bool b : im.three_class.flags.srg_relations) srg += b;
  r.add("two relations are strongly regular", srg == 2, std::to_string(srg) + " strongly regular");
  o.reports.push_back(r);
  o.reports.push_back(verify_record(im.three_class));
  const auto& thm1 = pl.reconciliation("thm1").scheme;
  o.notes.push_back(std::string("im10 vs thm1: P ") + (im.three_class.P == thm1.P ? "identical" : "different") +
                    (same_eigenmatrix_up_to_order(im.three_class.P, thm1.P) ? ", equal up to ordering"
                                                                             : ", not equal under any ordering"));
  add_flag_notes(o, im.three_class);
  cat.schemes.push_back(im.three_class);
}

inline std::vector<std::string> available_schemes(const RunConfig& cfg) {
  std::vector<std::string> out{"thm1"};
  if (g_allowed(cfg)) out.push_back("thm2i");
  if (h_allowed(cfg)) out.push_back("thm2ii");
  return out;
}

}  // namespace detail

/// Executes the targets in dependency order. Exit 0 iff every check passed.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.s < 1) {
    err << "usage: --s must be at least 1\n";
    return kExitUsage;
  }
  if (cfg.s > 5) {
    err << "usage: s = " << cfg.s << " exceeds the supported tower (s <= 5)\n";
    return kExitUsage;
  }
  std::set<std::string> wanted(cfg.targets.begin(), cfg.targets.end());
  for (const auto& t : wanted) {
    if (std::find(all_targets().begin(), all_targets().end(), t) == all_targets().end()) {
      err << "usage: unknown target '" << t << "'\n";
      return kExitUsage;
    }
  }
  if (wanted.empty()) {
    err << "usage: no targets (use --targets or --all)\n";
    return kExitUsage;
  }
  if (cfg.targets_explicit) {
    if (wanted.count("thm2ii") && !h_allowed(cfg)) {
      err << "usage: the scheme on H at s = " << cfg.s
          << (cfg.s == 3 ? " needs --big\n" : " is out of reach (2^" + std::to_string(9 * cfg.s) + " elements)\n");
      return kExitUsage;
    }
    if (wanted.count("thm2i") && !g_allowed(cfg)) {
      err << "usage: the scheme on G at s = " << cfg.s << " is out of reach\n";
      return kExitUsage;
    }
    if (wanted.count("im10") && cfg.s > 4) {
      err << "usage: im10 is limited to s <= 4\n";
      return kExitUsage;
    }
  }

  detail::Pipeline pl(cfg);
  detail::Outcome o;
  Catalog cat;
  try {
    pl.tower();
  } catch (const ModulusRejected& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto schemes = detail::available_schemes(cfg);
  const auto has_scheme = [&](const std::string& id) {
    return std::find(schemes.begin(), schemes.end(), id) != schemes.end();
  };
  for (const auto& target : all_targets()) {
    if (!wanted.count(target)) continue;
    if (target == "fields") {
      o.reports.push_back(detail::fields_report(pl, cfg));
    } else if (target == "partition") {
      const auto& t = pl.tower();
      Report r{"partition of Z_M at s = " + std::to_string(cfg.s)};
      const auto& p = pl.partition();
      const auto q = partition_by_trace(t);
      r.add("psi(omega^a D) route = trace/quadric route", p == q);
      const auto sizes = expected_block_sizes(cfg.s);
      r.add("block sizes", p.T1.size() == sizes[0] && p.T2.size() == sizes[1] && p.T3.size() == sizes[2]);
      o.reports.push_back(r);
      o.reports.push_back(verify_singer(p));
      cat.partition = p;
    } else if (target == "lemma2") {
      detail::lemma2_target(pl, o);
    } else if (target == "gauss") {
      detail::gauss_target(pl, cfg, o);
    } else if (target == "thm1" || target == "thm2i" || target == "thm2ii") {
      if (!has_scheme(target)) {
        o.notes.push_back(target + " skipped at s = " + std::to_string(cfg.s) + (cfg.s == 3 ? " (needs --big)" : ""));
        continue;
      }
      detail::scheme_target(pl, target, o);
      cat.schemes.push_back(pl.reconciliation(target).scheme);
    } else if (target == "duals") {
      for (const std::string id : {"thm1", "thm2i"}) {
        if (!has_scheme(id)) continue;
        const auto& rc = pl.reconciliation(id);
        o.reports.push_back(dual_structure_check(pl.tower(), pl.partition(), rc.scheme));
        o.reports.push_back(reconcile_table(appendix().table_for(rc.dual.id), rc.dual, pl.partition()));
        o.reports.push_back(verify_record(rc.dual));
        cat.schemes.push_back(rc.dual);
      }
    } else if (target == "im10") {
      if (cfg.s > 4) {
        o.notes.push_back("im10 skipped at s = " + std::to_string(cfg.s));
        continue;
      }
      detail::im10_target(pl, cfg, o, cat);
    } else if (target == "appendix") {
      for (const auto& id : schemes) {
        const auto& rc = pl.reconciliation(id);
        o.reports.push_back(reconcile_intersection_matrices(id, rc.scheme, rc.dual));
      }
    }
  }

  std::vector<std::string> failures;
  for (const auto& r : o.reports) {
    if (cfg.verbose || !r.passed()) {
      out << r;
    } else {
      out << r.title << " [ok] (" << r.checks.size() << " checks)\n";
    }
    for (const auto& c : r.checks) {
      if (!c.passed) failures.push_back(r.title + ": " + c.name);
    }
  }
  for (const auto& n : o.notes) out << "note: " << n << '\n';

  const auto& t = pl.tower();
  cat.header = Json{{"tool", "cyclo3"},
                    {"s", cfg.s},
                    {"targets", Json::array()},
                    {"moduli",
                     {{"E", gf2x::to_hex(t.E.modulus())},
                      {"F", gf2x::to_hex(t.F.modulus())},
                      {"G", gf2x::to_hex(t.G.modulus())},
                      {"H", gf2x::to_hex(t.H.modulus())}}},
                    {"omega_exponent", t.omega_exponent},
                    {"normalization",
                     {{"G", {{"t0", t.norm_G.t0}, {"j", t.norm_G.j}}}, {"H", {{"t0", t.norm_H.t0}, {"j", t.norm_H.j}}}}},
                    {"big", cfg.big},
                    {"seed", cfg.seed},
                    {"status", failures.empty() ? "pass" : "fail"},
                    {"failures", failures},
                    {"notes", o.notes}};
  for (const auto& target : all_targets()) {
    if (wanted.count(target)) cat.header["targets"].push_back(target);
  }
  if (!cfg.json_path.empty()) export_catalog(cat, cfg.json_path);

  for (const auto& f : failures) err << "FAIL " << f << '\n';
  out << (failures.empty() ? "all checks passed\n" : std::to_string(failures.size()) + " check(s) failed\n");
  return failures.empty() ? kExitPass : kExitFail;
}

/// Parses `verify` arguments and runs. Exit codes: 0 pass, 1 verification
/// failure, 2 usage error.
inline int main_with_args(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact verification of three-class cyclotomic association schemes over GF(2^m)"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "construct and verify the requested targets");
  RunConfig cfg;
  int s = 1;
  std::string targets, poly_f, poly_g, poly_h;
  bool all = false;
  verify->add_option("--s", s, "tower parameter s (|F| = 2^(3s))")->required();
  verify->add_option("--targets", targets, "comma-separated subset of: fields,partition,lemma2,gauss,thm1,thm2i,"
                                           "thm2ii,duals,im10,appendix");
  verify->add_flag("--all", all, "run every target");
  verify->add_option("--poly-f", poly_f, "hex modulus for F (degree 3s)");
  verify->add_option("--poly-g", poly_g, "hex modulus for G (degree 6s)");
  verify->add_option("--poly-h", poly_h, "hex modulus for H (degree 9s)");
  verify->add_option("--json", cfg.json_path, "write the catalog to this path");
  verify->add_flag("--big", cfg.big, "allow the 2^27-element field at s = 3");
  verify->add_option("--seed", cfg.seed, "seed for sampled algebra checks");
  verify->add_option("--threads", cfg.threads, "worker threads for streamed sums (0 = all cores)");
  verify->add_flag("-v,--verbose", cfg.verbose, "print every check");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (s < 1) {
    err << "usage: --s must be at least 1\n";
    return kExitUsage;
  }
  cfg.s = static_cast<unsigned>(s);
  if (all && !targets.empty()) {
    err << "usage: --all and --targets are exclusive\n";
    return kExitUsage;
  }
  if (all) {
    cfg.targets = all_targets();
  } else {
    std::stringstream ss(targets);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) cfg.targets.push_back(item);
    }
    cfg.targets_explicit = true;
  }
  try {
    if (!poly_f.empty()) cfg.moduli.f = gf2x::from_hex(poly_f);
    if (!poly_g.empty()) cfg.moduli.g = gf2x::from_hex(poly_g);
    if (!poly_h.empty()) cfg.moduli.h = gf2x::from_hex(poly_h);
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return run(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace cyclo3::cli
