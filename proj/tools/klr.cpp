#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "klr/center.hpp"
#include "klr/cohomology.hpp"
#include "klr/current_algebra.hpp"
#include "klr/cyclotomic.hpp"
#include "klr/kernels.hpp"
#include "klr/quiver_io.hpp"

using namespace klr;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kUncertified = 3 };

struct Options {
  std::string quiver;
  std::string lambda;
  std::string nu;
  std::string mu;
  std::string beta = "order";
  std::string out;
  int degree_cap = -1;
  bool deformed = false;
  int jobs = 1;
  int n = -1;
  int k = -1;
  int max_r = 2;
};

// JSON document plus a two-column table with the same entries in the same order
class Report {
 public:
  void set(const std::string& key, const Json& value) {
    doc_[key] = value;
    rows_.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  void row(const std::string& key, const std::string& text) { rows_.emplace_back(key, text); }
  Json& doc() { return doc_; }

  void emit(const Options& opt) const {
    size_t w = 0;
    for (auto& [k, v] : rows_) w = std::max(w, k.size());
    for (auto& [k, v] : rows_) std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    if (!opt.out.empty()) {
      std::ofstream f(opt.out);
      if (!f) throw InvalidInput("cannot write " + opt.out);
      f << doc_.dump(2) << "\n";
    }
  }

 private:
  Json doc_ = Json::object();
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

Quiver need_quiver(const Options& opt) {
  if (opt.quiver.empty()) throw InvalidInput("--quiver is required");
  return load_quiver(opt.quiver);
}

Weight need_lambda(const Quiver& q, const Options& opt) {
  if (opt.lambda.empty()) throw InvalidInput("--lambda is required");
  Weight l = resolve_weight(q, opt.lambda);
  for (int x : l)
    if (x < 0) throw InvalidInput("lambda must be dominant");
  return l;
}

RootVector need_content(const Quiver& q, const Weight& lambda, const Options& opt) {
  if (!opt.nu.empty() && !opt.mu.empty()) throw InvalidInput("give either --nu or --mu");
  if (!opt.nu.empty()) {
    RootVector nu = parse_csv_ints(opt.nu);
    if (static_cast<int>(nu.size()) != q.size()) throw InvalidInput("--nu has the wrong number of entries");
    for (int x : nu)
      if (x < 0) throw InvalidInput("--nu must be nonnegative");
    return nu;
  }
  if (!opt.mu.empty()) {
    auto nu = q.root_difference(lambda, resolve_weight(q, opt.mu));
    if (!nu) throw InvalidInput("lambda - mu is not in the root lattice");
    for (int x : *nu)
      if (x < 0) throw InvalidInput("lambda - mu is not in the positive root cone");
    return *nu;
  }
  throw InvalidInput("--nu or --mu is required");
}

BuildOptions build_options(const Options& opt) {
  BuildOptions b;
  if (opt.degree_cap >= 0) b.degree_cap = opt.degree_cap;
  return b;
}

BetaForm make_beta(const Quiver& q, const std::string& kind) {
  if (kind == "order") {
    std::vector<int> order(q.size());
    for (int i = 0; i < q.size(); ++i) order[i] = i;
    return BetaForm::from_order(q, order);
  }
  if (kind == "bipartite") return BetaForm::bipartite(q);
  if (kind == "zero") return BetaForm::zero(q);
  throw InvalidInput("--beta must be order, bipartite or zero");
}

void describe_input(Report& r, const Quiver& q, const Weight& lambda, const RootVector& nu) {
  std::string names;
  for (int i = 0; i < q.size(); ++i) names += (i ? "," : "") + q.name(i);
  r.set("vertices", names);
  r.set("lambda", weight_to_string(lambda));
  r.set("nu", weight_to_string(nu));
  r.set("mu", weight_to_string(q.weight_of(lambda, nu)));
}

int run_cyclo(const Options& opt) {
  Quiver q = need_quiver(opt);
  Weight lambda = need_lambda(q, opt);
  RootVector nu = need_content(q, lambda, opt);
  CyclotomicAlgebra a(q, lambda, nu, build_options(opt));
  Report r;
  describe_input(r, q, lambda, nu);
  r.set("dimension", a.dim());
  r.set("hilbert_series", a.hilbert_series().to_string("t"));
  r.set("oracle_series", a.oracle_series().to_string("t"));
  r.set("top_degree", a.top_degree());
  r.set("certified", true);
  bool ok = a.hilbert_series() == a.oracle_series();
  if (opt.deformed) {
    DeformationReport d = compare_deformed(a, a.dim() <= 64);
    r.set("deformed_products_compared", d.compared);
    r.set("deformed_mismatches", d.mismatches);
    if (!d.ok()) r.set("deformed_first_mismatch", d.first_mismatch);
    ok = ok && d.ok();
  }
  r.set("status", ok ? "pass" : "fail");
  r.emit(opt);
  return ok ? kOk : kFailed;
}

int run_center(const Options& opt) {
  Quiver q = need_quiver(opt);
  Weight lambda = need_lambda(q, opt);
  RootVector nu = need_content(q, lambda, opt);
  CyclotomicAlgebra a(q, lambda, nu, build_options(opt));
  CyclotomicView view(a);
  CenterBasis z = center_basis(view);
  CocenterBasis tr = cocenter_basis(view);
  Report r;
  describe_input(r, q, lambda, nu);
  r.set("algebra_dimension", a.dim());
  r.set("center_dimension", z.dim());
  r.set("center_series", z.hilbert_series().to_string("t"));
  r.set("cocenter_dimension", tr.dim());
  r.set("cocenter_series", tr.hilbert_series().to_string("t"));
  bool ok = z.dim() == tr.dim();
  for (auto& v : z.elements) ok = ok && is_central(view, v);
  r.set("status", ok ? "pass" : "fail");
  r.emit(opt);
  return ok ? kOk : kFailed;
}

int run_current(const Options& opt) {
  Quiver q = need_quiver(opt);
  Weight lambda = need_lambda(q, opt);
  BetaForm beta = make_beta(q, opt.beta);
  WeightFamily fam(q, lambda, build_options(opt));
  CurrentAction act(fam, beta);
  Report r;
  r.set("lambda", weight_to_string(lambda));
  r.set("beta", beta.describe());
  Json weights = Json::array();
  for (auto& nu : fam.support()) {
    Json w;
    w["nu"] = weight_to_string(nu);
    w["mu"] = weight_to_string(fam.weight(nu));
    w["center_series"] = fam.center(nu).hilbert_series().to_string("t");
    weights.push_back(w);
    r.row("center " + weight_to_string(nu), fam.center(nu).hilbert_series().to_string("t"));
  }
  r.doc()["weights"] = weights;
  RelationOptions ropt;
  ropt.max_r = opt.max_r;
  CurrentReport rep = verify_current_relations(act, ropt);
  Json checks = Json::array();
  for (auto& c : rep.checks) {
    Json j;
    j["relation"] = c.name;
    j["pass"] = c.ok;
    if (!c.ok) j["witness"] = c.witness;
    checks.push_back(j);
    r.row(c.name, c.ok ? "pass" : "FAIL " + c.witness);
  }
  r.doc()["relations"] = checks;
  r.set("generated_from_identities", rep.generated);
  r.set("generated_dimension", std::to_string(rep.span_dim) + "/" + std::to_string(rep.total_dim));
  CyclicityReport cyc = check_cyclicity(fam, beta);
  Json duals = Json::array();
  for (auto& e : cyc.entries) {
    Json j;
    j["map"] = e.what;
    j["nu"] = weight_to_string(e.nu);
    j["i"] = q.name(e.i);
    j["j"] = q.name(e.j);
    j["untwisted_sign"] = e.untwisted_sign;
    j["twist"] = e.twist;
    j["cyclic"] = e.cyclic();
    duals.push_back(j);
  }
  r.doc()["double_duals"] = duals;
  r.row("double duals", std::to_string(cyc.entries.size()) + " computed");
  r.set("cyclic", cyc.ok());
  bool ok = rep.ok() && cyc.ok();
  r.set("status", ok ? "pass" : "fail");
  r.emit(opt);
  return ok ? kOk : kFailed;
}

int run_phi(const Options& opt) {
  if (opt.n < 0 || opt.k < 0) throw InvalidInput("--n and --k are required");
  PhiReport p = phi_check(opt.k, opt.n);
  Report r;
  r.set("n", p.n);
  r.set("k", p.k);
  r.set("cohomology_series", p.cohomology.to_string("t"));
  r.set("center_series", p.center.to_string("t"));
  r.set("well_defined", yes(p.well_defined));
  r.set("dims_match", yes(p.dims_match));
  r.set("injective", yes(p.injective));
  r.set("bijective", yes(p.bijective));
  r.set("square_commutes", yes(p.square_commutes));
  if (!p.witness.empty()) r.set("witness", p.witness);
  r.set("status", p.ok() ? "pass" : "fail");
  r.emit(opt);
  return p.ok() ? kOk : kFailed;
}

int run_kirwan(const Options& opt) {
  Quiver q = need_quiver(opt);
  Weight lambda = need_lambda(q, opt);
  RootVector nu = need_content(q, lambda, opt);
  CyclotomicAlgebra a(q, lambda, nu, build_options(opt));
  CyclotomicView view(a);
  KirwanReport k = kirwan_check(a, center_basis(view));
  Report r;
  describe_input(r, q, lambda, nu);
  r.set("center_series", k.center_series.to_string("t"));
  r.set("image_series", k.image_series.to_string("t"));
  r.set("images_central", yes(k.images_central));
  r.set("generates_center", yes(k.generates));
  r.set("status", k.ok() ? "pass" : "fail");
  r.emit(opt);
  return k.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclotomic KLR algebras, their centers and the current algebra action"};
  app.require_subcommand(1);
  Options opt;
  auto common = [&](CLI::App* c, bool content) {
    c->add_option("--quiver", opt.quiver, "quiver JSON file");
    c->add_option("--lambda", opt.lambda, "dominant weight: CSV or a name from the quiver file");
    if (content) {
      c->add_option("--nu", opt.nu, "root content as CSV");
      c->add_option("--mu", opt.mu, "weight as CSV or name");
    }
    c->add_option("--degree-cap", opt.degree_cap, "highest degree to build");
    c->add_option("--out", opt.out, "write the JSON report here");
    c->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto* cyclo = app.add_subcommand("cyclo", "build a cyclotomic quotient and certify it");
  common(cyclo, true);
  cyclo->add_flag("--deformed", opt.deformed, "compare with the deformed algebra at h = 0");
  auto* center = app.add_subcommand("center", "center and cocenter");
  common(center, true);
  auto* current = app.add_subcommand("current-check", "current algebra relations on the sum of centers");
  common(current, false);
  current->add_option("--beta", opt.beta, "order, bipartite or zero");
  current->add_option("--max-r", opt.max_r, "highest dot order in the relations");
  auto* phi = app.add_subcommand("phi-check", "Grassmannian cohomology against the sl2 center");
  phi->add_option("--n", opt.n)->required();
  phi->add_option("--k", opt.k)->required();
  phi->add_option("--out", opt.out, "write the JSON report here");
  auto* kirwan = app.add_subcommand("kirwan-check", "Chern class images generate the center");
  common(kirwan, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    set_workers(opt.jobs);
    if (*cyclo) return run_cyclo(opt);
    if (*center) return run_center(opt);
    if (*current) return run_current(opt);
    if (*phi) return run_phi(opt);
    if (*kirwan) return run_kirwan(opt);
  } catch (const UncertifiedBuild& e) {
    std::cerr << "uncertified build: " << e.what() << " (first uncertified degree " << e.degree() << ")\n";
    return kUncertified;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const AdjunctionError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kFailed;
  }
  return kInput;
}
