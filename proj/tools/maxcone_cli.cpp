// Command-line front end. Talks to the library only through maxcone.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxcone.h"

namespace {

struct Matrices {
  std::vector<mc_matrix*> items;
  ~Matrices() {
    for (auto* m : items) mc_matrix_free(m);
  }
};

bool read_text(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int fail(const std::string& msg, int status) {
  std::string escaped;
  for (char c : msg) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c;
  }
  std::printf("{\"error\":\"%s\",\"code\":\"usage\",\"status\":%d}\n", escaped.c_str(), status);
  return status;
}

struct VerbSpec {
  const char* name;
  const char* help;
};

const VerbSpec kVerbs[] = {
    {"star", "Kleene star of a square matrix"},
    {"lambda", "maximum cycle geometric mean"},
    {"eig", "critical graph and (sub)eigencone bases of a definite matrix"},
    {"member", "is VECTOR in the column span of MATRIX"},
    {"basis", "extremal basis of the cone generated by the columns"},
    {"project", "projection of VECTOR onto the column span of MATRIX"},
    {"separate", "separating halfspace (--point) or separation of several cones"},
    {"cells", "cellular decomposition of the column span into Kleene cones"},
    {"per", "max permanent and a maximal permutation"},
    {"pinv", "pseudoadjugate, pseudoinverse and row/column Kleene stars"},
    {"essential", "essential span and its dimension"},
    {"solve", "alternating method for A1 x1 = ... = Ak xk"},
    {"dist", "cyclic or total projective distance of points or cones"},
    {"bound", "iteration bound of the alternating method"},
    {"intersect", "intersection of Kleene cones"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-algebra linear algebra and max cone geometry"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string semiring;
  bool exact = false;
  double tol = 0;
  std::string format = "json";
  unsigned long long seed = 0;
  app.add_option("--semiring", semiring, "view used for the computation and output")
      ->check(CLI::IsMember({"maxtimes", "maxplus"}));
  app.add_flag("--exact", exact, "exact rational backend");
  app.add_option("--tol", tol, "comparator tolerance of the float backend (default 1e-9 or MAXCONE_TOL)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "seed for randomized internals");

  std::map<std::string, std::vector<std::string>> files;
  std::map<std::string, std::string> opts;
  std::string y0_path;
  std::map<std::string, CLI::App*> subs;

  for (const auto& v : kVerbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("inputs", files[v.name], "input files (- for stdin)")->required();
    subs[v.name] = sub;
  }
  auto opt = [&](const char* verb, const char* flag, const char* key, const char* help) {
    subs[verb]->add_option(flag, opts[key], help);
  };
  auto flag = [&](const char* verb, const char* name, const char* key, const char* help) {
    subs[verb]->add_flag_callback(name, [&opts, key] { opts[key] = "1"; }, help);
  };
  flag("separate", "--point", "point", "last input is a point; build one halfspace");
  flag("cells", "--all", "all", "return every distinct feasible cell, not only maximal ones");
  opt("cells", "--cap", "cap", "maximum number of candidate row types");
  subs["solve"]->add_option("--y0", y0_path, "start vector file");
  opt("solve", "--max-iter", "max_iter", "iteration budget");
  subs["dist"]->add_option("--kind", opts["kind"], "cyclic or total")->check(CLI::IsMember({"cyclic", "total"}));
  flag("dist", "--cones", "cones", "inputs are cone generator matrices");
  subs["bound"]->add_option("--which", opts["which"], "estimate1, estimate2 or integer")
      ->check(CLI::IsMember({"estimate1", "estimate2", "integer"}));
  opt("bound", "--rho", "rho", "total distance rho_sigma, or auto");
  opt("bound", "--positive", "positive", "comma separated 1-based indices of positive matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return fail(e.what(), MC_ERR_USAGE);
  }

  std::string verb;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) verb = name;

  mc_context* ctx = mc_context_new();
  if (!ctx) return fail("out of memory", MC_ERR_USAGE);
  struct CtxGuard {
    mc_context* c;
    ~CtxGuard() { mc_context_free(c); }
  } guard{ctx};

  if (exact) mc_context_set_backend(ctx, MC_BACKEND_EXACT);
  if (!semiring.empty()) mc_context_set_view(ctx, semiring == "maxplus" ? MC_VIEW_MAXPLUS : MC_VIEW_MAXTIMES);
  if (tol > 0 && mc_context_set_tolerance(ctx, tol) != MC_OK) return fail("--tol must be in (0, 1)", MC_ERR_USAGE);
  mc_context_set_seed(ctx, seed);

  Matrices mats;
  auto load = [&](const std::string& path, mc_matrix** out) -> int {
    std::string text;
    if (!read_text(path, text)) return fail("cannot read '" + path + "'", MC_ERR_USAGE);
    if (mc_matrix_parse(ctx, text.c_str(), out) != MC_OK)
      return fail(path + ": " + mc_context_last_error(ctx), MC_ERR_USAGE);
    mats.items.push_back(*out);
    return 0;
  };

  mc_request* req = mc_request_new(ctx, verb.c_str());
  struct ReqGuard {
    mc_request* r;
    ~ReqGuard() { mc_request_free(r); }
  } rguard{req};

  for (const auto& path : files[verb]) {
    mc_matrix* m = nullptr;
    if (int rc = load(path, &m)) return rc;
    mc_request_add_input(req, m);
  }
  if (!y0_path.empty()) {
    mc_matrix* m = nullptr;
    if (int rc = load(y0_path, &m)) return rc;
    mc_request_set_y0(req, m);
  }
  for (const auto& [k, v] : opts)
    if (!v.empty()) mc_request_set_option(req, k.c_str(), v.c_str());

  mc_result* res = nullptr;
  mc_status st = mc_request_run(req, &res);
  bool csv = format == "csv" && (st == MC_OK || st == MC_NO_SOLUTION || st == MC_BUDGET_EXCEEDED);
  std::fputs(csv ? mc_result_csv(res) : mc_result_json(res), stdout);
  if (!csv) std::fputc('\n', stdout);
  mc_result_free(res);
  return static_cast<int>(st);
}
