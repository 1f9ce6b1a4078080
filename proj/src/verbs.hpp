#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"
#include "json.hpp"
#include "maxcone/maxcone.hpp"

namespace maxcone::verbs {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Outcome { Ok, NoSolution, BudgetExceeded };

struct Output {
  json doc = json::object();
  std::optional<json> primary;  // matrix rows used for CSV output
  Outcome outcome = Outcome::Ok;
};

struct Options {
  std::map<std::string, std::string> values;

  bool flag(const std::string& k) const {
    auto it = values.find(k);
    return it != values.end() && it->second != "0" && it->second != "false";
  }
  std::optional<std::string> get(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
};

inline json one_based(const IndexSet& s) {
  json a = json::array();
  for (Index i : s) a.push_back(i + 1);
  return a;
}

template <Semiring S>
class Runner {
 public:
  Runner(const io::Formatter& f, const Options& o, std::vector<Matrix<S>> in, std::optional<Vector<S>> y0)
      : f_(f), opt_(o), in_(std::move(in)), y0_(std::move(y0)) {}

  Output run(const std::string& verb) {
    if (verb == "star") return star();
    if (verb == "lambda") return lambda_verb();
    if (verb == "eig") return eig();
    if (verb == "member") return member();
    if (verb == "basis") return basis();
    if (verb == "project") return project_verb();
    if (verb == "separate") return separate();
    if (verb == "cells") return cells();
    if (verb == "per") return per();
    if (verb == "pinv") return pinv();
    if (verb == "essential") return essential();
    if (verb == "solve") return solve_verb();
    if (verb == "dist") return dist();
    if (verb == "bound") return bound();
    if (verb == "intersect") return intersect();
    throw UsageError("unknown verb '" + verb + "'");
  }

 private:
  const io::Formatter& f_;
  const Options& opt_;
  std::vector<Matrix<S>> in_;
  std::optional<Vector<S>> y0_;

  void expect(std::size_t lo, std::size_t hi, const char* what) const {
    if (in_.size() < lo || in_.size() > hi) throw UsageError(std::string("expected ") + what);
  }

  static Vector<S> as_vector(const Matrix<S>& m) {
    if (m.cols() == 1) return m.column(0);
    if (m.rows() == 1) return m.row(0);
    throw UsageError("expected a vector (n x 1 or 1 x n matrix)");
  }

  json lambda_value(const S& s, const CycleMean<S>& m) const {
    if (m.is_zero()) return f_.value(s, s.zero());
    if (auto v = mean_value(s, m)) return f_.value(s, *v);
    double l = mean_log(s, m);
    return io::real(f_.view == View::MaxTimes ? std::exp(l) : l);
  }

  static std::string text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

  json basis_json(const ConeBasis<S>& b) const {
    json g = json::array();
    for (const auto& v : b.generators) g.push_back(f_.vector(v));
    json out{{"kind", basis_kind_name(b.kind)}, {"generators", g}, {"max_dimension", b.max_dimension}};
    if (b.linear_dimension) out["linear_dimension"] = *b.linear_dimension;
    return out;
  }

  json halfspace_json(const Halfspace<S>& h) const {
    return {{"u1", f_.vector(h.u1)}, {"u2", f_.vector(h.u2)}, {"sectors", one_based(h.sleeper_sectors)}};
  }

  json radius_json(const RadiusReport<S>& r) const {
    json j{{"status", r.status == RadiusStatus::Certified ? "certified" : "indeterminate"},
           {"log_radius", io::real(r.log_radius)},
           {"rho_h", io::real(r.rho_h())},
           {"lower_log", io::real(r.lower_log)},
           {"upper_log", io::real(r.upper_log)},
           {"sweeps", r.sweeps}};
    if (r.status == RadiusStatus::Certified) j["radius"] = lambda_value(in_.front().semiring(), r.radius);
    return j;
  }

  Output star() {
    expect(1, 1, "one matrix");
    const Matrix<S>& a = in_[0];
    detail::require_square(a, "star");
    auto m = lambda(a);
    if (compare_to_one(a.semiring(), m) > 0)
      throw Error(ErrorCode::Divergent, "divergent: lambda=" + text(lambda_value(a.semiring(), m)));
    Output o;
    json st = f_.matrix(kleene_star(a));
    o.doc["star"] = st;
    o.primary = st;
    return o;
  }

  Output lambda_verb() {
    expect(1, 1, "one matrix");
    const Matrix<S>& a = in_[0];
    const S& s = a.semiring();
    auto m = lambda(a);
    Output o;
    o.doc["lambda"] = lambda_value(s, m);
    o.doc["log_lambda"] = io::real(mean_log(s, m));
    o.doc["definite"] = compare_to_one(s, m) == 0;
    o.doc["irreducible"] = is_irreducible(a);
    if (!m.is_zero()) {
      o.doc["cycle_weight"] = f_.value(s, m.weight);
      o.doc["cycle_length"] = m.length;
    }
    return o;
  }

  Output eig() {
    expect(1, 1, "one matrix");
    auto e = eigencone_bases(in_[0]);
    Output o;
    o.doc["eigencone"] = basis_json(e.eigencone);
    o.doc["subeigencone"] = basis_json(e.subeigencone);
    json edges = json::array();
    for (auto [i, j] : e.critical.edges) edges.push_back({i + 1, j + 1});
    json sccs = json::array();
    for (const auto& c : e.critical.sccs) sccs.push_back(one_based(c));
    o.doc["critical"] = {{"nodes", one_based(e.critical.nodes)},
                         {"edges", edges},
                         {"sccs", sccs},
                         {"representatives", one_based(e.critical.representatives)},
                         {"non_critical", one_based(e.critical.non_critical)},
                         {"n_c", e.critical.n_c()}};
    json st = f_.matrix(e.star);
    o.doc["star"] = st;
    o.primary = st;
    return o;
  }

  Output member() {
    expect(2, 2, "a matrix and a vector");
    auto r = is_member(as_vector(in_[1]), in_[0]);
    Output o;
    o.doc["member"] = r.member;
    o.doc["x"] = f_.vector(r.x);
    if (!r.member) o.doc["uncovered"] = one_based(r.uncovered);
    return o;
  }

  Output basis() {
    expect(1, 1, "one matrix whose columns generate the cone");
    auto b = extremals_and_basis(in_[0].columns());
    Output o;
    o.doc = basis_json(b);
    o.primary = f_.matrix(transpose(Matrix<S>::from_columns(b.generators, in_[0].semiring())));
    return o;
  }

  Output project_verb() {
    expect(2, 2, "a matrix and a vector");
    auto p = project(in_[0], as_vector(in_[1]));
    auto ms = min_sets(in_[0]);
    Output o;
    o.doc["projection"] = f_.vector(p.point);
    o.doc["sleepers"] = one_based(p.sleepers);
    o.doc["min_linear"] = ms.min_linear;
    json sets = json::array();
    for (const auto& e : ms.sets) {
      json g = json::array();
      for (const auto& v : e) g.push_back(f_.vector(v));
      sets.push_back(g);
    }
    o.doc["min_sets"] = sets;
    return o;
  }

  Output separate() {
    Output o;
    if (opt_.flag("point")) {
      expect(2, 2, "a matrix and a point");
      auto h = separating_halfspace(in_[0], as_vector(in_[1]));
      o.doc = halfspace_json(h);
      return o;
    }
    expect(1, 64, "one or more cone matrices");
    auto r = separate_cones(in_);
    o.doc["separated"] = r.separated;
    json hs = json::array();
    for (const auto& h : r.halfspaces) hs.push_back(halfspace_json(h));
    o.doc["halfspaces"] = hs;
    o.doc["witness"] = r.witness ? f_.vector(*r.witness) : json(nullptr);
    if (in_.size() > 1) o.doc["radius"] = radius_json(r.radius);
    return o;
  }

  Output cells() {
    expect(1, 1, "one matrix");
    double cap = 1e6;
    if (auto c = opt_.get("cap")) cap = std::stod(*c);
    auto cs = enumerate_cells(in_[0], opt_.flag("all"), cap);
    Output o;
    json arr = json::array();
    for (const auto& c : cs) {
      json rt = json::array();
      for (const auto& si : c.row_type) rt.push_back(one_based(si));
      ConeBasis<S> gens = extremals_and_basis(c.star->columns());
      json g = json::array();
      for (const auto& v : gens.generators) g.push_back(f_.vector(v));
      arr.push_back({{"row_type", rt},
                     {"region", f_.matrix(c.region)},
                     {"star", f_.matrix(*c.star)},
                     {"generators", g},
                     {"dimension", c.dimension},
                     {"region_dimension", c.region_dimension}});
    }
    o.doc["cells"] = arr;
    o.doc["count"] = cs.size();
    return o;
  }

  static json sigma_json(const std::vector<Index>& sigma) {
    json a = json::array();
    for (Index j : sigma) a.push_back(j + 1);
    return a;
  }

  Output per() {
    expect(1, 1, "one square matrix");
    auto p = permanent(in_[0]);
    Output o;
    o.doc["permanent"] = f_.value(in_[0].semiring(), p.value);
    o.doc["sigma"] = p.sigma ? sigma_json(*p.sigma) : json(nullptr);
    return o;
  }

  Output pinv() {
    expect(1, 1, "one square matrix");
    auto r = pseudoinverse(in_[0]);
    if (!r.nabla) throw Error(ErrorCode::ZeroPermanent, "zero_permanent: per(A) = 0, pseudoinverse undefined");
    auto st = row_col_kleene_stars(in_[0]);
    Output o;
    o.doc["permanent"] = f_.value(in_[0].semiring(), r.per);
    o.doc["adjugate"] = f_.matrix(r.adjugate);
    json pi = f_.matrix(*r.nabla);
    o.doc["pseudoinverse"] = pi;
    o.doc["sigma"] = sigma_json(st.sigma);
    o.doc["col_star"] = f_.matrix(st.col_star);
    o.doc["row_star"] = f_.matrix(st.row_star);
    o.primary = pi;
    return o;
  }

  Output essential() {
    expect(1, 1, "one square matrix");
    auto e = essential_span(in_[0]);
    Output o;
    o.doc = basis_json(e.basis);
    o.doc["dimension"] = e.dimension;
    o.doc["full_rank"] = e.dimension == in_[0].rows();
    o.doc["sigma"] = sigma_json(e.sigma);
    o.doc["col_star"] = f_.matrix(e.col_star);
    return o;
  }

  json sets_json(const std::vector<IndexSet>& v) const {
    json a = json::array();
    for (const auto& s : v) a.push_back(one_based(s));
    return a;
  }

  Output solve_verb() {
    expect(2, 64, "two or more matrices");
    std::size_t max_iter = 0;
    if (auto m = opt_.get("max_iter")) max_iter = std::stoul(*m);
    auto tr = maxcone::solve(in_, y0_, max_iter);
    Output o;
    o.doc["stop"] = stop_reason_name(tr.stop);
    o.doc["iterations"] = tr.sweeps();
    o.doc["y0"] = f_.vector(tr.y0);
    if (tr.stop == StopReason::Solved) {
      json xs = json::array();
      for (const auto& x : tr.solution()) xs.push_back(f_.vector(x));
      o.doc["x"] = xs;
      o.doc["y"] = f_.vector(tr.common());
    } else {
      o.doc["y"] = f_.vector(tr.iterations.back().y.back());
    }
    json trace = json::array();
    for (const auto& rec : tr.iterations) {
      json xs = json::array();
      json ys = json::array();
      for (const auto& x : rec.x) xs.push_back(f_.vector(x));
      for (const auto& y : rec.y) ys.push_back(f_.vector(y));
      trace.push_back({{"l", rec.l}, {"x", xs}, {"y", ys}});
    }
    o.doc["trace"] = trace;
    json sl{{"temporary_y", sets_json(tr.temporary_y)}, {"temporary_x", sets_json(tr.temporary_x)}};
    if (tr.stop == StopReason::Solved) {
      sl["eternal_y"] = sets_json(tr.eternal_y);
      sl["eternal_x"] = sets_json(tr.eternal_x);
    }
    o.doc["sleepers"] = sl;
    o.outcome = tr.stop == StopReason::Solved
                    ? Outcome::Ok
                    : (tr.stop == StopReason::NoSolution ? Outcome::NoSolution : Outcome::BudgetExceeded);
    return o;
  }

  DistanceKind kind() const {
    std::string k = opt_.get("kind").value_or("cyclic");
    if (k == "cyclic") return DistanceKind::Cyclic;
    if (k == "total") return DistanceKind::Total;
    throw UsageError("--kind must be cyclic or total");
  }

  Output dist() {
    DistanceKind k = kind();
    Output o;
    o.doc["kind"] = k == DistanceKind::Cyclic ? "cyclic" : "total";
    DistanceReport<S> r;
    if (opt_.flag("cones")) {
      expect(2, 64, "two or more cone matrices");
      r = distance_cones(in_, k);
    } else {
      expect(1, 64, "two or more vectors, or one matrix whose columns are the points");
      std::vector<Vector<S>> ys;
      if (in_.size() == 1) {
        ys = in_[0].columns();
      } else {
        for (const auto& m : in_) ys.push_back(as_vector(m));
      }
      r = distance_points(ys, k);
    }
    o.doc["value"] = io::real(r.value);
    o.doc["method"] = r.exact ? "exact" : "power-iteration-estimate";
    json w = json::array();
    for (const auto& v : r.witnesses) w.push_back(f_.vector(v));
    o.doc["witnesses"] = w;
    return o;
  }

  Output bound() {
    expect(2, 64, "two or more matrices");
    std::string which = opt_.get("which").value_or("integer");
    BoundKind bk;
    if (which == "estimate1") {
      bk = BoundKind::Estimate1;
    } else if (which == "estimate2") {
      bk = BoundKind::Estimate2;
    } else if (which == "integer") {
      bk = BoundKind::Integer;
    } else {
      throw UsageError("--which must be estimate1, estimate2 or integer");
    }
    std::optional<double> rho;
    std::string rs = opt_.get("rho").value_or("auto");
    if (rs != "auto") rho = std::stod(rs);
    std::vector<Index> subset;
    if (auto p = opt_.get("positive")) {
      std::stringstream ss(*p);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        long v = std::stol(tok);
        if (v < 1) throw UsageError("--positive takes 1-based matrix indices");
        subset.push_back(static_cast<Index>(v - 1));
      }
    }
    auto b = iteration_bound(in_, bk, rho, subset);
    Output o;
    o.doc["which"] = which;
    o.doc["bound"] = io::real(b.value);
    if (bk != BoundKind::Integer) {
      o.doc["rho_sigma"] = io::real(b.rho_sigma);
      o.doc["estimate_based"] = b.estimate_based;
    }
    return o;
  }

  Output intersect() {
    expect(1, 64, "one or more Kleene stars");
    auto r = kleene_intersection(in_);
    Output o;
    o.doc["trivial"] = r.trivial;
    o.doc["lambda"] = lambda_value(in_[0].semiring(), r.lambda);
    if (r.star) {
      json st = f_.matrix(*r.star);
      o.doc["star"] = st;
      o.primary = st;
    }
    return o;
  }
};

}  // namespace maxcone::verbs
