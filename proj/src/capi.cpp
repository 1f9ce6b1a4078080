#include "maxcone.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "io.hpp"
#include "verbs.hpp"

using nlohmann::json;
using namespace maxcone;

struct mc_context {
  mc_backend backend = MC_BACKEND_FLOAT;
  mc_view view = MC_VIEW_AUTO;
  double tol = kDefaultTolerance;
  unsigned long long seed = 0;
  std::string last_error;
};

struct mc_matrix {
  io::RawMatrix raw;
};

struct mc_request {
  mc_context* ctx = nullptr;
  std::string verb;
  std::vector<const mc_matrix*> inputs;
  const mc_matrix* y0 = nullptr;
  verbs::Options options;
};

struct mc_result {
  mc_status status = MC_OK;
  std::string json_text;
  std::string csv_text;
};

namespace {

mc_status status_of(ErrorCode c) { return c == ErrorCode::Parse ? MC_ERR_USAGE : MC_ERR_DOMAIN; }

template <class F>
mc_status guarded(mc_context* ctx, F&& f) {
  try {
    if (ctx) ctx->last_error.clear();
    return f();
  } catch (const Error& e) {
    if (ctx) ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return MC_ERR_USAGE;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

View resolve_view(const mc_request& req) {
  std::optional<View> declared;
  for (const auto* m : req.inputs) {
    if (declared && *declared != m->raw.view)
      throw Error(ErrorCode::Parse, "parse: mixed semiring declarations across inputs");
    declared = m->raw.view;
  }
  if (req.ctx->view == MC_VIEW_MAXTIMES) return View::MaxTimes;
  if (req.ctx->view == MC_VIEW_MAXPLUS) return View::MaxPlus;
  return declared.value_or(View::MaxTimes);
}

template <Semiring S, class Convert>
verbs::Output dispatch(const mc_request& req, const io::Formatter& fmt, Convert convert) {
  std::vector<Matrix<S>> in;
  for (const auto* m : req.inputs) in.push_back(convert(m->raw));
  std::optional<Vector<S>> y0;
  if (req.y0) {
    Matrix<S> y = convert(req.y0->raw);
    if (y.cols() == 1) {
      y0 = y.column(0);
    } else if (y.rows() == 1) {
      y0 = y.row(0);
    } else {
      throw verbs::UsageError("y0 must be a vector");
    }
  }
  verbs::Runner<S> r(fmt, req.options, std::move(in), std::move(y0));
  return r.run(req.verb);
}

verbs::Output execute(const mc_request& req, View view) {
  io::Formatter fmt{view};
  const double tol = req.ctx->tol;
  if (req.ctx->backend == MC_BACKEND_FLOAT)
    return dispatch<MaxPlusFloat>(req, fmt, [&](const io::RawMatrix& m) { return io::to_float(m, view, tol); });
  if (view == View::MaxTimes)
    return dispatch<MaxTimesExact>(req, fmt, [&](const io::RawMatrix& m) {
      if (m.view != view) throw Error(ErrorCode::Unsupported, "exact backend cannot change the semiring view");
      return io::to_exact_maxtimes(m);
    });
  return dispatch<MaxPlusExact>(req, fmt, [&](const io::RawMatrix& m) {
    if (m.view != view) throw Error(ErrorCode::Unsupported, "exact backend cannot change the semiring view");
    return io::to_exact_maxplus(m);
  });
}

double default_tolerance() {
  if (const char* env = std::getenv("MAXCONE_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultTolerance;
}

}  // namespace

extern "C" {

const char* mc_version(void) { return "0.1.0"; }

mc_context* mc_context_new(void) {
  auto* c = new (std::nothrow) mc_context();
  if (c) c->tol = default_tolerance();
  return c;
}

void mc_context_free(mc_context* ctx) { delete ctx; }

mc_status mc_context_set_backend(mc_context* ctx, mc_backend backend) {
  if (!ctx || (backend != MC_BACKEND_FLOAT && backend != MC_BACKEND_EXACT)) return MC_ERR_USAGE;
  ctx->backend = backend;
  return MC_OK;
}

mc_status mc_context_set_view(mc_context* ctx, mc_view view) {
  if (!ctx || view < MC_VIEW_AUTO || view > MC_VIEW_MAXPLUS) return MC_ERR_USAGE;
  ctx->view = view;
  return MC_OK;
}

mc_status mc_context_set_tolerance(mc_context* ctx, double tol) {
  if (!ctx || !(tol > 0) || tol >= 1) return MC_ERR_USAGE;
  ctx->tol = tol;
  return MC_OK;
}

mc_status mc_context_set_seed(mc_context* ctx, unsigned long long seed) {
  if (!ctx) return MC_ERR_USAGE;
  ctx->seed = seed;
  return MC_OK;
}

double mc_context_tolerance(const mc_context* ctx) { return ctx ? ctx->tol : kDefaultTolerance; }

const char* mc_context_last_error(const mc_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

mc_status mc_matrix_parse(mc_context* ctx, const char* text, mc_matrix** out) {
  if (!text || !out) return MC_ERR_USAGE;
  *out = nullptr;
  return guarded(ctx, [&] {
    auto m = std::make_unique<mc_matrix>();
    m->raw = io::parse_matrix(text);
    *out = m.release();
    return MC_OK;
  });
}

void mc_matrix_free(mc_matrix* m) { delete m; }
size_t mc_matrix_rows(const mc_matrix* m) { return m ? m->raw.rows : 0; }
size_t mc_matrix_cols(const mc_matrix* m) { return m ? m->raw.cols : 0; }
mc_view mc_matrix_view(const mc_matrix* m) {
  return m && m->raw.view == View::MaxPlus ? MC_VIEW_MAXPLUS : MC_VIEW_MAXTIMES;
}

mc_status mc_matrix_print(mc_context* ctx, const mc_matrix* m, mc_format format, char** out) {
  if (!m || !out) return MC_ERR_USAGE;
  *out = nullptr;
  return guarded(ctx, [&] {
    json rows = json::array();
    for (std::size_t i = 0; i < m->raw.rows; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m->raw.cols; ++j) {
        const auto& e = m->raw.data[i * m->raw.cols + j];
        if (e.kind == io::RawScalar::Kind::NegInf) {
          row.push_back(m->raw.view == View::MaxPlus ? json("-inf") : json(0));
        } else if (e.q.get_den() == 1 && e.q.get_num().fits_slong_p()) {
          row.push_back(e.q.get_num().get_si());
        } else {
          row.push_back(e.q.get_str());
        }
      }
      rows.push_back(row);
    }
    std::string s = format == MC_FORMAT_CSV ? io::matrix_csv_text(rows, m->raw.view)
                                            : io::matrix_json_text(rows, m->raw.view);
    *out = dup_string(s);
    return *out ? MC_OK : MC_ERR_USAGE;
  });
}

void mc_string_free(char* s) { std::free(s); }

mc_request* mc_request_new(mc_context* ctx, const char* verb) {
  if (!ctx || !verb) return nullptr;
  auto* r = new (std::nothrow) mc_request();
  if (!r) return nullptr;
  r->ctx = ctx;
  r->verb = verb;
  return r;
}

void mc_request_free(mc_request* req) { delete req; }

mc_status mc_request_add_input(mc_request* req, const mc_matrix* m) {
  if (!req || !m) return MC_ERR_USAGE;
  req->inputs.push_back(m);
  return MC_OK;
}

mc_status mc_request_set_y0(mc_request* req, const mc_matrix* m) {
  if (!req) return MC_ERR_USAGE;
  req->y0 = m;
  return MC_OK;
}

mc_status mc_request_set_option(mc_request* req, const char* key, const char* value) {
  if (!req || !key || !value) return MC_ERR_USAGE;
  req->options.values[key] = value;
  return MC_OK;
}

mc_status mc_request_run(mc_request* req, mc_result** out) {
  if (!req || !out) return MC_ERR_USAGE;
  auto res = std::make_unique<mc_result>();
  json doc;
  auto t0 = std::chrono::steady_clock::now();
  View view = View::MaxTimes;
  std::optional<json> primary;
  auto fail = [&](mc_status st, const std::string& msg, const char* code) {
    req->ctx->last_error = msg;
    res->status = st;
    doc = json{{"error", msg}, {"code", code}, {"status", static_cast<int>(st)}};
  };
  req->ctx->last_error.clear();
  try {
    view = resolve_view(*req);
    verbs::Output o = execute(*req, view);
    doc = std::move(o.doc);
    primary = std::move(o.primary);
    res->status = o.outcome == verbs::Outcome::Ok
                      ? MC_OK
                      : (o.outcome == verbs::Outcome::NoSolution ? MC_NO_SOLUTION : MC_BUDGET_EXCEEDED);
  } catch (const verbs::UsageError& e) {
    fail(MC_ERR_USAGE, std::string("usage: ") + e.what(), "usage");
  } catch (const Error& e) {
    fail(status_of(e.code()), e.what(), error_code_name(e.code()));
  } catch (const std::exception& e) {
    fail(MC_ERR_USAGE, std::string("usage: ") + e.what(), "usage");
  }
  auto t1 = std::chrono::steady_clock::now();
  doc["diagnostics"] = {{"verb", req->verb},
                        {"backend", req->ctx->backend == MC_BACKEND_EXACT ? "exact" : "float64"},
                        {"semiring", io::view_name(view)},
                        {"tolerance", req->ctx->backend == MC_BACKEND_EXACT ? 0.0 : req->ctx->tol},
                        {"seed", req->ctx->seed}};
  doc["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  res->json_text = doc.dump();
  if (primary) {
    res->csv_text = io::matrix_csv_text(*primary, view);
  } else {
    std::string csv = "key,value\n";
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (it.value().is_primitive())
        csv += it.key() + "," + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + "\n";
    res->csv_text = csv;
  }
  mc_status st = res->status;
  *out = res.release();
  return st;
}

mc_status mc_result_status(const mc_result* r) { return r ? r->status : MC_ERR_USAGE; }
const char* mc_result_json(const mc_result* r) { return r ? r->json_text.c_str() : ""; }
const char* mc_result_csv(const mc_result* r) { return r ? r->csv_text.c_str() : ""; }
void mc_result_free(mc_result* r) { delete r; }

}  // extern "C"
