#include "io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace maxcone::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, "parse: " + what); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Exact rational of a decimal literal such as -12.5e-3.
bool decimal_to_rational(const std::string& t, mpq_class& out) {
  std::size_t i = 0;
  bool neg = false;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = t[i++] == '-';
  std::string digits;
  long exp10 = 0;
  bool any = false;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
    digits += t[i++];
    any = true;
  }
  if (i < t.size() && t[i] == '.') {
    ++i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      digits += t[i++];
      --exp10;
      any = true;
    }
  }
  if (!any) return false;
  if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
    ++i;
    long e = 0;
    auto res = std::from_chars(t.data() + i, t.data() + t.size(), e);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) return false;
    exp10 += e;
    i = t.size();
  }
  if (i != t.size()) return false;
  if (exp10 > 4000 || exp10 < -4000) return false;
  mpz_class num(digits, 10);
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  out = exp10 < 0 ? mpq_class(num, p) : mpq_class(num * p);
  out.canonicalize();
  if (neg) out = -out;
  return true;
}

RawScalar finite(const mpq_class& q) {
  RawScalar r;
  r.q = q;
  r.d = q.get_d();
  return r;
}

RawScalar from_json(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return finite(mpq_class(mpz_class(std::to_string(v.get<unsigned long long>()), 10)));
    return finite(mpq_class(mpz_class(std::to_string(v.get<long long>()), 10)));
  }
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) parse_error("non-finite number");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, d);
    RawScalar r = parse_scalar_text(std::string(buf, res.ptr));
    r.d = d;
    return r;
  }
  if (v.is_string()) return parse_scalar_text(v.get<std::string>());
  parse_error("entries must be numbers or strings, got " + std::string(v.type_name()));
}

View parse_view(const std::string& s) {
  if (s == "maxtimes" || s == "max-times") return View::MaxTimes;
  if (s == "maxplus" || s == "max-plus") return View::MaxPlus;
  parse_error("unknown semiring '" + s + "'");
}

RawMatrix parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("expected a JSON object");
  RawMatrix m;
  m.view = doc.contains("semiring") ? parse_view(doc.at("semiring").get<std::string>()) : View::MaxTimes;
  if (!doc.contains("data") || !doc["data"].is_array()) parse_error("missing 'data' array");
  const json& data = doc["data"];
  // A flat array is read as a column vector.
  bool flat = !data.empty() && !data.front().is_array();
  if (flat) {
    m.rows = data.size();
    m.cols = 1;
    for (const auto& v : data) m.data.push_back(from_json(v));
  } else {
    m.rows = data.size();
    m.cols = m.rows ? data.front().size() : 0;
    for (const auto& row : data) {
      if (!row.is_array()) parse_error("rows must be arrays");
      if (row.size() != m.cols) parse_error("data row lengths unequal");
      for (const auto& v : row) m.data.push_back(from_json(v));
    }
  }
  if (doc.contains("rows") && doc["rows"].get<std::size_t>() != m.rows)
    parse_error("'rows' does not match data");
  if (doc.contains("cols") && doc["cols"].get<std::size_t>() != m.cols)
    parse_error("'cols' does not match data");
  return m;
}

RawMatrix parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  RawMatrix m;
  bool header = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (!header) {
      if (line.find("maxplus") != std::string::npos || line.find("max-plus") != std::string::npos) {
        m.view = View::MaxPlus;
      } else if (line.find("maxtimes") != std::string::npos || line.find("max-times") != std::string::npos) {
        m.view = View::MaxTimes;
      } else {
        parse_error("CSV header must name the semiring (maxtimes or maxplus)");
      }
      header = true;
      continue;
    }
    std::vector<RawScalar> row;
    std::stringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) row.push_back(parse_scalar_text(trim(tok)));
    if (m.rows == 0) m.cols = row.size();
    if (row.size() != m.cols) parse_error("CSV row lengths unequal");
    m.data.insert(m.data.end(), row.begin(), row.end());
    ++m.rows;
  }
  if (!header) parse_error("empty input");
  return m;
}

mpq_class exact_value(const RawScalar& r) {
  if (r.kind != RawScalar::Kind::Finite) parse_error("infinite entry not allowed here");
  return r.q;
}

}  // namespace

RawScalar parse_scalar_text(const std::string& token) {
  std::string t = trim(token);
  if (t == "-inf" || t == "-Infinity" || t == "-infinity") return RawScalar{RawScalar::Kind::NegInf, 0, -INFINITY};
  if (t == "inf" || t == "+inf" || t == "Infinity" || t == "infinity")
    return RawScalar{RawScalar::Kind::PosInf, 0, INFINITY};
  if (t.empty()) parse_error("empty entry");
  auto slash = t.find('/');
  mpq_class q;
  if (slash != std::string::npos) {
    mpq_class num;
    mpq_class den;
    if (!decimal_to_rational(t.substr(0, slash), num) || !decimal_to_rational(t.substr(slash + 1), den))
      parse_error("bad rational '" + t + "'");
    if (den == 0) parse_error("zero denominator in '" + t + "'");
    q = num / den;
  } else if (!decimal_to_rational(t, q)) {
    parse_error("bad number '" + t + "'");
  }
  q.canonicalize();
  return finite(q);
}

RawMatrix parse_matrix(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) parse_error("empty input");
  RawMatrix m = t.front() == '{' ? parse_json(t) : parse_csv(t);
  if (m.rows == 0 || m.cols == 0) parse_error("matrix must have positive dimensions");
  for (const auto& e : m.data) {
    if (m.view == View::MaxTimes) {
      if (e.kind == RawScalar::Kind::NegInf) parse_error("-inf is not a max-times entry (use 0)");
      if (e.kind == RawScalar::Kind::Finite && sgn(e.q) < 0) parse_error("negative max-times entry");
    }
    if (e.kind == RawScalar::Kind::PosInf) parse_error("+inf is not a valid entry");
  }
  return m;
}

std::string view_name(View v) { return v == View::MaxTimes ? "maxtimes" : "maxplus"; }

Matrix<MaxPlusFloat> to_float(const RawMatrix& m, View target, double tol) {
  (void)target;  // the float core is always log-domain; the view only matters on output
  MaxPlusFloat s(tol);
  std::vector<double> v;
  v.reserve(m.data.size());
  for (const auto& e : m.data) {
    if (e.kind == RawScalar::Kind::NegInf) {
      v.push_back(s.zero());
    } else if (m.view == View::MaxTimes) {
      v.push_back(sgn(e.q) == 0 ? s.zero() : detail::log_of(e.q));
    } else {
      v.push_back(e.d);
    }
  }
  return Matrix<MaxPlusFloat>(m.rows, m.cols, std::move(v), s);
}

Matrix<MaxTimesExact> to_exact_maxtimes(const RawMatrix& m) {
  if (m.view != View::MaxTimes)
    throw Error(ErrorCode::Unsupported, "exact backend cannot convert max-plus input to max-times");
  std::vector<ExtRational> v;
  for (const auto& e : m.data) v.emplace_back(exact_value(e));
  return Matrix<MaxTimesExact>(m.rows, m.cols, std::move(v), MaxTimesExact());
}

Matrix<MaxPlusExact> to_exact_maxplus(const RawMatrix& m) {
  if (m.view != View::MaxPlus)
    throw Error(ErrorCode::Unsupported, "exact backend cannot convert max-times input to max-plus");
  std::vector<ExtRational> v;
  for (const auto& e : m.data)
    v.push_back(e.kind == RawScalar::Kind::NegInf ? ExtRational::neg_inf() : ExtRational(exact_value(e)));
  return Matrix<MaxPlusExact>(m.rows, m.cols, std::move(v), MaxPlusExact());
}

json real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  double r = std::strtod(buf, nullptr);
  if (r == 0) r = 0;  // drop negative zero
  if (std::fabs(r - std::round(r)) == 0 && std::fabs(r) < 9e15) return static_cast<long long>(r);
  return r;
}

json Formatter::value(const MaxPlusFloat& s, double v) const {
  if (view == View::MaxTimes) {
    if (s.is_zero(v)) return 0;
    return real(std::exp(v));
  }
  return real(v);
}

namespace {

json rational(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

}  // namespace

json Formatter::value(const MaxTimesExact& s, const ExtRational& v) const {
  if (s.is_top(v)) return "inf";
  return rational(v.q);
}

json Formatter::value(const MaxPlusExact& s, const ExtRational& v) const {
  if (s.is_zero(v)) return "-inf";
  if (s.is_top(v)) return "inf";
  return rational(v.q);
}

std::string matrix_json_text(const json& rows, View view) {
  json doc;
  doc["semiring"] = view_name(view);
  doc["rows"] = rows.size();
  doc["cols"] = rows.empty() ? 0 : rows.front().size();
  doc["data"] = rows;
  return doc.dump();
}

std::string matrix_csv_text(const json& rows, View view) {
  std::ostringstream os;
  os << "semiring=" << view_name(view) << "\n";
  for (const auto& row : rows) {
    bool first = true;
    const json& cells = row.is_array() ? row : json::array({row});
    for (const auto& c : cells) {
      if (!first) os << ",";
      first = false;
      os << (c.is_string() ? c.get<std::string>() : c.dump());
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace maxcone::io
