#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "maxcone/maxcone.hpp"

namespace maxcone::io {

// A parsed entry before it is mapped into a backend.
struct RawScalar {
  enum class Kind { NegInf, PosInf, Finite } kind = Kind::Finite;
  mpq_class q{0};   // exact value of the text
  double d = 0;     // nearest double
};

struct RawMatrix {
  View view = View::MaxTimes;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RawScalar> data;  // row-major
};

RawMatrix parse_matrix(const std::string& text);
RawScalar parse_scalar_text(const std::string& token);

std::string view_name(View v);

// Backend conversion. The source view is the matrix declaration; the target
// view is what the computation runs in.
Matrix<MaxPlusFloat> to_float(const RawMatrix& m, View target, double tol);
Matrix<MaxTimesExact> to_exact_maxtimes(const RawMatrix& m);
Matrix<MaxPlusExact> to_exact_maxplus(const RawMatrix& m);

// Output formatting: one instance per (backend, view).
struct Formatter {
  View view = View::MaxTimes;

  nlohmann::json value(const MaxPlusFloat& s, double v) const;
  nlohmann::json value(const MaxTimesExact& s, const ExtRational& v) const;
  nlohmann::json value(const MaxPlusExact& s, const ExtRational& v) const;

  template <Semiring S>
  nlohmann::json vector(const Vector<S>& v) const {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(value(v.semiring(), x));
    return a;
  }
  template <Semiring S>
  nlohmann::json matrix(const Matrix<S>& m) const {
    nlohmann::json a = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Index j = 0; j < m.cols(); ++j) row.push_back(value(m.semiring(), m(i, j)));
      a.push_back(row);
    }
    return a;
  }
};

// A real number (distance, norm, bound) with 12 significant digits; infinities as strings.
nlohmann::json real(double v);

std::string matrix_json_text(const nlohmann::json& rows, View view);
std::string matrix_csv_text(const nlohmann::json& rows, View view);

}  // namespace maxcone::io
