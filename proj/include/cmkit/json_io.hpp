#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "cmkit/koszul.hpp"
#include "cmkit/moduli.hpp"

namespace cmkit {

using json = nlohmann::json;

/// Input that does not match a schema; `path` locates the offending field
/// (e.g. "/X/1/0").
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::invalid_argument(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Rational scalars are strings "p/q" (integers may also be JSON integers);
/// complex scalars are [re, im] pairs (plain numbers and rational strings are
/// accepted as real values).
template <class T>
T scalar_from_json(const json& j, const std::string& path);

json to_json(const Rational& v);
json to_json(const Complex& v);

/// Row-major array of rows. A flat array is read as a column when
/// `flat_as_column` is set, otherwise as a single row.
template <class T>
Matrix<T> matrix_from_json(const json& j, const std::string& path, bool flat_as_column = false);

template <class T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Field named by the document's "field" key ("rational" when absent).
std::string declared_field(const json& doc);

/// {"n", "r", "field", "X", "Y", "i", "j"}; n and r are optional but checked
/// when present.
template <class T>
CMQuadruple<T> quadruple_from_json(const json& doc);

template <class T>
json to_json(const CMQuadruple<T>& q) {
  return json{{"n", q.n()}, {"r", q.r()}, {"field", Field<T>::name}, {"X", to_json(q.X)},
              {"Y", to_json(q.Y)}, {"i", to_json(q.i)}, {"j", to_json(q.j)}};
}

/// {"coeffs": [matrix, ...]} ascending in degree.
template <class T>
PolyCovector<T> covector_from_json(const json& doc, const std::string& path);

template <class T>
json to_json(const PolyCovector<T>& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return json{{"coeffs", std::move(coeffs)}};
}

/// Same keys as a quadruple; "j" may be a matrix (constant) or a covector.
template <class T>
KoszulTriple<T> triple_from_json(const json& doc);

template <class T>
json to_json(const KoszulTriple<T>& kt) {
  return json{{"n", kt.n()}, {"r", kt.r()}, {"field", Field<T>::name}, {"X", to_json(kt.X)},
              {"i", to_json(kt.i)}, {"Y", to_json(kt.Y)}, {"j", to_json(kt.j)}};
}

/// {"X", "i"} plus optional "n", "r", "field"; other keys are ignored.
template <class T>
FramedTorsionSheaf<T> sheaf_from_json(const json& doc);

}  // namespace cmkit
