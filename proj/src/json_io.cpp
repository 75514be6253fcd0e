#include "cmkit/json_io.hpp"

namespace cmkit {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require_key(const json& doc, const std::string& key, const std::string& path = "") {
  if (!doc.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(child(path, key), "missing field");
  return *it;
}

void check_count(const json& doc, const std::string& key, std::size_t expected) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_number_unsigned() || it->get<std::size_t>() != expected) {
    throw SchemaError("/" + key, "declared " + it->dump() + " but the matrices imply " + std::to_string(expected));
  }
}

}  // namespace

template <>
Rational scalar_from_json<Rational>(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    Rational v(mpz_class(j.dump(), 10));
    return v;
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected a rational string \"p/q\" or an integer, got " + j.dump());
}

template <>
Complex scalar_from_json<Complex>(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number() || !j[1].is_number())
      throw SchemaError(path, "expected a [re, im] pair of numbers, got " + j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return {scalar_from_json<Rational>(j, path).get_d(), 0.0};
  throw SchemaError(path, "expected a [re, im] pair, got " + j.dump());
}

json to_json(const Rational& v) { return v.get_str(); }
json to_json(const Complex& v) { return json::array({v.real(), v.imag()}); }

template <class T>
Matrix<T> matrix_from_json(const json& j, const std::string& path, bool flat_as_column) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a nonempty array of rows");
  // Complex rows are arrays of [re, im] pairs, so a nested array is always
  // read as rows.
  if (!j.front().is_array()) {
    std::vector<T> data;
    for (std::size_t k = 0; k < j.size(); ++k) data.push_back(scalar_from_json<T>(j[k], child(path, k)));
    const std::size_t len = data.size();
    return flat_as_column ? Matrix<T>(len, 1, std::move(data)) : Matrix<T>(1, len, std::move(data));
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().size();
  if (cols == 0) throw SchemaError(child(path, 0), "empty row");
  std::vector<T> data;
  data.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array()) throw SchemaError(child(path, r), "expected a row array");
    if (row.size() != cols) {
      throw SchemaError(child(path, r), "row has " + std::to_string(row.size()) + " entries, expected " +
                                            std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) data.push_back(scalar_from_json<T>(row[c], child(child(path, r), c)));
  }
  return Matrix<T>(rows, cols, std::move(data));
}

std::string declared_field(const json& doc) {
  if (!doc.is_object()) return "rational";
  auto it = doc.find("field");
  if (it == doc.end()) return "rational";
  if (!it->is_string() || (*it != "rational" && *it != "complex"))
    throw SchemaError("/field", "expected \"rational\" or \"complex\"");
  return it->get<std::string>();
}

template <class T>
CMQuadruple<T> quadruple_from_json(const json& doc) {
  CMQuadruple<T> q{matrix_from_json<T>(require_key(doc, "X"), "/X"), matrix_from_json<T>(require_key(doc, "Y"), "/Y"),
                   matrix_from_json<T>(require_key(doc, "i"), "/i", true),
                   matrix_from_json<T>(require_key(doc, "j"), "/j", false)};
  try {
    q.validate();
  } catch (const DimensionError& e) {
    throw SchemaError("/", e.what());
  }
  check_count(doc, "n", q.n());
  check_count(doc, "r", q.r());
  return q;
}

template <class T>
PolyCovector<T> covector_from_json(const json& doc, const std::string& path) {
  const json& coeffs = require_key(doc, "coeffs", path);
  if (!coeffs.is_array() || coeffs.empty()) throw SchemaError(child(path, "coeffs"), "expected a nonempty array");
  std::vector<Matrix<T>> mats;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    mats.push_back(matrix_from_json<T>(coeffs[k], child(child(path, "coeffs"), k), false));
  try {
    return PolyCovector<T>(std::move(mats));
  } catch (const DimensionError& e) {
    throw SchemaError(child(path, "coeffs"), e.what());
  }
}

template <class T>
KoszulTriple<T> triple_from_json(const json& doc) {
  const json& jdoc = require_key(doc, "j");
  PolyCovector<T> j = jdoc.is_object() ? covector_from_json<T>(jdoc, "/j")
                                       : PolyCovector<T>::constant(matrix_from_json<T>(jdoc, "/j", false));
  KoszulTriple<T> kt{matrix_from_json<T>(require_key(doc, "X"), "/X"), matrix_from_json<T>(require_key(doc, "i"), "/i", true),
                     matrix_from_json<T>(require_key(doc, "Y"), "/Y"), std::move(j)};
  try {
    kt.validate();
  } catch (const DimensionError& e) {
    throw SchemaError("/", e.what());
  }
  check_count(doc, "n", kt.n());
  check_count(doc, "r", kt.r());
  return kt;
}

template <class T>
FramedTorsionSheaf<T> sheaf_from_json(const json& doc) {
  FramedTorsionSheaf<T> fs{matrix_from_json<T>(require_key(doc, "X"), "/X"),
                           matrix_from_json<T>(require_key(doc, "i"), "/i", true)};
  try {
    fs.validate();
  } catch (const DimensionError& e) {
    throw SchemaError("/", e.what());
  }
  check_count(doc, "n", fs.n());
  check_count(doc, "r", fs.r());
  return fs;
}

#define CMKIT_INSTANTIATE_JSON(T)                                                           \
  template Matrix<T> matrix_from_json(const json&, const std::string&, bool);              \
  template CMQuadruple<T> quadruple_from_json(const json&);                                \
  template PolyCovector<T> covector_from_json(const json&, const std::string&);            \
  template KoszulTriple<T> triple_from_json(const json&);                                  \
  template FramedTorsionSheaf<T> sheaf_from_json(const json&);

CMKIT_INSTANTIATE_JSON(Rational)
CMKIT_INSTANTIATE_JSON(Complex)

}  // namespace cmkit
