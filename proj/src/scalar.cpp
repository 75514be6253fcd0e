#include "cmkit/scalar.hpp"

#include <regex>
#include <stdexcept>

namespace cmkit {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("not a rational number: \"" + text + "\"");
  mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
  mpz_class den(1);
  if (m[2].matched) den = mpz_class(m[2].str(), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
  Rational v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace cmkit
