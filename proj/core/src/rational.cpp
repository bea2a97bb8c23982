#include "tphs/rational.hpp"

#include <cctype>

namespace tphs {

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw Error("empty rational literal");
  // Validate by hand: mpq_set_str accepts whitespace and bases we don't want.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw Error("bad rational literal: '" + std::string(s) + "'");
  if (num_end != s.size()) {
    if (s[num_end] != '/') throw Error("bad rational literal: '" + std::string(s) + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != s.size())
      throw Error("bad rational literal: '" + std::string(s) + "'");
  }
  mpq_class v;
  if (v.set_str(std::string(s), 10) != 0)
    throw Error("bad rational literal: '" + std::string(s) + "'");
  if (v.get_den() == 0) throw DivideByZeroError();
  v.canonicalize();
  return Rational(v);
}

long Rational::to_long() const {
  if (!is_integer()) throw Error("not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw Error("integer too large: " + str());
  return v_.get_num().get_si();
}

std::string Rational::str() const { return v_.get_str(); }

std::string GaussRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!re.is_zero()) out = re.str();
  if (!im.is_zero()) {
    if (!out.empty() && !im.is_negative()) out += '+';
    out += im.str();
    out += "*i";
  }
  return out;
}

}  // namespace tphs
