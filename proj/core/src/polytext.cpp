#include "recip/polytext.hpp"

#include <cctype>
#include <sstream>

namespace recip {

IntPoly parse_poly(const std::string& text) {
  std::vector<mpz_class> cs;
  std::string entry;
  std::istringstream is(text);
  bool any = false;
  while (std::getline(is, entry, ',')) {
    any = true;
    size_t a = 0, b = entry.size();
    while (a < b && std::isspace(static_cast<unsigned char>(entry[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(entry[b - 1]))) --b;
    std::string tok = entry.substr(a, b - a);
    if (tok.empty()) throw ShapeError("parse_poly: empty coefficient in '" + text + "'");
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
      throw ShapeError("parse_poly: bad coefficient '" + tok + "'");
    cs.push_back(std::move(v));
  }
  if (!any) throw ShapeError("parse_poly: empty input");
  return IntPoly(std::move(cs));
}

std::string format_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) out += ",";
    out += p.coeff(i).get_str();
  }
  return out;
}

}  // namespace recip
