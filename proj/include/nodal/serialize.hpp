#pragma once

// Text serialization of polynomials: a header naming the variables followed
// by one term per line,
//
//   # vars: t0 t1 t2
//   3 0 0 : 1 / 1
//   0 1 1 : -1 / 2
//
// Terms are written in increasing exponent order, so equal polynomials
// serialize to identical text.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nodal/poly.hpp"

namespace nodal {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string serialize(const Poly& p) {
  std::ostringstream os;
  os << "# vars:";
  for (std::size_t i = 0; i < p.nvars(); ++i) os << " t" << i;
  os << '\n';
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << " : " << c.get_num().get_str() << " / " << c.get_den().get_str() << '\n';
  }
  return os.str();
}

inline Poly parse_poly(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t nvars = 0;
  bool have_header = false;
  Poly p;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("# vars:", 0) == 0) {
      std::istringstream h(line.substr(7));
      std::string name;
      nvars = 0;
      while (h >> name) {
        if (name != "t" + std::to_string(nvars))
          throw ParseError("line " + std::to_string(lineno) + ": unexpected variable name " + name);
        ++nvars;
      }
      have_header = true;
      p = Poly(nvars);
      continue;
    }
    if (line[0] == '#') continue;
    if (!have_header) throw ParseError("missing '# vars:' header");
    const auto colon = line.find(':');
    const auto slash = line.find('/', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || slash == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'exponents : num / den'");
    std::istringstream ex(line.substr(0, colon));
    Exponents e;
    long v;
    while (ex >> v) {
      if (v < 0) throw ParseError("line " + std::to_string(lineno) + ": negative exponent");
      e.push_back(static_cast<unsigned>(v));
    }
    if (!ex.eof() || e.size() != nvars)
      throw ParseError("line " + std::to_string(lineno) + ": bad exponent vector");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto f = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, f - b + 1);
    };
    Integer num, den;
    if (num.set_str(trim(line.substr(colon + 1, slash - colon - 1)), 10) != 0 ||
        den.set_str(trim(line.substr(slash + 1)), 10) != 0 || den <= 0)
      throw ParseError("line " + std::to_string(lineno) + ": bad coefficient");
    p.add_term(std::move(e), make_scalar(num, den));
  }
  if (!have_header) throw ParseError("missing '# vars:' header");
  return p;
}

}  // namespace nodal
