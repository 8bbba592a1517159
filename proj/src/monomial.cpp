#include "kvertex/monomial.hpp"

namespace kvertex {

std::string half_exponent_str(int e2) {
  if (e2 % 2 == 0) return std::to_string(e2 / 2);
  return std::to_string(e2) + "/2";
}

std::string Monomial::str() const {
  std::string out;
  auto factor = [&out](const char* v, int e2) {
    if (e2 == 0) return;
    if (!out.empty()) out += ' ';
    out += v;
    out += "^{" + half_exponent_str(e2) + "}";
  };
  factor("x", ex2);
  factor("y", ey2);
  factor("z", ez2);
  return out;
}

}  // namespace kvertex
