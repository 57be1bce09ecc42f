#include "postlie/verdict.hpp"

namespace postlie {

std::string format_vec(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Scalar& c = v[i];
    if (c.is_zero()) continue;
    std::string coeff = c.str();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string term = "e" + std::to_string(i + 1);
    if (coeff != "1") term = coeff + "*" + term;
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string format_tuple(const std::vector<int>& where) {
  std::string out = "(";
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (i) out += ",";
    out += "e" + std::to_string(where[i] + 1);
  }
  return out + ")";
}

std::string format_witness(const Witness& w) {
  return w.identity + " at " + format_tuple(w.where) + ": " +
         format_vec(w.lhs) + " vs " + format_vec(w.rhs) +
         ", residual " + format_vec(w.residual);
}

}  // namespace postlie
