#include "symrep/natural.hpp"

#include <cctype>

#include "symrep/errors.hpp"

namespace symrep {

Natural factorial(unsigned n) {
  Natural r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Natural binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Natural r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Natural power(const Natural& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw ParseError("empty number", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected a decimal digit", i);
    }
  }
  return Natural(text);
}

}  // namespace symrep
