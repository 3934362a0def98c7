#include "hyperoct/field.hpp"

#include <cctype>

namespace hyperoct {

bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (start == t.size()) throw ParseError("expected an integer, got '" + t + "'");
  for (size_t i = start; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw ParseError("expected an integer, got '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace hyperoct
