#include "rookalg/rational.hpp"

#include <stdexcept>

namespace rookalg {

Rat ratParse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s = text;
  // mpq_class accepts "p/q" but we validate shape first for located errors.
  size_t slash = s.find('/');
  auto checkInt = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: " + text);
    size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational: " + text);
    for (size_t i = start; i < part.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("malformed rational: " + text);
  };
  if (slash == std::string::npos) {
    checkInt(s);
  } else {
    checkInt(s.substr(0, slash));
    checkInt(s.substr(slash + 1));
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string ratStr(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int factorialInt(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomialInt(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int fallingInt(long n, long k) {
  if (k < 0) throw std::invalid_argument("falling factorial with k < 0");
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace rookalg
