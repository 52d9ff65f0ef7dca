#include "addcomb/numeric.hpp"

#include <cctype>
#include <vector>

#include "addcomb/errors.hpp"

namespace addcomb {

Rat torus_norm(const Rat& x) {
  // Reduce x mod 1 into [0, 1), then fold to [0, 1/2].
  Int num = x.get_num();
  Int den = x.get_den();  // > 0, canonical
  Int r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // r in [0, den)
  Int folded = den - r;
  if (r > folded) r = folded;
  Rat out(r, den);
  out.canonicalize();
  return out;
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw StructuralError("empty rational literal");
  auto slash = s.find('/');
  auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) throw StructuralError("zero denominator: " + s);
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    if (dot != std::string::npos) {
      std::string head = s.substr(0, dot);
      std::string tail = s.substr(dot + 1);
      for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw StructuralError("bad decimal literal: " + s);
      bool neg = !head.empty() && head[0] == '-';
      if (neg) head = head.substr(1);
      if (head.empty()) head = "0";
      Int scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
      Int num = Int(head) * scale + (tail.empty() ? Int(0) : Int(tail));
      if (neg) num = -num;
      Rat q(num, scale);
      q.canonicalize();
      return q;
    }
    return Rat(Int(s));
  } catch (const std::invalid_argument&) {
    throw StructuralError("bad rational literal: " + s);
  }
}

long least_prime_in(long lo, long hi) {
  if (lo < 2) lo = 2;
  for (long n = lo; n < hi; ++n) {
    Int z(n);
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) > 0) return n;
  }
  throw StructuralError("no prime in [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + ")");
}

}  // namespace addcomb
