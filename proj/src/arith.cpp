#include "frieze/arith.hpp"

#include <stdexcept>

namespace frieze {

Integer gcd_nat(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) throw std::invalid_argument("gcd_nat: negative input");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

unsigned long p_valuation(const Integer& p, const Integer& n) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw std::invalid_argument("p_valuation: " + p.get_str() + " is not prime");
  }
  if (n <= 0) {
    throw std::invalid_argument("p_valuation: undefined for n = " + n.get_str());
  }
  Integer rest = n;
  unsigned long e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
    rest /= p;
    ++e;
  }
  return e;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

std::vector<Integer> prime_divisors(Integer n) {
  if (n < 1) throw std::invalid_argument("prime_divisors: n must be >= 1");
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      out.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Integer crt(const std::vector<Integer>& residues,
            const std::vector<Integer>& moduli) {
  if (residues.size() != moduli.size()) {
    throw std::invalid_argument("crt: size mismatch");
  }
  Integer x = 0;
  Integer modulus = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const Integer& mi = moduli[i];
    // x + modulus * t = r_i (mod m_i)  =>  t = (r_i - x) * modulus^{-1}.
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), mi.get_mpz_t()) == 0 &&
        mi != 1) {
      throw std::invalid_argument("crt: moduli are not coprime");
    }
    Integer t = (residues[i] - x) * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mi.get_mpz_t());
    x += modulus * t;
    modulus *= mi;
  }
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return x;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace frieze
