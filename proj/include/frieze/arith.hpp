#pragma once

#include <vector>

#include "frieze/scalar.hpp"

namespace frieze {

/// gcd of two nonnegative integers; gcd(0, b) = b and gcd(0, 0) = 0.
/// Throws std::invalid_argument on negative input.
Integer gcd_nat(const Integer& a, const Integer& b);

/// Largest e with p^e | n. Requires p prime (checked) and n >= 1.
unsigned long p_valuation(const Integer& p, const Integer& n);

/// u*a + v*b = g with g = gcd(|a|, |b|) >= 0.
struct Bezout {
  Integer g, u, v;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

/// Distinct prime divisors of n >= 1 in increasing order (trial division).
std::vector<Integer> prime_divisors(Integer n);

/// Solves x = residue_i (mod modulus_i) for pairwise coprime moduli; the
/// result lies in [0, prod modulus_i).
Integer crt(const std::vector<Integer>& residues,
            const std::vector<Integer>& moduli);

/// Mathematical modulus in [0, m) for m > 0.
inline long floor_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

/// ceil(a / b) for b > 0.
Integer ceil_div(const Integer& a, const Integer& b);

}  // namespace frieze
