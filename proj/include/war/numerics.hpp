#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace war {

// Exact arithmetic only. Every count in this project is a BigInt and every
// probability a Rational; nothing is ever rounded through a double.
using BigInt = mpz_class;
using Rational = mpq_class;  // kept canonical: lowest terms, denominator > 0

std::string to_decimal(const BigInt& v);

// Serializes as "p/q" in lowest terms with the denominator always spelled
// out ("1/1", "0/1").
std::string to_fraction(const Rational& v);

// mpq arithmetic keeps results canonical, but raw two-argument construction
// does not reduce; build rationals from untrusted parts through this.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(long n);

// 0 whenever k < 0 or k > n, so difference formulas work at the edges.
BigInt binomial(long n, long k);

// parts must be nonnegative; returns (sum parts)! / prod(parts[i]!).
BigInt multinomial(const std::vector<long>& parts);

BigInt pow_int(const BigInt& base, unsigned long exp);
Rational pow_rat(const Rational& base, unsigned long exp);

// Ballot count: strings of n U's and k D's where every prefix has at least
// as many U's as D's. Requires 0 <= k <= n.
BigInt catalan_triangle(long n, long k);

BigInt catalan(long r);

// Evaluates both sides of
//   catalan_triangle(m+k-1, k) == sum over x_1+...+x_m = k of prod catalan(x_i)
// independently (closed form on the left, direct composition sweep on the
// right) and returns them for the caller to compare.
std::pair<BigInt, BigInt> sum_product_identity_check(long m, long k);

// A_1 = 1, A_{k+1} = 1 + A_k^2.
BigInt a_k(long k);

// P_1 = 1/2, P_{k+1} = 1/2 + P_k^2 / 2. Exact; the numerator and denominator
// of P_k have 2^k - 1 bits, so large k is expensive but still exact.
Rational p_k(long k);

}  // namespace war
