#include "war/numerics.hpp"

#include <stdexcept>

namespace war {

std::string to_decimal(const BigInt& v) { return v.get_str(); }

std::string to_fraction(const Rational& v) {
    Rational canon = v;
    canon.canonicalize();
    return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(const std::vector<long>& parts) {
    long total = 0;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
    }
    BigInt r = factorial(total);
    for (long p : parts) {
        BigInt d = factorial(p);
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rat(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    // powers of a canonical fraction are canonical
    return r;
}

BigInt catalan_triangle(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("catalan_triangle: need 0 <= k <= n");
    return binomial(n + k, k) - binomial(n + k, k - 1);
}

BigInt catalan(long r) {
    if (r < 0) throw std::invalid_argument("catalan: negative index");
    BigInt b = binomial(2 * r, r);
    BigInt d(r + 1);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    return q;
}

std::pair<BigInt, BigInt> sum_product_identity_check(long m, long k) {
    if (m < 1) throw std::invalid_argument("sum_product_identity_check: m >= 1");
    if (k < 0) throw std::invalid_argument("sum_product_identity_check: k >= 0");
    BigInt lhs = catalan_triangle(m + k - 1, k);

    BigInt rhs(0);
    std::vector<long> parts(static_cast<size_t>(m), 0);
    // lexicographic sweep over weak compositions x_1 + ... + x_m = k
    auto sweep = [&](auto&& self, long pos, long rem) -> void {
        if (pos == m - 1) {
            parts[static_cast<size_t>(pos)] = rem;
            BigInt term(1);
            for (long x : parts) term *= catalan(x);
            rhs += term;
            return;
        }
        for (long x = 0; x <= rem; ++x) {
            parts[static_cast<size_t>(pos)] = x;
            self(self, pos + 1, rem - x);
        }
    };
    sweep(sweep, 0, k);
    return {lhs, rhs};
}

BigInt a_k(long k) {
    if (k < 1) throw std::invalid_argument("a_k: k >= 1");
    BigInt a(1);
    for (long i = 2; i <= k; ++i) a = 1 + a * a;
    return a;
}

Rational p_k(long k) {
    if (k < 1) throw std::invalid_argument("p_k: k >= 1");
    Rational half(1, 2);
    Rational p = half;
    for (long i = 2; i <= k; ++i) p = half + half * p * p;
    return p;
}

}  // namespace war
