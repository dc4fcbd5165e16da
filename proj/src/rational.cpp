#include "cfree/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace cfree {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.pop_back();
    std::size_t start = s.find_first_not_of(' ');
    if (start == std::string::npos) throw std::invalid_argument("empty rational");
    s = s.substr(start);

    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rational pow(const Rational& base, unsigned exponent) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

bool is_perfect_square(const Rational& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational exact_sqrt(const Rational& q) {
    if (!is_perfect_square(q)) throw std::domain_error("not a perfect square: " + q.get_str());
    BigInt num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    Rational out(num, den);
    out.canonicalize();
    return out;
}

long double to_long_double(const Rational& q) {
    if (sgn(q) == 0) return 0.0L;
    BigInt num = abs(q.get_num());
    const BigInt& den = q.get_den();
    const long excess = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                        static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    // Scale so the integer quotient carries about 72 significant bits.
    const long shift = 72 - excess;
    BigInt quotient;
    if (shift >= 0) {
        BigInt scaled = num << static_cast<mp_bitcnt_t>(shift);
        mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    } else {
        BigInt scaled = den << static_cast<mp_bitcnt_t>(-shift);
        mpz_tdiv_q(quotient.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
    BigInt high = quotient >> 64;
    BigInt low = quotient - (high << 64);
    long double value = std::ldexp(static_cast<long double>(high.get_ui()), 64);
    value += std::ldexp(static_cast<long double>(low.get_ui() >> 32), 32) +
             static_cast<long double>(low.get_ui() & 0xffffffffUL);
    value = std::ldexp(value, static_cast<int>(-shift));
    return sgn(q) < 0 ? -value : value;
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace cfree
