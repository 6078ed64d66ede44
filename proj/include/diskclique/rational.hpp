#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace diskclique {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact conversion of a finite long double (every binary float is a dyadic rational).
inline Rational from_long_double(long double v) {
    if (v == 0.0L) return Rational(0);
    int exp = 0;
    long double mant = std::frexp(v, &exp);  // v = mant * 2^exp, 0.5 <= |mant| < 1
    bool neg = mant < 0;
    if (neg) mant = -mant;
    // 64 bits covers the x87 extended mantissa; wider formats lose the tail bits, which is fine
    // because the result is still an exact rational close to v.
    long double scaled = std::ldexp(mant, 64);
    std::uint64_t hi = static_cast<std::uint64_t>(scaled);
    Integer num(static_cast<unsigned long>(hi));
    Rational q(num);
    int shift = exp - 64;
    if (shift >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

inline long double to_long_double(const Rational& q) {
    // mpq_get_d truncates to double; recover extra precision via one correction step.
    long double approx = q.get_d();
    Rational err = q - from_long_double(approx);
    return approx + static_cast<long double>(err.get_d());
}

/// Bracket sqrt(value) by rationals with denominator den(value) * 2^bits.
struct SqrtBracket {
    Rational lower;
    Rational upper;
};

inline SqrtBracket sqrt_bracket(const Rational& value, unsigned bits) {
    // sqrt(p/q) = sqrt(p*q)/q
    Integer p = value.get_num();
    Integer q = value.get_den();
    Integer radicand = p * q;
    mpz_mul_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), 2 * bits);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    Integer den = q;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    SqrtBracket b{Rational(root, den), Rational(Integer(root + 1), den)};
    b.lower.canonicalize();
    b.upper.canonicalize();
    if (root * root == radicand) b.upper = b.lower;
    return b;
}

/// Parses `p/q`, integers, and decimals with optional exponent (`-1.25e-3`), exactly.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        auto digits_only = [&](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (!is_digit(c)) return false;
            return true;
        };
        if (!digits_only(num, true) || !digits_only(den, false)) return std::nullopt;
        std::string n(num);
        if (n[0] == '+') n.erase(0, 1);
        Integer zn(n, 10), zd(std::string(den), 10);
        if (zd == 0) return std::nullopt;
        Rational q(zn, zd);
        q.canonicalize();
        return q;
    }

    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false;
    while (i < text.size() && is_digit(text[i])) {
        digits += text[i++];
        seen_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && is_digit(text[i])) {
            digits += text[i++];
            ++frac_digits;
            seen_digit = true;
        }
    }
    if (!seen_digit) return std::nullopt;
    long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            eneg = text[i] == '-';
            ++i;
        }
        if (i >= text.size()) return std::nullopt;
        std::string ed;
        while (i < text.size() && is_digit(text[i])) ed += text[i++];
        if (ed.empty() || ed.size() > 6) return std::nullopt;
        exponent = std::stol(ed);
        if (eneg) exponent = -exponent;
    }
    if (i != text.size()) return std::nullopt;

    Integer mant(digits, 10);
    long shift = exponent - frac_digits;
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift >= 0 ? Rational(Integer(mant * pow10)) : Rational(mant, pow10);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace diskclique
