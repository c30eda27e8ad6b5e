#include "trispec/common.hpp"

#include <cctype>

namespace trispec {

Rat rat_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_decimal: empty string");
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    Int mantissa = 0;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw std::invalid_argument("rat_from_decimal: bad literal " + s);
            seen_dot = true;
        } else {
            mantissa = mantissa * 10 + (s[i] - '0');
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        }
    }
    if (!seen_digit) throw std::invalid_argument("rat_from_decimal: bad literal " + s);
    long exp10 = -frac_digits;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("rat_from_decimal: bad exponent in " + s);
        long e = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("rat_from_decimal: bad exponent in " + s);
            e = e * 10 + (s[i] - '0');
        }
        exp10 += eneg ? -e : e;
    }
    if (i != s.size()) throw std::invalid_argument("rat_from_decimal: trailing junk in " + s);
    Int num = neg ? Int(-mantissa) : mantissa;
    Int den = 1;
    Int ten = 10;
    if (exp10 >= 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp10));
        num *= scale;
    } else {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exp10));
    }
    return make_rat(num, den);
}

namespace {

// floor(v * 10^digits) rendered with the decimal point reinserted.
std::string render_scaled(Int scaled, int digits, bool negative_carry) {
    (void)negative_carry;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string body = scaled.get_str();
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out;
    if (neg) out += '-';
    if (digits == 0) {
        out += body;
    } else {
        out += body.substr(0, body.size() - digits);
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

}  // namespace

std::string decimal_floor(const Rat& v, int digits) {
    Int scale;
    Int ten = 10;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(digits));
    Int num = v.get_num() * scale;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    return render_scaled(q, digits, false);
}

std::string decimal_ceil(const Rat& v, int digits) {
    Int scale;
    Int ten = 10;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(digits));
    Int num = v.get_num() * scale;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    return render_scaled(q, digits, true);
}

}  // namespace trispec
