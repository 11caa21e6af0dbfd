#include "loosecyc/rational.hpp"

#include "loosecyc/error.hpp"

#include <cctype>

namespace loosecyc {

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw InvalidInput("bad number '" + std::string(whole) + "'");
    BigInt v = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InvalidInput("bad number '" + std::string(whole) + "'");
        }
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator in '" + std::string(whole) + "'");
        return num / den;
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        BigInt mag = parse_digits(exp_text, whole);
        if (mag > 4000) throw InvalidInput("exponent too large in '" + std::string(whole) + "'");
        exponent = mag.convert_to<long>() * (exp_negative ? -1 : 1);
        text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw InvalidInput("bad number '" + std::string(whole) + "'");
    BigInt num = int_part.empty() ? BigInt(0) : parse_digits(int_part, whole);
    BigInt den = 1;
    for (char c : frac_part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InvalidInput("bad number '" + std::string(whole) + "'");
        }
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational value(num, den);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? value / Rational(scale) : value * Rational(scale);
    return negative ? -value : value;
}

BigInt floor_of(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace loosecyc
