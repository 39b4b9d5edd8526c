#include "minari/exact_ratio.hpp"

#include <cctype>
#include <ostream>

#include "minari/errors.hpp"

namespace minari {

namespace {

BigInt pow10(unsigned exponent) {
    return boost::multiprecision::pow(BigInt(10), exponent);
}

// Nearest integer to num/den (den > 0, num >= 0), ties away from zero.
BigInt round_nonnegative(const BigInt& num, const BigInt& den) {
    return (2 * num + den) / (2 * den);
}

std::size_t decimal_length(const BigInt& x) {
    return x.str().size();
}

constexpr int kMaxExponent = 100000;

}  // namespace

ExactRatio::ExactRatio(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0)
        throw InputError("rational with zero denominator");
    if (denominator < 0)
        value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
    else
        value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

BigInt ExactRatio::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt ExactRatio::denominator() const { return boost::multiprecision::denominator(value_); }

int ExactRatio::sign() const { return value_.sign(); }

ExactRatio ExactRatio::abs() const {
    ExactRatio out;
    out.value_ = boost::multiprecision::abs(value_);
    return out;
}

ExactRatio& ExactRatio::operator+=(const ExactRatio& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRatio& ExactRatio::operator-=(const ExactRatio& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRatio& ExactRatio::operator*=(const ExactRatio& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRatio& ExactRatio::operator/=(const ExactRatio& rhs) {
    if (rhs.is_zero())
        throw UndefinedIndexError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

ExactRatio ExactRatio::operator-() const {
    ExactRatio out;
    out.value_ = -value_;
    return out;
}

std::strong_ordering operator<=>(const ExactRatio& lhs, const ExactRatio& rhs) {
    const int c = lhs.value_.compare(rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExactRatio::to_string() const {
    const BigInt den = denominator();
    if (den == 1)
        return numerator().str();
    return numerator().str() + "/" + den.str();
}

std::string ExactRatio::to_significant(int digits) const {
    if (digits < 1)
        throw InputError("significant digits must be >= 1");
    if (is_zero())
        return "0";

    const BigInt num = boost::multiprecision::abs(numerator());
    const BigInt den = denominator();

    // Exponent e with 10^e <= |x| < 10^(e+1), starting from a digit-count estimate.
    long e = static_cast<long>(decimal_length(num)) - static_cast<long>(decimal_length(den));
    auto at_least = [&](long k) {  // |x| >= 10^k
        return k >= 0 ? num >= den * pow10(static_cast<unsigned>(k))
                      : num * pow10(static_cast<unsigned>(-k)) >= den;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;

    const long shift = digits - 1 - e;
    BigInt mantissa = shift >= 0 ? round_nonnegative(num * pow10(static_cast<unsigned>(shift)), den)
                                 : round_nonnegative(num, den * pow10(static_cast<unsigned>(-shift)));
    if (mantissa == pow10(static_cast<unsigned>(digits))) {
        mantissa /= 10;
        ++e;
    }

    std::string body = mantissa.str();
    std::string out;
    if (e >= digits - 1) {
        out = body + std::string(static_cast<std::size_t>(e - (digits - 1)), '0');
    } else if (e < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + body;
    } else {
        out = body.substr(0, static_cast<std::size_t>(e + 1)) + "." + body.substr(static_cast<std::size_t>(e + 1));
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return sign() < 0 ? "-" + out : out;
}

std::string ExactRatio::to_fixed(int places) const {
    if (places < 0)
        throw InputError("decimal places must be >= 0");
    const BigInt num = boost::multiprecision::abs(numerator());
    const BigInt scaled = round_nonnegative(num * pow10(static_cast<unsigned>(places)), denominator());
    std::string body = scaled.str();
    if (places > 0) {
        if (body.size() <= static_cast<std::size_t>(places))
            body.insert(0, static_cast<std::size_t>(places) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(places), ".");
    }
    return (sign() < 0 && scaled != 0) ? "-" + body : body;
}

double ExactRatio::to_double() const {
    return value_.convert_to<double>();
}

ExactRatio ExactRatio::parse(std::string_view text) {
    auto fail = [&]() -> InputError {
        return InputError("not a rational number: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    const std::size_t len = text.size();
    auto digits_from = [&](std::size_t start) {
        std::size_t end = start;
        while (end < len && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        return end;
    };

    bool negative = false;
    if (pos < len && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    const std::size_t int_end = digits_from(pos);
    const std::string int_part(text.substr(pos, int_end - pos));
    pos = int_end;

    if (pos < len && text[pos] == '/') {
        const std::size_t den_end = digits_from(pos + 1);
        if (int_part.empty() || den_end == pos + 1 || den_end != len)
            throw fail();
        const BigInt den = parse_decimal_integer(text.substr(pos + 1, den_end - pos - 1));
        if (den == 0)
            throw fail();
        const BigInt num = parse_decimal_integer(int_part);
        return ExactRatio(negative ? BigInt(-num) : num, den);
    }

    std::string frac_part;
    if (pos < len && text[pos] == '.') {
        const std::size_t frac_end = digits_from(pos + 1);
        frac_part = std::string(text.substr(pos + 1, frac_end - pos - 1));
        pos = frac_end;
    }
    if (int_part.empty() && frac_part.empty())
        throw fail();

    long exponent = 0;
    if (pos < len && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_negative = false;
        if (pos < len && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        const std::size_t exp_end = digits_from(pos);
        if (exp_end == pos || exp_end - pos > 6)
            throw fail();
        exponent = std::stol(std::string(text.substr(pos, exp_end - pos)));
        if (exp_negative) exponent = -exponent;
        pos = exp_end;
    }
    if (pos != len)
        throw fail();

    exponent -= static_cast<long>(frac_part.size());
    if (exponent > kMaxExponent || exponent < -kMaxExponent)
        throw fail();
    BigInt num = parse_decimal_integer(int_part + frac_part);
    if (negative) num = -num;
    if (exponent >= 0)
        return ExactRatio(num * pow10(static_cast<unsigned>(exponent)));
    return ExactRatio(num, pow10(static_cast<unsigned>(-exponent)));
}

std::ostream& operator<<(std::ostream& os, const ExactRatio& x) {
    return os << x.to_string();
}

BigInt parse_decimal_integer(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw InputError("not an integer: '" + std::string(text) + "'");
    for (std::size_t k = pos; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw InputError("not an integer: '" + std::string(text) + "'");
    // cpp_int would read a leading zero as an octal prefix.
    while (pos + 1 < text.size() && text[pos] == '0') ++pos;
    BigInt out(std::string(text.substr(pos)));
    return negative ? BigInt(-out) : out;
}

BigInt choose2(const BigInt& n) {
    return n * (n - 1) / 2;
}

}  // namespace minari
