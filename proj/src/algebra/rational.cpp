#include "pte/rational.hpp"

#include "pte/error.hpp"

#include <cctype>

namespace pte {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw InvalidInput("not a rational: '" + std::string(text) + "'");
    } else {
        const auto den_text = trim(text.substr(slash + 1));
        if (!parse_integer(trim(text.substr(0, slash)), num) || !parse_integer(den_text, den) ||
            den_text.front() == '-' || den_text.front() == '+')
            throw InvalidInput("not a rational: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(unsigned exponent) const {
    Rational out;
    mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
    return out;  // already canonical: gcd(p^k, q^k) = 1
}

Rational Rational::abs() const {
    Rational out = *this;
    out.value_ = ::abs(value_);
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.value_ = -value_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace pte
