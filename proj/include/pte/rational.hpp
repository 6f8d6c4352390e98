#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace pte {

using Integer = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
/// Zero is always 0/1, so two values are equal iff their numerators and
/// denominators are equal.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    /// Throws InvalidInput when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;

    Rational pow(unsigned exponent) const;
    Rational abs() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace pte
