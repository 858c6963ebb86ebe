#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>

namespace plumbing {

using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& value);

// Exact rational number, always stored in lowest terms with a positive
// denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long long value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(BigInt value) : num_(std::move(value)) {} // NOLINT(google-explicit-constructor)
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }
    int sign() const noexcept { return num_.sign(); }

    // Throws ConsistencyError when the value is not an integer.
    BigInt to_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

  private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace plumbing
