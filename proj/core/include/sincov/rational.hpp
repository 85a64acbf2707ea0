#ifndef SINCOV_RATIONAL_HPP
#define SINCOV_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sincov
{

using Integer = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision parts, always reduced with a
// positive denominator. Serializes as "p/q", or "p" when q = 1.
class Rational
{
public:
    using value_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(Integer numerator, Integer denominator);
    explicit Rational(value_type value) : value_(std::move(value)) {}

    // Accepts "[-+]digits" or "[-+]digits/digits"; non-reduced input is
    // normalized. Throws ParseError.
    static Rational parse(std::string_view text);

    std::string str() const;

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }
    double to_double() const { return value_.convert_to<double>(); }

    value_type const& value() const noexcept { return value_; }

    Rational operator-() const { return Rational(value_type(-value_)); }
    Rational& operator+=(Rational const& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(Rational const& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(Rational const& rhs) { value_ *= rhs.value_; return *this; }
    // Throws std::domain_error on division by zero.
    Rational& operator/=(Rational const& rhs);

    friend Rational operator+(Rational lhs, Rational const& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, Rational const& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, Rational const& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, Rational const& rhs) { return lhs /= rhs; }

    friend bool operator==(Rational const& lhs, Rational const& rhs)
    {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(Rational const& lhs, Rational const& rhs)
    {
        int const c = lhs.value_.compare(rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.str(); }

private:
    value_type value_;
};

inline Rational abs(Rational const& r)
{
    return r.sign() < 0 ? -r : r;
}

} // namespace sincov

#endif // SINCOV_RATIONAL_HPP
