#include "sincov/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "sincov/errors.hpp"

namespace sincov
{

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(Integer numerator, Integer denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    value_ = value_type(numerator, denominator);
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    auto const slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational literal '" + std::string(text) + "'");

    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(std::move(n), std::move(d));
}

std::string Rational::str() const
{
    auto const n = numerator();
    auto const d = denominator();
    if (d == 1)
        return n.str();
    return n.str() + "/" + d.str();
}

Rational& Rational::operator/=(Rational const& rhs)
{
    if (rhs.sign() == 0)
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

} // namespace sincov
