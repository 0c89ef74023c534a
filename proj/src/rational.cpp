#include "mono/rational.hpp"

#include "mono/error.hpp"

namespace mono {

std::string_view name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::ColoringMismatch: return "ColoringMismatch";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

std::string to_string(const Rational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {
    BigInt parse_integer(std::string_view text, std::string_view whole)
    {
        std::size_t i = 0;
        if (!text.empty() && (text[0] == '-' || text[0] == '+'))
            i = 1;
        if (i == text.size())
            throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
        for (std::size_t k = i; k < text.size(); ++k)
            if (text[k] < '0' || text[k] > '9')
                throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
        BigInt value(std::string(text.substr(i)));
        return text[0] == '-' ? BigInt(-value) : value;
    }
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

BigInt floor(const Rational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    BigInt quot = num / den;
    if (num % den != 0 && num < 0)
        quot -= 1;
    return quot;
}

BigInt ceil(const Rational& q)
{
    return -floor(-q);
}

bool at_least_cbrt(const Rational& lhs, const Rational& a, const Rational& scale)
{
    if (lhs < 0)
        return false;
    return lhs * lhs * lhs >= a * scale * scale * scale;
}

bool at_most_cbrt(const Rational& lhs, const Rational& a, const Rational& scale)
{
    if (lhs <= 0)
        return true;
    return lhs * lhs * lhs <= a * scale * scale * scale;
}

}  // namespace mono
