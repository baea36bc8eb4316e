#ifndef SUPERDER_RATIONAL_HPP
#define SUPERDER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace superder {

/// Exact scalar of the ground field (ℚ). Always stored reduced, denominator > 0.
/// Plain value semantics (expression templates off). Prime fields F_p would
/// slot in behind this alias; v1 is rationals only.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// Thrown on malformed input files / documents.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a theorem/operation does not apply to the given input
/// (e.g. class-2 verifier on an abelian algebra). Distinct from failure.
class InapplicableError : public std::runtime_error {
public:
    explicit InapplicableError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string format_rational(const Rational& q)
{
    std::ostringstream os;
    os << q;  // prints "p" or "p/q", q > 0
    return os.str();
}

/// Strict "p" / "p/q" parser. No floats, no whitespace, no empty parts.
inline std::optional<Rational> try_parse_rational(const std::string& s)
{
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s))
            return std::nullopt;
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    // denominator: plain digits, positive
    if (!is_int(num) || den.empty() || den.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    Integer d(den);
    if (d == 0)
        return std::nullopt;
    return Rational(Integer(num), d);
}

inline Rational parse_rational(const std::string& s)
{
    auto q = try_parse_rational(s);
    if (!q)
        throw ParseError("not an exact rational: \"" + s + "\"");
    return *q;
}

}  // namespace superder

#endif
