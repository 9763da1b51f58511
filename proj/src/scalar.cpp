#include "msf7/scalar.hpp"

#include "msf7/error.hpp"

#include <cctype>

namespace msf7 {

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false)))
        throw Error("malformed rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Scalar r;
    r.get_num() = Integer(n, 10);
    r.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
    if (sgn(r.get_den()) == 0) throw Error("zero denominator: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

}  // namespace msf7
