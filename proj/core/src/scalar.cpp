#include "linfkit/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace lk {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

bool is_scalar_token(std::string_view text)
{
    std::string_view s = text;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        s.remove_prefix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return all_digits(s);
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        return false;
    for (char c : den)
        if (c != '0')
            return true;
    return false;
}

Scalar parse_scalar(std::string_view text)
{
    if (!is_scalar_token(text))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    std::string s(text);
    if (s[0] == '+')
        s.erase(0, 1);
    Scalar q(s, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& s)
{
    return s.get_str(10);
}

}  // namespace lk
