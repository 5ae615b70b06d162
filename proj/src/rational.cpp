#include "genschur/rational.hpp"

#include <cctype>

#include "genschur/errors.hpp"

namespace genschur {

namespace {

bool valid_int_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational rat_parse(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid_int_token(num))
        throw shape_error("bad rational literal: '" + std::string(s) + "'");
    if (slash == std::string_view::npos) {
        Integer p{std::string(num)};
        return Rational(p);
    }
    std::string_view den = s.substr(slash + 1);
    if (!valid_int_token(den) || den[0] == '-')
        throw shape_error("bad rational literal: '" + std::string(s) + "'");
    Integer d{std::string(den)};
    if (d == 0)
        throw shape_error("zero denominator in rational literal: '" + std::string(s) + "'");
    Integer p{std::string(num)};
    return Rational(p) / Rational(d);
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(long k) {
    Integer f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
}

Integer binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

} // namespace genschur
