#include "hk3/core.hpp"

#include <cctype>

namespace hk3 {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo)
        throw Error("Rng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
    std::uint64_t x = next();
    while (limit != 0 && x >= limit)
        x = next();
    return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

static bool is_integer_literal(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw Error("malformed rational \"" + text + "\"");
    Integer n(num[0] == '+' ? num.substr(1) : num);
    Integer d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0)
        throw Error("zero denominator in \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational ratio(const Integer& n, const Integer& d)
{
    if (d == 0)
        throw Error("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer round_half_to_zero(const Rational& q)
{
    // floor(|q| + 1/2) with exact halves pulled back toward zero
    Rational a = abs(q);
    Integer twice_num = 2 * a.get_num() + a.get_den();
    Integer twice_den = 2 * a.get_den();
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
    if (Rational(r) - a == Rational(1, 2))
        r -= 1;
    return q < 0 ? Integer(-r) : r;
}

} // namespace hk3
