#include "entlp/common.hpp"

namespace entlp {

Rational parse_rational(const std::string& text)
{
    std::size_t start = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (start == std::string::npos)
        throw Error("empty rational literal");
    std::string body = text.substr(start, end - start + 1);

    auto valid = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };

    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!valid(num) || !valid(den))
        throw Error("malformed rational literal: '" + body + "'");

    mpz_class numerator(num), denominator(den);
    if (denominator == 0)
        throw Error("zero denominator in rational literal: '" + body + "'");
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_string(const Rational& value)
{
    mpz_class den = value.get_den();
    // strip factors of 2 and 5; terminating decimal iff nothing remains
    mpz_class rest = den;
    int twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }

    bool negative = value < 0;
    mpz_class num = abs(value.get_num());

    if (rest == 1) {
        int digits = std::max(twos, fives);
        mpz_class scaled = num;
        for (int i = 0; i < digits; ++i)
            scaled *= 10;
        scaled /= den;
        mpz_class ip = scaled, frac = 0;
        mpz_class pow10 = 1;
        for (int i = 0; i < digits; ++i)
            pow10 *= 10;
        ip = scaled / pow10;
        frac = scaled % pow10;
        std::string out = (negative ? "-" : "") + ip.get_str();
        if (digits > 0) {
            std::string f = frac.get_str();
            f.insert(0, digits - f.size(), '0');
            while (!f.empty() && f.back() == '0')
                f.pop_back();
            if (!f.empty())
                out += "." + f;
        }
        return out;
    }

    // non-terminating: round half up at nine decimal places
    mpz_class pow10 = 1;
    for (int i = 0; i < 9; ++i)
        pow10 *= 10;
    mpz_class scaled = (num * pow10 * 2 + den) / (den * 2);
    mpz_class ip = scaled / pow10;
    std::string f = mpz_class(scaled % pow10).get_str();
    f.insert(0, 9 - f.size(), '0');
    return std::string("≈") + (negative ? "-" : "") + ip.get_str() + "." + f;
}

} // namespace entlp
