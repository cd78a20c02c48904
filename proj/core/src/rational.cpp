#include "skb/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skb {

Int rat_floor(const Rat& x) {
    Int n = numerator(x);
    Int d = denominator(x);  // canonical: d > 0
    Int q = n / d;           // truncates toward zero
    if (n % d != 0 && n < 0)
        --q;
    return q;
}

Rat rat_frac(const Rat& x) {
    return x - Rat(rat_floor(x));
}

Rat rat_mod(const Rat& x, const Rat& period) {
    if (period <= 0)
        throw std::invalid_argument("rat_mod: period must be positive");
    Rat y = x / period;
    return x - Rat(rat_floor(y)) * period;
}

std::string rat_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    std::size_t pos = 0;
    auto read_int = [&](bool sign_allowed) -> std::optional<std::string> {
        std::string out;
        if (sign_allowed && pos < text.size() && text[pos] == '-') {
            out += '-';
            ++pos;
        }
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out += text[pos];
            ++pos;
            ++digits;
        }
        if (digits == 0)
            return std::nullopt;
        return out;
    };
    auto num = read_int(true);
    if (!num)
        return std::nullopt;
    if (pos == text.size())
        return Rat(Int(*num));
    if (text[pos] != '/')
        return std::nullopt;
    ++pos;
    auto den = read_int(false);
    if (!den || pos != text.size())
        return std::nullopt;
    Int d(*den);
    if (d == 0)
        return std::nullopt;
    return Rat(Int(*num), d);
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

}  // namespace skb
