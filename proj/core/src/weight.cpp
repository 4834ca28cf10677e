#include "pql/weight.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace pql {

Weight::Weight(const integer& num, const integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    v_ = rational(num, den);
}

namespace {

std::optional<Weight::integer> parse_int(std::string_view s, bool allow_sign) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return std::nullopt;
    Weight::integer v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        v = v * 10 + (s[i] - '0');
    }
    return neg ? Weight::integer(-v) : v;
}

}  // namespace

std::optional<Weight> Weight::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text, true);
        if (!n) return std::nullopt;
        return Weight(*n, integer(1));
    }
    auto n = parse_int(text.substr(0, slash), true);
    auto d = parse_int(text.substr(slash + 1), false);
    if (!n || !d || *d == 0) return std::nullopt;
    return Weight(*n, *d);
}

Weight::integer Weight::numerator() const { return boost::multiprecision::numerator(v_); }
Weight::integer Weight::denominator() const { return boost::multiprecision::denominator(v_); }

std::optional<std::int64_t> Weight::as_int64() const {
    if (!is_integer()) return std::nullopt;
    integer n = numerator();
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return static_cast<std::int64_t>(n);
}

std::string Weight::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

double Weight::approx() const { return v_.convert_to<double>(); }

Weight operator/(const Weight& a, const Weight& b) {
    if (b.v_ == 0) throw std::domain_error("division by zero weight");
    return Weight(Weight::rational(a.v_ / b.v_));
}

Weight abs(const Weight& w) { return w < Weight(0) ? -w : w; }

}  // namespace pql
