#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pql {

// Exact rational edge weight. Always kept in lowest terms with a positive
// denominator (the backend normalizes on every operation).
class Weight {
public:
    using rational = boost::multiprecision::cpp_rational;
    using integer = boost::multiprecision::cpp_int;

    Weight() = default;
    Weight(long long v) : v_(v) {}  // NOLINT: implicit on purpose, weights are often literals
    Weight(const integer& num, const integer& den);
    explicit Weight(rational v) : v_(std::move(v)) {}

    // Accepts "p", "-p", "p/q". Returns nullopt on anything else or q == 0.
    static std::optional<Weight> parse(std::string_view text);

    integer numerator() const;
    integer denominator() const;
    bool is_integer() const { return denominator() == 1; }
    // Integer value if it fits into int64.
    std::optional<std::int64_t> as_int64() const;

    std::string str() const;  // "p" or "p/q"
    double approx() const;

    const rational& value() const { return v_; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Weight operator+(const Weight& a, const Weight& b) { return Weight(rational(a.v_ + b.v_)); }
    friend Weight operator-(const Weight& a, const Weight& b) { return Weight(rational(a.v_ - b.v_)); }
    friend Weight operator*(const Weight& a, const Weight& b) { return Weight(rational(a.v_ * b.v_)); }
    friend Weight operator/(const Weight& a, const Weight& b);
    Weight operator-() const { return Weight(rational(-v_)); }

private:
    rational v_{0};
};

Weight abs(const Weight& w);

}  // namespace pql
