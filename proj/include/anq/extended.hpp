#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace anq {

// Exact nonnegative-friendly rational with a distinguished +infinity.
// Every distance in this library is either an integer, a quarter-integer,
// or infinite, so a normalized int64 fraction is plenty.
class Ext {
public:
    constexpr Ext() = default;
    constexpr Ext(std::int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Ext(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    static constexpr Ext infinity() {
        Ext e;
        e.inf_ = true;
        return e;
    }

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    // "p/q", "p" for integers, "inf" for infinity
    std::string str() const {
        if (inf_) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Ext parse(const std::string& s);

    friend bool operator==(const Ext& a, const Ext& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Ext& a, const Ext& b) {
        if (a.inf_ || b.inf_) {
            if (a.inf_ && b.inf_) return std::strong_ordering::equal;
            return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

    friend Ext operator+(const Ext& a, const Ext& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Ext(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    // Subtraction is only meaningful on finite values.
    friend Ext operator-(const Ext& a, const Ext& b) {
        if (a.inf_ || b.inf_) throw std::domain_error("subtraction involving infinity");
        return Ext(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Ext operator*(const Ext& a, const Ext& b) {
        if (a.inf_ || b.inf_) {
            if ((a.is_finite() && a.num_ == 0) || (b.is_finite() && b.num_ == 0))
                throw std::domain_error("0 * inf");
            return infinity();
        }
        return Ext(a.num_ * b.num_, a.den_ * b.den_);
    }
    // a / b with x/0 = inf for x > 0; 0/0 and inf/inf are rejected.
    friend Ext operator/(const Ext& a, const Ext& b) {
        if (a.inf_ && b.inf_) throw std::domain_error("inf / inf");
        if (a.inf_) return infinity();
        if (b.inf_) return Ext(0);
        if (b.num_ == 0) {
            if (a.num_ == 0) throw std::domain_error("0 / 0");
            return infinity();
        }
        std::int64_t n = a.num_ * b.den_, d = a.den_ * b.num_;
        if (d < 0) { n = -n; d = -d; }
        return Ext(n, d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Ext& e) { return os << e.str(); }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) { den_ = -den_; num_ = -num_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    bool inf_ = false;
};

inline Ext Ext::parse(const std::string& s) {
    if (s == "inf") return infinity();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Ext(std::stoll(s));
    return Ext(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline const Ext kInf = Ext::infinity();

}  // namespace anq
