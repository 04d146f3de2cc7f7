#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mixedfair {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP; there is no floating point anywhere in the
/// toolkit's arithmetic.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}        // NOLINT: implicit by design
    Rational(int n) : v_(n) {}         // NOLINT
    Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p/q" or a bare integer. Returns nullopt on anything else
    /// (decimals are deliberately rejected).
    static std::optional<Rational> parse(std::string_view s);

    /// Lowest-terms "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
    friend Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }
    friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

    /// floor(a / b) as an arbitrary-precision integer; b must be nonzero.
    static mpz_class floor_div(const Rational& a, const Rational& b);
    /// ceil(a / b); b must be nonzero.
    static mpz_class ceil_div(const Rational& a, const Rational& b);

private:
    mpq_class v_;
};

inline Rational operator*(const mpz_class& z, const Rational& r) {
    return Rational(mpq_class(z)) * r;
}

}  // namespace mixedfair
