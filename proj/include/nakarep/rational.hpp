#pragma once

// Exact rational scalars and extended (+-infinity) bounds.
//
// Every endpoint, breakpoint and coefficient in the library is a Rational;
// nothing is ever rounded.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace nakarep {

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                 // NOLINT(implicit)
    Rational(int v) : q_(v) {}                  // NOLINT(implicit)
    Rational(const mpz_class& v) : q_(v) {}     // NOLINT(implicit)
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p/q", "p", optional sign. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    mpz_class floor() const;
    mpz_class ceil() const;
    // Fractional part in [0,1).
    Rational frac() const { return *this - Rational(floor()); }

    // Always "p/q", including integers ("2/1").
    std::string str() const;
    // Decimal rendering rounded half away from zero; display only.
    std::string decimal(int digits) const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// A Rational or one of the two infinities; totally ordered.
class ExtendedBound {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtendedBound(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)
    ExtendedBound(long v) : kind_(Kind::Finite), value_(v) {}             // NOLINT(implicit)
    ExtendedBound(int v) : kind_(Kind::Finite), value_(v) {}              // NOLINT(implicit)
    static ExtendedBound neg_inf() { return ExtendedBound(Kind::NegInf); }
    static ExtendedBound pos_inf() { return ExtendedBound(Kind::PosInf); }
    // "+inf", "inf", "-inf" or a rational literal.
    static ExtendedBound parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    // Precondition: is_finite().
    const Rational& value() const;

    std::string str() const;

    friend bool operator==(const ExtendedBound& a, const ExtendedBound& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtendedBound& a, const ExtendedBound& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }
    friend std::ostream& operator<<(std::ostream& os, const ExtendedBound& b) { return os << b.str(); }

private:
    explicit ExtendedBound(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_;
};

}  // namespace nakarep

template <>
struct std::hash<nakarep::Rational> {
    std::size_t operator()(const nakarep::Rational& r) const { return std::hash<std::string>{}(r.str()); }
};
