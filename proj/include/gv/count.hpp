#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gv {

// Exact nonnegative integer. Holds every volume, binomial coefficient and
// edge count in the library; all comparisons between counts are decided
// exactly, never through floating point.
class Count {
public:
    Count() = default;
    Count(unsigned long v) : z_(v) {}
    Count(unsigned int v) : z_(static_cast<unsigned long>(v)) {}
    Count(long v) : z_(v) {
        if (v < 0) throw std::domain_error("Count: negative value");
    }
    Count(int v) : z_(v) {
        if (v < 0) throw std::domain_error("Count: negative value");
    }
    explicit Count(mpz_class z) : z_(std::move(z)) {
        if (z_ < 0) throw std::domain_error("Count: negative value");
    }

    static Count parse(const std::string& decimal);

    const mpz_class& z() const { return z_; }
    bool is_zero() const { return z_ == 0; }

    // number of bits in the binary representation; 0 for the value 0
    std::size_t bit_length() const;

    Count& operator+=(const Count& o) { z_ += o.z_; return *this; }
    Count& operator*=(const Count& o) { z_ *= o.z_; return *this; }
    // subtraction underflow is always a logic bug here, so it throws
    Count& operator-=(const Count& o);

    friend Count operator+(Count a, const Count& b) { a += b; return a; }
    friend Count operator*(Count a, const Count& b) { a *= b; return a; }
    friend Count operator-(Count a, const Count& b) { a -= b; return a; }

    // division that must leave no remainder (asserted)
    Count exact_div(const Count& divisor) const;
    Count floor_div(const Count& divisor) const;
    Count ceil_div(const Count& divisor) const;
    Count mod(const Count& divisor) const;

    static Count pow2(unsigned long e);
    static Count pow(unsigned long base, unsigned long e);

    friend bool operator==(const Count& a, const Count& b) { return a.z_ == b.z_; }
    friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
        int c = cmp(a.z_, b.z_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return z_.get_str(); }
    unsigned long to_ulong() const;

private:
    mpz_class z_{0};
};

std::ostream& operator<<(std::ostream&, const Count&);

// Exact nonnegative rational in lowest terms, denominator > 0.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(const Count& num, const Count& den);
    explicit Rational(const Count& num) : q_(num.z()) {}
    Rational(unsigned long num, unsigned long den);

    Count numerator() const;
    Count denominator() const;

    Count floor() const;
    Count ceil() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);
    Rational& operator-=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const { return q_.get_d(); }
    const mpq_class& q() const { return q_; }
    std::string str() const;

    // exact value of a decimal string such as "0.999" (needed because the
    // nearest double to 0.999 is not 999/1000)
    static Rational from_decimal(const std::string& s);

private:
    explicit Rational(mpq_class q);
    mpq_class q_;
};

std::ostream& operator<<(std::ostream&, const Rational&);

// Base-2 logarithm of a positive quantity. Conversion from Count keeps at
// least 52 significant bits (top-word mantissa plus bit length).
struct LogValue {
    double log2{0.0};
};

LogValue log2_of(const Count& c);
LogValue log2_of(const Rational& r);

// smallest nonnegative integer m with m >= num/den  (den > 0, num may be < 0)
long ceil_plus(long num, long den);
Count ceil_plus(const mpq_class& x);

// thrown when an instance exceeds a configured compute budget
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gv
