#include "gv/count.hpp"

#include <cmath>
#include <ostream>

namespace gv {

Count Count::parse(const std::string& decimal) {
    mpz_class z;
    if (z.set_str(decimal, 10) != 0)
        throw std::invalid_argument("Count::parse: bad decimal literal '" + decimal + "'");
    return Count(std::move(z));
}

std::size_t Count::bit_length() const {
    if (z_ == 0) return 0;
    return mpz_sizeinbase(z_.get_mpz_t(), 2);
}

Count& Count::operator-=(const Count& o) {
    if (z_ < o.z_)
        throw std::underflow_error("Count: subtraction would be negative");
    z_ -= o.z_;
    return *this;
}

Count Count::exact_div(const Count& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Count: division by zero");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), z_.get_mpz_t(), divisor.z_.get_mpz_t());
    if (r != 0)
        throw std::logic_error("Count: exact_div has remainder (" + str() + " / " + divisor.str() + ")");
    return Count(std::move(q));
}

Count Count::floor_div(const Count& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Count: division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), z_.get_mpz_t(), divisor.z_.get_mpz_t());
    return Count(std::move(q));
}

Count Count::ceil_div(const Count& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Count: division by zero");
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), z_.get_mpz_t(), divisor.z_.get_mpz_t());
    return Count(std::move(q));
}

Count Count::mod(const Count& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Count: modulo by zero");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z_.get_mpz_t(), divisor.z_.get_mpz_t());
    return Count(std::move(r));
}

Count Count::pow2(unsigned long e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
    return Count(std::move(z));
}

Count Count::pow(unsigned long base, unsigned long e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), base, e);
    return Count(std::move(z));
}

unsigned long Count::to_ulong() const {
    if (!z_.fits_ulong_p())
        throw std::overflow_error("Count: does not fit unsigned long");
    return z_.get_ui();
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.z(); }

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const Count& num, const Count& den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num.z(), den.z());
    q_.canonicalize();
}

Rational::Rational(unsigned long num, unsigned long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Count Rational::numerator() const { return Count(mpz_class(q_.get_num())); }
Count Rational::denominator() const { return Count(mpz_class(q_.get_den())); }

Count Rational::floor() const {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return Count(std::move(z));
}

Count Rational::ceil() const {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return Count(std::move(z));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (q_ < o.q_)
        throw std::underflow_error("Rational: subtraction would be negative");
    q_ -= o.q_;
    return *this;
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::from_decimal(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (t.empty()) throw std::invalid_argument("Rational::from_decimal: empty string");
    auto dot = t.find('.');
    std::string digits;
    std::size_t frac_len = 0;
    if (dot == std::string::npos) {
        digits = t;
    } else {
        digits = t.substr(0, dot) + t.substr(dot + 1);
        frac_len = t.size() - dot - 1;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("Rational::from_decimal: bad literal '" + s + "'");
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q(); }

LogValue log2_of(const Count& c) {
    if (c.is_zero()) throw std::domain_error("log2_of: zero count");
    signed long exp = 0;
    double m = mpz_get_d_2exp(&exp, c.z().get_mpz_t());
    return LogValue{std::log2(m) + static_cast<double>(exp)};
}

LogValue log2_of(const Rational& r) {
    if (r.q() == 0) throw std::domain_error("log2_of: zero rational");
    return LogValue{log2_of(r.numerator()).log2 - log2_of(r.denominator()).log2};
}

long ceil_plus(long num, long den) {
    if (den <= 0) throw std::domain_error("ceil_plus: denominator must be positive");
    if (num <= 0) return 0;
    return (num + den - 1) / den;
}

Count ceil_plus(const mpq_class& x) {
    if (x <= 0) return Count(0u);
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Count(std::move(z));
}

}  // namespace gv
