#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <string>

namespace jetsym {

/// Exact rational with 64-bit parts. Used for exponents, which stay small;
/// arithmetic overflow throws std::overflow_error rather than wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    mpq_class to_mpq() const;
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Gaussian rational a + b i with arbitrary-precision parts.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long v) : re_(v) {}
    Gaussian(mpq_class re, mpq_class im = 0);
    explicit Gaussian(const Rational& r);

    static Gaussian imaginary_unit() { return Gaussian(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    Gaussian inverse() const;
    /// Integer power; negative exponents need a nonzero base.
    Gaussian pow(std::int64_t k) const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend int compare(const Gaussian& a, const Gaussian& b);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::string to_string(const mpq_class& q);

} // namespace jetsym
