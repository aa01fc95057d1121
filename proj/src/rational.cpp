#include <jetsym/rational.hpp>

#include <numeric>
#include <stdexcept>

namespace jetsym {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("rational exponent overflow");
    }
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("rational exponent overflow");
    }
    return r;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num, den);
    num_ = g ? num / g : 0;
    den_ = g ? den / g : 1;
}

mpq_class Rational::to_mpq() const
{
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    q.canonicalize();
    return q;
}

std::string Rational::str() const
{
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)), checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    // Denominators are positive, so cross-multiplication preserves order.
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

Gaussian::Gaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Gaussian::Gaussian(const Rational& r) : re_(r.to_mpq()) {}

Gaussian& Gaussian::operator+=(const Gaussian& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Gaussian Gaussian::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero coefficient");
    }
    mpq_class norm = re_ * re_ + im_ * im_;
    return Gaussian(re_ / norm, -im_ / norm);
}

Gaussian Gaussian::pow(std::int64_t k) const
{
    if (k < 0) {
        return inverse().pow(-k);
    }
    Gaussian result(1);
    Gaussian base = *this;
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

int compare(const Gaussian& a, const Gaussian& b)
{
    if (int c = cmp(a.re_, b.re_); c != 0) {
        return c < 0 ? -1 : 1;
    }
    int c = cmp(a.im_, b.im_);
    return (c > 0) - (c < 0);
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

} // namespace jetsym
