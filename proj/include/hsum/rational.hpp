#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace hsum {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;

    template<typename Int>
        requires std::is_integral_v<Int>
    Rational(Int v) // NOLINT: implicit by intent
    {
        if constexpr (std::is_signed_v<Int>)
            value_ = mpq_class(mpz_class(static_cast<long>(v)));
        else
            value_ = mpq_class(mpz_class(static_cast<unsigned long>(v)));
    }

    Rational(long num, long den)
    {
        if (den == 0)
            throw std::domain_error("zero denominator");
        value_ = mpq_class(mpz_class(num), mpz_class(den));
        value_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0)
            throw std::domain_error("zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(const mpz_class& v) : value_(v) {}

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "a" or "a/b" with optional leading sign.
    static Rational parse(std::string_view text)
    {
        auto slash = text.find('/');
        auto parse_int = [](std::string_view s) {
            if (s.empty())
                throw std::invalid_argument("empty integer");
            mpz_class z;
            if (z.set_str(std::string(s), 10) != 0)
                throw std::invalid_argument("bad integer '" + std::string(s) + "'");
            return z;
        };
        if (slash == std::string_view::npos)
            return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string str() const
    {
        if (is_integer())
            return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

/// Integer binomial coefficient; zero when k > n.
inline Rational binomial(unsigned long n, unsigned long k)
{
    if (k > n)
        return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

/// base^exp for exp >= 0, base^(-|exp|) otherwise; base must be nonzero when exp < 0.
inline Rational int_power(long base, long exp)
{
    mpz_class b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
    if (exp >= 0)
        return Rational(r);
    if (r == 0)
        throw std::domain_error("zero to a negative power");
    return Rational(mpz_class(1), r);
}

/// Value of an mpz as int64 if it fits.
inline std::optional<std::int64_t> to_int64(const mpz_class& z)
{
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

} // namespace hsum
