#pragma once

#include "hsum/rational.hpp"

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsum {

/// Dense univariate polynomial over the rationals, ascending coefficients.
///
/// Trailing zeros are always trimmed, so two polynomials are equal exactly when
/// their coefficient vectors are. The zero polynomial has no coefficients and
/// degree -1.
class Polynomial
{
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1))
    {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    static Polynomial x() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    std::span<const Rational> coeffs() const { return coeffs_; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& at) const
    {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    Polynomial& operator*=(const Rational& c)
    {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_)
            a *= c;
        return *this;
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& a : r.coeffs_)
            a = -a;
        return r;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const Polynomial& p, const Rational& at) { return p(at); }

/// Q with Q(x) = P(x + c).
inline Polynomial poly_shift(const Polynomial& p, const Rational& c)
{
    // Horner in the shifted variable: Q = (...(a_d (x+c) + a_{d-1})(x+c) + ...).
    const Polynomial step{c, Rational(1)};
    Polynomial acc;
    auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = acc * step + Polynomial::constant(*it);
    return acc;
}

inline Polynomial poly_derivative(const Polynomial& p)
{
    auto cs = p.coeffs();
    if (cs.size() <= 1)
        return {};
    std::vector<Rational> r(cs.size() - 1);
    for (std::size_t i = 1; i < cs.size(); ++i)
        r[i - 1] = cs[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(r));
}

/// Q with x*Q(x) = P(x). Throws std::domain_error if P(0) != 0.
inline Polynomial poly_divide_x(const Polynomial& p)
{
    auto cs = p.coeffs();
    if (cs.empty())
        return {};
    if (!cs[0].is_zero())
        throw std::domain_error("not divisible by x");
    return Polynomial(std::vector<Rational>(cs.begin() + 1, cs.end()));
}

inline Polynomial poly_multiply_x(const Polynomial& p) { return p * Polynomial::x(); }

/// Plain-text rendering in descending powers, e.g. "3*n^2 + n - 1/2".
/// The output parses back to the same polynomial.
inline std::string poly_to_string(const Polynomial& p, char var = 'n')
{
    if (p.is_zero())
        return "0";
    std::string out;
    auto cs = p.coeffs();
    for (std::size_t k = cs.size(); k-- > 0;) {
        const Rational& c = cs[k];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1))
            out += mag.str() + "*";
        out += var;
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

/// LaTeX rendering, e.g. "\frac{1}{2}n^{2}+\frac{1}{2}n".
inline std::string poly_to_latex(const Polynomial& p, char var = 'n')
{
    if (p.is_zero())
        return "0";
    auto frac = [](const Rational& r) {
        if (r.is_integer())
            return r.numerator().get_str();
        return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
    };
    std::string out;
    auto cs = p.coeffs();
    for (std::size_t k = cs.size(); k-- > 0;) {
        const Rational& c = cs[k];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (k == 0 || mag != Rational(1))
            out += frac(mag);
        if (k > 0) {
            out += var;
            if (k > 1)
                out += "^{" + std::to_string(k) + "}";
        }
    }
    return out;
}

} // namespace hsum
