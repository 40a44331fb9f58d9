#pragma once

#include "hsum/bernoulli.hpp"
#include "hsum/closed_form.hpp"
#include "hsum/reducer.hpp"
#include "hsum/stuffle.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hsum {

/// sum_{m=1}^n F(m) * [sum_l c_l H_{m-1}(l)], i.e. sum_p a_p sum_l c_l H_n(-p, l).
inline ClosedForm sum_against(const Polynomial& f, const MHSCombination& weights)
{
    ClosedForm out;
    auto cs = f.coeffs();
    for (std::size_t p = 0; p < cs.size(); ++p) {
        if (cs[p].is_zero())
            continue;
        for (const auto& [l, c] : weights.terms())
            out += cf_scale(reduce(static_cast<unsigned>(p), l), cs[p] * c);
    }
    return out;
}

/// sum_{m=1}^n F(m) H_{m-1}^t
inline ClosedForm sum_power(const Polynomial& f, unsigned t) { return sum_against(f, expand_power(1, t)); }

/// sum_{m=0}^n F(m) H_m^t = F(n) H_n^t + sum_{m=1}^n F(m-1) H_{m-1}^t
inline ClosedForm sum_power_shifted(const Polynomial& f, unsigned t)
{
    return cf_scale(from_combination(expand_power(1, t)), f) + sum_power(poly_shift(f, Rational(-1)), t);
}

struct Factor
{
    int order;
    unsigned multiplicity;
};

/// sum_{m=1}^n F(m) prod_i H_{m-1}(order_i)^{mult_i}
inline ClosedForm sum_product(const Polynomial& f, const std::vector<Factor>& factors)
{
    MHSCombination prod = MHSCombination::single({});
    for (const auto& fac : factors)
        prod = product_combinations(prod, expand_power(fac.order, fac.multiplicity));
    return sum_against(f, prod);
}

// Structured presentations ---------------------------------------------------

/// leading * H_n^t [* H_n(2) if leading_has_h2]
///   + sum_i q[i] H_n^i + c2 H_n(2) + c21 H_n(2,1) + c3 H_n(3)
struct StructuredForm
{
    unsigned t = 0;
    bool leading_has_h2 = false;
    Polynomial leading;
    std::vector<Polynomial> q;
    Polynomial c2;
    Rational c21;
    Rational c3;

    StructuredForm& operator+=(const StructuredForm& o)
    {
        if (o.t != t || o.leading_has_h2 != leading_has_h2)
            throw std::invalid_argument("structured forms of different shape");
        leading += o.leading;
        if (q.size() < o.q.size())
            q.resize(o.q.size());
        for (std::size_t i = 0; i < o.q.size(); ++i)
            q[i] += o.q[i];
        c2 += o.c2;
        c21 += o.c21;
        c3 += o.c3;
        return *this;
    }

    StructuredForm& operator*=(const Rational& c)
    {
        leading *= c;
        for (auto& p : q)
            p *= c;
        c2 *= c;
        c21 *= c;
        c3 *= c;
        return *this;
    }

    friend bool operator==(const StructuredForm&, const StructuredForm&) = default;
};

enum class SpiessKind {
    hn2,   ///< sum m^p H_{m-1}^2
    hn3,   ///< sum m^p H_{m-1}^3
    mixed, ///< sum m^p H_{m-1} H_{m-1}(2)
    hn4,   ///< sum F(m) H_{m-1}^4
};

namespace detail {

inline Polynomial C(unsigned p, std::vector<unsigned> a = {}) { return c_poly(p, std::move(a)); }
inline Polynomial K(const Rational& c) { return Polynomial::constant(c); }

/// B_i, with B at a negative index read as 0 (it only ever appears multiplied
/// by a factor that vanishes there).
inline Rational B(long i) { return i < 0 ? Rational(0) : bernoulli(static_cast<unsigned>(i)); }

inline StructuredForm monomial_hn2(unsigned p)
{
    StructuredForm s;
    s.t = 2;
    s.leading = C(p);
    s.q = {C(p, {0, 0}) * Rational(2) - C(p, {1}),
           -(C(p, {0}) * Rational(2) + K(B(p)))};
    return s;
}

inline StructuredForm monomial_hn3(unsigned p)
{
    const Rational half_p_b = Rational(static_cast<long>(p), 2) * B(static_cast<long>(p) - 1);
    StructuredForm s;
    s.t = 3;
    s.leading = C(p);
    s.q = {C(p, {0, 0, 0}) * Rational(-6) + C(p, {0, 1}) * Rational(3) + C(p, {1, 1}) * Rational(3) - C(p, {2}),
           C(p, {0, 0}) * Rational(6) + K(d_umbral(p) * Rational(3)) - C(p, {1}) * Rational(3) - K(half_p_b),
           (C(p, {0}) + K(B(p) / Rational(2))) * Rational(-3)};
    s.c2 = K(B(p) / Rational(2));
    return s;
}

inline StructuredForm monomial_mixed(unsigned p)
{
    const Rational half_p_b = Rational(static_cast<long>(p), 2) * B(static_cast<long>(p) - 1);
    StructuredForm s;
    s.t = 1;
    s.leading_has_h2 = true;
    s.leading = C(p);
    s.q = {C(p, {0, 1}) + C(p, {1, 1}) - C(p, {2}),
           K(d_umbral(p) - half_p_b) - C(p, {1}),
           K(-B(p) / Rational(2))};
    s.c2 = -(C(p, {0}) + K(B(p) / Rational(2)));
    return s;
}

inline StructuredForm monomial_hn4(unsigned p)
{
    const long pl = p;
    const Rational dB = d_umbral(p);
    const Polynomial d_of_x = poly_divide_x(C(p)); // D^{(p)}(x)
    StructuredForm s;
    s.t = 4;
    // H_n^4 carries sum_{m=1}^n m^p.
    s.leading = C(p);

    Polynomial q0 = C(p, {0, 0, 0, 0}) * Rational(24) - C(p, {0, 0, 1}) * Rational(12)
                  - C(p, {0, 1, 1}) * Rational(12) - C(p, {1, 1, 1}) * Rational(12)
                  + C(p, {0, 2}) * Rational(4) + C(p, {1, 2}) * Rational(6) + C(p, {2, 2}) * Rational(4) - C(p, {3});

    const Rational d_prime_at_b = umbral_eval(poly_derivative(d_of_x));
    const Rational d_minus_bp_over_x = umbral_eval(poly_divide_x(d_of_x - K(B(pl))));
    Polynomial q1 = C(p, {0, 0, 0}) * Rational(-24) - K(d_umbral(p, {0}) * Rational(12))
                  + C(p, {0, 1}) * Rational(12) + C(p, {1, 1}) * Rational(12)
                  + K(d_prime_at_b * Rational(2) + d_minus_bp_over_x * Rational(6))
                  - C(p, {2}) * Rational(4) - K(Rational(pl * (pl - 1), 6) * B(pl - 2));

    Polynomial q2 = C(p, {0, 0}) * Rational(12) + K(dB * Rational(6)) - C(p, {1}) * Rational(6) - K(Rational(pl) * B(pl - 1));
    Polynomial q3 = C(p, {0}) * Rational(-4) - K(B(pl) * Rational(2));

    s.q = {std::move(q0), std::move(q1), std::move(q2), std::move(q3)};
    // The H_n(-p,1,3) expansion has the constant D^{(p)}(B) in front of H_n(2).
    s.c2 = K(dB * Rational(-6) + dB * Rational(4) + Rational(pl, 2) * B(pl - 1));
    s.c21 = B(pl) * Rational(2);
    s.c3 = B(pl);
    return s;
}

} // namespace detail

/// The explicit presentation for kind at F, assembled monomial by monomial.
inline StructuredForm spiess_form(SpiessKind kind, const Polynomial& f)
{
    auto one = [kind](unsigned p) {
        switch (kind) {
        case SpiessKind::hn2: return detail::monomial_hn2(p);
        case SpiessKind::hn3: return detail::monomial_hn3(p);
        case SpiessKind::mixed: return detail::monomial_mixed(p);
        case SpiessKind::hn4: return detail::monomial_hn4(p);
        }
        throw std::invalid_argument("unknown kind");
    };
    StructuredForm out = one(0);
    out *= Rational(0);
    auto cs = f.coeffs();
    for (std::size_t p = 0; p < cs.size(); ++p) {
        if (cs[p].is_zero())
            continue;
        StructuredForm term = one(static_cast<unsigned>(p));
        term *= cs[p];
        out += term;
    }
    return out;
}

inline StructuredForm spiess_form(SpiessKind kind, unsigned p) { return spiess_form(kind, Polynomial::monomial(p)); }

inline ClosedForm structured_to_closed(const StructuredForm& s)
{
    MHSCombination lead = expand_power(1, s.t);
    if (s.leading_has_h2)
        lead = product_combinations(lead, MHSCombination::single({2}));
    ClosedForm out = cf_scale(from_combination(lead), s.leading);
    for (std::size_t i = 0; i < s.q.size(); ++i)
        out += cf_scale(from_combination(expand_power(1, static_cast<unsigned>(i))), s.q[i]);
    out.add({2}, s.c2);
    out.add({2, 1}, Polynomial::constant(s.c21));
    out.add({3}, Polynomial::constant(s.c3));
    return out;
}

/// Text rendering of the presentation, e.g. "(n)*H^2 + (-2*n - 1)*H + (2*n)".
inline std::string structured_to_string(const StructuredForm& s)
{
    std::string out = "(" + poly_to_string(s.leading) + ")";
    if (s.t >= 1)
        out += "*H";
    if (s.t >= 2)
        out += "^" + std::to_string(s.t);
    if (s.leading_has_h2)
        out += "*H(2)";
    for (std::size_t i = s.q.size(); i-- > 0;) {
        if (s.q[i].is_zero())
            continue;
        out += " + (" + poly_to_string(s.q[i]) + ")";
        if (i >= 1)
            out += "*H";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    if (!s.c2.is_zero())
        out += " + (" + poly_to_string(s.c2) + ")*H(2)";
    if (!s.c21.is_zero())
        out += " + (" + s.c21.str() + ")*H(2,1)";
    if (!s.c3.is_zero())
        out += " + (" + s.c3.str() + ")*H(3)";
    return out;
}

// Structure theorem ------------------------------------------------------------

struct StructureReport
{
    bool passes = true;
    std::vector<std::pair<Composition, Polynomial>> offending_terms;
    ClosedForm remainder;
};

/// Checks sum_{m=1}^n F(m) H_{m-1}^t - S_n(F) H_n^t: every remaining term must
/// have depth < t and a coefficient of degree <= deg F + 1.
inline StructureReport structure_check(const Polynomial& f, unsigned t)
{
    StructureReport rep;
    rep.remainder = sum_power(f, t) - cf_scale(from_combination(expand_power(1, t)), discrete_sum(f));
    const int degree_cap = std::max(f.degree(), -1) + 1;
    for (const auto& [k, p] : rep.remainder.terms())
        if (k.depth() >= t || p.degree() > degree_cap)
            rep.offending_terms.emplace_back(k, p);
    rep.passes = rep.offending_terms.empty();
    return rep;
}

} // namespace hsum
