#pragma once

#include "hsum/bernoulli.hpp"
#include "hsum/closed_form.hpp"
#include "hsum/composition.hpp"
#include "hsum/polynomial.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hsum {

namespace detail {

/// binom(p+1, j) B_j / (p+1): the j-th coefficient of sum_{m<=n} m^p, read at n^{p+1-j}.
inline Rational faulhaber_weight(long p, long j)
{
    return binomial(static_cast<unsigned long>(p + 1), static_cast<unsigned long>(j))
         * bernoulli(static_cast<unsigned>(j)) / Rational(p + 1);
}

} // namespace detail

/// Polynomial F_p with F_p(n) = sum_{m=1}^n m^p, in the plus convention:
///   F_p(x) = 1/(p+1) sum_{j=0}^p binom(p+1, j) B_j x^{p+1-j}.
inline Polynomial faulhaber(unsigned p)
{
    std::vector<Rational> c(p + 2);
    for (unsigned j = 0; j <= p; ++j)
        c[p + 1 - j] = detail::faulhaber_weight(p, j);
    return Polynomial(std::move(c));
}

/// The same polynomial through the minus convention, valid for p >= 1:
///   x^p + 1/(p+1) sum_{j=0}^p binom(p+1, j) B~_j x^{p+1-j}.
/// At p = 0 the x^0 term double counts 0^0 and the result is x + 1.
inline Polynomial faulhaber_minus_form(unsigned p)
{
    std::vector<Rational> c(p + 2);
    for (unsigned j = 0; j <= p; ++j)
        c[p + 1 - j] = binomial(p + 1, j) * bernoulli(j, Convention::minus) / Rational(static_cast<long>(p + 1));
    c[p] += Rational(1);
    return Polynomial(std::move(c));
}

/// S with S(n) = sum_{m=1}^n F(m); S(0) = 0.
inline Polynomial discrete_sum(const Polynomial& f)
{
    Polynomial s;
    auto cs = f.coeffs();
    for (std::size_t p = 0; p < cs.size(); ++p)
        if (!cs[p].is_zero())
            s += faulhaber(static_cast<unsigned>(p)) * cs[p];
    return s;
}

/// Subscript data of C^{(p)}_{a_2..a_r}; a_1 = 0 is implicit.
struct CIndex
{
    unsigned p = 0;
    std::vector<unsigned> a;
};

/// C^{(p)}_{a_2..a_r}(x) =
///   sum_{j_1+..+j_r <= p - a_r}
///     prod_{i=1}^r binom(N_i, j_i) B_{j_i} / N_i  *  x^{p+1-a_r-|j|},
///   N_i = p + 1 - a_i - (j_1 + .. + j_{i-1}).
/// Every monomial has exponent >= 1. An empty constraint region gives 0.
inline Polynomial c_poly(const CIndex& idx)
{
    std::vector<long> a{0};
    a.insert(a.end(), idx.a.begin(), idx.a.end());
    const long p = idx.p;
    const long budget = p - a.back();
    if (budget < 0)
        return {};

    const std::size_t r = a.size();
    std::vector<Rational> coeffs(static_cast<std::size_t>(p + 2 - a.back()));
    auto rec = [&](auto&& self, std::size_t i, long used, const Rational& prod) -> void {
        if (i == r) {
            coeffs[static_cast<std::size_t>(p + 1 - a.back() - used)] += prod;
            return;
        }
        const long top = p + 1 - a[i] - used;
        if (top <= 0)
            return; // only reachable for non-monotone subscripts
        for (long j = 0; used + j <= budget; ++j) {
            Rational b = bernoulli(static_cast<unsigned>(j));
            if (b.is_zero())
                continue;
            self(self, i + 1, used + j,
                 prod * binomial(static_cast<unsigned long>(top), static_cast<unsigned long>(j)) * b / Rational(top));
        }
    };
    rec(rec, 0, 0, Rational(1));
    return Polynomial(std::move(coeffs));
}

inline Polynomial c_poly(unsigned p, std::vector<unsigned> a = {}) { return c_poly(CIndex{p, std::move(a)}); }

/// D^{(p)}_{a}(B) = (C^{(p)}_{a}(x) / x) evaluated umbrally at B.
inline Rational d_umbral(const CIndex& idx) { return umbral_eval(poly_divide_x(c_poly(idx))); }

inline Rational d_umbral(unsigned p, std::vector<unsigned> a = {}) { return d_umbral(CIndex{p, std::move(a)}); }

/// H_n(-p, k) as a closed form over proper MHS, by the recurrence
///   H_n(-p, k) = F_p(n) H_n(k) - sum_{j=0}^p binom(p+1,j) B_j/(p+1) H_n(k_1+j-p-1, k_2..k_r).
/// A first index q <= 0 is reduced again as H_n(-(-q), k_2..k_r); depth drops
/// by one each time. Memoized on (p, k).
inline ClosedForm reduce(unsigned p, const Composition& k)
{
    if (!k.is_proper())
        throw std::invalid_argument("reduce needs a proper composition");

    static std::mutex mutex;
    static std::map<std::pair<unsigned, Composition>, ClosedForm> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, k}); it != cache.end())
            return it->second;
    }

    ClosedForm out = ClosedForm::single(k, faulhaber(p));
    if (!k.empty()) {
        const Composition rest = k.tail();
        for (unsigned j = 0; j <= p; ++j) {
            const Rational w = detail::faulhaber_weight(p, j);
            if (w.is_zero())
                continue;
            const long q = static_cast<long>(k.front()) + j - p - 1;
            if (q >= 1)
                out.add(rest.prepend(static_cast<int>(q)), Polynomial::constant(-w));
            else
                out -= cf_scale(reduce(static_cast<unsigned>(-q), rest), w);
        }
    }

    std::lock_guard lock(mutex);
    cache.emplace(std::pair{p, k}, out);
    return out;
}

/// How the index sets of the first block of the closed formula are read.
///
/// per_block: the last summation index j_l of block l is bounded with k' = 1 in
///            position l (j_l <= p + l - 1 - |k_{l-1}| - |j_{l-1}|).
/// literal:   k'_i = k_i for i < r and k'_r = 1, for every block. This drops
///            terms whenever some k_l > 1 with l < r.
enum class IndexSetReading { per_block, literal };

/// H_n(-p, k) from the three-block closed formula (k nonempty and proper).
///
/// With |k_h| = k_1 + .. + k_h, |j_h| = j_1 + .. + j_h and
/// N_h = p + h + 1 - |k_h| - |j_h|, each index tuple weighs
/// prod_{h<l} binom(N_h, j_{h+1}) B_{j_{h+1}} / N_h, and contributes
///   block 1: (-1)^{l-1} n^{p+l-|k_{l-1}|-|j_l|} H_n(k_l..k_r)
///   block 2: (-1)^l H_n(|k_l|+|j_l|-l-p, k_{l+1}..k_r),
///            p+l+1-|k_l| <= |j_l| <= p+l-1-|k_{l-1}|
///   block 3: (-1)^r n^{p+r+1-|k_r|-|j_{r+1}|}, k_{r+1} = 1.
/// In blocks 1 and 2 the leading indices satisfy j_i <= p+i-|k_i|-|j_{i-1}|.
inline ClosedForm reduce_via_theorem(unsigned p, const Composition& k, IndexSetReading reading = IndexSetReading::per_block)
{
    if (!k.is_proper() || k.empty())
        throw std::invalid_argument("reduce_via_theorem needs a nonempty proper composition");

    const long P = p;
    const std::size_t r = k.depth();
    std::vector<long> K(r + 2, 0); // K[h] = |k_h|, K[r+1] uses k_{r+1} = 1
    for (std::size_t h = 1; h <= r; ++h)
        K[h] = K[h - 1] + k[h - 1];
    K[r + 1] = K[r] + 1;

    auto weight = [&](long h, long used, long j) {
        const long top = P + h + 1 - K[static_cast<std::size_t>(h)] - used;
        if (top <= 0)
            throw std::logic_error("closed formula reached a nonpositive denominator");
        return binomial(static_cast<unsigned long>(top), static_cast<unsigned long>(j))
             * bernoulli(static_cast<unsigned>(j)) / Rational(top);
    };

    // Visits every tuple (j_1..j_len) with lower[i] <= j_i <= upper(i, |j_{i-1}|).
    using Bound = std::function<long(long i, long used)>;
    auto enumerate = [&](long len, const Bound& lo, const Bound& hi, const std::function<void(long, const Rational&)>& visit) {
        auto rec = [&](auto&& self, long i, long used, const Rational& prod) -> void {
            if (i > len) {
                visit(used, prod);
                return;
            }
            for (long j = std::max(0L, lo(i, used)); j <= hi(i, used); ++j) {
                Rational w = weight(i - 1, used, j);
                if (!w.is_zero())
                    self(self, i + 1, used + j, prod * w);
            }
        };
        rec(rec, 1, 0, Rational(1));
    };

    auto kprime_sum = [&](long i, long l) -> long {
        // |k'_i| for the first block of index l
        const long last = reading == IndexSetReading::per_block ? l : static_cast<long>(r);
        return i == last ? K[static_cast<std::size_t>(i - 1)] + 1 : K[static_cast<std::size_t>(i)];
    };
    const Bound zero = [](long, long) { return 0L; };
    auto nonproper = [&](long i, long used) { return P + i - K[static_cast<std::size_t>(i)] - used; };

    ClosedForm out;
    for (long l = 1; l <= static_cast<long>(r); ++l) {
        const Composition target = k.tail(static_cast<std::size_t>(l - 1));
        const Rational sign = l % 2 == 1 ? Rational(1) : Rational(-1);
        enumerate(
            l, zero, [&](long i, long used) { return P + i - kprime_sum(i, l) - used; },
            [&](long used, const Rational& prod) {
                const long e = P + l - K[static_cast<std::size_t>(l - 1)] - used;
                out.add(target, Polynomial::monomial(static_cast<std::size_t>(e), sign * prod));
            });
    }

    for (long l = 1; l <= static_cast<long>(r); ++l) {
        const Composition rest = k.tail(static_cast<std::size_t>(l));
        const Rational sign = l % 2 == 0 ? Rational(1) : Rational(-1);
        const long lo_total = P + l + 1 - K[static_cast<std::size_t>(l)];
        const long hi_total = P + l - 1 - K[static_cast<std::size_t>(l - 1)];
        enumerate(
            l, [&](long i, long used) { return i == l ? lo_total - used : 0L; },
            [&](long i, long used) { return i == l ? hi_total - used : nonproper(i, used); },
            [&](long used, const Rational& prod) {
                const long q = K[static_cast<std::size_t>(l)] + used - l - P;
                out.add(rest.prepend(static_cast<int>(q)), Polynomial::constant(sign * prod));
            });
    }

    const Rational sign = r % 2 == 0 ? Rational(1) : Rational(-1);
    enumerate(static_cast<long>(r + 1), zero, nonproper, [&](long used, const Rational& prod) {
        const long e = P + static_cast<long>(r) + 1 - K[r] - used;
        out.add({}, Polynomial::monomial(static_cast<std::size_t>(e), sign * prod));
    });
    return out;
}

} // namespace hsum
