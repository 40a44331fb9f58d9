#pragma once

#include "hsum/polynomial.hpp"
#include "hsum/rational.hpp"

#include <mutex>
#include <utility>
#include <vector>

namespace hsum {

/// plus:  t e^t / (e^t - 1), B_1 = +1/2
/// minus: t / (e^t - 1),     B_1 = -1/2
enum class Convention { plus, minus };

/// Append-only memo of Bernoulli numbers in the minus convention.
///
/// Values come from sum_{j=0}^{m} binom(m+1, j) B_j = 0 (m >= 1), B_0 = 1.
/// Growth happens under a mutex, so one table can be shared between threads.
class BernoulliTable
{
public:
    Rational get(unsigned n, Convention conv = Convention::plus)
    {
        Rational v = minus_value(n);
        if (n == 1 && conv == Convention::plus)
            v = -v;
        return v;
    }

private:
    Rational minus_value(unsigned n)
    {
        std::lock_guard lock(mutex_);
        while (values_.size() <= n) {
            const auto m = static_cast<unsigned long>(values_.size());
            if (m == 0) {
                values_.emplace_back(1);
                continue;
            }
            Rational acc;
            for (unsigned long j = 0; j < m; ++j)
                if (!values_[j].is_zero())
                    acc += binomial(m + 1, j) * values_[j];
            values_.push_back(-acc / Rational(static_cast<long>(m + 1)));
        }
        return values_[n];
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

inline BernoulliTable& shared_bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

inline Rational bernoulli(unsigned n, Convention conv = Convention::plus)
{
    return shared_bernoulli_table().get(n, conv);
}

/// The umbral functional: x^i -> B_i.
inline Rational umbral_eval(const Polynomial& p, Convention conv = Convention::plus)
{
    Rational acc;
    auto cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (!cs[i].is_zero())
            acc += cs[i] * bernoulli(static_cast<unsigned>(i), conv);
    return acc;
}

struct TwoBernoulliCheck
{
    bool minus_is_zero;
    bool shifted_plus_is_zero;

    friend bool operator==(const TwoBernoulliCheck&, const TwoBernoulliCheck&) = default;
};

/// Evaluates F(B~) = 0 and F(B - 1) = 0 independently. (B - 1)^i = B~^i, so
/// the two flags always agree.
inline TwoBernoulliCheck check_two_bernoullis(const Polynomial& f)
{
    return {umbral_eval(f, Convention::minus).is_zero(),
            umbral_eval(poly_shift(f, Rational(-1)), Convention::plus).is_zero()};
}

} // namespace hsum
