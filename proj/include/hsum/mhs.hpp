#pragma once

#include "hsum/composition.hpp"
#include "hsum/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hsum {

namespace detail {

inline void require_extended_shape(const Composition& k)
{
    if (!k.is_extended())
        throw std::invalid_argument("not a supported extended shape: only the first entry may be <= 0");
}

/// 1/m^k, read as m^|k| when k <= 0.
inline Rational term(long m, int k) { return int_power(m, -static_cast<long>(k)); }

} // namespace detail

/// H_m(k) for every m in 0..n, by dynamic programming over suffixes:
/// H_m(k_j..k_r) = H_{m-1}(k_j..k_r) + H_{m-1}(k_{j+1}..k_r) / m^{k_j}.
inline std::vector<Rational> mhs_prefix(unsigned n, const Composition& k)
{
    detail::require_extended_shape(k);
    std::vector<Rational> below(n + 1, Rational(1)); // H_m(empty) = 1
    for (std::size_t j = k.depth(); j-- > 0;) {
        std::vector<Rational> cur(n + 1);
        for (unsigned m = 1; m <= n; ++m)
            cur[m] = cur[m - 1] + detail::term(m, k[j]) * below[m - 1];
        below = std::move(cur);
    }
    return below;
}

/// Extended multiple harmonic sum
///   H_n(k_1..k_r) = sum_{n >= n_1 > ... > n_r > 0} prod n_i^{-k_i}.
/// H_n() = 1 and H_n(k) = 0 when n < r.
inline Rational mhs_eval(unsigned n, const Composition& k) { return mhs_prefix(n, k).back(); }

inline Rational harmonic(unsigned n, int order = 1) { return mhs_eval(n, Composition{order}); }

} // namespace hsum
