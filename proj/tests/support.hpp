#pragma once

#include "hsum/hsum.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hsum::testing {

inline Polynomial P(std::string_view text) { return parse_poly(text); }

/// Small seeded generators; every property test takes its inputs from here.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int span = 9)
    {
        int den = integer(1, 6);
        return Rational(integer(-span, span), den);
    }

    Polynomial polynomial(int max_degree, bool integral = false)
    {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
        for (auto& a : c)
            a = integral ? Rational(integer(-9, 9)) : rational();
        return Polynomial(std::move(c));
    }

    /// Uniform over proper compositions of weight exactly w (w >= 0).
    Composition composition_of_weight(int w)
    {
        std::vector<int> parts;
        int run = 1;
        for (int i = 1; i < w; ++i) {
            if (integer(0, 1)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        if (w > 0)
            parts.push_back(run);
        return Composition(std::move(parts));
    }

    Composition composition(int max_weight) { return composition_of_weight(integer(0, max_weight)); }

    MHSCombination combination(int max_weight, int terms)
    {
        MHSCombination m;
        for (int i = 0; i < terms; ++i)
            m.add(composition(max_weight), rational());
        return m;
    }

    ClosedForm closed_form(int max_weight, int terms, int max_degree)
    {
        ClosedForm c;
        for (int i = 0; i < terms; ++i)
            c.add(composition(max_weight), polynomial(max_degree));
        return c;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace hsum::testing
