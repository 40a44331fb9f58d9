#pragma once

#include "hsum/composition.hpp"
#include "hsum/mhs.hpp"
#include "hsum/rational.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hsum {

/// Finite Q-linear combination of proper MHS; zero coefficients are never stored.
class MHSCombination
{
public:
    using Terms = std::map<Composition, Rational, CanonicalOrder>;

    MHSCombination() = default;

    static MHSCombination single(Composition k, const Rational& c = Rational(1))
    {
        MHSCombination m;
        m.add(std::move(k), c);
        return m;
    }

    void add(const Composition& k, const Rational& c)
    {
        if (c.is_zero())
            return;
        if (!k.is_proper())
            throw std::invalid_argument("MHS combinations hold proper compositions only");
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Composition& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational evaluate(unsigned n) const
    {
        Rational acc;
        for (const auto& [k, c] : terms_)
            acc += c * mhs_eval(n, k);
        return acc;
    }

    MHSCombination& operator+=(const MHSCombination& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }

    MHSCombination& operator*=(const Rational& c)
    {
        if (c.is_zero())
            terms_.clear();
        for (auto& [k, v] : terms_)
            v *= c;
        return *this;
    }

    friend MHSCombination operator+(MHSCombination a, const MHSCombination& b) { return a += b; }
    friend MHSCombination operator*(MHSCombination a, const Rational& c) { return a *= c; }
    friend bool operator==(const MHSCombination&, const MHSCombination&) = default;

private:
    Terms terms_;
};

/// Quasi-shuffle product a * b:
///   (a1,a') * (b1,b') = (a1, a' * b) + (b1, a * b') + (a1+b1, a' * b')
/// so that H_n(a) H_n(b) = sum c_l H_n(l) for every n.
inline MHSCombination stuffle(const Composition& a, const Composition& b)
{
    if (!a.is_proper() || !b.is_proper())
        throw std::invalid_argument("stuffle needs proper compositions");
    if (a.empty())
        return MHSCombination::single(b);
    if (b.empty())
        return MHSCombination::single(a);

    MHSCombination out;
    const Composition at = a.tail(), bt = b.tail();
    auto graft = [&out](const MHSCombination& part, int head) {
        for (const auto& [k, c] : part.terms())
            out.add(k.prepend(head), c);
    };
    graft(stuffle(at, b), a.front());
    graft(stuffle(a, bt), b.front());
    graft(stuffle(at, bt), a.front() + b.front());
    return out;
}

inline MHSCombination product_combinations(const MHSCombination& a, const MHSCombination& b)
{
    MHSCombination out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out += stuffle(ka, kb) * (ca * cb);
    return out;
}

/// H_n(k)^t in the flat MHS basis. Memoized on (k, t).
inline MHSCombination expand_power(int k, unsigned t)
{
    if (k < 1)
        throw std::invalid_argument("expand_power needs a positive order");
    static std::mutex mutex;
    static std::map<std::pair<int, unsigned>, MHSCombination> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({k, t}); it != cache.end())
            return it->second;
    }
    MHSCombination result = t == 0 ? MHSCombination::single({})
                                   : product_combinations(expand_power(k, t - 1), MHSCombination::single({k}));
    std::lock_guard lock(mutex);
    cache.emplace(std::pair{k, t}, result);
    return result;
}

} // namespace hsum
