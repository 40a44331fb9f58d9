#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsum {

/// Index sequence (k_1, ..., k_r) of a multiple harmonic sum.
///
/// Proper: every entry >= 1. Extended: entries 2..r >= 1, the first may be any
/// integer (so H_n(-p, k) = sum_{m<=n} m^p H_{m-1}(k)).
class Composition
{
public:
    Composition() = default;
    Composition(std::initializer_list<int> e) : entries_(e) {}
    explicit Composition(std::vector<int> e) : entries_(std::move(e)) {}

    std::span<const int> entries() const { return entries_; }
    std::size_t depth() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    int front() const { return entries_.front(); }
    int operator[](std::size_t i) const { return entries_[i]; }

    bool is_proper() const
    {
        return std::all_of(entries_.begin(), entries_.end(), [](int k) { return k >= 1; });
    }

    bool is_extended() const
    {
        return entries_.empty() || std::all_of(entries_.begin() + 1, entries_.end(), [](int k) { return k >= 1; });
    }

    /// Entries from position `from` on.
    Composition tail(std::size_t from = 1) const
    {
        if (from >= entries_.size())
            return {};
        return Composition(std::vector<int>(entries_.begin() + static_cast<std::ptrdiff_t>(from), entries_.end()));
    }

    Composition prepend(int head) const
    {
        std::vector<int> v;
        v.reserve(entries_.size() + 1);
        v.push_back(head);
        v.insert(v.end(), entries_.begin(), entries_.end());
        return Composition(std::move(v));
    }

    /// "1,2,3"; empty composition gives "".
    std::string str(char sep = ',') const
    {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                out += sep;
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    /// Parses "k1,k2,..." (whitespace ignored); "" is the empty composition.
    static Composition parse(std::string_view text)
    {
        std::string clean;
        for (char ch : text)
            if (ch != ' ' && ch != '\t')
                clean += ch;
        std::vector<int> v;
        if (clean.empty())
            return {};
        std::size_t pos = 0;
        while (true) {
            auto comma = clean.find(',', pos);
            std::string_view field(clean.data() + pos, (comma == std::string::npos ? clean.size() : comma) - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
                throw std::invalid_argument("bad composition entry '" + std::string(field) + "'");
            v.push_back(value);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return Composition(std::move(v));
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << "(" << c.str() << ")"; }

private:
    std::vector<int> entries_;
};

/// Canonical term order: weight, then depth, then lexicographic on entries.
struct CanonicalOrder
{
    bool operator()(const Composition& a, const Composition& b) const
    {
        if (a.weight() != b.weight())
            return a.weight() < b.weight();
        if (a.depth() != b.depth())
            return a.depth() < b.depth();
        return a < b;
    }
};

/// {1}_r
inline Composition ones(std::size_t r) { return Composition(std::vector<int>(r, 1)); }

/// All proper compositions with weight <= max_weight and depth <= max_depth,
/// the empty one included, in canonical order.
inline std::vector<Composition> proper_compositions(int max_weight, std::size_t max_depth = SIZE_MAX)
{
    std::vector<Composition> out{Composition{}};
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        for (int k = 1; k <= remaining; ++k) {
            cur.push_back(k);
            out.emplace_back(cur);
            if (cur.size() < max_depth)
                self(self, remaining - k);
            cur.pop_back();
        }
    };
    if (max_depth > 0)
        rec(rec, max_weight);
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

} // namespace hsum
