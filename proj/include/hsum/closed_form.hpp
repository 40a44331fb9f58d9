#pragma once

#include "hsum/composition.hpp"
#include "hsum/mhs.hpp"
#include "hsum/polynomial.hpp"
#include "hsum/stuffle.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsum {

/// sum_k P_k(n) * H_n(k) over proper compositions k; the empty composition
/// carries the pure polynomial part. Zero coefficients are never stored, so
/// equality of the maps is symbolic equality.
class ClosedForm
{
public:
    using Terms = std::map<Composition, Polynomial, CanonicalOrder>;

    ClosedForm() = default;

    static ClosedForm single(Composition k, Polynomial p)
    {
        ClosedForm c;
        c.add(std::move(k), std::move(p));
        return c;
    }

    static ClosedForm polynomial(Polynomial p) { return single({}, std::move(p)); }

    void add(const Composition& k, const Polynomial& p)
    {
        if (p.is_zero())
            return;
        if (!k.is_proper())
            throw std::invalid_argument("closed forms hold proper compositions only");
        auto [it, inserted] = terms_.try_emplace(k, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial coeff(const Composition& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Polynomial{} : it->second;
    }

    ClosedForm& operator+=(const ClosedForm& o)
    {
        for (const auto& [k, p] : o.terms_)
            add(k, p);
        return *this;
    }

    ClosedForm& operator-=(const ClosedForm& o)
    {
        for (const auto& [k, p] : o.terms_)
            add(k, -p);
        return *this;
    }

    friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
    friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

private:
    Terms terms_;
};

inline ClosedForm cf_add(const ClosedForm& a, const ClosedForm& b) { return a + b; }

inline ClosedForm cf_scale(const ClosedForm& a, const Polynomial& p)
{
    ClosedForm out;
    for (const auto& [k, q] : a.terms())
        out.add(k, q * p);
    return out;
}

inline ClosedForm cf_scale(const ClosedForm& a, const Rational& c) { return cf_scale(a, Polynomial::constant(c)); }

inline ClosedForm from_combination(const MHSCombination& m)
{
    ClosedForm out;
    for (const auto& [k, c] : m.terms())
        out.add(k, Polynomial::constant(c));
    return out;
}

inline Rational cf_eval(const ClosedForm& c, unsigned n)
{
    Rational acc;
    const Rational at(static_cast<long>(n));
    for (const auto& [k, p] : c.terms())
        acc += p(at) * mhs_eval(n, k);
    return acc;
}

/// cf_eval(c, m) for m = 0..n, sharing one prefix table per basis term.
inline std::vector<Rational> cf_eval_prefix(const ClosedForm& c, unsigned n)
{
    std::vector<Rational> out(n + 1);
    for (const auto& [k, p] : c.terms()) {
        auto h = mhs_prefix(n, k);
        for (unsigned m = 0; m <= n; ++m)
            out[m] += p(Rational(static_cast<long>(m))) * h[m];
    }
    return out;
}

/// Highest polynomial degree and deepest composition present.
inline int max_coeff_degree(const ClosedForm& c)
{
    int d = -1;
    for (const auto& [k, p] : c.terms())
        d = std::max(d, p.degree());
    return d;
}

inline std::size_t max_depth(const ClosedForm& c)
{
    std::size_t d = 0;
    for (const auto& [k, p] : c.terms())
        d = std::max(d, k.depth());
    return d;
}

enum class Format { text, latex, json };

inline Format parse_format(std::string_view s)
{
    if (s == "text")
        return Format::text;
    if (s == "latex")
        return Format::latex;
    if (s == "json")
        return Format::json;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

// JSON -----------------------------------------------------------------------

inline nlohmann::json rational_to_json(const Rational& r)
{
    auto part = [](const mpz_class& z) -> nlohmann::json {
        if (auto v = to_int64(z))
            return *v;
        return z.get_str();
    };
    return nlohmann::json::array({part(r.numerator()), part(r.denominator())});
}

inline Rational rational_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational must be a [num, den] pair");
    auto part = [](const nlohmann::json& v) {
        if (v.is_number_integer())
            return mpz_class(std::to_string(v.get<std::int64_t>()));
        if (v.is_string())
            return mpz_class(v.get<std::string>());
        throw std::invalid_argument("rational part must be an integer");
    };
    return Rational(part(j[0]), part(j[1]));
}

inline nlohmann::json cf_to_json(const ClosedForm& c)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, p] : c.terms()) {
        nlohmann::json coeff = nlohmann::json::array();
        for (const auto& a : p.coeffs())
            coeff.push_back(rational_to_json(a));
        terms.push_back({{"composition", std::vector<int>(k.entries().begin(), k.entries().end())},
                         {"coeff", std::move(coeff)}});
    }
    return {{"terms", std::move(terms)}};
}

inline ClosedForm cf_from_json(const nlohmann::json& j)
{
    ClosedForm out;
    for (const auto& t : j.at("terms")) {
        std::vector<Rational> coeffs;
        for (const auto& r : t.at("coeff"))
            coeffs.push_back(rational_from_json(r));
        out.add(Composition(t.at("composition").get<std::vector<int>>()), Polynomial(std::move(coeffs)));
    }
    return out;
}

// Text and LaTeX ---------------------------------------------------------------

namespace detail {

/// Splits a coefficient into a leading sign and a body ready for "body*H(...)".
/// Returns {negative, body, is_one}.
struct SignedBody
{
    bool negative;
    std::string body;
    bool is_one;
};

inline SignedBody split_sign(const Polynomial& p, bool latex)
{
    auto nonzero = std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& r) { return !r.is_zero(); });
    if (nonzero == 1) {
        const Rational lead = p.coeffs().back();
        const Polynomial mag = lead.sign() < 0 ? -p : p;
        const bool one = mag == Polynomial::constant(Rational(1));
        return {lead.sign() < 0, latex ? poly_to_latex(mag) : poly_to_string(mag), one};
    }
    if (latex)
        return {false, "\\left(" + poly_to_latex(p) + "\\right)", false};
    return {false, "(" + poly_to_string(p) + ")", false};
}

inline std::string mhs_text(const Composition& k) { return "H(" + k.str() + ")"; }

inline std::string mhs_latex(const Composition& k)
{
    if (k == Composition{1})
        return "H_n";
    return "H_n(" + k.str() + ")";
}

} // namespace detail

/// Deterministic rendering in canonical term order.
///   text:  "H(1) - n*H(2) + n*H(1,2)"
///   latex: "H_n-nH_n(2)+nH_n(1,2)"
inline std::string cf_render(const ClosedForm& c, Format format)
{
    if (format == Format::json)
        return cf_to_json(c).dump();
    if (c.is_zero())
        return "0";
    const bool latex = format == Format::latex;
    std::string out;
    for (const auto& [k, p] : c.terms()) {
        if (k.empty()) {
            // the empty composition sorts first, so the pure part leads
            out += latex ? poly_to_latex(p) : poly_to_string(p);
            continue;
        }
        auto sb = detail::split_sign(p, latex);
        if (out.empty())
            out += sb.negative ? "-" : "";
        else if (latex)
            out += sb.negative ? "-" : "+";
        else
            out += sb.negative ? " - " : " + ";
        if (!sb.is_one)
            out += sb.body + (latex ? "" : "*");
        out += latex ? detail::mhs_latex(k) : detail::mhs_text(k);
    }
    return out;
}

} // namespace hsum
