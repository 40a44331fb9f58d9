#pragma once

#include "hsum/bernoulli.hpp"
#include "hsum/closed_form.hpp"
#include "hsum/expr.hpp"
#include "hsum/mhs.hpp"
#include "hsum/parallel.hpp"
#include "hsum/reducer.hpp"
#include "hsum/stuffle.hpp"
#include "hsum/sums.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hsum {

// Direct-summation oracles -----------------------------------------------------

/// sum_{m=lo}^{n} F(m) prod_i H_{m-s}(order_i)^{mult_i} for every n in 0..max_n,
/// with s = 1 (H_{m-1}, lo = 1) or s = 0 (H_m, lo = 0). Plain loops only.
inline std::vector<Rational> direct_sum_prefix(const Polynomial& f, const std::vector<Factor>& factors, unsigned max_n,
                                               bool current_index = false)
{
    std::vector<Rational> h(factors.size()); // H_{m-1}(order_i), updated as m grows
    std::vector<Rational> out(max_n + 1);
    Rational acc;
    auto product = [&] {
        Rational v(1);
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (unsigned e = 0; e < factors[i].multiplicity; ++e)
                v *= h[i];
        return v;
    };
    if (current_index)
        acc += f(Rational(0)) * product(); // m = 0 with H_0 = 0
    out[0] = acc;
    for (unsigned m = 1; m <= max_n; ++m) {
        if (current_index)
            for (std::size_t i = 0; i < factors.size(); ++i)
                h[i] += int_power(m, -factors[i].order);
        acc += f(Rational(static_cast<long>(m))) * product();
        if (!current_index)
            for (std::size_t i = 0; i < factors.size(); ++i)
                h[i] += int_power(m, -factors[i].order);
        out[m] = acc;
    }
    return out;
}

inline std::vector<Rational> direct_power_sum_prefix(const Polynomial& f, unsigned t, unsigned max_n,
                                                     bool current_index = false)
{
    return direct_sum_prefix(f, {Factor{1, t}}, max_n, current_index);
}

// Reports ----------------------------------------------------------------------

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report
{
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool all_passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    void append(Report other)
    {
        for (auto& c : other.checks)
            checks.push_back(std::move(c));
        for (auto& w : other.warnings)
            warnings.push_back(std::move(w));
    }

    std::string str() const
    {
        std::ostringstream os;
        for (const auto& w : warnings)
            os << "WARN " << w << "\n";
        std::size_t failed = 0;
        for (const auto& c : checks) {
            os << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty())
                os << "  [" << c.detail << "]";
            os << "\n";
            failed += c.passed ? 0 : 1;
        }
        os << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
        return os.str();
    }
};

/// Compares closed-form values against oracle values at 0..n; returns the first
/// mismatching n as detail.
inline CheckResult compare_values(std::string name, const std::vector<Rational>& closed,
                                  const std::vector<Rational>& oracle)
{
    CheckResult r{std::move(name), true, {}};
    for (std::size_t n = 0; n < closed.size() && n < oracle.size(); ++n)
        if (closed[n] != oracle[n]) {
            r.passed = false;
            r.detail = "n=" + std::to_string(n) + ": closed " + closed[n].str() + " vs oracle " + oracle[n].str();
            break;
        }
    return r;
}

// Golden identities --------------------------------------------------------------

/// A known identity written as a closed form, the engine's route to it, and an
/// independent oracle for its values.
struct Identity
{
    std::string name;
    ClosedForm expected;
    ClosedForm actual;
    std::function<std::vector<Rational>(unsigned)> oracle;
};

namespace detail {

/// poly(n) * [combination], the building block for hand-written identities.
inline ClosedForm term(std::string_view poly, const MHSCombination& m) { return cf_scale(from_combination(m), parse_poly(poly)); }
inline ClosedForm term(std::string_view poly, Composition k) { return ClosedForm::single(std::move(k), parse_poly(poly)); }
inline ClosedForm term(const Polynomial& poly, Composition k) { return ClosedForm::single(std::move(k), poly); }
inline ClosedForm pure(std::string_view poly) { return ClosedForm::polynomial(parse_poly(poly)); }

inline MHSCombination h_power(unsigned t) { return expand_power(1, t); }
inline MHSCombination h_times_h2() { return stuffle({1}, {2}); }

inline std::function<std::vector<Rational>(unsigned)> mhs_oracle(Composition k)
{
    return [k](unsigned n) { return mhs_prefix(n, k); };
}

inline std::function<std::vector<Rational>(unsigned)> sum_oracle(Polynomial f, std::vector<Factor> factors)
{
    return [f, factors](unsigned n) { return direct_sum_prefix(f, factors, n); };
}

} // namespace detail

/// Four small H_n(0/-1, ..) reductions and four summation identities, with
/// H_n^2 and H_n H_n(2) expanded by stuffle.
inline std::vector<Identity> known_identities()
{
    using namespace detail;
    std::vector<Identity> ids;
    ids.push_back({"H_n(0,1,2) = nH_n(1,2) - nH_n(2) + H_n",
                   term("n", {1, 2}) - term("n", {2}) + term("1", {1}), reduce(0, {1, 2}), mhs_oracle({0, 1, 2})});
    ids.push_back({"H_n(0,2,1) = nH_n(2,1) - (H_n^2 - H_n(2))/2",
                   term("n", {2, 1}) - term("1/2", h_power(2)) + term("1/2", {2}), reduce(0, {2, 1}),
                   mhs_oracle({0, 2, 1})});
    ids.push_back({"H_n(-1,1,2) = n(n+1)/2 H_n(1,2) - n(n+3)/4 H_n(2) + 3/4 H_n + n/4",
                   term("n*(n+1)/2", {1, 2}) - term("n*(n+3)/4", {2}) + term("3/4", {1}) + pure("n/4"),
                   reduce(1, {1, 2}), mhs_oracle({-1, 1, 2})});
    ids.push_back({"H_n(-1,2,1) = n(n+1)/2 H_n(2,1) - (H_n^2 - H_n(2))/4 - n/2 H_n + n/2",
                   term("n*(n+1)/2", {2, 1}) - term("1/4", h_power(2)) + term("1/4", {2}) - term("n/2", {1})
                       + pure("n/2"),
                   reduce(1, {2, 1}), mhs_oracle({-1, 2, 1})});
    ids.push_back({"sum H_{m-1}^2 = nH_n^2 - (2n+1)H_n + 2n",
                   term("n", h_power(2)) - term("2n+1", {1}) + pure("2n"), sum_power(parse_poly("1"), 2),
                   sum_oracle(parse_poly("1"), {{1, 2}})});
    ids.push_back({"sum m H_{m-1}^2 = n(n+1)/2 H_n^2 - (n^2+3n+1)/2 H_n + n(n+5)/4",
                   term("n*(n+1)/2", h_power(2)) - term("(n^2+3*n+1)/2", {1}) + pure("n*(n+5)/4"),
                   sum_power(parse_poly("m"), 2), sum_oracle(parse_poly("m"), {{1, 2}})});
    ids.push_back({"sum H_{m-1}H_{m-1}(2) = nH_nH_n(2) - H_n^2/2 - (2n+1)/2 H_n(2) + H_n",
                   term("n", h_times_h2()) - term("1/2", h_power(2)) - term("(2n+1)/2", {2}) + term("1", {1}),
                   sum_product(parse_poly("1"), {{1, 1}, {2, 1}}), sum_oracle(parse_poly("1"), {{1, 1}, {2, 1}})});
    ids.push_back({"sum m H_{m-1}H_{m-1}(2) = n(n+1)/2 H_nH_n(2) - H_n^2/4 - (n^2+3n+1)/4 H_n(2) + (1-2n)/4 H_n + 3n/4",
                   term("n*(n+1)/2", h_times_h2()) - term("1/4", h_power(2)) - term("(n^2+3n+1)/4", {2})
                       + term("(1-2n)/4", {1}) + pure("3n/4"),
                   sum_product(parse_poly("m"), {{1, 1}, {2, 1}}), sum_oracle(parse_poly("m"), {{1, 1}, {2, 1}})});
    return ids;
}

/// The C-polynomial specializations of the general reduction for one p:
/// {1}_r for r <= 4, (1,1) through H_n^2, (1,2) and (2,1).
inline std::vector<Identity> coefficient_identities(unsigned p)
{
    using namespace detail;
    const std::string ps = std::to_string(p);
    const Polynomial fp = faulhaber(p);
    std::vector<Identity> ids;

    for (unsigned r = 1; r <= 4; ++r) {
        ClosedForm e = term(fp, ones(r));
        for (unsigned i = 1; i <= r; ++i)
            e += term(c_poly(p, std::vector<unsigned>(i, 0)) * Rational(i % 2 ? -1 : 1), ones(r - i));
        ids.push_back({"H_n(-" + ps + ",{1}_" + std::to_string(r) + ")", e, reduce(p, ones(r)),
                       mhs_oracle(ones(r).prepend(-static_cast<int>(p)))});
    }

    // H_n(-p,1,1) = 1/2 H_n(-p)(H_n^2 - H_n(2)) - C_0 H_n + C_00
    ids.push_back({"H_n(-" + ps + ",1,1) via H_n^2",
                   cf_scale(from_combination(h_power(2)), fp * Rational(1, 2)) - term(fp * Rational(1, 2), {2})
                       - term(c_poly(p, {0}), {1}) + ClosedForm::polynomial(c_poly(p, {0, 0})),
                   reduce(p, {1, 1}), mhs_oracle({-static_cast<int>(p), 1, 1})});

    ids.push_back({"H_n(-" + ps + ",1,2)",
                   term(fp, {1, 2}) + term(Polynomial::constant(d_umbral(p)), {1}) - term(c_poly(p, {0}), {2})
                       + ClosedForm::polynomial(c_poly(p, {0, 1})),
                   reduce(p, {1, 2}), mhs_oracle({-static_cast<int>(p), 1, 2})});

    ids.push_back({"H_n(-" + ps + ",2,1)",
                   term(fp, {2, 1}) - term(Polynomial::constant(bernoulli(p)), {1, 1}) - term(c_poly(p, {1}), {1})
                       + ClosedForm::polynomial(c_poly(p, {1, 1})),
                   reduce(p, {2, 1}), mhs_oracle({-static_cast<int>(p), 2, 1})});
    return ids;
}

inline CheckResult check_identity(const Identity& id, unsigned max_n)
{
    CheckResult r{id.name, true, {}};
    if (id.expected != id.actual) {
        r.passed = false;
        r.detail = "structural mismatch: expected " + cf_render(id.expected, Format::text) + " got "
                 + cf_render(id.actual, Format::text);
        return r;
    }
    auto numeric = compare_values(id.name, cf_eval_prefix(id.actual, max_n), id.oracle(max_n));
    r.passed = numeric.passed;
    r.detail = numeric.detail;
    return r;
}

// Suites -------------------------------------------------------------------------

struct VerifyOptions
{
    unsigned max_n = 30;
    unsigned threads = 1;
};

/// Oracle equivalence of reduce for p <= max_p over proper compositions of
/// weight <= max_weight and depth <= max_depth, n in 0..max_n.
inline Report reducer_oracle_suite(unsigned max_p, int max_weight, std::size_t max_depth, const VerifyOptions& opt)
{
    struct Case
    {
        unsigned p;
        Composition k;
    };
    std::vector<Case> cases;
    for (unsigned p = 0; p <= max_p; ++p)
        for (const auto& k : proper_compositions(max_weight, max_depth))
            cases.push_back({p, k});
    Report rep;
    rep.checks = parallel_map(cases.size(), opt.threads, [&](std::size_t i) {
        const auto& c = cases[i];
        const Composition ext = c.k.prepend(-static_cast<int>(c.p));
        auto r = compare_values("reduce p=" + std::to_string(c.p) + " k=(" + c.k.str() + ") n<=" + std::to_string(opt.max_n),
                                cf_eval_prefix(reduce(c.p, c.k), opt.max_n), mhs_prefix(opt.max_n, ext));
        const ClosedForm cf = reduce(c.p, c.k);
        if (r.passed && max_coeff_degree(cf) > static_cast<int>(c.p) + 1) {
            r.passed = false;
            r.detail = "coefficient degree exceeds p+1";
        }
        return r;
    });
    return rep;
}

struct PathComparison
{
    unsigned p;
    Composition k;
    bool structural_match;
    bool values_match;
};

/// reduce_via_theorem against reduce over p <= max_p, nonempty k of weight <= max_weight.
inline std::vector<PathComparison> compare_paths(unsigned max_p, int max_weight, unsigned eval_n, unsigned threads,
                                                 IndexSetReading reading = IndexSetReading::per_block)
{
    std::vector<std::pair<unsigned, Composition>> cases;
    for (unsigned p = 0; p <= max_p; ++p)
        for (const auto& k : proper_compositions(max_weight))
            if (!k.empty())
                cases.emplace_back(p, k);
    return parallel_map(cases.size(), threads, [&](std::size_t i) {
        const auto& [p, k] = cases[i];
        const ClosedForm a = reduce(p, k);
        const ClosedForm b = reduce_via_theorem(p, k, reading);
        PathComparison c{p, k, a == b, true};
        if (!c.structural_match)
            c.values_match = cf_eval_prefix(a, eval_n) == cf_eval_prefix(b, eval_n);
        return c;
    });
}

inline Report path_suite(unsigned max_p, int max_weight, const VerifyOptions& opt)
{
    Report rep;
    for (const auto& c : compare_paths(max_p, max_weight, std::max(opt.max_n, 50u), opt.threads)) {
        CheckResult r{"theorem path p=" + std::to_string(c.p) + " k=(" + c.k.str() + ")", c.structural_match, {}};
        if (!c.structural_match)
            r.detail = c.values_match ? "structural mismatch, values agree" : "structural and value mismatch";
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

inline Report identity_suite(const std::vector<Identity>& ids, unsigned max_n, unsigned threads)
{
    Report rep;
    rep.checks = parallel_map(ids.size(), threads, [&](std::size_t i) { return check_identity(ids[i], max_n); });
    return rep;
}

/// Fixed pseudo-random polynomials of degree <= max_degree, coefficients in [-9, 9].
inline std::vector<Polynomial> random_polynomials(std::size_t count, int max_degree, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9);
    std::vector<Polynomial> out;
    while (out.size() < count) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& a : c)
            a = Rational(coef(rng));
        out.emplace_back(std::move(c));
    }
    return out;
}

inline Report sums_suite(const VerifyOptions& opt)
{
    Report rep;
    const unsigned n = opt.max_n;

    struct Case
    {
        Polynomial f;
        unsigned t;
    };
    std::vector<Case> cases;
    for (const auto& f : random_polynomials(12, 3, 0x5eed))
        for (unsigned t = 0; t <= 4; ++t)
            cases.push_back({f, t});

    auto power_checks = parallel_map(cases.size(), opt.threads, [&](std::size_t i) {
        const auto& [f, t] = cases[i];
        const std::string tag = "F=" + poly_to_string(f, 'm') + " t=" + std::to_string(t);
        std::vector<CheckResult> out;
        out.push_back(compare_values("sum_power " + tag, cf_eval_prefix(sum_power(f, t), n),
                                     direct_power_sum_prefix(f, t, n)));
        out.push_back(compare_values("sum_power_shifted " + tag, cf_eval_prefix(sum_power_shifted(f, t), n),
                                     direct_power_sum_prefix(f, t, n, true)));
        auto sc = structure_check(f, t);
        out.push_back({"structure " + tag, sc.passes,
                       sc.passes ? "" : std::to_string(sc.offending_terms.size()) + " offending terms"});
        return out;
    });
    for (auto& v : power_checks)
        for (auto& c : v)
            rep.checks.push_back(std::move(c));

    const std::vector<std::vector<Factor>> products{{{1, 1}, {2, 1}}, {{2, 2}}, {{1, 2}, {2, 1}}, {{3, 1}, {1, 1}}};
    for (const auto& f : {parse_poly("1"), parse_poly("m"), parse_poly("m^2-3")})
        for (const auto& fac : products) {
            std::string tag = "F=" + poly_to_string(f, 'm') + " factors=";
            for (const auto& x : fac)
                tag += std::to_string(x.order) + "^" + std::to_string(x.multiplicity) + " ";
            rep.checks.push_back(compare_values("sum_product " + tag, cf_eval_prefix(sum_product(f, fac), n),
                                                direct_sum_prefix(f, fac, n)));
        }

    for (unsigned p = 0; p <= 4; ++p) {
        const std::string ps = std::to_string(p);
        rep.checks.push_back({"hn2 form p=" + ps,
                              structured_to_closed(spiess_form(SpiessKind::hn2, p)) == sum_power(Polynomial::monomial(p), 2),
                              {}});
        rep.checks.push_back({"hn3 form p=" + ps,
                              structured_to_closed(spiess_form(SpiessKind::hn3, p)) == sum_power(Polynomial::monomial(p), 3),
                              {}});
        rep.checks.push_back({"mixed form p=" + ps,
                              structured_to_closed(spiess_form(SpiessKind::mixed, p))
                                  == sum_product(Polynomial::monomial(p), {{1, 1}, {2, 1}}),
                              {}});
    }
    for (const char* text : {"1", "m", "m^2", "2m-1", "3m^2-5m+2"}) {
        const Polynomial f = parse_poly(text);
        rep.checks.push_back({std::string("hn4 form F=") + text,
                              structured_to_closed(spiess_form(SpiessKind::hn4, f)) == sum_power(f, 4), {}});
    }

    rep.append(identity_suite(known_identities(), n, opt.threads));
    return rep;
}

inline Report basics_suite(const VerifyOptions& opt)
{
    Report rep;
    bool odd_ok = true;
    for (unsigned k = 1; k <= 12; ++k)
        odd_ok = odd_ok && bernoulli(2 * k + 1).is_zero();
    rep.checks.push_back({"odd Bernoulli numbers vanish", odd_ok, {}});

    bool umbral_ok = true;
    for (unsigned i = 0; i <= 24; ++i) {
        Polynomial p = Polynomial::constant(Rational(1));
        for (unsigned e = 0; e < i; ++e)
            p = p * Polynomial{Rational(-1), Rational(1)};
        umbral_ok = umbral_ok && umbral_eval(p, Convention::plus) == bernoulli(i, Convention::minus);
    }
    rep.checks.push_back({"(B-1)^i = B~^i for i <= 24", umbral_ok, {}});

    bool faulhaber_ok = faulhaber_minus_form(0) - faulhaber(0) == Polynomial::constant(Rational(1));
    for (unsigned p = 1; p <= 10; ++p)
        faulhaber_ok = faulhaber_ok && faulhaber(p) == faulhaber_minus_form(p);
    rep.checks.push_back({"Faulhaber plus/minus forms agree for 1 <= p <= 10 (differ by 1 at p = 0)", faulhaber_ok, {}});

    bool stuffle_ok = true;
    const auto comps = proper_compositions(4, 3);
    for (std::size_t i = 0; i < comps.size() && stuffle_ok; ++i)
        for (std::size_t j = i; j < comps.size() && stuffle_ok; ++j) {
            const auto prod = from_combination(stuffle(comps[i], comps[j]));
            const auto lhs = cf_eval_prefix(prod, std::min(opt.max_n, 20u));
            const auto a = mhs_prefix(std::min(opt.max_n, 20u), comps[i]);
            const auto b = mhs_prefix(std::min(opt.max_n, 20u), comps[j]);
            for (std::size_t m = 0; m < lhs.size(); ++m)
                stuffle_ok = stuffle_ok && lhs[m] == a[m] * b[m];
        }
    rep.checks.push_back({"stuffle evaluation homomorphism, weight <= 4", stuffle_ok, {}});
    return rep;
}

enum class Suite { reduce, sums, all };

inline Suite parse_suite(std::string_view s)
{
    if (s == "reduce")
        return Suite::reduce;
    if (s == "sums")
        return Suite::sums;
    if (s == "all")
        return Suite::all;
    throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
}

/// Runs a named invariant suite for n <= max_n.
inline Report run_verify(Suite suite, const VerifyOptions& opt)
{
    Report rep;
    if (opt.max_n == 0) {
        rep.warnings.push_back("max-n is 0: empty range, nothing to check");
        return rep;
    }
    if (suite == Suite::reduce || suite == Suite::all) {
        rep.append(reducer_oracle_suite(6, 5, 3, opt));
        rep.append(path_suite(4, 4, opt));
        for (unsigned p = 0; p <= 4; ++p)
            rep.append(identity_suite(coefficient_identities(p), opt.max_n, opt.threads));
    }
    if (suite == Suite::sums || suite == Suite::all)
        rep.append(sums_suite(opt));
    if (suite == Suite::all)
        rep.append(basics_suite(opt));
    return rep;
}

/// CSV rows p,composition,n,oracle_num,oracle_den,closed_num,closed_den,match
/// for every p <= p_max and proper composition of weight <= weight_max.
inline std::string run_table(unsigned p_max, int weight_max, unsigned n, unsigned threads = 1)
{
    std::vector<std::pair<unsigned, Composition>> cases;
    for (unsigned p = 0; p <= p_max; ++p)
        for (const auto& k : proper_compositions(weight_max))
            cases.emplace_back(p, k);
    auto rows = parallel_map(cases.size(), threads, [&](std::size_t i) {
        const auto& [p, k] = cases[i];
        const Rational oracle = mhs_eval(n, k.prepend(-static_cast<int>(p)));
        const Rational closed = cf_eval(reduce(p, k), n);
        return std::to_string(p) + "," + k.str(';') + "," + std::to_string(n) + "," + oracle.numerator().get_str() + ","
             + oracle.denominator().get_str() + "," + closed.numerator().get_str() + ","
             + closed.denominator().get_str() + "," + (oracle == closed ? "true" : "false") + "\n";
    });
    std::string out = "p,composition,n,oracle_num,oracle_den,closed_num,closed_den,match\n";
    for (const auto& r : rows)
        out += r;
    return out;
}

} // namespace hsum
