#pragma once

#include "hsum/hsum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hsum::cli {

enum class Subcommand { reduce, sum, eval, check, bernoulli, table, verify };
enum class Method { recurrence, theorem, both };

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// A fully parsed command line. Fields not used by the subcommand keep their
/// defaults, so equality is meaningful across round trips.
struct Query
{
    Subcommand subcommand = Subcommand::verify;
    std::string format = "text";
    unsigned threads = 1;

    // reduce
    unsigned p = 0;
    std::string comp;
    std::string method = "recurrence";

    // sum, check
    std::string poly;
    unsigned power = 1;
    bool shifted = false;
    std::string factors;
    bool structured = false;

    // eval, table
    unsigned n = 0;

    // bernoulli
    unsigned max = 0;
    std::string convention = "plus";

    // table
    unsigned p_max = 0;
    int weight_max = 0;

    // verify
    std::string suite = "all";
    unsigned max_n = 30;

    friend bool operator==(const Query&, const Query&) = default;
};

inline std::string subcommand_name(Subcommand s)
{
    switch (s) {
    case Subcommand::reduce: return "reduce";
    case Subcommand::sum: return "sum";
    case Subcommand::eval: return "eval";
    case Subcommand::check: return "check";
    case Subcommand::bernoulli: return "bernoulli";
    case Subcommand::table: return "table";
    case Subcommand::verify: return "verify";
    }
    return {};
}

inline std::string quote(const std::string& s) { return "\"" + s + "\""; }

/// Canonical flag string; parse_query(split of it) reproduces the query.
inline std::vector<std::string> canonical_args(const Query& q)
{
    std::vector<std::string> a{subcommand_name(q.subcommand)};
    auto add = [&a](std::string flag, std::string value) {
        a.push_back(std::move(flag));
        a.push_back(std::move(value));
    };
    switch (q.subcommand) {
    case Subcommand::reduce:
        add("-p", std::to_string(q.p));
        add("--comp", q.comp);
        add("--method", q.method);
        break;
    case Subcommand::sum:
        add("--poly", q.poly);
        if (!q.factors.empty())
            add("--factors", q.factors);
        else
            add("--power", std::to_string(q.power));
        if (q.shifted)
            a.push_back("--shifted");
        if (q.structured)
            a.push_back("--structured");
        break;
    case Subcommand::eval:
        add("--n", std::to_string(q.n));
        add("--comp", q.comp);
        break;
    case Subcommand::check:
        add("--poly", q.poly);
        add("--power", std::to_string(q.power));
        break;
    case Subcommand::bernoulli:
        add("--max", std::to_string(q.max));
        add("--convention", q.convention);
        break;
    case Subcommand::table:
        add("--p-max", std::to_string(q.p_max));
        add("--weight-max", std::to_string(q.weight_max));
        add("--n", std::to_string(q.n));
        break;
    case Subcommand::verify:
        add("--suite", q.suite);
        add("--max-n", std::to_string(q.max_n));
        break;
    }
    add("--format", q.format);
    add("--threads", std::to_string(q.threads));
    return a;
}

inline std::string canonical_flags(const Query& q)
{
    std::string out;
    for (const auto& a : canonical_args(q)) {
        if (!out.empty())
            out += ' ';
        out += a.find_first_of(" ,^*+") == std::string::npos && !a.empty() ? a : quote(a);
    }
    return out;
}

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Holds the CLI11 app and the query it fills.
class Parser
{
public:
    Parser()
    {
        app_.require_subcommand(1);
        app_.fallthrough();
        app_.add_option("--format", q_.format, "text | latex | json")->check(CLI::IsMember({"text", "latex", "json"}));
        app_.add_option("--threads", q_.threads, "worker threads for verify and table")->check(CLI::PositiveNumber);

        auto* reduce = app_.add_subcommand("reduce", "reduce H_n(-p, k) to a closed form");
        reduce->add_option("-p", q_.p, "nonnegative power p")->required();
        reduce->add_option("--comp", q_.comp, "proper composition k1,k2,...")->required();
        reduce->add_option("--method", q_.method)->check(CLI::IsMember({"recurrence", "theorem", "both"}));

        auto* sum = app_.add_subcommand("sum", "closed form of sum_{m=1}^n F(m) H_{m-1}^t and relatives");
        sum->add_option("--poly", q_.poly, "F(m), e.g. \"3*m^2+m\"")->required();
        auto* power = sum->add_option("--power", q_.power, "t");
        auto* factors = sum->add_option("--factors", q_.factors, "product of H_{m-1}(order)^mult, e.g. \"1^1,2^1\"");
        auto* shifted = sum->add_flag("--shifted", q_.shifted, "sum_{m=0}^n F(m) H_m^t instead");
        sum->add_flag("--structured", q_.structured, "also print the explicit presentation (t = 2, 3, 4)");
        factors->excludes(power)->excludes(shifted);

        auto* eval = app_.add_subcommand("eval", "exact value of H_n(k)");
        eval->add_option("--n", q_.n)->required();
        eval->add_option("--comp", q_.comp, "k1,k2,...; only k1 may be <= 0")->required();

        auto* check = app_.add_subcommand("check", "structure report for sum F(m) H_{m-1}^t");
        check->add_option("--poly", q_.poly)->required();
        check->add_option("--power", q_.power)->required();

        auto* bern = app_.add_subcommand("bernoulli", "Bernoulli numbers as CSV");
        bern->add_option("--max", q_.max)->required();
        bern->add_option("--convention", q_.convention)->check(CLI::IsMember({"plus", "minus"}));

        auto* table = app_.add_subcommand("table", "oracle vs closed form CSV");
        table->add_option("--p-max", q_.p_max)->required();
        table->add_option("--weight-max", q_.weight_max)->required()->check(CLI::NonNegativeNumber);
        table->add_option("--n", q_.n)->required();

        auto* verify = app_.add_subcommand("verify", "run invariant suites against the oracle");
        verify->add_option("--suite", q_.suite)->check(CLI::IsMember({"reduce", "sums", "all"}));
        verify->add_option("--max-n", q_.max_n);

        subs_ = {{reduce, Subcommand::reduce}, {sum, Subcommand::sum},     {eval, Subcommand::eval},
                 {check, Subcommand::check},   {bern, Subcommand::bernoulli}, {table, Subcommand::table},
                 {verify, Subcommand::verify}};
    }

    CLI::App& app() { return app_; }

    Query finish() const
    {
        Query q = q_;
        for (const auto& [app, s] : subs_)
            if (app->parsed())
                q.subcommand = s;
        return q;
    }

private:
    CLI::App app_{"Exact reduction of extended multiple harmonic sums", "hsum"};
    Query q_;
    std::vector<std::pair<CLI::App*, Subcommand>> subs_;
};

/// Parses arguments (without the program name). Throws CLI::ParseError.
inline Query parse_query(std::vector<std::string> args)
{
    Parser parser;
    std::reverse(args.begin(), args.end()); // CLI11 consumes the vector from the back
    parser.app().parse(args);
    return parser.finish();
}

inline std::vector<Factor> parse_factors(const std::string& text)
{
    std::vector<Factor> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        const auto caret = item.find('^');
        try {
            if (caret == std::string::npos)
                out.push_back({std::stoi(item), 1});
            else
                out.push_back({std::stoi(item.substr(0, caret)), static_cast<unsigned>(std::stoul(item.substr(caret + 1)))});
        } catch (const std::logic_error&) {
            throw UsageError("bad factor '" + item + "'");
        }
        if (out.back().order < 1)
            throw UsageError("factor order must be positive");
    }
    if (out.empty())
        throw UsageError("empty factor list");
    return out;
}

inline nlohmann::json structure_report_json(const StructureReport& rep)
{
    nlohmann::json off = nlohmann::json::array();
    for (const auto& [k, p] : rep.offending_terms)
        off.push_back(cf_to_json(ClosedForm::single(k, p))["terms"][0]);
    return {{"passes", rep.passes}, {"offending_terms", std::move(off)}, {"remainder", cf_to_json(rep.remainder)}};
}

/// Executes a query; returns the process exit code.
inline int run(const Query& q, std::ostream& out, std::ostream& err)
{
    const Format format = parse_format(q.format);
    switch (q.subcommand) {
    case Subcommand::reduce: {
        const Composition k = Composition::parse(q.comp);
        if (!k.is_proper())
            throw UsageError("reduce needs a proper composition (all entries >= 1)");
        if (q.method == "recurrence") {
            out << cf_render(reduce(q.p, k), format) << "\n";
            return exit_ok;
        }
        if (k.empty())
            throw UsageError("the theorem method needs a nonempty composition");
        const ClosedForm via_theorem = reduce_via_theorem(q.p, k);
        if (q.method == "theorem") {
            out << cf_render(via_theorem, format) << "\n";
            return exit_ok;
        }
        const ClosedForm via_recurrence = reduce(q.p, k);
        out << cf_render(via_recurrence, format) << "\n";
        if (via_recurrence == via_theorem)
            return exit_ok;
        const bool values = cf_eval_prefix(via_recurrence, 50) == cf_eval_prefix(via_theorem, 50);
        err << "structural mismatch between recurrence and closed formula for p=" << q.p << " k=(" << k.str() << ")\n"
            << "  recurrence: " << cf_render(via_recurrence, Format::text) << "\n"
            << "  theorem:    " << cf_render(via_theorem, Format::text) << "\n"
            << "  values for n <= 50 " << (values ? "agree" : "differ") << "\n";
        return exit_mismatch;
    }
    case Subcommand::sum: {
        const Polynomial f = parse_poly(q.poly);
        if (!q.factors.empty()) {
            const auto factors = parse_factors(q.factors);
            out << cf_render(sum_product(f, factors), format) << "\n";
            const bool mixed = factors.size() == 2 && factors[0].order == 1 && factors[0].multiplicity == 1
                            && factors[1].order == 2 && factors[1].multiplicity == 1;
            if (q.structured && mixed)
                out << structured_to_string(spiess_form(SpiessKind::mixed, f)) << "\n";
            return exit_ok;
        }
        out << cf_render(q.shifted ? sum_power_shifted(f, q.power) : sum_power(f, q.power), format) << "\n";
        if (q.structured && !q.shifted && q.power >= 2 && q.power <= 4) {
            const SpiessKind kind = q.power == 2 ? SpiessKind::hn2 : q.power == 3 ? SpiessKind::hn3 : SpiessKind::hn4;
            out << structured_to_string(spiess_form(kind, f)) << "\n";
        }
        return exit_ok;
    }
    case Subcommand::eval: {
        const Composition k = Composition::parse(q.comp);
        if (!k.is_extended())
            throw UsageError("not a supported extended shape: only the first entry may be <= 0");
        out << mhs_eval(q.n, k).str() << "\n";
        return exit_ok;
    }
    case Subcommand::check: {
        const auto rep = structure_check(parse_poly(q.poly), q.power);
        out << structure_report_json(rep).dump(2) << "\n";
        return rep.passes ? exit_ok : exit_mismatch;
    }
    case Subcommand::bernoulli: {
        const Convention conv = q.convention == "minus" ? Convention::minus : Convention::plus;
        out << "index,numerator,denominator\n";
        for (unsigned i = 0; i <= q.max; ++i) {
            const Rational b = bernoulli(i, conv);
            out << i << "," << b.numerator().get_str() << "," << b.denominator().get_str() << "\n";
        }
        return exit_ok;
    }
    case Subcommand::table: {
        const std::string csv = run_table(q.p_max, q.weight_max, q.n, q.threads);
        out << csv;
        return csv.find(",false\n") == std::string::npos ? exit_ok : exit_mismatch;
    }
    case Subcommand::verify: {
        const Report rep = run_verify(parse_suite(q.suite), VerifyOptions{q.max_n, q.threads});
        out << rep.str();
        return rep.all_passed() ? exit_ok : exit_mismatch;
    }
    }
    return exit_usage;
}

/// Full entry point: parse, run, map errors to exit codes.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    Parser parser;
    try {
        parser.app().parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << parser.app().help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        return run(parser.finish(), out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace hsum::cli
