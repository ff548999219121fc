// qhurwitz: command-line front end for the qhurwitz library.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input.
// Standard output carries only the JSON/CSV document; diagnostics go to
// standard error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qhurwitz.hpp"
#include "qhurwitz/io.hpp"

namespace {

using namespace qhurwitz;

enum class Output { json, csv };

struct Common {
    std::string output = "json";
    std::string cache_dir;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Output output_kind(const Common& c) { return c.output == "csv" ? Output::csv : Output::json; }

Partition partition_of(const std::string& text, int n, const char* flag)
{
    Partition p;
    try {
        p = parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (p.weight() != n)
        throw UsageError(std::string(flag) + " " + text + " is not a partition of n=" + std::to_string(n));
    return p;
}

BigRational q_value(const std::string& text)
{
    BigRational q;
    try {
        q = parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--q: ") + e.what());
    }
    if (q <= 0 || q >= 1)
        throw UsageError("--q must lie strictly between 0 and 1, got " + text);
    return q;
}

int resolve_order(int requested, int d)
{
    if (requested == 0)
        return default_q_order(d);
    if (requested < 1)
        throw UsageError("--q-order must be positive");
    return requested;
}

Json header(const char* command)
{
    return Json{{"schema_version", kJsonSchemaVersion}, {"command", command}};
}

void write_series_csv(std::ostream& out, const QSeries& s)
{
    out << "power,numerator,denominator\n";
    for (int i = 0; i < s.order(); ++i) {
        const auto& c = s.coeffs()[static_cast<std::size_t>(i)];
        out << i << ',' << boost::multiprecision::numerator(c) << ',' << boost::multiprecision::denominator(c) << '\n';
    }
}

// ---------------------------------------------------------------- commands

struct HurwitzArgs {
    int n = 0, d = 0, q_order = 0;
    std::string mu, nu;
};

int cmd_hurwitz(const HurwitzArgs& a, const Common& c, std::ostream& out)
{
    if (a.n < 1)
        throw UsageError("--n must be positive");
    if (a.d < 1)
        throw UsageError("--d must be positive");
    auto mu = partition_of(a.mu, a.n, "--mu");
    auto nu = partition_of(a.nu, a.n, "--nu");
    auto result = quantum_hurwitz(a.d, mu, nu, resolve_order(a.q_order, a.d));
    if (result.n_small_regime)
        std::cerr << "warning: n < 2d (n-small regime)\n";
    if (output_kind(c) == Output::csv) {
        write_series_csv(out, result.series);
        return 0;
    }
    Json doc = header("hurwitz");
    doc.update(to_json(result));
    doc["euler_characteristic"] = euler_characteristic(a.n, a.d);
    if (result.n_small_regime)
        doc["warning"] = "n-small regime";
    out << doc.dump(2) << '\n';
    return 0;
}

struct WeightsArgs {
    int d = 0, q_order = 0;
    std::string lambda, q;
};

int cmd_weights(WeightsArgs a, const Common& c, std::ostream& out)
{
    std::vector<Partition> profiles;
    if (!a.lambda.empty()) {
        Partition lambda;
        try {
            lambda = parse_partition(a.lambda);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--lambda: ") + e.what());
        }
        // --d is optional here and only has to agree with |lambda|.
        if (a.d == 0)
            a.d = lambda.weight();
        profiles.push_back(partition_of(a.lambda, a.d, "--lambda"));
    }
    if (a.d < 1)
        throw UsageError("--d must be positive");
    const int order = resolve_order(a.q_order, a.d);
    if (profiles.empty())
        profiles = enumerate_partitions(a.d);
    std::optional<BigRational> q;
    if (!a.q.empty())
        q = q_value(a.q);

    if (output_kind(c) == Output::csv) {
        out << "lambda,power,numerator,denominator\n";
        for (const auto& lambda : profiles) {
            auto w = weight_w(lambda, order);
            for (int i = 0; i < w.order(); ++i) {
                const auto& coef = w.coeffs()[static_cast<std::size_t>(i)];
                out << '"' << to_string(lambda) << "\"," << i << ',' << boost::multiprecision::numerator(coef) << ','
                    << boost::multiprecision::denominator(coef) << '\n';
            }
        }
        return 0;
    }
    Json doc = header("weights");
    doc["d"] = a.d;
    if (q)
        doc["q"] = to_string(*q);
    Json list = Json::array();
    for (const auto& lambda : profiles) {
        auto lead = weight_w_leading(lambda);
        Json entry{{"lambda", to_string(lambda)},
                   {"aut", aut_order(lambda).str()},
                   {"p_lambda", partition_count_product(lambda)},
                   {"series", to_json(weight_w(lambda, order))},
                   {"leading", Json{{"exponent", lead.exponent}, {"coefficient", to_string(lead.coefficient)}}}};
        if (q)
            entry["value"] = to_string(weight_w_value(lambda, *q));
        list.push_back(std::move(entry));
    }
    doc["weights"] = std::move(list);
    out << doc.dump(2) << '\n';
    return 0;
}

struct ZfunArgs {
    int d = 0, q_order = 0;
};

int cmd_zfun(const ZfunArgs& a, const Common& c, std::ostream& out)
{
    if (a.d < 1)
        throw UsageError("--d must be positive");
    const int order = resolve_order(a.q_order, a.d);
    auto z = partition_function_Z(a.d, order);
    std::optional<ExpansionCheck> check;
    if (a.d >= 2 && order >= a.d + 2)
        check = check_zero_temp_expansion(a.d, order);

    if (output_kind(c) == Output::csv) {
        write_series_csv(out, z);
        return check && !check->pass() ? 1 : 0;
    }
    Json doc = header("zfun");
    doc["d"] = a.d;
    doc["series"] = to_json(z);
    doc["text"] = to_string(z);
    if (check) {
        doc["check"] = Json{{"expected", Json::array({check->expected_leading, check->expected_subleading})},
                            {"computed", Json::array({to_string(check->computed_leading),
                                                      to_string(check->computed_subleading)})},
                            {"verdict", check->pass() ? "pass" : "fail"}};
    } else {
        doc["check"] = Json{{"verdict", "not applicable"}};
    }
    out << doc.dump(2) << '\n';
    return check && !check->pass() ? 1 : 0;
}

struct MeasureArgs {
    int d = 0, n = 0;
    std::string q;
};

int cmd_measure(const MeasureArgs& a, const Common& c, std::ostream& out)
{
    if (a.d < 1)
        throw UsageError("--d must be positive");
    auto q = q_value(a.q);
    auto report = pushforward_measure(a.d, q);

    std::vector<std::pair<BranchConfig, BigRational>> theta;
    if (a.n != 0) {
        if (a.n <= a.d)
            throw UsageError("--n must exceed --d (colength of a partition of n is at most n-1)");
        theta = theta_distribution(a.n, a.d, q);
        if (a.n < 2 * a.d)
            std::cerr << "warning: n < 2d (n-small regime)\n";
    }

    if (output_kind(c) == Output::csv) {
        out << "lambda,numerator,denominator\n";
        for (const auto& [lambda, prob] : report.support)
            out << '"' << to_string(lambda) << "\"," << boost::multiprecision::numerator(prob) << ','
                << boost::multiprecision::denominator(prob) << '\n';
        return 0;
    }
    Json doc = header("measure");
    doc.update(to_json(report));
    doc["total"] = to_string(report.total());
    if (a.n != 0) {
        std::map<int, Json> by_k;
        std::map<int, BigRational> mass_k;
        for (const auto& [config, prob] : theta) {
            by_k[config.size()].push_back(Json{{"config", to_json(config)}, {"prob", to_string(prob)}});
            mass_k[config.size()] += prob;
        }
        Json groups = Json::array();
        for (auto& [k, entries] : by_k)
            groups.push_back(Json{{"k", k}, {"mass", to_string(mass_k[k])}, {"configs", std::move(entries)}});
        doc["theta"] = Json{{"n", a.n}, {"groups", std::move(groups)}};
        if (a.n < 2 * a.d)
            doc["warning"] = "n-small regime";
    }
    out << doc.dump(2) << '\n';
    return 0;
}

struct TauArgs {
    int n_max = 3, d_max = 3;
};

int cmd_tau_check(const TauArgs& a, const Common& c, std::ostream& out)
{
    if (a.n_max < 1 || a.n_max > kTauCheckMaxDegree)
        throw UsageError("--n-max must be in 1.." + std::to_string(kTauCheckMaxDegree));
    if (a.d_max < 0 || a.d_max > kTauCheckMaxBeta)
        throw UsageError("--d-max must be in 0.." + std::to_string(kTauCheckMaxBeta));
    auto report = verify_generating_function(a.n_max, a.d_max);
    const int code = report.all_pass() ? 0 : 1;

    if (output_kind(c) == Output::csv) {
        out << "n,d,mu,nu,match,power,numerator,denominator\n";
        for (const auto& e : report.entries)
            for (int i = 0; i < e.tau.order(); ++i) {
                const auto& coef = e.tau.coeffs()[static_cast<std::size_t>(i)];
                out << e.n << ',' << e.d << ",\"" << to_string(e.mu) << "\",\"" << to_string(e.nu) << "\","
                    << (e.match() ? "true" : "false") << ',' << i << ',' << boost::multiprecision::numerator(coef)
                    << ',' << boost::multiprecision::denominator(coef) << '\n';
            }
        return code;
    }
    Json doc = header("tau-check");
    doc["n_max"] = a.n_max;
    doc["d_max"] = a.d_max;
    doc["pairs_checked"] = report.pairs_checked();
    doc["pairs_zero"] = report.pairs_zero();
    doc["mismatches"] = report.mismatches();
    doc["verdict"] = report.all_pass() ? "pass" : "fail";
    Json entries = Json::array();
    for (const auto& e : report.entries)
        entries.push_back(to_json(e));
    doc["entries"] = std::move(entries);
    out << doc.dump(2) << '\n';
    return code;
}

struct AsymptArgs {
    int n = 0, d = 0;
    std::string mu, nu;
};

int cmd_asympt(const AsymptArgs& a, const Common& c, std::ostream& out)
{
    if (a.n < 1)
        throw UsageError("--n must be positive");
    if (a.d < 2)
        throw UsageError("asympt needs --d >= 2");
    auto mu = partition_of(a.mu, a.n, "--mu");
    auto nu = partition_of(a.nu, a.n, "--nu");
    auto check = expansion_leading_terms(a.d, mu, nu);
    if (check.n_small_regime)
        std::cerr << "warning: n < 2d (n-small regime)\n";
    const int code = check.pass() ? 0 : 1;
    const int chi = euler_characteristic(a.n, a.d);

    if (output_kind(c) == Output::csv) {
        out << "quantity,value\n"
            << "A," << to_string(check.belyi_sum) << '\n'
            << "B," << to_string(check.pair_sum) << '\n'
            << "coeff_q^d," << to_string(check.series_leading) << '\n'
            << "coeff_q^(d+1)," << to_string(check.series_subleading) << '\n';
        return code;
    }
    Json doc = header("asympt");
    doc["n"] = a.n;
    doc["d"] = a.d;
    doc["mu"] = to_string(mu);
    doc["nu"] = to_string(nu);
    doc["A"] = to_string(check.belyi_sum);
    doc["B"] = to_string(check.pair_sum);
    doc["series_coeffs"] = Json{{"q^d", to_string(check.series_leading)},
                                {"q^(d+1)", to_string(check.series_subleading)}};
    doc["verdict"] = check.pass() ? "pass" : "fail";
    doc["euler_characteristic"] = chi;
    if (check.n_small_regime)
        doc["warning"] = "n-small regime";
    out << doc.dump(2) << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum weighted Hurwitz numbers, partition functions and tau-function checks"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", common.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--char-cache-dir", common.cache_dir,
                        "Directory for cached character tables (default: $HURWITZ_CACHE_DIR)");
    };

    HurwitzArgs hurwitz_args;
    auto* hurwitz = app.add_subcommand("hurwitz", "Quantum weighted double Hurwitz number H^d(mu, nu) as a q-series");
    hurwitz->add_option("--n", hurwitz_args.n, "Degree of the covering")->required();
    hurwitz->add_option("--d", hurwitz_args.d, "Total colength of the free branch points")->required();
    hurwitz->add_option("--mu", hurwitz_args.mu, "Partition of n, e.g. 2,1")->required();
    hurwitz->add_option("--nu", hurwitz_args.nu, "Partition of n, e.g. 2,1")->required();
    hurwitz->add_option("--q-order", hurwitz_args.q_order, "Series truncation order (default d+4)");
    add_common(hurwitz);

    WeightsArgs weights_args;
    auto* weights = app.add_subcommand("weights", "Quantum weights w(lambda) for partitions of d");
    weights->add_option("--d", weights_args.d, "Total colength (required unless --lambda is given)");
    weights->add_option("--lambda", weights_args.lambda, "Restrict to one colength profile");
    weights->add_option("--q", weights_args.q, "Also evaluate exactly at this rational q");
    weights->add_option("--q-order", weights_args.q_order, "Series truncation order (default d+4)");
    add_common(weights);

    ZfunArgs zfun_args;
    auto* zfun = app.add_subcommand("zfun", "Partition function Z_d and its zero-temperature expansion check");
    zfun->add_option("--d", zfun_args.d, "Total colength")->required();
    zfun->add_option("--q-order", zfun_args.q_order, "Series truncation order (default d+4)");
    add_common(zfun);

    MeasureArgs measure_args;
    auto* measure = app.add_subcommand("measure", "Probability measures at an exact rational q");
    measure->add_option("--d", measure_args.d, "Total colength")->required();
    measure->add_option("--q", measure_args.q, "Rational q in (0,1), e.g. 1/10")->required();
    measure->add_option("--n", measure_args.n, "Also emit the measure on branch configurations of S_n");
    add_common(measure);

    TauArgs tau_args;
    auto* tau = app.add_subcommand("tau-check", "Compare tau-function coefficients with quantum Hurwitz numbers");
    tau->add_option("--n-max", tau_args.n_max, "Largest degree n (at most 6)");
    tau->add_option("--d-max", tau_args.d_max, "Largest beta degree d (at most 5)");
    add_common(tau);

    AsymptArgs asympt_args;
    auto* asympt = app.add_subcommand("asympt", "Two-term zero-temperature expansion of H^d(mu, nu)");
    asympt->add_option("--n", asympt_args.n, "Degree of the covering")->required();
    asympt->add_option("--d", asympt_args.d, "Total colength (at least 2)")->required();
    asympt->add_option("--mu", asympt_args.mu, "Partition of n")->required();
    asympt->add_option("--nu", asympt_args.nu, "Partition of n")->required();
    add_common(asympt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (!common.cache_dir.empty())
            CharacterStore::instance().set_cache_dir(std::filesystem::path(common.cache_dir));
        auto& out = std::cout;
        if (*hurwitz)
            return cmd_hurwitz(hurwitz_args, common, out);
        if (*weights)
            return cmd_weights(weights_args, common, out);
        if (*zfun)
            return cmd_zfun(zfun_args, common, out);
        if (*measure)
            return cmd_measure(measure_args, common, out);
        if (*tau)
            return cmd_tau_check(tau_args, common, out);
        if (*asympt)
            return cmd_asympt(asympt_args, common, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
