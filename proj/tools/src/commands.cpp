#include "commands.hpp"

#include <cstdlib>
#include <memory>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3count/admissible.hpp"
#include "k3count/arith.hpp"
#include "k3count/counting.hpp"
#include "k3count/cremona.hpp"
#include "k3count/modforms.hpp"

namespace k3count::cli {
namespace {

using nlohmann::json;

// Exact decimal rendering: plain integers stay plain, anything else is
// "p/q". No value ever passes through floating point.
std::string rational_text(const Rational& value)
{
    if (is_integer(value))
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Surface surface_from_name(const std::string& name)
{
    return name == "k3" ? Surface::K3 : Surface::RationalElliptic;
}

int env_int(const char* name, int fallback)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr)
        return fallback;
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(raw, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + ": expected an integer, got \"" + raw + "\"");
    }
    if (used != std::string(raw).size())
        throw std::invalid_argument(std::string(name) + ": expected an integer, got \"" + raw + "\"");
    return value;
}

CountingConfig config_from_env()
{
    CountingConfig config;
    config.convolution_max_budget = env_int("K3COUNT_CONVOLUTION_MAX", config.convolution_max_budget);
    config.components_max_budget = env_int("K3COUNT_COMPONENTS_MAX", config.components_max_budget);
    return config;
}

struct SeriesOptions {
    std::string surface;
    int genus = 0;
    int order = 0;
    bool as_json = false;
};

int cmd_series(const SeriesOptions& options, std::ostream& out)
{
    const Surface surface = surface_from_name(options.surface);
    const TruncatedSeries series = surface == Surface::K3
        ? k3_generating_series(options.genus, options.order)
        : re_generating_series(options.genus, options.order);
    if (options.as_json) {
        json document;
        document["surface"] = options.surface;
        document["genus"] = options.genus;
        document["order"] = options.order;
        json coefficients = json::array();
        for (int n = 0; n <= options.order; ++n)
            coefficients.push_back(rational_text(series.coeff(n)));
        document["coefficients"] = std::move(coefficients);
        out << document.dump(2) << "\n";
    } else {
        for (int n = 0; n <= options.order; ++n)
            out << n << ": " << rational_text(series.coeff(n)) << "\n";
    }
    return 0;
}

struct CountOptions {
    std::string surface;
    int genus = 0;
    int nodes = 0;
    std::string method;
    bool as_json = false;
};

int cmd_count(const CountOptions& options, std::ostream& out)
{
    const CountQuery query{surface_from_name(options.surface), options.genus, options.nodes};
    const CountingConfig config = config_from_env();
    Integer count;
    if (options.method == "closed")
        count = count_closed_form(query);
    else if (options.method == "convolution")
        count = count_convolution(query, config);
    else
        count = count_by_components(query, 256, config);
    if (options.as_json) {
        json document;
        document["surface"] = options.surface;
        document["genus"] = options.genus;
        document["nodes"] = options.nodes;
        document["method"] = options.method;
        document["count"] = count.str();
        out << document.dump(2) << "\n";
    } else {
        out << count << "\n";
    }
    return 0;
}

struct ReduceOptions {
    std::string class_text;
    int max_steps = 256;
    bool as_json = false;
};

int cmd_reduce(const ReduceOptions& options, std::ostream& out)
{
    const BlowupClass input = parse_class(options.class_text);
    const ReductionResult result = reduce_to_section_class(input, options.max_steps);
    if (options.as_json) {
        json document;
        document["input"] = input.to_string();
        json steps = json::array();
        for (const ReductionStep& step : result.steps)
            steps.push_back(json{{"action", step.action}, {"class", step.result.to_string()}});
        document["steps"] = std::move(steps);
        document["i"] = result.i;
        out << document.dump(2) << "\n";
    } else {
        out << "start: " << input.to_string() << "\n";
        for (const ReductionStep& step : result.steps)
            out << step.action << ": " << step.result.to_string() << "\n";
        out << "e9 + " << result.i << " F\n";
    }
    return 0;
}

struct AdmissibleOptions {
    int size = 1;
    bool one_only = false;
    bool as_json = false;
};

int cmd_admissible(const AdmissibleOptions& options, std::ostream& out)
{
    const std::vector<AdmissibleSequence> sequences = options.one_only
        ? enumerate_one_admissible(options.size)
        : enumerate_admissible(options.size);
    if (options.as_json) {
        json document;
        document["size"] = options.size;
        document["one_admissible"] = options.one_only;
        json list = json::array();
        for (const AdmissibleSequence& seq : sequences)
            list.push_back(seq.to_string());
        document["sequences"] = std::move(list);
        document["count"] = sequences.size();
        out << document.dump(2) << "\n";
    } else {
        for (const AdmissibleSequence& seq : sequences)
            out << seq.to_string() << "\n";
        out << "count: " << sequences.size() << "\n";
    }
    return 0;
}

struct SelftestOptions {
    bool quick = false;
    bool inject_fault = false;
};

int cmd_selftest(const SelftestOptions& options, std::ostream& out)
{
    CountingConfig config = config_from_env();
    const int g_max = options.quick ? 2 : 3;
    const int n_max = options.quick ? 3 : 6;
    const int components_budget = options.quick ? 4 : 6;
    config.convolution_max_budget = std::max(config.convolution_max_budget, g_max + n_max);
    config.components_max_budget = std::max(config.components_max_budget, components_budget);
    if (options.inject_fault)
        config.k3_slots = 23;

    bool all_passed = true;
    const auto report = [&](const std::string& name, bool passed) {
        out << (passed ? "PASS" : "FAIL") << " " << name << "\n";
        all_passed = all_passed && passed;
    };

    for (Surface surface : {Surface::K3, Surface::RationalElliptic}) {
        const CrossValidationReport grid = cross_validate(surface, g_max, n_max, config);
        report("cross-validation " + to_string(surface) + " grid g<=" + std::to_string(g_max)
               + " n<=" + std::to_string(n_max), grid.all_equal);
        if (!grid.all_equal)
            out << grid.to_string();
    }

    {
        const int a_max = options.quick ? 8 : 12;
        bool passed = true;
        for (int a = 1; a <= a_max; ++a)
            passed = passed
                && Integer(enumerate_one_admissible(a).size()) == partition(a);
        report("1-admissible counts equal partition numbers, a <= " + std::to_string(a_max), passed);
    }

    {
        const int s_max = options.quick ? 6 : 8;
        bool passed = true;
        for (int a = 1; a <= s_max && passed; ++a) {
            for (const AdmissibleSequence& seq : enumerate_admissible(a)) {
                const InvariantValue value = evaluate_invariant(class_from_sequence(seq), 64);
                if (value == InvariantValue::Undetermined
                    || (value == InvariantValue::One) != is_one_admissible(seq)) {
                    passed = false;
                    break;
                }
            }
        }
        report("invariant decides sequence membership, |s| <= " + std::to_string(s_max), passed);
    }

    {
        const long long b_max = options.quick ? 50 : 200;
        bool passed = true;
        for (long long b = 1; b <= b_max; ++b)
            passed = passed && sublattice_count(b) == sigma(b);
        report("sublattice counts equal sigma, index <= " + std::to_string(b_max), passed);
    }

    {
        const int rounds = options.quick ? 100 : 1000;
        std::mt19937 rng(0x5eed5u);
        bool passed = true;
        for (int round = 0; round < rounds && passed; ++round) {
            const long long i = static_cast<long long>(rng() % 10);
            const BlowupClass scrambled = scramble_class(section_class(i), static_cast<int>(rng() % 11), rng);
            passed = reduce_to_section_class(scrambled).i == i;
        }
        report("scrambled section classes reduce back, " + std::to_string(rounds) + " rounds", passed);
    }

    {
        const int order = options.quick ? 10 : 20;
        const bool passed = re_generating_series(0, order).pow(2) == k3_generating_series(0, order);
        report("re series squares to k3 series through order " + std::to_string(order), passed);
    }

    {
        const int g_top = options.quick ? 3 : 5;
        const int order = options.quick ? 15 : 30;
        bool passed = true;
        for (int g = 0; g <= g_top && passed; ++g) {
            const TruncatedSeries k3 = k3_generating_series(g, order);
            const TruncatedSeries re = re_generating_series(g, order);
            for (int n = 0; n <= order; ++n)
                passed = passed && is_integer(k3.coeff(n)) && is_integer(re.coeff(n));
        }
        report("integral coefficients, g <= " + std::to_string(g_top) + " order <= " + std::to_string(order),
               passed);
    }

    out << (all_passed ? "selftest: all checks passed" : "selftest: FAILURES") << "\n";
    return all_passed ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact curve counts on elliptic surfaces: generating series, component sums, Cremona reduction"};
    app.require_subcommand(1);
    int status = 0;

    auto series_options = std::make_shared<SeriesOptions>();
    CLI::App* series = app.add_subcommand("series", "Print generating-series coefficients c_0..c_order");
    series->add_option("--surface", series_options->surface, "Surface: k3 or re")
        ->required()
        ->check(CLI::IsMember({"k3", "re"}));
    series->add_option("--genus", series_options->genus, "Genus, >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    series->add_option("--order", series_options->order, "Highest power of q")
        ->required()
        ->check(CLI::NonNegativeNumber);
    series->add_flag("--json", series_options->as_json, "Emit one JSON document");
    series->callback([&, series_options] { status = cmd_series(*series_options, out); });

    auto count_options = std::make_shared<CountOptions>();
    CLI::App* count = app.add_subcommand("count", "Count curves of the given genus and node number");
    count->add_option("--surface", count_options->surface, "Surface: k3 or re")
        ->required()
        ->check(CLI::IsMember({"k3", "re"}));
    count->add_option("--genus", count_options->genus, "Genus, >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--nodes", count_options->nodes, "Node count, >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--method", count_options->method,
                      "closed, convolution, or components")
        ->required()
        ->check(CLI::IsMember({"closed", "convolution", "components"}));
    count->add_flag("--json", count_options->as_json, "Emit one JSON document");
    count->callback([&, count_options] { status = cmd_count(*count_options, out); });

    auto reduce_options = std::make_shared<ReduceOptions>();
    CLI::App* reduce = app.add_subcommand("reduce", "Reduce a nine-alpha class to e9 + i F");
    reduce->add_option("class", reduce_options->class_text, "Class as \"d;a1,...,a9\"")->required();
    reduce->add_option("--max-steps", reduce_options->max_steps, "Cremona step limit")
        ->check(CLI::PositiveNumber);
    reduce->add_flag("--json", reduce_options->as_json, "Emit one JSON document");
    reduce->callback([&, reduce_options] { status = cmd_reduce(*reduce_options, out); });

    auto admissible_options = std::make_shared<AdmissibleOptions>();
    CLI::App* admissible = app.add_subcommand("admissible", "List admissible sequences of a given size");
    admissible->add_option("--size", admissible_options->size, "Magnitude |s|, >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    admissible->add_flag("--one-admissible", admissible_options->one_only,
                         "Keep only 1-admissible sequences");
    admissible->add_flag("--json", admissible_options->as_json, "Emit one JSON document");
    admissible->callback([&, admissible_options] { status = cmd_admissible(*admissible_options, out); });

    auto selftest_options = std::make_shared<SelftestOptions>();
    CLI::App* selftest = app.add_subcommand("selftest", "Cross-validate the three counting methods");
    selftest->add_flag("--quick", selftest_options->quick, "Smaller grids, same coverage shape");
    selftest->add_flag("--inject-fault", selftest_options->inject_fault)->group("");
    selftest->callback([&, selftest_options] { status = cmd_selftest(*selftest_options, out); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("k3count");
    for (const std::string& arg : args)
        argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

} // namespace k3count::cli
