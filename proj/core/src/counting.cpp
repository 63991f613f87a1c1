#include "k3count/counting.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "k3count/admissible.hpp"
#include "k3count/arith.hpp"
#include "k3count/cremona.hpp"
#include "k3count/modforms.hpp"

namespace k3count {

std::string to_string(Surface surface)
{
    return surface == Surface::K3 ? "k3" : "re";
}

int fiber_slots(Surface surface)
{
    return surface == Surface::K3 ? 24 : 12;
}

int CountingConfig::slots(Surface surface) const
{
    return surface == Surface::K3 ? k3_slots : re_slots;
}

CountingConfig CountingConfig::with_budgets(int convolution, int components)
{
    CountingConfig config;
    config.convolution_max_budget = convolution;
    config.components_max_budget = components;
    return config;
}

namespace {

void validate(const CountQuery& query)
{
    if (query.genus < 0 || query.nodes < 0)
        throw std::invalid_argument("count: genus and nodes must be non-negative");
}

// Number of ways to place a multiset of distinct-valued groups into
// `slots` labeled slots: slots!/(slots-k)! / prod(multiplicity!) for
// k = sum of multiplicities.
Integer placement_count(int slots, const std::vector<int>& multiplicities)
{
    int k = 0;
    for (int m : multiplicities)
        k += m;
    if (k > slots)
        return 0;
    Integer ways = 1;
    for (int t = 0; t < k; ++t)
        ways *= slots - t;
    for (int m : multiplicities)
        for (int t = 2; t <= m; ++t)
            ways /= t;
    return ways;
}

// Sum over multisets of positive a-values totalling `total`, of
// prod a_factor(value)^multiplicity times the placement count. Recurses
// over distinct values in decreasing order.
Integer sum_over_a(int total, int slots, int max_value,
                   std::vector<int>& multiplicities, const Integer& factor_product,
                   const std::function<Integer(int)>& a_factor)
{
    if (total == 0)
        return factor_product * placement_count(slots, multiplicities);
    Integer sum = 0;
    for (int value = std::min(total, max_value); value >= 1; --value) {
        const Integer f = a_factor(value);
        Integer power = 1;
        for (int mult = 1; mult * value <= total; ++mult) {
            power *= f;
            multiplicities.push_back(mult);
            sum += sum_over_a(total - mult * value, slots, value - 1,
                              multiplicities, factor_product * power, a_factor);
            multiplicities.pop_back();
        }
    }
    return sum;
}

// Sum over ordered tuples (b_1..b_parts), all >= 1, totalling `total`, of
// prod b_factor(b_i).
Integer sum_over_b(int total, int parts, const std::function<Integer(long long)>& b_factor)
{
    if (parts == 0)
        return total == 0 ? 1 : 0;
    if (total < parts)
        return 0;
    Integer sum = 0;
    for (int first = 1; first <= total - (parts - 1); ++first)
        sum += b_factor(first) * sum_over_b(total - first, parts - 1, b_factor);
    return sum;
}

Integer sum_over_component_data(int budget, int slots, int genus,
                                const std::function<Integer(int)>& a_factor,
                                const std::function<Integer(long long)>& b_factor)
{
    Integer total = 0;
    for (int b_sum = genus; b_sum <= budget; ++b_sum) {
        const Integer b_part = sum_over_b(b_sum, genus, b_factor);
        if (b_part == 0)
            continue;
        std::vector<int> multiplicities;
        total += b_part * sum_over_a(budget - b_sum, slots, budget - b_sum,
                                     multiplicities, 1, a_factor);
    }
    return total;
}

} // namespace

Integer count_closed_form(const CountQuery& query)
{
    validate(query);
    const TruncatedSeries series = query.surface == Surface::K3
        ? k3_generating_series(query.genus, query.nodes)
        : re_generating_series(query.genus, query.nodes);
    const Rational& coefficient = series.coeff(query.nodes);
    if (!is_integer(coefficient))
        throw std::logic_error("count_closed_form: non-integer coefficient");
    return numerator(coefficient);
}

Integer count_convolution(const CountQuery& query, const CountingConfig& config)
{
    validate(query);
    const int budget = query.nodes + query.genus;
    if (budget > config.convolution_max_budget) {
        std::ostringstream message;
        message << "count_convolution: nodes + genus = " << budget
                << " exceeds the guard " << config.convolution_max_budget
                << "; use the closed form or raise the guard";
        throw std::runtime_error(message.str());
    }
    return sum_over_component_data(
        budget, config.slots(query.surface), query.genus,
        [](int a) { return partition(a); },
        [](long long b) { return Integer(b) * sigma(b); });
}

Integer count_by_components(const CountQuery& query, int max_steps, const CountingConfig& config)
{
    validate(query);
    const int budget = query.nodes + query.genus;
    if (budget > config.components_max_budget) {
        std::ostringstream message;
        message << "count_by_components: nodes + genus = " << budget
                << " exceeds the guard " << config.components_max_budget
                << "; use the closed form or raise the guard";
        throw std::runtime_error(message.str());
    }
    // One-counts per magnitude, from the rewrite engine alone.
    std::vector<Integer> one_counts(static_cast<std::size_t>(budget) + 1, 0);
    for (int a = 1; a <= budget; ++a) {
        Integer count = 0;
        for (const AdmissibleSequence& seq : enumerate_admissible(a)) {
            const InvariantValue value = evaluate_invariant(class_from_sequence(seq), max_steps);
            if (value == InvariantValue::Undetermined)
                throw std::runtime_error("count_by_components: invariant of sequence class "
                                         + class_from_sequence(seq).to_string()
                                         + " undetermined after " + std::to_string(max_steps)
                                         + " steps");
            if (value == InvariantValue::One)
                ++count;
        }
        one_counts[static_cast<std::size_t>(a)] = count;
    }
    return sum_over_component_data(
        budget, config.slots(query.surface), query.genus,
        [&](int a) { return one_counts[static_cast<std::size_t>(a)]; },
        [](long long b) { return Integer(b) * sublattice_count(b); });
}

std::string CrossValidationReport::to_string() const
{
    std::ostringstream out;
    for (const CrossValidationCell& cell : cells) {
        out << k3count::to_string(surface) << " g=" << cell.genus << " n=" << cell.nodes
            << " closed=" << cell.closed;
        out << " convolution=";
        if (cell.convolution)
            out << *cell.convolution;
        else
            out << "-";
        out << " components=";
        if (cell.components)
            out << *cell.components;
        else
            out << "-";
        out << (cell.ok ? " ok" : " MISMATCH") << "\n";
    }
    out << "all equal: " << (all_equal ? "yes" : "no") << "\n";
    return out.str();
}

CrossValidationReport cross_validate(Surface surface, int g_max, int n_max,
                                     const CountingConfig& config)
{
    if (g_max < 0 || n_max < 0)
        throw std::invalid_argument("cross_validate: grid bounds must be non-negative");
    CrossValidationReport report;
    report.surface = surface;
    report.all_equal = true;
    for (int genus = 0; genus <= g_max; ++genus) {
        for (int nodes = 0; nodes <= n_max; ++nodes) {
            const CountQuery query{surface, genus, nodes};
            CrossValidationCell cell;
            cell.genus = genus;
            cell.nodes = nodes;
            cell.closed = count_closed_form(query);
            const int budget = genus + nodes;
            if (budget <= config.convolution_max_budget)
                cell.convolution = count_convolution(query, config);
            if (budget <= config.components_max_budget)
                cell.components = count_by_components(query, 256, config);
            cell.ok = (!cell.convolution || *cell.convolution == cell.closed)
                && (!cell.components || *cell.components == cell.closed);
            report.all_equal = report.all_equal && cell.ok;
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

} // namespace k3count
