#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3count/rational.hpp"

namespace k3count {

enum class Surface { K3, RationalElliptic };

std::string to_string(Surface surface);

// Nodal-fiber count of the generic elliptic fibration: 24 for K3, 12 for
// the rational elliptic surface.
int fiber_slots(Surface surface);

struct CountQuery {
    Surface surface = Surface::K3;
    int genus = 0;
    int nodes = 0;
};

// Settings for the exhaustive methods. The guards bound nodes + genus and
// are configuration, not law: callers that accept the cost may raise them.
// The slot counts feed only the two combinatorial methods, so the
// self-test can prove that a misconfigured build disagrees with the closed
// form instead of passing silently.
struct CountingConfig {
    int convolution_max_budget = 8;
    int components_max_budget = 5;
    int k3_slots = 24;
    int re_slots = 12;

    int slots(Surface surface) const;

    static CountingConfig with_budgets(int convolution, int components);
};

// Coefficient of q^nodes in the generating series for the surface.
Integer count_closed_form(const CountQuery& query);

// Exhaustive sum over component data (a_1..a_slots, b_1..b_genus) with
// sum(a) + sum(b) = nodes + genus of prod p(a_j) * prod b_i sigma(b_i).
// Slots are grouped by the multiset of nonzero a values and weighted by
// the multinomial placement count. Exceeding the guard is an error.
Integer count_convolution(const CountQuery& query, const CountingConfig& config = {});

// Same sum with each factor counted from first principles: p(a_j) is
// replaced by the number of admissible sequences of magnitude a_j whose
// class evaluates to One under the Cremona rewrite engine, and sigma(b_i)
// by the Hermite-normal-form sublattice count. Any Undetermined invariant
// is an error, as is exceeding the guard.
Integer count_by_components(const CountQuery& query, int max_steps = 256,
                            const CountingConfig& config = {});

struct CrossValidationCell {
    int genus = 0;
    int nodes = 0;
    Integer closed;
    std::optional<Integer> convolution; // absent when nodes + genus is over the guard
    std::optional<Integer> components;  // absent when nodes + genus is over the guard
    bool ok = false;
};

struct CrossValidationReport {
    Surface surface = Surface::K3;
    std::vector<CrossValidationCell> cells;
    bool all_equal = false;

    // One line per cell plus a verdict line.
    std::string to_string() const;
};

// Runs every method inside its guard over the grid genus 0..g_max, nodes
// 0..n_max and flags each cell where the methods disagree.
CrossValidationReport cross_validate(Surface surface, int g_max, int n_max,
                                     const CountingConfig& config = {});

} // namespace k3count
