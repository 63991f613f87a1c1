// Acceptance gate: every release-blocking requirement as one pass/fail
// line, including its runtime bound. Exit status 0 only if all hold.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "k3count/admissible.hpp"
#include "k3count/arith.hpp"
#include "k3count/counting.hpp"
#include "k3count/cremona.hpp"
#include "k3count/modforms.hpp"

using namespace k3count;

namespace {

bool matches(const TruncatedSeries& series, const std::vector<long long>& expected,
             std::ostream& detail)
{
    for (std::size_t n = 0; n < expected.size(); ++n) {
        if (series.coeff(static_cast<int>(n)) != expected[n]) {
            detail << "coefficient " << n << " is " << series.coeff(static_cast<int>(n))
                   << ", expected " << expected[n];
            return false;
        }
    }
    return true;
}

bool series_tables(std::ostream& detail)
{
    const std::vector<std::vector<long long>> rows = {
        {1, 24, 324, 3200},
        {1, 30, 480, 5460},
        {1, 36, 672, 8728},
        {1, 42, 900, 13220},
    };
    for (int g = 0; g <= 3; ++g)
        if (!matches(k3_generating_series(g, 3), rows[static_cast<std::size_t>(g)], detail))
            return false;
    return true;
}

bool partition_row(std::ostream& detail)
{
    return matches(eta_product_inverse(1, 8), {1, 1, 2, 3, 5, 7, 11, 15, 22}, detail);
}

bool method_triangulation(std::ostream& detail)
{
    const CountingConfig config = CountingConfig::with_budgets(9, 6);
    for (Surface surface : {Surface::K3, Surface::RationalElliptic}) {
        for (int g = 0; g <= 3; ++g)
            for (int n = 0; n <= 6; ++n) {
                const CountQuery query{surface, g, n};
                const Integer closed = count_closed_form(query);
                const Integer convolution = count_convolution(query, config);
                if (closed != convolution) {
                    detail << to_string(surface) << " g=" << g << " n=" << n << ": closed "
                           << closed << " vs convolution " << convolution;
                    return false;
                }
            }
        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= 4; ++n) {
                const CountQuery query{surface, g, n};
                const Integer closed = count_closed_form(query);
                const Integer components = count_by_components(query, 256, config);
                if (closed != components) {
                    detail << to_string(surface) << " g=" << g << " n=" << n << ": closed "
                           << closed << " vs components " << components;
                    return false;
                }
            }
    }
    return true;
}

bool one_admissible_counts(std::ostream& detail)
{
    for (int a = 1; a <= 12; ++a) {
        const Integer count(enumerate_one_admissible(a).size());
        if (count != partition(a)) {
            detail << "a=" << a << ": " << count << " sequences vs p(a)=" << partition(a);
            return false;
        }
    }
    return true;
}

bool invariant_decides(std::ostream& detail)
{
    for (int a = 1; a <= 8; ++a) {
        for (const AdmissibleSequence& seq : enumerate_admissible(a)) {
            const InvariantValue value = evaluate_invariant(class_from_sequence(seq), 64);
            if (value == InvariantValue::Undetermined) {
                detail << seq.to_string() << ": Undetermined";
                return false;
            }
            if ((value == InvariantValue::One) != is_one_admissible(seq)) {
                detail << seq.to_string() << ": " << to_string(value);
                return false;
            }
        }
    }
    return true;
}

bool sublattice_counts(std::ostream& detail)
{
    for (long long b = 1; b <= 200; ++b) {
        if (sublattice_count(b) != sigma(b)) {
            detail << "b=" << b << ": " << sublattice_count(b) << " vs sigma " << sigma(b);
            return false;
        }
    }
    return true;
}

bool scramble_round_trips(std::ostream& detail)
{
    std::mt19937 rng(20260814u);
    for (int round = 0; round < 1000; ++round) {
        const long long g = static_cast<long long>(rng() % 4);
        const long long n = static_cast<long long>(rng() % 7);
        const BlowupClass start = section_class(g + n);
        const PairingData expected = pairing_data(start);
        const BlowupClass scrambled = scramble_class(start, static_cast<int>(rng() % 11), rng);
        if (!(pairing_data(scrambled) == expected)) {
            detail << "round " << round << ": scramble changed the pairing";
            return false;
        }
        const ReductionResult result = reduce_to_section_class(scrambled);
        if (result.i != g + n) {
            detail << "round " << round << ": recovered i=" << result.i << ", expected " << g + n;
            return false;
        }
        for (const ReductionStep& step : result.steps)
            if (!(pairing_data(step.result) == expected)) {
                detail << "round " << round << ": pairing drifted mid-reduction";
                return false;
            }
    }
    return true;
}

bool square_identity(std::ostream& detail)
{
    if (re_generating_series(0, 20).pow(2) == k3_generating_series(0, 20))
        return true;
    detail << "square of the 12-slot series differs from the 24-slot series";
    return false;
}

bool integrality(std::ostream& detail)
{
    for (int g = 0; g <= 5; ++g) {
        const TruncatedSeries k3 = k3_generating_series(g, 30);
        const TruncatedSeries re = re_generating_series(g, 30);
        for (int n = 0; n <= 30; ++n) {
            if (!is_integer(k3.coeff(n)) || !is_integer(re.coeff(n))) {
                detail << "g=" << g << " n=" << n << " is not an integer";
                return false;
            }
        }
    }
    return true;
}

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::ostream&)> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"k3 series coefficients through q^3 for genus 0..3 match the pinned table", 1.0, series_tables},
        {"exponent-1 eta inverse reproduces the partition numbers through q^8", 1.0, partition_row},
        {"closed form = convolution (g<=3, n<=6) and = components (g<=2, n<=4), both surfaces", 60.0,
         method_triangulation},
        {"1-admissible sequences of magnitude a are counted by p(a), a <= 12", 5.0,
         one_admissible_counts},
        {"invariant is One exactly on 1-admissible sequences, |s| <= 8, never Undetermined", 30.0,
         invariant_decides},
        {"sublattice count equals sigma(b) for b <= 200", 5.0, sublattice_counts},
        {"1000 scrambled section classes reduce to i = n+g with pairing preserved", 10.0,
         scramble_round_trips},
        {"rational elliptic series squared equals the k3 series through q^20", 1.0, square_identity},
        {"all series coefficients are integers for g <= 5, order <= 30", 5.0, integrality},
    };

    bool all_passed = true;
    int index = 0;
    for (const Criterion& criterion : criteria) {
        ++index;
        std::ostringstream detail;
        bool passed = false;
        const auto started = std::chrono::steady_clock::now();
        try {
            passed = criterion.run(detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (seconds >= criterion.limit_seconds) {
            detail << (detail.str().empty() ? "" : "; ") << "over the time limit";
            passed = false;
        }
        std::cout << (passed ? "PASS" : "FAIL") << " " << index << ". " << criterion.name << " ["
                  << std::fixed << std::setprecision(1) << seconds * 1000.0 << " ms, limit "
                  << std::setprecision(0) << criterion.limit_seconds * 1000.0 << " ms]\n";
        if (!passed && !detail.str().empty())
            std::cout << "     " << detail.str() << "\n";
        all_passed = all_passed && passed;
    }
    std::cout << (all_passed ? "acceptance: all criteria hold" : "acceptance: FAILURES") << "\n";
    return all_passed ? 0 : 1;
}
