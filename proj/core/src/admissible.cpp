#include "k3count/admissible.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace k3count {

AdmissibleSequence::AdmissibleSequence(int lo, std::vector<long long> values)
    : lo_(lo)
    , values_(std::move(values))
{
    if (!is_admissible(lo_, values_))
        throw std::invalid_argument("AdmissibleSequence: window must span 0 and all values must be positive");
}

AdmissibleSequence AdmissibleSequence::trimmed(int lo, std::vector<long long> values)
{
    std::size_t begin = 0;
    std::size_t end = values.size();
    while (begin < end && values[begin] == 0)
        ++begin;
    while (end > begin && values[end - 1] == 0)
        --end;
    return AdmissibleSequence(lo + static_cast<int>(begin),
                              std::vector<long long>(values.begin() + static_cast<std::ptrdiff_t>(begin),
                                                     values.begin() + static_cast<std::ptrdiff_t>(end)));
}

long long AdmissibleSequence::at(int k) const
{
    if (k < lo_ || k > hi())
        return 0;
    return values_[static_cast<std::size_t>(k - lo_)];
}

long long AdmissibleSequence::magnitude() const
{
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

std::string AdmissibleSequence::to_string() const
{
    std::ostringstream out;
    out << lo_ << ".." << hi() << ":";
    for (std::size_t i = 0; i < values_.size(); ++i)
        out << (i == 0 ? " " : ",") << values_[i];
    return out.str();
}

bool is_admissible(int lo, const std::vector<long long>& values)
{
    if (values.empty())
        return false;
    const int hi = lo + static_cast<int>(values.size()) - 1;
    if (lo > 0 || hi < 0)
        return false;
    return std::all_of(values.begin(), values.end(), [](long long v) { return v >= 1; });
}

bool is_one_admissible(const AdmissibleSequence& seq)
{
    // Outward steps on both sides, including the final step onto the
    // zero-extension just past each end of the window.
    for (int k = 0; k <= seq.hi(); ++k) {
        const long long step = seq.at(k) - seq.at(k + 1);
        if (step != 0 && step != 1)
            return false;
    }
    for (int k = 0; k >= seq.lo(); --k) {
        const long long step = seq.at(k) - seq.at(k - 1);
        if (step != 0 && step != 1)
            return false;
    }
    return true;
}

namespace {

// Compositions of total into exactly `parts` positive entries, lexicographic.
void for_each_composition(int total, int parts, std::vector<long long>& prefix,
                          const std::function<void(const std::vector<long long>&)>& emit)
{
    if (parts == 1) {
        prefix.push_back(total);
        emit(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = 1; first <= total - (parts - 1); ++first) {
        prefix.push_back(first);
        for_each_composition(total - first, parts - 1, prefix, emit);
        prefix.pop_back();
    }
}

} // namespace

std::vector<AdmissibleSequence> enumerate_admissible(int a)
{
    if (a < 1)
        throw std::invalid_argument("enumerate_admissible: size must be positive");
    std::vector<AdmissibleSequence> out;
    for (int width = 1; width <= a; ++width) {
        for (int lo = -(width - 1); lo <= 0; ++lo) {
            std::vector<long long> prefix;
            for_each_composition(a, width, prefix, [&](const std::vector<long long>& values) {
                out.emplace_back(lo, values);
            });
        }
    }
    return out;
}

std::vector<AdmissibleSequence> enumerate_one_admissible(int a)
{
    std::vector<AdmissibleSequence> out;
    for (AdmissibleSequence& seq : enumerate_admissible(a))
        if (is_one_admissible(seq))
            out.push_back(std::move(seq));
    return out;
}

PartitionDiagram::PartitionDiagram(std::vector<long long> rows)
    : rows_(std::move(rows))
{
    if (rows_.empty())
        throw std::invalid_argument("PartitionDiagram: at least one row required");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw std::invalid_argument("PartitionDiagram: row lengths must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("PartitionDiagram: row lengths must be weakly decreasing");
    }
}

long long PartitionDiagram::size() const
{
    return std::accumulate(rows_.begin(), rows_.end(), 0LL);
}

std::string PartitionDiagram::to_string() const
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_.size(); ++i)
        out << (i == 0 ? "" : ",") << rows_[i];
    out << "]";
    return out.str();
}

AdmissibleSequence diagram_to_sequence(const PartitionDiagram& diagram)
{
    const auto& rows = diagram.rows();
    // Diagonal indices run from 1 - rows[0] (top right cell) through
    // rows.size() - 1 (bottom left cell) with no gaps.
    const int lo = 1 - static_cast<int>(rows[0]);
    const int hi = static_cast<int>(rows.size()) - 1;
    std::vector<long long> counts(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (long long j = 0; j < rows[i]; ++j)
            counts[static_cast<std::size_t>(static_cast<int>(i) - static_cast<int>(j) - lo)] += 1;
    return AdmissibleSequence(lo, std::move(counts));
}

PartitionDiagram sequence_to_diagram(const AdmissibleSequence& seq)
{
    if (!is_one_admissible(seq))
        throw std::invalid_argument("sequence_to_diagram: sequence is not 1-admissible");
    // On diagonal k the cells of any diagram form a prefix starting at the
    // border, so the counts determine the cell set: rows k..k+s_k-1 for
    // k >= 0 and rows 0..s_k-1 for k < 0.
    std::vector<long long> rows(static_cast<std::size_t>(seq.hi()) + 1, 0);
    for (int k = seq.lo(); k <= seq.hi(); ++k) {
        for (long long t = 0; t < seq.at(k); ++t) {
            const long long row = k >= 0 ? k + t : t;
            rows[static_cast<std::size_t>(row)] += 1;
        }
    }
    return PartitionDiagram(std::move(rows));
}

} // namespace k3count
