#pragma once

#include <string>
#include <vector>

namespace k3count {

// Finite sequence of positive integers s_lo..s_hi with lo <= 0 <= hi.
// Indices outside the window read as 0. Two sequences are equal exactly
// when their trimmed windows and values agree, so zero-padding at either
// end never distinguishes components.
class AdmissibleSequence {
public:
    // values[i] holds s_{lo+i}; requires lo <= 0 <= lo+values.size()-1 and
    // every value >= 1.
    AdmissibleSequence(int lo, std::vector<long long> values);

    // Strips zero values from both ends of the window before constructing.
    static AdmissibleSequence trimmed(int lo, std::vector<long long> values);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
    const std::vector<long long>& values() const { return values_; }

    // s_k, with 0 for any k outside [lo, hi].
    long long at(int k) const;

    // |s| = sum of the values.
    long long magnitude() const;

    // "lo..hi: v_lo,...,v_hi"
    std::string to_string() const;

    auto operator<=>(const AdmissibleSequence&) const = default;

private:
    int lo_ = 0;
    std::vector<long long> values_;
};

// True iff the raw window spans index 0 and every entry is positive.
bool is_admissible(int lo, const std::vector<long long>& values);

// True iff walking outward from index 0 every step drops the value by 0 or
// 1, reading 0 immediately outside the window; in particular the outermost
// values must be 1.
bool is_one_admissible(const AdmissibleSequence& seq);

// All admissible sequences with |s| = a, ordered by window then values.
std::vector<AdmissibleSequence> enumerate_admissible(int a);

// The sublist of enumerate_admissible(a) passing is_one_admissible; its
// length equals the partition number p(a).
std::vector<AdmissibleSequence> enumerate_one_admissible(int a);

// Young diagram given by weakly decreasing positive row lengths.
class PartitionDiagram {
public:
    // rows must be non-empty, weakly decreasing, all entries >= 1.
    explicit PartitionDiagram(std::vector<long long> rows);

    const std::vector<long long>& rows() const { return rows_; }
    long long size() const;

    std::string to_string() const; // "[r1,r2,...]"

    auto operator<=>(const PartitionDiagram&) const = default;

private:
    std::vector<long long> rows_;
};

// Diagonal counts of the diagram: s_k = number of cells (i, j) with
// i - j = k, rows indexed downward, so diagonals below the main one map to
// positive indices. The counts of a diagram are always 1-admissible.
AdmissibleSequence diagram_to_sequence(const PartitionDiagram& diagram);

// Inverse of diagram_to_sequence on 1-admissible sequences: the unique
// diagram with the given diagonal counts. Non-1-admissible input is an
// error, since no diagram has such counts.
PartitionDiagram sequence_to_diagram(const AdmissibleSequence& seq);

} // namespace k3count
