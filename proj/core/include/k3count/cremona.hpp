#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "k3count/admissible.hpp"

namespace k3count {

// Class d*h - sum_i alphas[i]*e_i in the blow-up of the plane. Negative
// entries are legal: they arise mid-rewrite. The canonical form sorts the
// alphas non-increasing and drops zeros.
struct BlowupClass {
    long long d = 0;
    std::vector<long long> alphas;

    BlowupClass canonical() const;

    // "d;a1,a2,...,al"; no alpha part after ';' when the list is empty.
    std::string to_string() const;

    bool operator==(const BlowupClass&) const = default;
};

// Parses the to_string format, spaces allowed around every token.
BlowupClass parse_class(const std::string& text);

enum class InvariantValue { Zero, One, Undetermined };

std::string to_string(InvariantValue value);

// Cremona transformation acting on positions i, j, k of the alphas:
//   (d; ..ai.., ..aj.., ..ak..) -> (2d-ai-aj-ak; ..d-aj-ak.., ..d-ai-ak.., ..d-ai-aj..)
// with all other entries fixed. The alphas are zero-padded up to the
// largest index touched. The indices must be distinct; applying the same
// transform twice restores the original class.
BlowupClass cremona_transform(const BlowupClass& c, std::size_t i, std::size_t j, std::size_t k);

struct PairingData {
    long long self_intersection = 0; // d^2 - sum alpha_i^2
    long long canonical_pairing = 0; // 3d - sum alpha_i

    bool operator==(const PairingData&) const = default;
};

// Both values are invariant under cremona_transform and under permutations
// of the alphas.
PairingData pairing_data(const BlowupClass& c);

// The class attached to an admissible sequence:
//   (s_0; s_0-1, s_0-s_1, s_0-s_{-1}, s_1-s_2, s_{-1}-s_{-2}, ...)
// reading outward on both sides, one step past each end of the window.
BlowupClass class_from_sequence(const AdmissibleSequence& seq);

// Rewrite loop deciding the genus-0 invariant of c:
//   (a) sort alphas non-increasing and drop zeros
//   (b) drop entries equal to 1
//   (c) any negative entry: One for the special class (0; -1), else Zero
//   (d) d < 0 or formal dimension 3d - 1 - sum(alphas) < 0: Zero
//   (e) (1; ): One
//   (f) pad with 1-entries to three alphas, Cremona on the three largest,
//       repeat.
// Undetermined after max_steps Cremona applications; classes from
// admissible sequences always resolve well before the default bound.
InvariantValue evaluate_invariant(const BlowupClass& c, int max_steps = 256);

struct ReductionStep {
    std::string action; // "permute" or "cremona(0,1,2)"
    BlowupClass result;
};

struct ReductionResult {
    long long i = 0;
    std::vector<ReductionStep> steps;
};

// The section-plus-fibers class e9 + i*F, written (3i; i,...,i,i-1) with
// nine alphas.
BlowupClass section_class(long long i);

// Reduces a class with nine alphas (fewer are zero-padded) and canonical
// pairing 1 to section_class(i) by sorting and Cremona transforms on the
// three largest entries, recording every step. The degree drops strictly
// at each transform; inputs where it cannot, or where the final class is
// not a section class, are errors.
ReductionResult reduce_to_section_class(const BlowupClass& c, int max_steps = 256);

// Applies `moves` random Cremona transforms and alpha permutations to a
// class with nine alphas (fewer are zero-padded). Both move kinds preserve
// pairing_data, so the result reduces back to the class it came from.
BlowupClass scramble_class(const BlowupClass& c, int moves, std::mt19937& rng);

} // namespace k3count
