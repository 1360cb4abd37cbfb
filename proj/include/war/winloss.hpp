#pragma once

#include <string>
#include <vector>

#include "war/engine.hpp"
#include "war/numerics.hpp"

namespace war {

// Round outcomes of a game Alice loses, from her side: letters over {W, L}
// with initial hand size m. Writing w_i and l_i for the W/L counts among the
// first i letters, validity means m + w_i - l_i > 0 for i < R and
// m + w_R - l_R = 0. Passthroughs partition the letters: the first spans m
// rounds, each later one twice the W's of the one before.
struct WinLossSequence {
    std::string letters;  // 'W' / 'L'
    int m = 1;

    int rounds() const { return static_cast<int>(letters.size()); }
    std::vector<int> passthrough_sizes() const;
    int passthroughs() const { return static_cast<int>(passthrough_sizes().size()); }

    bool operator==(const WinLossSequence&) const = default;
};

// Validating constructor; throws std::invalid_argument on a bad sequence.
WinLossSequence make_sequence(const std::string& letters, int m);

// Letters with optional '/' separators; when present they must sit exactly
// on the computed passthrough boundaries.
WinLossSequence parse_sequence(const std::string& text, int m);

// "W/LL"-style text with a slash between consecutive passthroughs.
std::string stylize(const WinLossSequence& seq);

// The (validated) sequence of an AliceLost trace.
WinLossSequence sequence_of(const GameTrace& t);

// All m-card sequences of exactly R rounds, lexicographic with W < L.
// Empty (not an error) when R and m disagree in parity or R < m.
std::vector<WinLossSequence> enumerate_sequences_rounds(int m, int R);

// catalan_triangle((m+R)/2 - 1, (R-m)/2); 0 when no sequence exists.
BigInt count_sequences_rounds(int m, int R);

// All m-card sequences ending within k passthroughs, lexicographic with
// W < L. Their number is a_k(k)^m.
std::vector<WinLossSequence> enumerate_sequences_passthrough(int m, int k);

// De-interleaves an m-card sequence into its m unicard block sequences.
// Within each passthrough, block i consumes as many letters as it holds
// cards at that point; inverse of combine_blocks.
std::vector<WinLossSequence> split_blocks(const WinLossSequence& seq);

// Passthrough-wise concatenation of unicard block sequences.
WinLossSequence combine_blocks(const std::vector<WinLossSequence>& blocks);

}  // namespace war
