#pragma once

#include <string>
#include <vector>

namespace war {

using Card = int;  // card values are 1..n, all distinct

// A state "a_1 ... a_i | a_{i+1} ... a_n": both hands top-first, together
// covering exactly {1..n}. Either hand may be empty (terminal states).
struct GameState {
    std::vector<Card> alice;
    std::vector<Card> bob;

    int deck_size() const { return static_cast<int>(alice.size() + bob.size()); }
    bool operator==(const GameState&) const = default;
};

// Throws std::invalid_argument unless cards are distinct and cover 1..n.
void validate_state(const GameState& s);

// Accepts "2|13" (one digit per card, n <= 9) and "10 3 | 1 2 ..." (space
// separated). Exactly one '|'.
GameState parse_state(const std::string& text);

// Canonical text: compact digits when n <= 9, space separated otherwise.
// parse_state(format_state(s)) == s.
std::string format_state(const GameState& s);

}  // namespace war
