#include "war/state.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace war {

void validate_state(const GameState& s) {
    const int n = s.deck_size();
    if (n == 0) throw std::invalid_argument("state: empty deck");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    auto take = [&](Card c) {
        if (c < 1 || c > n)
            throw std::invalid_argument("state: card " + std::to_string(c) +
                                        " outside 1.." + std::to_string(n) +
                                        " (non-contiguous card set)");
        if (seen[static_cast<size_t>(c)])
            throw std::invalid_argument("state: duplicate card " + std::to_string(c));
        seen[static_cast<size_t>(c)] = 1;
    };
    for (Card c : s.alice) take(c);
    for (Card c : s.bob) take(c);
}

namespace {

std::vector<Card> parse_side(const std::string& side, bool spaced) {
    std::vector<Card> cards;
    if (spaced) {
        std::istringstream in(side);
        std::string tok;
        while (in >> tok) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("state: malformed token '" + tok + "'");
            }
            if (pos != tok.size() || v <= 0)
                throw std::invalid_argument("state: malformed token '" + tok + "'");
            cards.push_back(v);
        }
    } else {
        for (char ch : side) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
                throw std::invalid_argument(std::string("state: malformed card '") +
                                            ch + "'");
            cards.push_back(ch - '0');
        }
    }
    return cards;
}

}  // namespace

GameState parse_state(const std::string& text) {
    const size_t bar = text.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("state: missing '|'");
    if (text.find('|', bar + 1) != std::string::npos)
        throw std::invalid_argument("state: more than one '|'");
    const bool spaced =
        text.find_first_of(" \t") != std::string::npos;
    GameState s;
    s.alice = parse_side(text.substr(0, bar), spaced);
    s.bob = parse_side(text.substr(bar + 1), spaced);
    validate_state(s);
    return s;
}

std::string format_state(const GameState& s) {
    const bool compact = s.deck_size() <= 9;
    std::string out;
    auto put = [&](const std::vector<Card>& side) {
        for (size_t i = 0; i < side.size(); ++i) {
            if (!compact && i > 0) out += ' ';
            out += std::to_string(side[i]);
        }
    };
    put(s.alice);
    out += '|';
    put(s.bob);
    return out;
}

}  // namespace war
