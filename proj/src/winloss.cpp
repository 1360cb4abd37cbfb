#include "war/winloss.hpp"

#include <algorithm>
#include <stdexcept>

namespace war {

std::vector<int> WinLossSequence::passthrough_sizes() const {
    std::vector<int> sizes;
    size_t pos = 0;
    int size = m;
    while (pos < letters.size()) {
        if (size <= 0 || pos + static_cast<size_t>(size) > letters.size())
            throw std::invalid_argument("sequence: letters do not fill passthroughs");
        int wins = 0;
        for (int i = 0; i < size; ++i) {
            if (letters[pos + static_cast<size_t>(i)] == 'W') ++wins;
        }
        sizes.push_back(size);
        pos += static_cast<size_t>(size);
        size = 2 * wins;
    }
    return sizes;
}

WinLossSequence make_sequence(const std::string& letters, int m) {
    if (m < 1) throw std::invalid_argument("sequence: m >= 1 required");
    if (letters.empty()) throw std::invalid_argument("sequence: empty");
    int count = m;
    const int R = static_cast<int>(letters.size());
    for (int i = 0; i < R; ++i) {
        const char c = letters[static_cast<size_t>(i)];
        if (c == 'W')
            ++count;
        else if (c == 'L')
            --count;
        else
            throw std::invalid_argument(std::string("sequence: bad letter '") + c +
                                        "'");
        if (i < R - 1 && count <= 0)
            throw std::invalid_argument(
                "sequence: hand empties before the final round");
        if (i == R - 1 && count != 0)
            throw std::invalid_argument("sequence: hand not empty at the end");
    }
    return WinLossSequence{letters, m};
}

WinLossSequence parse_sequence(const std::string& text, int m) {
    std::string letters;
    std::vector<int> slash_positions;  // letters seen before each slash
    for (char c : text) {
        if (c == '/')
            slash_positions.push_back(static_cast<int>(letters.size()));
        else
            letters += c;
    }
    WinLossSequence seq = make_sequence(letters, m);
    if (!slash_positions.empty()) {
        std::vector<int> expected;
        int acc = 0;
        const auto sizes = seq.passthrough_sizes();
        for (size_t i = 0; i + 1 < sizes.size(); ++i) {
            acc += sizes[i];
            expected.push_back(acc);
        }
        if (slash_positions != expected)
            throw std::invalid_argument("sequence: misplaced '/'");
    }
    return seq;
}

std::string stylize(const WinLossSequence& seq) {
    std::string out;
    size_t pos = 0;
    for (int size : seq.passthrough_sizes()) {
        if (pos > 0) out += '/';
        out += seq.letters.substr(pos, static_cast<size_t>(size));
        pos += static_cast<size_t>(size);
    }
    return out;
}

WinLossSequence sequence_of(const GameTrace& t) {
    if (t.outcome != Outcome::AliceLost)
        throw std::domain_error("sequence_of: trace does not end with Alice losing");
    return make_sequence(t.letters(), t.initial_hand());
}

namespace {

// W sorts before L.
int rank(char c) { return c == 'W' ? 0 : 1; }

bool sequence_less(const WinLossSequence& a, const WinLossSequence& b) {
    const size_t len = std::min(a.letters.size(), b.letters.size());
    for (size_t i = 0; i < len; ++i) {
        if (a.letters[i] != b.letters[i])
            return rank(a.letters[i]) < rank(b.letters[i]);
    }
    return a.letters.size() < b.letters.size();
}

}  // namespace

std::vector<WinLossSequence> enumerate_sequences_rounds(int m, int R) {
    if (m < 1 || R < 1) throw std::invalid_argument("enumerate: m, R >= 1");
    std::vector<WinLossSequence> out;
    if (R < m || (R - m) % 2 != 0) return out;
    std::string prefix;
    // feasible(count, rem): a valid completion of `rem` letters exists
    auto feasible = [](int count, int rem) {
        if (rem == 0) return count == 0;
        return count > 0 && count <= rem && (rem - count) % 2 == 0;
    };
    auto gen = [&](auto&& self, int count, int rem) -> void {
        if (rem == 0) {
            out.push_back(WinLossSequence{prefix, m});
            return;
        }
        for (char c : {'W', 'L'}) {
            const int next = count + (c == 'W' ? 1 : -1);
            if (!feasible(next, rem - 1)) continue;
            prefix += c;
            self(self, next, rem - 1);
            prefix.pop_back();
        }
    };
    gen(gen, m, R);
    return out;
}

BigInt count_sequences_rounds(int m, int R) {
    if (m < 1 || R < 1) throw std::invalid_argument("count: m, R >= 1");
    if (R < m || (R - m) % 2 != 0) return BigInt(0);
    return catalan_triangle((m + R) / 2 - 1, (R - m) / 2);
}

namespace {

// Unicard sequences of at most k passthroughs: either L, or W followed by the
// two induced blocks, each within k-1 passthroughs, combined passthrough-wise.
std::vector<WinLossSequence> unicard_within(int k) {
    std::vector<WinLossSequence> out{make_sequence("L", 1)};
    if (k == 1) return out;
    const auto sub = unicard_within(k - 1);
    for (const auto& left : sub) {
        for (const auto& right : sub) {
            const WinLossSequence tail = combine_blocks({left, right});
            out.push_back(make_sequence("W" + tail.letters, 1));
        }
    }
    return out;
}

}  // namespace

std::vector<WinLossSequence> enumerate_sequences_passthrough(int m, int k) {
    if (m < 1 || k < 1) throw std::invalid_argument("enumerate: m, k >= 1");
    const auto unicard = unicard_within(k);
    std::vector<WinLossSequence> out;
    if (m == 1) {
        out = unicard;
    } else {
        std::vector<size_t> pick(static_cast<size_t>(m), 0);
        std::vector<WinLossSequence> blocks(static_cast<size_t>(m));
        for (;;) {
            for (size_t i = 0; i < pick.size(); ++i) blocks[i] = unicard[pick[i]];
            out.push_back(combine_blocks(blocks));
            size_t i = pick.size();
            while (i > 0 && ++pick[i - 1] == unicard.size()) pick[--i] = 0;
            if (i == 0) break;
        }
    }
    std::sort(out.begin(), out.end(), sequence_less);
    return out;
}

std::vector<WinLossSequence> split_blocks(const WinLossSequence& seq) {
    const int m = seq.m;
    std::vector<std::string> blocks(static_cast<size_t>(m));
    std::vector<int> hold(static_cast<size_t>(m), 1);  // cards per block this passthrough
    size_t pos = 0;
    while (pos < seq.letters.size()) {
        const size_t before = pos;
        for (size_t b = 0; b < blocks.size(); ++b) {
            int wins = 0;
            for (int i = 0; i < hold[b]; ++i) {
                const char c = seq.letters[pos++];
                blocks[b] += c;
                if (c == 'W') ++wins;
            }
            hold[b] = 2 * wins;
        }
        if (pos == before)
            throw std::logic_error("split_blocks: letters left over after all blocks ended");
    }
    std::vector<WinLossSequence> out;
    out.reserve(blocks.size());
    for (const auto& letters : blocks) out.push_back(make_sequence(letters, 1));
    return out;
}

WinLossSequence combine_blocks(const std::vector<WinLossSequence>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("combine_blocks: no blocks");
    std::vector<std::vector<int>> sizes;
    size_t depth = 0;
    for (const auto& b : blocks) {
        if (b.m != 1) throw std::invalid_argument("combine_blocks: blocks must be unicard");
        sizes.push_back(b.passthrough_sizes());
        depth = std::max(depth, sizes.back().size());
    }
    std::string letters;
    std::vector<size_t> cursor(blocks.size(), 0);
    for (size_t pt = 0; pt < depth; ++pt) {
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (pt >= sizes[b].size()) continue;
            const size_t len = static_cast<size_t>(sizes[b][pt]);
            letters += blocks[b].letters.substr(cursor[b], len);
            cursor[b] += len;
        }
    }
    return make_sequence(letters, static_cast<int>(blocks.size()));
}

}  // namespace war
