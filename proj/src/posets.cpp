#include "war/posets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "war/trees.hpp"

namespace war {

BigInt linear_extensions_bruteforce(const Poset& poset) {
    const int n = poset.size();
    if (n > 10)
        throw std::invalid_argument("linear_extensions_bruteforce: poset too large");
    std::vector<int> value(static_cast<size_t>(n));
    std::iota(value.begin(), value.end(), 1);
    BigInt count(0);
    do {
        bool ok = true;
        for (const auto& [upper, lower] : poset.covers) {
            if (value[static_cast<size_t>(upper)] < value[static_cast<size_t>(lower)]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(value.begin(), value.end()));
    return count;
}

std::vector<long> HookedTreePoset::hooks() const {
    const int n = size();
    std::vector<long> h(static_cast<size_t>(n), 1);
    // children precede nothing in particular; accumulate by repeated sweeps
    // over a topological order obtained from depths
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto depth = [&](int v) {
        int d = 0;
        while (parent[static_cast<size_t>(v)] >= 0) {
            v = parent[static_cast<size_t>(v)];
            ++d;
        }
        return d;
    };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return depth(a) > depth(b); });
    for (int v : order) {
        const int p = parent[static_cast<size_t>(v)];
        if (p >= 0) h[static_cast<size_t>(p)] += h[static_cast<size_t>(v)];
    }
    return h;
}

Poset HookedTreePoset::as_poset() const {
    Poset p;
    p.names = names;
    for (int v = 0; v < size(); ++v)
        if (parent[static_cast<size_t>(v)] >= 0)
            p.covers.emplace_back(parent[static_cast<size_t>(v)], v);
    return p;
}

BigInt ruskey_count(const HookedTreePoset& tree) {
    int roots = 0;
    for (int v = 0; v < tree.size(); ++v)
        if (tree.parent[static_cast<size_t>(v)] < 0) ++roots;
    if (roots != 1) throw std::invalid_argument("ruskey_count: exactly one root");
    BigInt r = factorial(tree.size());
    for (long h : tree.hooks()) {
        BigInt d(h);
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

namespace {

// a, then Bob's round cards b, c, ... in play order.
std::string slot_name(int slot) {
    if (slot < 26) return std::string(1, static_cast<char>('a' + slot));
    return "c" + std::to_string(slot);
}

}  // namespace

HookedTreePoset wl_tree_component(const WinLossSequence& seq) {
    if (seq.m != 1)
        throw std::invalid_argument("wl_tree_component: unicard sequence required");
    const int R = seq.rounds();
    // symbolic WL play: slot 0 is a, round i plays Bob's slot i
    std::deque<int> hand{0};
    std::vector<int> tree_parent_of_slot(static_cast<size_t>(R) + 1, -2);  // -2: not in tree
    tree_parent_of_slot[0] = -1;
    for (int i = 1; i <= R; ++i) {
        const int x = hand.front();
        hand.pop_front();
        const int y = i;
        if (seq.letters[static_cast<size_t>(i - 1)] == 'W') {
            tree_parent_of_slot[static_cast<size_t>(y)] = x;
            hand.push_back(x);
            hand.push_back(y);
        }
        // on L the fresh card beats x and stays outside the tree component
    }
    HookedTreePoset out;
    std::vector<int> index_of_slot(static_cast<size_t>(R) + 1, -1);
    for (int slot = 0; slot <= R; ++slot) {
        if (tree_parent_of_slot[static_cast<size_t>(slot)] == -2) continue;
        index_of_slot[static_cast<size_t>(slot)] = out.size();
        out.names.push_back(slot_name(slot));
        const int p = tree_parent_of_slot[static_cast<size_t>(slot)];
        out.parent.push_back(p < 0 ? -1 : index_of_slot[static_cast<size_t>(p)]);
    }
    return out;
}

BigInt count_states_wl(const WinLossSequence& seq) {
    const HookedTreePoset tree = wl_tree_component(seq);
    const int k = tree.size();  // one tree vertex per L round
    BigInt r = factorial(2 * k);
    BigInt d = pow_int(BigInt(2), static_cast<unsigned long>(k));
    for (long h : tree.hooks()) d *= h;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return q;
}

BigInt count_states_wl_mcard(const WinLossSequence& seq) {
    const auto blocks = split_blocks(seq);
    std::vector<long> deck_shares;
    BigInt product(1);
    for (const auto& block : blocks) {
        const long L = std::count(block.letters.begin(), block.letters.end(), 'L');
        deck_shares.push_back(2 * L);
        product *= count_states_wl(block);
    }
    return multinomial(deck_shares) * product;
}

RandomPoset build_random_poset(const WinLossSequence& seq) {
    if (seq.m != 1)
        throw std::invalid_argument("build_random_poset: unicard sequence required");
    const FullBinaryTree bt = seq_to_tree(seq);  // node v <-> round v+1 <-> slot v+1
    RandomPoset out;
    out.poset.names.push_back(slot_name(0));  // a
    std::vector<int> elem_of_node(static_cast<size_t>(bt.size()), -1);
    for (int v = 0; v < bt.size(); ++v) {
        elem_of_node[static_cast<size_t>(v)] = out.poset.size();
        out.poset.names.push_back(slot_name(v + 1));
    }
    out.bottom.names.push_back(slot_name(0));
    out.bottom.parent.push_back(-1);
    std::vector<int> bottom_of_node(static_cast<size_t>(bt.size()), -1);
    for (int v = 0; v < bt.size(); ++v) {
        const int e = elem_of_node[static_cast<size_t>(v)];
        if (bt.is_leaf(v)) {
            // L rounds: Bob's card beats whatever Alice shows, so it must top a
            out.poset.covers.emplace_back(e, 0);
            out.top.push_back(e);
        } else {
            // W rounds keep the pruned tree shape, hung below a
            const int p = bt.nodes[static_cast<size_t>(v)].parent;
            const int upper = p < 0 ? 0 : elem_of_node[static_cast<size_t>(p)];
            out.poset.covers.emplace_back(upper, e);
            bottom_of_node[static_cast<size_t>(v)] = out.bottom.size();
            out.bottom.names.push_back(slot_name(v + 1));
            out.bottom.parent.push_back(
                p < 0 ? 0 : bottom_of_node[static_cast<size_t>(p)]);
        }
    }
    return out;
}

BigInt count_states_random_necessary(const WinLossSequence& seq) {
    const RandomPoset rp = build_random_poset(seq);
    const int k = rp.bottom.size();
    BigInt r = factorial(k) * factorial(k);
    BigInt d(1);
    for (long h : rp.bottom.hooks()) d *= h;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return q;
}

std::string to_dot(const HookedTreePoset& tree) {
    std::string out = "digraph tree_poset {\n  rankdir=BT;\n";
    for (int v = 0; v < tree.size(); ++v)
        out += "  " + tree.names[static_cast<size_t>(v)] + ";\n";
    for (int v = 0; v < tree.size(); ++v) {
        const int p = tree.parent[static_cast<size_t>(v)];
        if (p >= 0)
            out += "  " + tree.names[static_cast<size_t>(v)] + " -> " +
                   tree.names[static_cast<size_t>(p)] + " [dir=none];\n";
    }
    out += "}\n";
    return out;
}

std::string to_dot(const RandomPoset& poset) {
    std::string out = "digraph random_putback_poset {\n  rankdir=BT;\n";
    for (const auto& name : poset.poset.names) out += "  " + name + ";\n";
    std::vector<char> is_top(static_cast<size_t>(poset.poset.size()), 0);
    for (int e : poset.top) is_top[static_cast<size_t>(e)] = 1;
    if (!poset.top.empty()) {
        out += "  { rank=same;";
        for (int e : poset.top)
            out += " " + poset.poset.names[static_cast<size_t>(e)] + ";";
        out += " }\n";
    }
    for (const auto& [upper, lower] : poset.poset.covers) {
        out += "  " + poset.poset.names[static_cast<size_t>(lower)] + " -> " +
               poset.poset.names[static_cast<size_t>(upper)] + " [dir=none";
        if (is_top[static_cast<size_t>(upper)]) out += ", style=dashed";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace war
