#include "war/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace war {

std::vector<std::pair<Card, Card>> GameGraph::normalized() const {
    auto out = edges;
    for (auto& e : out)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const GameGraph& a, const GameGraph& b) {
    return a.n == b.n && a.normalized() == b.normalized();
}

GameGraph build_game_graph(const GameTrace& t) {
    GameGraph g;
    g.n = t.deck_size();
    g.edges.reserve(t.rounds.size());
    for (const RoundRecord& r : t.rounds) g.edges.emplace_back(r.alice_card, r.bob_card);
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    // false if already connected
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

ForestDecomposition forest_decomposition(const GameGraph& g) {
    UnionFind uf(g.n + 1);
    for (const auto& [u, v] : g.edges) {
        if (u == v) throw std::domain_error("forest_decomposition: self-loop");
        if (!uf.merge(u, v))
            throw std::domain_error(
                "forest_decomposition: cycle detected (non-single-use game)");
    }
    std::map<int, std::vector<Card>> groups;
    for (Card c = 1; c <= g.n; ++c) groups[uf.find(c)].push_back(c);
    ForestDecomposition out;
    for (auto& [root, members] : groups) {
        if (members.size() == 1)
            out.isolated.push_back(members.front());
        else
            out.trees.push_back(std::move(members));
    }
    // groups iterate by root, not by min card; fix the component order
    std::sort(out.trees.begin(), out.trees.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::sort(out.isolated.begin(), out.isolated.end());
    return out;
}

GameDigraph orient(const GameTrace& t, Orientation mode, int start_round) {
    if (start_round < 1 || start_round > static_cast<int>(t.rounds.size()))
        throw std::invalid_argument("orient: start_round outside the trace");
    GameDigraph d;
    d.n = t.deck_size();
    d.mode = mode;
    d.start_round = start_round;
    for (const RoundRecord& r : t.rounds) {
        if (r.index < start_round) continue;
        const bool aw = r.winner == Player::Alice;
        if (mode == Orientation::WinnerToLoser) {
            d.edges.emplace_back(aw ? r.alice_card : r.bob_card,
                                 aw ? r.bob_card : r.alice_card);
        } else {
            d.edges.emplace_back(r.alice_card, r.bob_card);
        }
        d.alice_won.push_back(aw);
    }
    return d;
}

std::vector<Subblock> subblocks(const GameTrace& t, int start_round) {
    if (start_round < 1 || start_round > static_cast<int>(t.rounds.size()))
        throw std::invalid_argument("subblocks: start_round outside the trace");
    // Alice's hand as of start_round; each card in it roots a subblock, and
    // from there on a won pair inherits the tag of the card that won it.
    std::deque<Card> owner(t.initial.alice.begin(), t.initial.alice.end());
    for (const RoundRecord& r : t.rounds) {
        if (r.index >= start_round) break;
        owner.pop_front();
        if (r.winner == Player::Alice) {
            owner.push_back(r.putback_first);
            owner.push_back(r.putback_second);
        }
    }
    std::vector<Card> root_order(owner.begin(), owner.end());
    std::map<Card, std::vector<int>> rounds_of;
    for (const RoundRecord& r : t.rounds) {
        if (r.index < start_round) continue;
        if (owner.empty())
            throw std::domain_error("subblocks: trace plays from an empty hand");
        const Card root = owner.front();
        owner.pop_front();
        rounds_of[root].push_back(r.index);
        if (r.winner == Player::Alice) {
            owner.push_back(root);
            owner.push_back(root);
        }
    }
    std::vector<Subblock> out;
    for (Card root : root_order)
        out.push_back(Subblock{root, rounds_of[root]});
    return out;
}

std::string to_dot(const GameGraph& g) {
    std::string out = "graph game_graph {\n";
    for (Card c = 1; c <= g.n; ++c)
        out += "  " + std::to_string(c) + ";\n";
    for (const auto& [u, v] : g.edges)
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string to_dot(const GameDigraph& g) {
    std::string out = "digraph game_digraph {\n";
    for (Card c = 1; c <= g.n; ++c)
        out += "  " + std::to_string(c) + ";\n";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        out += "  " + std::to_string(g.edges[i].first) + " -> " +
               std::to_string(g.edges[i].second);
        if (g.mode == Orientation::WinnerToLoser && !g.alice_won[i])
            out += " [style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace war
