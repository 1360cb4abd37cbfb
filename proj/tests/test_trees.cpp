#include <doctest.h>

#include <algorithm>
#include <set>

#include "war/census.hpp"
#include "war/trees.hpp"

using namespace war;

namespace {

// Structure-preserving canonical form, independent of node storage order.
std::string canon(const FullBinaryTree& t, int v) {
    if (t.is_leaf(v)) return "L";
    return "W(" + canon(t, t.nodes[static_cast<size_t>(v)].left) +
           canon(t, t.nodes[static_cast<size_t>(v)].right) + ")";
}

// Independent generator of all full binary trees of height <= k.
std::vector<FullBinaryTree> all_trees_within(int k) {
    std::vector<FullBinaryTree> out{make_leaf()};
    if (k == 1) return out;
    for (const auto& l : all_trees_within(k - 1))
        for (const auto& r : all_trees_within(k - 1)) out.push_back(make_branch(l, r));
    return out;
}

// The letters of the subtree rooted at v, read level by level.
std::string subtree_letters(const FullBinaryTree& t, int v) {
    std::string out;
    std::vector<int> level{v};
    while (!level.empty()) {
        std::vector<int> next;
        for (int u : level) {
            out += t.nodes[static_cast<size_t>(u)].letter;
            if (!t.is_leaf(u)) {
                next.push_back(t.nodes[static_cast<size_t>(u)].left);
                next.push_back(t.nodes[static_cast<size_t>(u)].right);
            }
        }
        level = std::move(next);
    }
    return out;
}

const char* kTallState = "6|5 4 2 7 1 3 8 9 10 11 12";  // follows W/WW/LWWL/LLLL

}  // namespace

TEST_CASE("sequence to tree") {
    const FullBinaryTree leaf = seq_to_tree(make_sequence("L", 1));
    CHECK(leaf.size() == 1);
    CHECK(leaf.height() == 1);

    const FullBinaryTree small = seq_to_tree(make_sequence("WLL", 1));
    CHECK(small.size() == 3);
    CHECK(small.height() == 2);
    CHECK(canon(small, 0) == "W(LL)");

    const FullBinaryTree tall = seq_to_tree(parse_sequence("W/WW/LWWL/LLLL", 1));
    CHECK(tall.size() == 11);
    CHECK(tall.height() == 4);
    CHECK(canon(tall, 0) == "W(W(LW(LL))W(W(LL)L))");

    CHECK_THROWS_AS(seq_to_tree(make_sequence("WLLL", 2)), std::invalid_argument);
}

TEST_CASE("tree to sequence") {
    CHECK(tree_to_seq(make_leaf()).letters == "L");
    CHECK(stylize(tree_to_seq(seq_to_tree(parse_sequence("W/WW/LWWL/LLLL", 1)))) ==
          "W/WW/LWWL/LLLL");
}

TEST_CASE("bijection round-trips and height matches passthroughs") {
    const auto seqs = enumerate_sequences_passthrough(1, 4);
    REQUIRE(seqs.size() == 26);
    for (const auto& seq : seqs) {
        const FullBinaryTree tree = seq_to_tree(seq);
        CHECK(tree.height() == seq.passthroughs());
        CHECK(tree_to_seq(tree) == seq);
    }
    const auto trees = all_trees_within(4);
    REQUIRE(trees.size() == 26);
    std::set<std::string> shapes;
    for (const auto& tree : trees) {
        shapes.insert(canon(tree, 0));
        const FullBinaryTree back = seq_to_tree(tree_to_seq(tree));
        CHECK(canon(back, 0) == canon(tree, 0));
    }
    CHECK(shapes.size() == 26);
}

TEST_CASE("labeling the rounds of a game") {
    SUBCASE("five-round game") {
        const GameTrace t = play_wl(parse_state("3|24156"), 100);
        const auto forest = label_tree(t);
        REQUIRE(forest.size() == 1);
        const auto& lt = forest[0];
        CHECK(lt.root_card == 3);
        REQUIRE(lt.labels.size() == 5);
        CHECK(lt.labels[0] == std::make_pair(3, 2));
        CHECK(lt.labels[1] == std::make_pair(3, 4));  // left child, a loss
        CHECK(lt.labels[2] == std::make_pair(2, 1));  // right child, a win
        CHECK(lt.labels[3] == std::make_pair(2, 5));
        CHECK(lt.labels[4] == std::make_pair(1, 6));
        CHECK(lt.shape.nodes[1].letter == 'L');
        CHECK(lt.shape.nodes[2].letter == 'W');
    }
    SUBCASE("single round") {
        const auto forest = label_tree(play_wl(parse_state("1|23"), 10));
        REQUIRE(forest.size() == 1);
        CHECK(forest[0].labels == std::vector<std::pair<Card, Card>>{{1, 2}});
    }
    SUBCASE("eleven-round game fills four levels") {
        const GameTrace t = play_wl(parse_state(kTallState), 100);
        REQUIRE(t.letters() == "WWWLWWLLLLL");
        const auto forest = label_tree(t);
        REQUIRE(forest.size() == 1);
        const std::vector<std::pair<Card, Card>> expected = {
            {6, 5}, {6, 4}, {5, 2}, {6, 7}, {4, 1}, {5, 3},
            {2, 8}, {4, 9}, {1, 10}, {5, 11}, {3, 12}};
        CHECK(forest[0].labels == expected);
    }
    SUBCASE("two blocks") {
        const GameTrace t = play_wl(parse_state("2 4|1 3 5 6 7 8"), 100);
        REQUIRE(t.single_use);
        const auto forest = label_tree(t);
        REQUIRE(forest.size() == 2);
        CHECK(forest[0].root_card == 2);
        CHECK(forest[1].root_card == 4);
    }
    SUBCASE("rejects non-single-use traces") {
        const GameTrace t = play_wl(parse_state("2|13"), 10);
        CHECK_FALSE(t.single_use);
        CHECK_THROWS_AS(label_tree(t), std::domain_error);
    }
}

TEST_CASE("right parent walk") {
    const GameTrace t = play_wl(parse_state(kTallState), 100);
    const auto lt = label_tree(t)[0];
    // (2,8) is itself a right child; its right parent is the round (5,2)
    CHECK(right_parent(lt.shape, 6) == 2);
    CHECK(lt.labels[2].second == lt.labels[6].first);
    // (6,7) sits on an all-left path, so it has no right parent
    CHECK(right_parent(lt.shape, 3) == -1);
    CHECK(right_parent(lt.shape, 0) == -1);
}

TEST_CASE("right parent rule recovers each node's Alice card") {
    for (int n = 2; n <= 5; ++n) {
        StateSpace space(n, 1);
        space.for_each([&](const GameState& s) {
            const GameTrace t = play_wl(s, static_cast<long>(n) * n);
            if (!t.single_use) return;
            for (const auto& lt : label_tree(t)) {
                for (int v = 0; v < lt.shape.size(); ++v) {
                    const int rp = right_parent(lt.shape, v);
                    const Card expected =
                        rp < 0 ? lt.root_card : lt.labels[static_cast<size_t>(rp)].second;
                    CHECK(lt.labels[static_cast<size_t>(v)].first == expected);
                }
            }
        });
    }
}

TEST_CASE("every subtree encodes a subblock") {
    const GameTrace t = play_wl(parse_state(kTallState), 100);
    const auto lt = label_tree(t)[0];
    // the subtree at the second-passthrough round (6,4) plays as 6|4 7 1 9 10
    CHECK(subtree_letters(lt.shape, 1) == "WLWLL");
    const auto blocks = subblocks(t, 2);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].root == 6);
    CHECK(blocks[0].round_indices == std::vector<int>{2, 4, 5, 8, 9});
    // replayed on its own (cards relabeled order-isomorphically to 1..6),
    // the subblock reproduces the same outcomes
    std::vector<Card> cards = {6, 4, 7, 1, 9, 10};  // root, then Bob's in play order
    std::vector<Card> sorted = cards;
    std::sort(sorted.begin(), sorted.end());
    auto rank = [&](Card c) {
        return static_cast<Card>(
            std::find(sorted.begin(), sorted.end(), c) - sorted.begin() + 1);
    };
    GameState replay;
    replay.alice = {rank(cards[0])};
    for (size_t i = 1; i < cards.size(); ++i) replay.bob.push_back(rank(cards[i]));
    const GameTrace sub = play_wl(replay, 100);
    CHECK(sub.letters() == "WLWLL");
}

TEST_CASE("game graph from the labeled tree") {
    SUBCASE("pinned edge set") {
        const GameTrace t = play_wl(parse_state("3|24156"), 100);
        const auto trees = label_tree(t);
        const GameGraph g = tree_to_game_graph(trees, {3}, 6);
        const GameGraph expected{6, {{4, 3}, {3, 2}, {5, 2}, {2, 1}, {1, 6}}};
        CHECK(g == expected);
        CHECK(g == build_game_graph(t));
    }
    SUBCASE("single round leaves the rest isolated") {
        const GameTrace t = play_wl(parse_state("1|23"), 10);
        const GameGraph g = tree_to_game_graph(label_tree(t), {1}, 3);
        const GameGraph expected{3, {{1, 2}}};
        CHECK(g == expected);
    }
    SUBCASE("matches the engine-built graph") {
        const GameTrace t = play_wl(parse_state(kTallState), 100);
        CHECK(tree_to_game_graph(label_tree(t), {6}, 12) == build_game_graph(t));
    }
    SUBCASE("rejects tampered labels") {
        const GameTrace t = play_wl(parse_state("3|24156"), 100);
        auto trees = label_tree(t);
        trees[0].labels[3].first = 1;  // claim a different card played round 4
        CHECK_THROWS_AS(tree_to_game_graph(trees, {3}, 6), std::domain_error);
    }
}

TEST_CASE("dot export carries the round labels") {
    const auto forest = label_tree(play_wl(parse_state("3|24156"), 100));
    const std::string dot = to_dot(forest);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("W(3/2)") != std::string::npos);
    CHECK(dot.find("L(1/6)") != std::string::npos);
}
