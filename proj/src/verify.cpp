#include "war/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "war/census.hpp"
#include "war/engine.hpp"
#include "war/graphs.hpp"
#include "war/posets.hpp"
#include "war/trees.hpp"
#include "war/winloss.hpp"

namespace war {

namespace {

using nlohmann::json;

Claim make_claim(std::string id, json params, std::string expected,
                 std::string observed) {
    Claim c;
    c.id = std::move(id);
    c.params = std::move(params);
    c.pass = expected == observed;
    c.expected = std::move(expected);
    c.observed = std::move(observed);
    return c;
}

// --- 1: closed-form sequence counts by round number -------------------------

CriterionResult c1_sequence_count_rounds(int, int) {
    CriterionResult out{1, "round-count formula matches enumeration", {}, true};
    for (int m = 1; m <= 3; ++m) {
        for (int R = m; R <= 9; R += 2) {
            out.claims.push_back(make_claim(
                "sequence-count-rounds", {{"m", m}, {"R", R}},
                to_decimal(count_sequences_rounds(m, R)),
                std::to_string(enumerate_sequences_rounds(m, R).size())));
        }
    }
    return out;
}

// --- 2: sequence counts by passthrough bound --------------------------------

CriterionResult c2_sequence_count_passthroughs(int, int) {
    CriterionResult out{2, "passthrough-count recursion matches enumeration", {}, true};
    for (int m = 1; m <= 2; ++m) {
        for (int k = 1; k <= 4; ++k) {
            out.claims.push_back(make_claim(
                "sequence-count-passthroughs", {{"m", m}, {"k", k}},
                to_decimal(pow_int(a_k(k), static_cast<unsigned long>(m))),
                std::to_string(enumerate_sequences_passthrough(m, k).size())));
        }
    }
    return out;
}

// --- 3: sequence <-> full binary tree bijection ------------------------------

std::string canon_shape(const FullBinaryTree& t, int v) {
    if (t.is_leaf(v)) return "L";
    return "W(" + canon_shape(t, t.nodes[static_cast<size_t>(v)].left) +
           canon_shape(t, t.nodes[static_cast<size_t>(v)].right) + ")";
}

std::vector<FullBinaryTree> all_trees_within(int k) {
    std::vector<FullBinaryTree> out{make_leaf()};
    if (k == 1) return out;
    const auto sub = all_trees_within(k - 1);
    for (const auto& l : sub)
        for (const auto& r : sub) out.push_back(make_branch(l, r));
    return out;
}

CriterionResult c3_tree_bijection(int, int) {
    CriterionResult out{3, "sequence/tree bijection round-trips", {}, true};
    int seq_ok = 0, seq_total = 0;
    for (const auto& seq : enumerate_sequences_passthrough(1, 4)) {
        ++seq_total;
        if (tree_to_seq(seq_to_tree(seq)) == seq) ++seq_ok;
    }
    out.claims.push_back(make_claim("tree-roundtrip-from-sequences", {{"k", 4}},
                                    std::to_string(seq_total) + " identities",
                                    std::to_string(seq_ok) + " identities"));
    int tree_ok = 0, tree_total = 0;
    for (const auto& tree : all_trees_within(4)) {
        ++tree_total;
        const FullBinaryTree back = seq_to_tree(tree_to_seq(tree));
        if (canon_shape(back, 0) == canon_shape(tree, 0)) ++tree_ok;
    }
    out.claims.push_back(make_claim("tree-roundtrip-from-trees", {{"height", 4}},
                                    std::to_string(tree_total) + " identities",
                                    std::to_string(tree_ok) + " identities"));
    out.claims.push_back(make_claim("tree-count", {{"height", 4}}, to_decimal(a_k(4)),
                                    std::to_string(tree_total)));
    return out;
}

// --- 4: game graph rebuilt from the labeled tree ----------------------------

CriterionResult c4_tree_game_graph(int, int max_n) {
    CriterionResult out{4, "labeled tree rebuilds the game graph", {}, true};
    const int top = max_n > 0 ? std::min(7, max_n) : 7;
    for (int n = 2; n <= top; ++n) {
        int checked = 0, equal = 0;
        StateSpace space(n, 1);
        space.for_each([&](const GameState& s) {
            const GameTrace t = play_wl(s, static_cast<long>(n) * n);
            if (!t.single_use) return;
            ++checked;
            const auto trees = label_tree(t);
            std::vector<Card> roots;
            for (const auto& lt : trees) roots.push_back(lt.root_card);
            if (tree_to_game_graph(trees, roots, n) == build_game_graph(t)) ++equal;
        });
        out.claims.push_back(make_claim("tree-derived-game-graph", {{"n", n}},
                                        std::to_string(checked) + " graphs equal",
                                        std::to_string(equal) + " graphs equal"));
    }
    return out;
}

// --- 5: forest structure of single-use game graphs --------------------------

CriterionResult c5_forest(int, int max_n) {
    CriterionResult out{5, "single-use game graphs are forests of m trees", {}, true};
    const int top = max_n > 0 ? std::min(6, max_n) : 6;
    for (int n = 2; n <= top; ++n) {
        for (int m = 1; m <= 2 && m < n; ++m) {
            for (Policy policy : {Policy::WL, Policy::Random}) {
                int checked = 0, good = 0;
                StateSpace space(n, m);
                space.for_each([&](const GameState& s) {
                    std::vector<GameTrace> traces;
                    if (policy == Policy::WL) {
                        traces.push_back(play_wl(s, n - m));
                    } else {
                        traces = enumerate_random_branches(s, n - m);
                    }
                    for (const GameTrace& t : traces) {
                        if (!t.single_use) continue;
                        ++checked;
                        const auto fd = forest_decomposition(build_game_graph(t));
                        if (static_cast<int>(fd.trees.size()) != m) continue;
                        bool one_root_each = true;
                        for (const auto& tree : fd.trees) {
                            int hits = 0;
                            for (Card c : s.alice)
                                if (std::find(tree.begin(), tree.end(), c) != tree.end())
                                    ++hits;
                            if (hits != 1) one_root_each = false;
                        }
                        const int rounds = static_cast<int>(t.rounds.size());
                        if (one_root_each &&
                            static_cast<int>(fd.isolated.size()) == n - m - rounds)
                            ++good;
                    }
                });
                out.claims.push_back(make_claim(
                    "game-graph-forest",
                    {{"n", n}, {"m", m}, {"policy", policy == Policy::WL ? "wl" : "random"}},
                    std::to_string(checked) + " forests", std::to_string(good) + " forests"));
            }
        }
    }
    return out;
}

// --- 6: one random-putback round from the uniform distribution --------------

CriterionResult c6_uniform(int, int) {
    CriterionResult out{6, "one round from uniform stays uniform", {}, true};
    const std::pair<int, int> points[] = {{3, 1}, {4, 1}, {4, 2}, {5, 2}};
    for (const auto& [n, m] : points) {
        const UniformLemmaReport r = uniform_lemma_check(n, m);
        std::string observed = "win=" + to_fraction(r.win_mass) +
                               " loss=" + to_fraction(r.loss_mass) +
                               (r.winners_uniform ? " winners-uniform" : " winners-skewed") +
                               (r.losers_uniform ? " losers-uniform" : " losers-skewed");
        out.claims.push_back(make_claim(
            "uniform-one-round", {{"n", n}, {"m", m}},
            "win=1/2 loss=1/2 winners-uniform losers-uniform", observed));
    }
    return out;
}

// --- 7: exact R-round probabilities under both putbacks ---------------------

CriterionResult c7_r_round(int jobs, int max_n) {
    CriterionResult out{7, "R-round probabilities match the closed form", {}, true};
    const int top = max_n > 0 ? std::min(7, max_n) : 7;
    for (int n = 2; n <= top; ++n) {
        for (int m = 1; m <= 2 && m < n; ++m) {
            for (int R = m; R <= n - m; R += 2) {
                const std::string expected = to_fraction(r_round_formula(m, R));
                for (Policy policy : {Policy::WL, Policy::Random}) {
                    out.claims.push_back(make_claim(
                        "r-round-probability",
                        {{"n", n},
                         {"m", m},
                         {"R", R},
                         {"policy", policy == Policy::WL ? "wl" : "random"}},
                        expected,
                        to_fraction(probability_r_round(n, m, R, policy, jobs))));
                }
            }
        }
    }
    return out;
}

// --- 8: exact k-passthrough probabilities under both putbacks ---------------

CriterionResult c8_k_passthrough(int jobs, int max_n) {
    CriterionResult out{8, "k-passthrough probabilities match the recursion", {}, true};
    struct Point {
        int n, m, k;
        const char* pinned;
    };
    const Point points[] = {{4, 1, 2, "5/8"},
                            {8, 1, 2, "5/8"},
                            {8, 1, 3, "89/128"},
                            {8, 2, 2, "25/64"}};
    for (const auto& pt : points) {
        if (max_n > 0 && pt.n > max_n) continue;
        const std::string formula = to_fraction(k_passthrough_formula(pt.m, pt.k));
        out.claims.push_back(make_claim("k-passthrough-formula-pin",
                                        {{"m", pt.m}, {"k", pt.k}}, pt.pinned, formula));
        for (Policy policy : {Policy::WL, Policy::Random}) {
            out.claims.push_back(make_claim(
                "k-passthrough-probability",
                {{"n", pt.n},
                 {"m", pt.m},
                 {"k", pt.k},
                 {"policy", policy == Policy::WL ? "wl" : "random"}},
                pt.pinned,
                to_fraction(probability_k_passthrough(pt.n, pt.m, pt.k, policy, jobs))));
        }
    }
    return out;
}

// --- 9: Catalan triangle sum-product identity --------------------------------

CriterionResult c9_sum_product(int, int) {
    CriterionResult out{9, "Catalan sum-product identity holds", {}, true};
    for (int m = 1; m <= 5; ++m) {
        for (int k = 0; k <= 8; ++k) {
            const auto [lhs, rhs] = sum_product_identity_check(m, k);
            out.claims.push_back(make_claim("catalan-sum-product",
                                            {{"m", m}, {"k", k}}, to_decimal(lhs),
                                            to_decimal(rhs)));
        }
    }
    return out;
}

// --- 10: WL state counts vs census -------------------------------------------

std::string join_states(const std::vector<GameState>& states) {
    std::string out;
    for (const auto& s : states) {
        if (!out.empty()) out += ",";
        out += format_state(s);
    }
    return out;
}

CriterionResult c10_wl_state_count(int, int max_n) {
    CriterionResult out{10, "WL-putback state counts match the census", {}, true};
    for (int k = 1; k <= 4; ++k) {
        if (max_n > 0 && 2 * k > max_n) continue;
        for (const auto& seq : enumerate_sequences_rounds(1, 2 * k - 1)) {
            out.claims.push_back(make_claim(
                "wl-state-count", {{"sequence", stylize(seq)}, {"n", 2 * k}},
                to_decimal(count_states_wl(seq)),
                std::to_string(states_matching_wl(seq, 2 * k).size())));
        }
    }
    if (max_n == 0 || max_n >= 4) {
        const auto seq = parse_sequence("W/LL", 1);
        out.claims.push_back(make_claim("wl-state-set", {{"sequence", "W/LL"}, {"n", 4}},
                                        "2|134,2|143,3|142",
                                        join_states(states_matching_wl(seq, 4))));
    }
    return out;
}

// --- 11: tree poset linear extensions vs brute force -------------------------

CriterionResult c11_tree_poset(int, int) {
    CriterionResult out{11, "tree-poset extension counts match brute force", {}, true};
    std::mt19937 rng(20250811u);
    const int trials = 200;
    int agree = 0;
    for (int t = 0; t < trials; ++t) {
        const int size = 1 + static_cast<int>(rng() % 9);
        HookedTreePoset tree;
        for (int v = 0; v < size; ++v) {
            tree.names.push_back("v" + std::to_string(v));
            tree.parent.push_back(v == 0 ? -1 : static_cast<int>(rng() % v));
        }
        if (ruskey_count(tree) == linear_extensions_bruteforce(tree.as_poset()))
            ++agree;
    }
    out.claims.push_back(make_claim("tree-poset-extensions",
                                    {{"trials", trials}, {"max_vertices", 9}},
                                    std::to_string(trials) + " agreements",
                                    std::to_string(agree) + " agreements"));
    return out;
}

// --- 12: necessary-sequence counts for random putback ------------------------

CriterionResult c12_random_necessary(int, int max_n) {
    CriterionResult out{12, "random-putback necessary counts triangulate", {}, true};
    for (int k = 1; k <= 3; ++k) {
        if (max_n > 0 && 2 * k > max_n) continue;
        for (const auto& seq : enumerate_sequences_rounds(1, 2 * k - 1)) {
            const std::string closed = to_decimal(count_states_random_necessary(seq));
            out.claims.push_back(make_claim(
                "random-necessary-poset-oracle", {{"sequence", stylize(seq)}}, closed,
                to_decimal(linear_extensions_bruteforce(build_random_poset(seq).poset))));
            out.claims.push_back(make_claim(
                "random-necessary-census", {{"sequence", stylize(seq)}, {"n", 2 * k}},
                closed,
                std::to_string(states_necessarily_random(seq, 2 * k).size())));
        }
    }
    if (max_n == 0 || max_n >= 4) {
        const auto seq = parse_sequence("W/LL", 1);
        out.claims.push_back(make_claim("random-necessary-set",
                                        {{"sequence", "W/LL"}, {"n", 4}}, "2|134,2|143",
                                        join_states(states_necessarily_random(seq, 4))));
    }
    return out;
}

// --- 13: exact properties of the passthrough probability sequence -----------

CriterionResult c13_p_sequence(int, int) {
    CriterionResult out{13, "passthrough probability sequence exact properties", {}, true};
    const Rational half(1, 2), one(1);
    Rational p = half;
    bool monotone = true, bounded = p < one, identity = true;
    for (int k = 1; k <= 30; ++k) {
        Rational next = half + half * p * p;
        if (!(p < next)) monotone = false;
        if (!(next < one)) bounded = false;
        Rational gap = one - p;
        if (Rational(2) * (next - p) != gap * gap) identity = false;
        p = std::move(next);
    }
    out.claims.push_back(make_claim("p-monotone-bounded", {{"k_max", 30}},
                                    "strictly increasing below 1",
                                    monotone && bounded ? "strictly increasing below 1"
                                                        : "violated"));
    out.claims.push_back(make_claim("p-increment-identity", {{"k_max", 30}},
                                    "2(P[k+1]-P[k]) == (1-P[k])^2 for k<=30",
                                    identity
                                        ? "2(P[k+1]-P[k]) == (1-P[k])^2 for k<=30"
                                        : "violated"));
    return out;
}

using CriterionFn = CriterionResult (*)(int, int);

const std::vector<CriterionFn>& criteria() {
    static const std::vector<CriterionFn> fns = {
        c1_sequence_count_rounds, c2_sequence_count_passthroughs,
        c3_tree_bijection,        c4_tree_game_graph,
        c5_forest,                c6_uniform,
        c7_r_round,               c8_k_passthrough,
        c9_sum_product,           c10_wl_state_count,
        c11_tree_poset,           c12_random_necessary,
        c13_p_sequence};
    return fns;
}

const std::map<std::string, std::vector<int>>& suites() {
    static const std::map<std::string, std::vector<int>> map = {
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
        {"s3", {5}},
        {"s4", {1, 2, 3, 4}},
        {"s5", {6, 7, 8, 9, 13}},
        {"s6", {10, 11}},
        {"s7", {12}}};
    return map;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

CriterionResult run_criterion(int index, int jobs, int max_n) {
    if (index < 1 || index > criterion_count())
        throw std::invalid_argument("run_criterion: unknown criterion");
    CriterionResult out = criteria()[static_cast<size_t>(index - 1)](jobs, max_n);
    out.pass = std::all_of(out.claims.begin(), out.claims.end(),
                           [](const Claim& c) { return c.pass; });
    return out;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, members] : suites()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& suite, int jobs, int max_n) {
    const auto it = suites().find(suite);
    if (it == suites().end())
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    SuiteResult out;
    out.suite = suite;
    out.pass = true;
    for (int index : it->second) {
        CriterionResult r = run_criterion(index, jobs, max_n);
        out.pass = out.pass && r.pass;
        for (auto& claim : r.claims) out.claims.push_back(std::move(claim));
    }
    return out;
}

nlohmann::json to_json(const Claim& claim) {
    return nlohmann::json{{"claim", claim.id},
                          {"parameters", claim.params},
                          {"expected", claim.expected},
                          {"observed", claim.observed},
                          {"pass", claim.pass}};
}

nlohmann::json to_json(const SuiteResult& result) {
    nlohmann::json claims = nlohmann::json::array();
    for (const Claim& c : result.claims) claims.push_back(to_json(c));
    return nlohmann::json{
        {"suite", result.suite}, {"pass", result.pass}, {"claims", claims}};
}

}  // namespace war
