#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <string>

#include "war/census.hpp"
#include "war/engine.hpp"
#include "war/graphs.hpp"
#include "war/posets.hpp"
#include "war/trees.hpp"
#include "war/verify.hpp"
#include "war/winloss.hpp"

namespace {

using nlohmann::json;
using namespace war;

// With slashes the first segment length fixes m; otherwise fall back to the
// explicit flag (default 1).
int infer_m(const std::string& text, int m_flag) {
    if (m_flag > 0) return m_flag;
    const auto slash = text.find('/');
    if (slash != std::string::npos) return static_cast<int>(slash);
    return 1;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::AliceLost: return "alice_lost";
        case Outcome::BobLost: return "bob_lost";
        default: return "truncated";
    }
}

json trace_to_json(const GameTrace& t) {
    json rounds = json::array();
    for (const RoundRecord& r : t.rounds) {
        rounds.push_back(json::array({r.index, r.alice_card, r.bob_card,
                                      r.winner == Player::Alice ? "Alice" : "Bob",
                                      r.putback_first, r.putback_second}));
    }
    json out{{"initial", format_state(t.initial)},
             {"deck", t.deck_size()},
             {"outcome", outcome_name(t.outcome)},
             {"rounds", rounds},
             {"rounds_played", t.rounds.size()},
             {"letters", t.letters()},
             {"passthrough_boundaries", t.alice_passthrough_boundaries},
             {"passthroughs_completed", t.alice_passthrough_boundaries.size()},
             {"single_use", t.single_use},
             {"weight", to_fraction(t.weight)}};
    if (t.outcome == Outcome::AliceLost)
        out["sequence"] = stylize(sequence_of(t));
    else
        out["sequence"] = nullptr;
    return out;
}

void print_trace(const GameTrace& t) {
    std::cout << "initial: " << format_state(t.initial) << "\n";
    for (const RoundRecord& r : t.rounds) {
        std::cout << "round " << r.index << ": Alice " << r.alice_card << " vs Bob "
                  << r.bob_card << " -> "
                  << (r.winner == Player::Alice ? "Alice" : "Bob") << " wins, puts back "
                  << r.putback_first << " " << r.putback_second << "\n";
    }
    std::cout << "outcome: " << outcome_name(t.outcome) << " after " << t.rounds.size()
              << " rounds\n";
    if (t.outcome == Outcome::AliceLost) {
        std::cout << "sequence: " << stylize(sequence_of(t)) << "\n";
        const Classification c = classify(t);
        std::cout << "passthroughs: " << c.passthroughs
                  << ", single-use: " << (c.single_use ? "yes" : "no") << "\n";
    }
}

// One level of a win-loss tree per output line, box-drawing style.
void print_tree(const FullBinaryTree& tree, const LabeledWinLossTree* labels, int v,
                const std::string& prefix, bool last) {
    std::string text(1, tree.nodes[static_cast<size_t>(v)].letter);
    if (labels) {
        const auto [a, b] = labels->labels[static_cast<size_t>(v)];
        text += "(" + std::to_string(a) + "/" + std::to_string(b) + ")";
    }
    if (prefix.empty() && v == 0) {
        std::cout << text << "\n";
    } else {
        std::cout << prefix << (last ? "`-- " : "|-- ") << text << "\n";
    }
    if (!tree.is_leaf(v)) {
        const std::string next = prefix.empty() && v == 0
                                     ? std::string()
                                     : prefix + (last ? "    " : "|   ");
        print_tree(tree, labels, tree.nodes[static_cast<size_t>(v)].left, next, false);
        print_tree(tree, labels, tree.nodes[static_cast<size_t>(v)].right, next, true);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-suit War: simulation, enumeration, and verification"};
    app.require_subcommand(1);
    int exit_code = 0;

    // simulate
    struct SimOpts {
        std::string state, putback = "wl";
        unsigned long long seed = 0;
        long max_rounds = 0;
        bool as_json = false;
    };
    auto sim = std::make_shared<SimOpts>();
    auto* sim_cmd = app.add_subcommand("simulate", "play one game and print the trace");
    sim_cmd->add_option("--state", sim->state, "initial state, e.g. 2|13")->required();
    sim_cmd->add_option("--putback", sim->putback, "wl or random")
        ->check(CLI::IsMember({"wl", "random"}));
    sim_cmd->add_option("--seed", sim->seed, "seed for random putback (default 0)");
    sim_cmd->add_option("--max-rounds", sim->max_rounds, "round budget");
    sim_cmd->add_flag("--json", sim->as_json, "emit the trace as JSON");
    sim_cmd->callback([sim]() {
        const GameState s = parse_state(sim->state);
        const long budget =
            sim->max_rounds > 0 ? sim->max_rounds : default_max_rounds(s.deck_size());
        GameTrace t;
        if (sim->putback == "wl") {
            t = play_wl(s, budget);
        } else {
            // one mt19937_64 draw per round; low bit 0 puts the winner's card
            // back first, 1 the loser's
            std::mt19937_64 rng(sim->seed);
            t = play_with(s, budget, [&rng](int, Player) {
                return (rng() & 1) ? Putback::LoserFirst : Putback::WinnerFirst;
            });
            t.weight = Rational(1) /
                       Rational(pow_int(BigInt(2), t.rounds.size()));
        }
        if (sim->as_json)
            std::cout << trace_to_json(t).dump(2) << "\n";
        else
            print_trace(t);
    });

    // branches
    struct BranchOpts {
        std::string state;
        long max_rounds = 0;
        bool branch_bob = false;
        bool as_json = false;
    };
    auto br = std::make_shared<BranchOpts>();
    auto* br_cmd =
        app.add_subcommand("branches", "enumerate all random-putback branches");
    br_cmd->add_option("--state", br->state, "initial state")->required();
    br_cmd->add_option("--max-rounds", br->max_rounds, "round budget (default n^2)");
    br_cmd->add_flag("--branch-bob", br->branch_bob,
                     "branch on Bob's putbacks too (matters only past single use)");
    br_cmd->add_flag("--json", br->as_json, "emit traces as JSON");
    br_cmd->callback([br]() {
        const GameState s = parse_state(br->state);
        const long budget = br->max_rounds > 0
                                ? br->max_rounds
                                : static_cast<long>(s.deck_size()) * s.deck_size();
        BranchOptions opts;
        opts.branch_bob = br->branch_bob;
        const auto traces = enumerate_random_branches(s, budget, opts);
        if (br->as_json) {
            json out{{"state", format_state(s)},
                     {"max_rounds", budget},
                     {"branches", json::array()}};
            for (const auto& t : traces) out["branches"].push_back(trace_to_json(t));
            std::cout << out.dump(2) << "\n";
            return;
        }
        std::cout << traces.size() << " branches (round budget " << budget << ")\n";
        for (size_t i = 0; i < traces.size(); ++i) {
            const auto& t = traces[i];
            std::cout << "#" << i + 1 << " weight=" << to_fraction(t.weight)
                      << " rounds=" << t.rounds.size()
                      << " outcome=" << outcome_name(t.outcome);
            if (t.outcome == Outcome::AliceLost)
                std::cout << " sequence=" << stylize(sequence_of(t));
            else if (!t.rounds.empty())
                std::cout << " letters=" << t.letters();
            std::cout << "\n";
        }
    });

    // sequences
    struct SeqOpts {
        int m = 1, rounds = 0, passthroughs = 0;
        bool count_only = false;
    };
    auto sq = std::make_shared<SeqOpts>();
    auto* sq_cmd = app.add_subcommand("sequences", "enumerate or count win-loss sequences");
    sq_cmd->add_option("--m", sq->m, "initial hand size")->check(CLI::PositiveNumber);
    auto* opt_r = sq_cmd->add_option("--rounds", sq->rounds, "exact round count");
    auto* opt_k =
        sq_cmd->add_option("--passthroughs", sq->passthroughs, "passthrough bound");
    opt_r->excludes(opt_k);
    sq_cmd->add_flag("--count-only", sq->count_only, "print only the count");
    sq_cmd->callback([sq, opt_r, opt_k]() {
        if (opt_r->count() == 0 && opt_k->count() == 0)
            throw CLI::ValidationError("sequences", "need --rounds or --passthroughs");
        if (sq->count_only) {
            const BigInt count =
                opt_r->count() ? count_sequences_rounds(sq->m, sq->rounds)
                               : pow_int(a_k(sq->passthroughs),
                                         static_cast<unsigned long>(sq->m));
            std::cout << to_decimal(count) << "\n";
            return;
        }
        const auto seqs = opt_r->count()
                              ? enumerate_sequences_rounds(sq->m, sq->rounds)
                              : enumerate_sequences_passthrough(sq->m, sq->passthroughs);
        for (const auto& seq : seqs) std::cout << stylize(seq) << "\n";
    });

    // tree
    struct TreeOpts {
        std::string sequence, state;
        int m = 0;
        bool dot = false;
    };
    auto tr = std::make_shared<TreeOpts>();
    auto* tr_cmd = app.add_subcommand("tree", "win-loss binary tree of a sequence or game");
    auto* tr_seq = tr_cmd->add_option("--sequence", tr->sequence, "unicard win-loss sequence");
    auto* tr_state = tr_cmd->add_option("--state", tr->state,
                                        "initial state; labels the tree from its WL game");
    tr_seq->excludes(tr_state);
    tr_cmd->add_option("--m", tr->m, "hand size when the sequence has no slashes");
    tr_cmd->add_flag("--dot", tr->dot, "emit DOT");
    tr_cmd->callback([tr, tr_seq, tr_state]() {
        if (tr_seq->count()) {
            const int m = infer_m(tr->sequence, tr->m);
            const WinLossSequence seq = parse_sequence(tr->sequence, m);
            const auto blocks = split_blocks(seq);
            if (tr->dot) {
                std::string dot = "graph winloss_forest {\n";
                for (size_t b = 0; b < blocks.size(); ++b) {
                    const FullBinaryTree tree = seq_to_tree(blocks[b]);
                    const std::string prefix = "b" + std::to_string(b) + "_n";
                    for (int v = 0; v < tree.size(); ++v)
                        dot += "  " + prefix + std::to_string(v) + " [label=\"" +
                               tree.nodes[static_cast<size_t>(v)].letter + "\"];\n";
                    for (int v = 0; v < tree.size(); ++v) {
                        const int p = tree.nodes[static_cast<size_t>(v)].parent;
                        if (p >= 0)
                            dot += "  " + prefix + std::to_string(p) + " -- " + prefix +
                                   std::to_string(v) + ";\n";
                    }
                }
                std::cout << dot << "}\n";
                return;
            }
            for (size_t b = 0; b < blocks.size(); ++b) {
                if (blocks.size() > 1) std::cout << "block " << b + 1 << ":\n";
                print_tree(seq_to_tree(blocks[b]), nullptr, 0, "", true);
            }
            return;
        }
        if (!tr_state->count())
            throw CLI::ValidationError("tree", "need --sequence or --state");
        const GameState s = parse_state(tr->state);
        const GameTrace t = play_wl(s, default_max_rounds(s.deck_size()));
        const auto forest = label_tree(t);
        if (tr->dot) {
            std::cout << to_dot(forest);
        } else {
            for (size_t b = 0; b < forest.size(); ++b) {
                if (forest.size() > 1)
                    std::cout << "block " << b + 1 << " (root " << forest[b].root_card
                              << "):\n";
                print_tree(forest[b].shape, &forest[b], 0, "", true);
            }
        }
    });

    // graph
    struct GraphOpts {
        std::string state, putback = "wl", orient_mode;
        int start_round = 1;
        bool dot = false;
    };
    auto gr = std::make_shared<GraphOpts>();
    auto* gr_cmd = app.add_subcommand("graph", "game graph of a WL-putback game");
    gr_cmd->add_option("--state", gr->state, "initial state")->required();
    gr_cmd->add_option("--putback", gr->putback, "wl (deterministic games only)")
        ->check(CLI::IsMember({"wl"}));
    gr_cmd->add_option("--orient", gr->orient_mode, "winner or alice")
        ->check(CLI::IsMember({"winner", "alice"}));
    gr_cmd->add_option("--start-round", gr->start_round, "first round to include");
    gr_cmd->add_flag("--dot", gr->dot, "emit DOT");
    gr_cmd->callback([gr]() {
        const GameState s = parse_state(gr->state);
        const GameTrace t = play_wl(s, default_max_rounds(s.deck_size()));
        if (!gr->orient_mode.empty()) {
            const Orientation mode = gr->orient_mode == "winner"
                                         ? Orientation::WinnerToLoser
                                         : Orientation::AliceToBob;
            const GameDigraph d = orient(t, mode, gr->start_round);
            if (gr->dot) {
                std::cout << to_dot(d);
            } else {
                std::cout << "deck " << d.n << ", " << d.edges.size() << " edges\n";
                for (size_t i = 0; i < d.edges.size(); ++i)
                    std::cout << d.edges[i].first << " -> " << d.edges[i].second
                              << (d.mode == Orientation::WinnerToLoser && !d.alice_won[i]
                                      ? " (dashed)"
                                      : "")
                              << "\n";
            }
            return;
        }
        const GameGraph g = build_game_graph(t);
        if (gr->dot) {
            std::cout << to_dot(g);
            return;
        }
        std::cout << "deck " << g.n << ", " << g.edges.size() << " edges\n";
        for (const auto& [u, v] : g.edges) std::cout << u << " -- " << v << "\n";
        if (t.single_use) {
            const auto fd = forest_decomposition(g);
            std::cout << fd.trees.size() << " nontrivial trees, " << fd.isolated.size()
                      << " isolated\n";
        }
    });

    // poset
    struct PosetOpts {
        std::string sequence, mode = "wl";
        bool dot = false;
    };
    auto po = std::make_shared<PosetOpts>();
    auto* po_cmd = app.add_subcommand("poset", "card poset of a unicard sequence");
    po_cmd->add_option("--sequence", po->sequence, "unicard win-loss sequence")->required();
    po_cmd->add_option("--mode", po->mode, "wl or random")
        ->check(CLI::IsMember({"wl", "random"}));
    po_cmd->add_flag("--dot", po->dot, "emit DOT");
    po_cmd->callback([po]() {
        const WinLossSequence seq = parse_sequence(po->sequence, 1);
        if (po->mode == "wl") {
            const HookedTreePoset tree = wl_tree_component(seq);
            if (po->dot) {
                std::cout << to_dot(tree);
                return;
            }
            std::cout << "tree component, " << tree.size() << " elements\n";
            const auto hooks = tree.hooks();
            for (int v = 0; v < tree.size(); ++v) {
                std::cout << tree.names[static_cast<size_t>(v)];
                const int p = tree.parent[static_cast<size_t>(v)];
                if (p >= 0) std::cout << " < " << tree.names[static_cast<size_t>(p)];
                std::cout << "  h=" << hooks[static_cast<size_t>(v)] << "\n";
            }
            std::cout << "matching states: " << to_decimal(count_states_wl(seq)) << "\n";
        } else {
            const RandomPoset rp = build_random_poset(seq);
            if (po->dot) {
                std::cout << to_dot(rp);
                return;
            }
            std::cout << "poset on " << rp.poset.size() << " elements\n";
            for (const auto& [upper, lower] : rp.poset.covers)
                std::cout << rp.poset.names[static_cast<size_t>(lower)] << " < "
                          << rp.poset.names[static_cast<size_t>(upper)] << "\n";
            std::cout << "necessarily matching states: "
                      << to_decimal(count_states_random_necessary(seq)) << "\n";
        }
    });

    // count
    struct CountOpts {
        std::string sequence, mode;
        int m = 0;
        bool verify = false;
    };
    auto ct = std::make_shared<CountOpts>();
    auto* ct_cmd = app.add_subcommand("count", "closed-form state counts for a sequence");
    ct_cmd->add_option("--sequence", ct->sequence, "win-loss sequence")->required();
    ct_cmd->add_option("--mode", ct->mode, "wl or random-necessary")
        ->required()
        ->check(CLI::IsMember({"wl", "random-necessary"}));
    ct_cmd->add_option("--m", ct->m, "hand size when the sequence has no slashes");
    ct_cmd->add_flag("--verify", ct->verify, "cross-check against the census");
    ct_cmd->callback([ct, &exit_code]() {
        const int m = infer_m(ct->sequence, ct->m);
        const WinLossSequence seq = parse_sequence(ct->sequence, m);
        const long Ls =
            std::count(seq.letters.begin(), seq.letters.end(), 'L');
        const int n = static_cast<int>(2 * Ls);
        BigInt closed;
        size_t census = 0;
        if (ct->mode == "wl") {
            closed = seq.m == 1 ? count_states_wl(seq) : count_states_wl_mcard(seq);
            if (ct->verify) census = states_matching_wl(seq, n).size();
        } else {
            closed = count_states_random_necessary(seq);
            if (ct->verify) census = states_necessarily_random(seq, n).size();
        }
        std::cout << to_decimal(closed) << "\n";
        if (ct->verify) {
            const bool ok = BigInt(static_cast<long>(census)) == closed;
            std::cout << "census " << census << " on " << n << " cards: "
                      << (ok ? "match" : "MISMATCH") << "\n";
            if (!ok) exit_code = 1;
        }
    });

    // verify
    struct VerifyOpts {
        std::string suite = "all";
        int jobs = 1, max_n = 0;
    };
    auto vf = std::make_shared<VerifyOpts>();
    auto* vf_cmd = app.add_subcommand("verify", "run a verification suite, emit JSON");
    vf_cmd->add_option("--suite", vf->suite, "all, s3, s4, s5, s6 or s7")
        ->check(CLI::IsMember(suite_names()));
    vf_cmd->add_option("--jobs", vf->jobs, "census worker threads")
        ->check(CLI::PositiveNumber);
    vf_cmd->add_option("--max-n", vf->max_n,
                       "cap census deck sizes (0 = full suite)");
    vf_cmd->callback([vf, &exit_code]() {
        const SuiteResult result = run_suite(vf->suite, vf->jobs, vf->max_n);
        std::cout << to_json(result).dump(2) << "\n";
        if (!result.pass) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
