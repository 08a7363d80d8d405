#include "wordrep/cli_app.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordrep/bookgraph.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/io.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/pathcycle.hpp"
#include "wordrep/selftest.hpp"
#include "wordrep/treebuilder.hpp"

namespace wordrep {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::vector<Token> parse_token_list(const std::string& s) {
    std::vector<Token> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.emplace_back(t);
    return out;
}

json perm_witness_json(const PermSequence& seq) {
    return json{{"type", "permutations"}, {"perms", perms_to_json(seq)}};
}

json chord_witness_json(const oracle::ChordDiagram& d) {
    json chords = json::array();
    for (auto [a, b] : d.chords) chords.push_back({a, b});
    json labels = json::array();
    for (const Token& t : d.labels) labels.push_back(t.name);
    return json{{"type", "chord_diagram"}, {"chords", chords}, {"labels", labels}};
}

json outcome_json(const oracle::SearchOutcome& out, double elapsed_ms) {
    json j;
    j["found"] = out.found;
    if (out.perm_witness)
        j["witness"] = perm_witness_json(*out.perm_witness);
    else if (out.chord_witness)
        j["witness"] = chord_witness_json(*out.chord_witness);
    else
        j["witness"] = nullptr;
    j["states_examined"] = out.states_examined;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

void emit_tree_result(std::ostream& os, bool as_json, const PermSequence& seq, const Word& word,
                      const json& prn, const std::string& prn_note) {
    if (as_json) {
        json j{{"p1", to_string(seq.perms[0])},
               {"p2", to_string(seq.perms[1])},
               {"p3", to_string(seq.perms[2])},
               {"word", to_string(word)},
               {"prn", prn}};
        if (!prn_note.empty()) j["prn_note"] = prn_note;
        os << j.dump(2) << '\n';
    } else {
        os << "p1: " << to_string(seq.perms[0]) << '\n'
           << "p2: " << to_string(seq.perms[1]) << '\n'
           << "p3: " << to_string(seq.perms[2]) << '\n'
           << "word: " << to_string(word) << '\n';
        if (prn.is_null())
            os << "prn: unknown (" << prn_note << ")\n";
        else
            os << "prn: " << prn.get<int>() << '\n';
    }
}

void emit_perms_result(std::ostream& os, bool as_json, const PermSequence& seq, const Word& word,
                       int prn) {
    if (as_json) {
        os << json{{"permutations", perms_to_json(seq)},
                   {"word", to_string(word)},
                   {"prn", prn}}
                  .dump(2)
           << '\n';
    } else {
        for (std::size_t i = 0; i < seq.perms.size(); ++i)
            os << "p" << (i + 1) << ": " << to_string(seq.perms[i]) << '\n';
        os << "word: " << to_string(word) << '\n' << "prn: " << prn << '\n';
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"constructions and brute-force certification of permutation-representing words"};
    app.require_subcommand(1);

    // tree
    auto* tree_cmd = app.add_subcommand("tree", "three permutations representing a tree");
    std::string tree_edges, tree_root;
    bool tree_json = false;
    tree_cmd->add_option("--edges", tree_edges, "graph file (must be a tree)")->required();
    tree_cmd->add_option("--root", tree_root, "root vertex (default: smallest token)");
    tree_cmd->add_flag("--json", tree_json, "JSON output");

    // path
    auto* path_cmd = app.add_subcommand("path", "word representing the path P_n");
    int path_n = 0;
    std::string path_tokens;
    bool path_json = false;
    path_cmd->add_option("--n", path_n, "number of vertices")->required();
    path_cmd->add_option("--tokens", path_tokens, "custom vertex tokens (space separated)");
    path_cmd->add_flag("--json", path_json, "JSON output");

    // cycle
    auto* cycle_cmd = app.add_subcommand("cycle", "word representing the even cycle C_n");
    int cycle_n = 0;
    std::string cycle_tokens;
    bool cycle_json = false, cycle_certify = false;
    cycle_cmd->add_option("--n", cycle_n, "number of vertices (even)")->required();
    cycle_cmd->add_option("--tokens", cycle_tokens, "custom vertex tokens (space separated)");
    cycle_cmd->add_flag("--certify-lower-bound", cycle_certify,
                        "for n=6, exhaust all two-permutation candidates");
    cycle_cmd->add_flag("--json", cycle_json, "JSON output");

    // book
    auto* book_cmd = app.add_subcommand("book", "book graph B_m: graph, permutations, numbers");
    int book_m = 0;
    std::string book_suffix = "'";
    bool book_json = false, book_graph_only = false;
    book_cmd->add_option("--m", book_m, "number of pages")->required();
    book_cmd->add_option("--suffix", book_suffix, "suffix for primed tokens (default ')");
    book_cmd->add_flag("--graph-only", book_graph_only, "emit only the graph in text format");
    book_cmd->add_flag("--json", book_json, "JSON output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "does a word represent a graph?");
    std::string verify_word, verify_graph;
    bool verify_json = false;
    verify_cmd->add_option("--word", verify_word, "word file")->required();
    verify_cmd->add_option("--graph", verify_graph, "graph file")->required();
    verify_cmd->add_flag("--json", verify_json, "JSON output");

    // derive
    auto* derive_cmd = app.add_subcommand("derive", "graph represented by a word");
    std::string derive_word, derive_word_file;
    bool derive_json = false;
    derive_cmd->add_option("--word", derive_word, "the word itself (space separated)");
    derive_cmd->add_option("--word-file", derive_word_file, "file holding the word");
    derive_cmd->add_flag("--json", derive_json, "JSON output");

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive k-permutation search");
    std::string search_graph;
    int search_k = 2;
    bool search_canonical = false;
    search_cmd->add_option("--graph", search_graph, "graph file")->required();
    search_cmd->add_option("--perms", search_k, "number of permutations k")->required();
    search_cmd->add_flag("--canonical", search_canonical,
                         "fix the first permutation, compare up to isomorphism");

    // circle
    auto* circle_cmd = app.add_subcommand("circle", "exhaustive chord-diagram search");
    std::string circle_graph;
    circle_cmd->add_option("--graph", circle_graph, "graph file")->required();

    // lc
    auto* lc_cmd = app.add_subcommand("lc", "local complementation at a vertex");
    std::string lc_graph, lc_vertex;
    bool lc_json = false;
    lc_cmd->add_option("--graph", lc_graph, "graph file")->required();
    lc_cmd->add_option("--vertex", lc_vertex, "vertex")->required();
    lc_cmd->add_flag("--json", lc_json, "JSON output");

    // comparability
    auto* comp_cmd = app.add_subcommand("comparability", "transitive orientation search");
    std::string comp_graph;
    comp_cmd->add_option("--graph", comp_graph, "graph file")->required();

    // probe
    auto* probe_cmd = app.add_subcommand("probe", "conjecture probe: R=2 implies prn<=3");
    std::string probe_graph;
    probe_cmd->add_option("--graph", probe_graph, "graph file")->required();

    // selftest
    auto* self_cmd = app.add_subcommand("selftest", "run the bundled acceptance suite");
    bool self_quick = false;
    unsigned self_seed = 12345;
    std::string self_fixtures;
    self_cmd->add_flag("--quick", self_quick, "skip the two long exhaustive searches");
    self_cmd->add_option("--seed", self_seed, "seed for the randomized cross-oracle check");
    self_cmd->add_option("--fixtures", self_fixtures, "fixture directory override");

    std::vector<const char*> argv{"wordrep"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (*tree_cmd) {
            Graph g = parse_graph_file(tree_edges);
            Token root = tree_root.empty() ? g.vertices().front() : Token(tree_root);
            RootedLabeledTree rooted = root_and_label(g, root);
            PermSequence seq = tree_permutations(rooted);
            json prn = nullptr;
            std::string prn_note;
            try {
                prn = tree_prn(g, root).prn;
            } catch (const BoundExceeded& e) {
                prn_note = e.what(); // S-free tree too big for the prn-2 search
            }
            emit_tree_result(out, tree_json, seq, seq.concat(), prn, prn_note);
        } else if (*path_cmd) {
            std::vector<Token> toks = parse_token_list(path_tokens);
            Word w = path_word(path_n, toks);
            PermSequence seq;
            int prn;
            if (path_n <= 2) {
                seq.perms = {w};
                prn = 1;
            } else {
                seq = path_permutations(path_n, toks);
                prn = 2;
            }
            emit_perms_result(out, path_json, seq, w, prn);
        } else if (*cycle_cmd) {
            std::vector<Token> toks = parse_token_list(cycle_tokens);
            CyclePrnResult r = cycle_prn(cycle_n, toks, cycle_certify);
            PermSequence seq;
            if (r.prn == 3) {
                seq = cycle_permutations(cycle_n, toks);
            } else {
                std::vector<Token> resolved =
                    toks.empty() ? default_path_tokens(cycle_n) : toks;
                seq = *as_perm_sequence(r.witness, resolved);
            }
            emit_perms_result(out, cycle_json, seq, r.witness, r.prn);
        } else if (*book_cmd) {
            Graph g = book(book_m, book_suffix);
            if (book_graph_only) {
                out << format_graph(g);
            } else {
                PermSequence seq = book_permutations(book_m, book_suffix);
                BookNumbers nums = book_numbers(book_m, book_suffix);
                if (book_json) {
                    out << json{{"graph", graph_to_json(g)},
                                {"permutations", perms_to_json(seq)},
                                {"word", to_string(seq.concat())},
                                {"representation_number", nums.representation_number},
                                {"prn", nums.prn}}
                               .dump(2)
                        << '\n';
                } else {
                    out << format_graph(g);
                    for (std::size_t i = 0; i < seq.perms.size(); ++i)
                        out << "q" << (i + 1) << ": " << to_string(seq.perms[i]) << '\n';
                    out << "representation_number: " << nums.representation_number << '\n'
                        << "prn: " << nums.prn << '\n';
                }
            }
        } else if (*verify_cmd) {
            std::ifstream win(verify_word);
            if (!win) throw std::runtime_error("cannot open word file: " + verify_word);
            Word w = read_word(win);
            Graph g = parse_graph_file(verify_graph);
            bool ok = represents(w, g);
            if (verify_json)
                out << json{{"represents", ok}}.dump(2) << '\n';
            else
                out << "represents: " << (ok ? "true" : "false") << '\n';
        } else if (*derive_cmd) {
            Word w;
            if (!derive_word.empty()) {
                w = parse_word(derive_word);
            } else if (!derive_word_file.empty()) {
                std::ifstream in(derive_word_file);
                if (!in) throw std::runtime_error("cannot open word file: " + derive_word_file);
                w = read_word(in);
            } else {
                throw std::runtime_error("derive: need --word or --word-file");
            }
            Graph g = derive_graph(w);
            if (derive_json)
                out << graph_to_json(g).dump(2) << '\n';
            else
                for (const auto& [u, v] : g.edges()) out << u.name << ' ' << v.name << '\n';
        } else if (*search_cmd) {
            Graph g = parse_graph_file(search_graph);
            auto t0 = Clock::now();
            oracle::SearchOutcome o =
                oracle::prn_search(g, search_k, oracle::SearchLimits::from_env(), search_canonical);
            double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            out << outcome_json(o, ms).dump(2) << '\n';
        } else if (*circle_cmd) {
            Graph g = parse_graph_file(circle_graph);
            auto t0 = Clock::now();
            oracle::SearchOutcome o = oracle::circle_search(g);
            double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            out << outcome_json(o, ms).dump(2) << '\n';
        } else if (*lc_cmd) {
            Graph g = parse_graph_file(lc_graph);
            Graph r = oracle::local_complement(g, Token(lc_vertex));
            if (lc_json)
                out << graph_to_json(r).dump(2) << '\n';
            else
                out << format_graph(r);
        } else if (*comp_cmd) {
            Graph g = parse_graph_file(comp_graph);
            auto t0 = Clock::now();
            auto orientation = oracle::is_comparability_small(g);
            double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            json witness = nullptr;
            if (orientation) {
                json arcs = json::array();
                for (const auto& [u, v] : *orientation) arcs.push_back({u.name, v.name});
                witness = json{{"type", "orientation"}, {"arcs", arcs}};
            }
            out << json{{"found", orientation.has_value()},
                        {"witness", witness},
                        {"states_examined", nullptr},
                        {"elapsed_ms", ms}}
                       .dump(2)
                << '\n';
        } else if (*probe_cmd) {
            Graph g = parse_graph_file(probe_graph);
            auto t0 = Clock::now();
            oracle::ProbeReport r = oracle::conjecture_probe(g);
            double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            json j{{"applicable", r.applicable},
                   {"reason", r.reason},
                   {"conclusion", r.conclusion},
                   {"elapsed_ms", ms}};
            j["prn_found"] = r.prn_found ? json(*r.prn_found) : json(nullptr);
            j["witness"] = r.witness ? perm_witness_json(*r.witness) : json(nullptr);
            out << j.dump(2) << '\n';
        } else if (*self_cmd) {
            selftest::Options opts;
            opts.quick = self_quick;
            opts.seed = self_seed;
            opts.fixture_dir = self_fixtures;
            auto results = selftest::run_acceptance(opts);
            return selftest::report(results, out) ? 0 : 1;
        }
    } catch (const CertificationError& e) {
        err << "certification failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace wordrep
