// planarfill: command-line front end.
//
// Exit codes: 0 found / holds, 2 usage or input error, 3 provably none,
// 4 inconclusive (search budget or depth limit).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "planarfill/exact_rep.hpp"
#include "planarfill/families.hpp"
#include "planarfill/filling_invariants.hpp"
#include "planarfill/io.hpp"
#include "planarfill/relations.hpp"
#include "planarfill/solver.hpp"

using namespace planarfill;
using json = nlohmann::json;

namespace {

constexpr int kFound = 0;
constexpr int kUsage = 2;
constexpr int kNone = 3;
constexpr int kInconclusive = 4;

// A word given as a file, --lens p k, or --seifert r1 r2 r3.
struct WordSource {
    std::string file;
    std::vector<int> lens;
    std::vector<std::string> seifert;

    void attach(CLI::App* app) {
        auto* f = app->add_option("word", file, "word file (JSON)");
        auto* l = app->add_option("--lens", lens, "lens space family: p k")->expected(2);
        auto* s = app->add_option("--seifert", seifert, "Seifert family: r1 r2 r3 as a/b")->expected(3);
        f->excludes(l)->excludes(s);
        l->excludes(s);
        app->callback([f, l, s] {
            if (!*f && !*l && !*s) throw CLI::RequiredError("a word file, --lens or --seifert");
        });
    }

    io::WordFile load() const {
        if (!lens.empty()) {
            auto lw = lens_word(lens[0], lens[1]);
            return {lw.word, lw.labels};
        }
        if (!seifert.empty()) {
            auto lw = seifert_word(params());
            return {lw.word, lw.labels};
        }
        return io::parse_word_file(file);
    }

    SeifertParams params() const {
        return {Rational::parse(seifert[0]), Rational::parse(seifert[1]), Rational::parse(seifert[2])};
    }

    json describe() const {
        if (!lens.empty()) return {{"family", "lens"}, {"p", lens[0]}, {"k", lens[1]}};
        if (!seifert.empty()) return {{"family", "seifert"}, {"r", seifert}};
        return {{"file", file}};
    }
};

void print(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::uint64_t node_budget(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("PLANARFILL_NODE_BUDGET")) {
        std::string s(env);
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || v == 0) throw DomainError("PLANARFILL_NODE_BUDGET must be a positive integer");
        return v;
    }
    return SolveOptions{}.node_budget;
}

int solve_exit(const SolveResult& r) {
    if (r.status == SolveStatus::Inconclusive) return kInconclusive;
    return r.solutions.empty() ? kNone : kFound;
}

std::vector<Rational> rational_list(const std::string& text) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) v.push_back(Rational::parse(item));
    if (v.empty()) throw DomainError("empty rational list '" + text + "'");
    return v;
}

json cf_json(const CFExpansion& cf) { return cf.entries; }

json predicate_json(const SeifertParams& sp) {
    return {{"r1", sp.r1.str()}, {"r2", sp.r2.str()},  {"r3", sp.r3.str()},  {"cf1", cf_json(sp.cf1())},
            {"cf2", cf_json(sp.cf2())}, {"cf3", cf_json(sp.cf3())}, {"k1", sp.k1()}, {"k2", sp.k2()},
            {"c1", sp.c1()}, {"verdict", to_string(fillability_predicate(sp))}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positive factorizations of planar open-book monodromies"};
    app.require_subcommand(1);

    // abelianize
    auto* ab = app.add_subcommand("abelianize", "abelian image and per-hole twist bounds of a word");
    WordSource ab_src;
    ab_src.attach(ab);

    // solve
    auto* solve = app.add_subcommand("solve", "enumerate positive factorizations of a word's abelian image");
    WordSource solve_src;
    solve_src.attach(solve);
    std::size_t max_solutions = 0;
    std::optional<std::uint64_t> budget_flag;
    bool no_homology = false;
    solve->add_option("--max-solutions", max_solutions, "stop after this many (0: all)");
    solve->add_option("--node-budget", budget_flag, "search node budget (default from PLANARFILL_NODE_BUDGET)");
    solve->add_flag("--no-homology", no_homology, "omit per-solution homology");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "constraint report with infeasibility witnesses");
    WordSource an_src;
    an_src.attach(analyze);

    // lens
    auto* lens = app.add_subcommand("lens", "print the open book word for the tight structure xi_k on L(p,1)");
    int lens_p = 0, lens_k = 0;
    lens->add_option("p", lens_p)->required();
    lens->add_option("k", lens_k)->required();

    // seifert
    auto* seif = app.add_subcommand("seifert", "print the canonical word for M(-1; r1, r2, r3)");
    std::vector<std::string> seif_r;
    seif->add_option("r", seif_r, "r1 r2 r3 as a/b")->expected(3)->required();

    // predicate
    auto* pred = app.add_subcommand("predicate", "fillability verdict for M(-1; r1, r2, r3)");
    std::vector<std::string> pred_r;
    pred->add_option("r", pred_r, "r1 r2 r3 as a/b")->expected(3)->required();

    // derive
    auto* der = app.add_subcommand("derive", "search for a lantern rewrite certificate between two word files");
    std::string der_from, der_to;
    DeriveLimits limits;
    der->add_option("source", der_from)->required();
    der->add_option("target", der_to)->required();
    der->add_option("--max-depth", limits.max_depth, "maximum certificate length");
    der->add_option("--max-states", limits.max_states, "maximum number of visited multisets");

    // verify
    auto* ver = app.add_subcommand("verify", "exact relation checks; optionally compare two word files");
    int k_max = 4;
    std::vector<std::string> ver_files;
    ver->add_option("--k-max", k_max, "check the generalized lantern exactly up to this k")->check(CLI::Range(1, 8));
    ver->add_option("words", ver_files, "two word files to compare exactly")->expected(0, 2);

    // homology
    auto* hom = app.add_subcommand("homology", "homology of the Lefschetz filling of a positive word");
    WordSource hom_src;
    hom_src.attach(hom);

    // grid
    auto* grid = app.add_subcommand("grid", "sweep the Seifert family: predicate against solver emptiness");
    std::string g_r1 = "1/2,2/3,3/4", g_r2 = "1/2", g_r3 = "1/2,1/3,1/4,1/5", g_format = "csv";
    std::optional<std::uint64_t> g_budget;
    grid->add_option("--r1", g_r1, "comma-separated rationals")->capture_default_str();
    grid->add_option("--r2", g_r2, "comma-separated rationals")->capture_default_str();
    grid->add_option("--r3", g_r3, "comma-separated rationals")->capture_default_str();
    grid->add_option("--format", g_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    grid->add_option("--node-budget", g_budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*ab) {
            auto wf = ab_src.load();
            auto img = abelianize(wf.word);
            json holes = json::array();
            for (Hole q = 0; q < wf.word.holes(); ++q) {
                auto r = hole_bound(wf.word, q);
                holes.push_back({{"hole", q}, {"k_plus", r.k_plus}, {"k_minus", r.k_minus}, {"b", r.b}, {"bound", r.bound}});
            }
            json doc = {{"input", ab_src.describe()}, {"image", io::image_json(img)}, {"hole_bounds", holes}};
            if (wf.labels) doc["labels"] = *wf.labels;
            print(doc);
            return kFound;
        }
        if (*solve) {
            auto wf = solve_src.load();
            SolveOptions opts;
            opts.max_solutions = max_solutions;
            opts.node_budget = node_budget(budget_flag);
            auto r = enumerate_positive_factorizations(abelianize(wf.word), opts);
            json diag = {{"input", solve_src.describe()}, {"holes", wf.word.holes()}, {"node_budget", opts.node_budget}};
            if (wf.labels) diag["labels"] = *wf.labels;
            json doc = io::solve_report_json(r, diag);
            if (no_homology)
                for (auto& s : doc["solutions"]) s.erase("homology");
            print(doc);
            return solve_exit(r);
        }
        if (*analyze) {
            auto wf = an_src.load();
            json doc = io::constraint_report_json(analyze_constraints(abelianize(wf.word)));
            doc["input"] = an_src.describe();
            if (wf.labels) doc["labels"] = *wf.labels;
            print(doc);
            return kFound;
        }
        if (*lens) {
            auto lw = lens_word(lens_p, lens_k);
            print(io::word_json(lw.word, lw.labels));
            return kFound;
        }
        if (*seif) {
            auto lw = seifert_word({Rational::parse(seif_r[0]), Rational::parse(seif_r[1]), Rational::parse(seif_r[2])});
            print(io::word_json(lw.word, lw.labels));
            return kFound;
        }
        if (*pred) {
            SeifertParams sp{Rational::parse(pred_r[0]), Rational::parse(pred_r[1]), Rational::parse(pred_r[2])};
            print(predicate_json(sp));
            return kFound;
        }
        if (*der) {
            if (limits.max_depth == 0 || limits.max_states == 0) throw DomainError("derive limits must be positive");
            auto a = io::parse_word_file(der_from), b = io::parse_word_file(der_to);
            if (a.word.holes() != b.word.holes()) throw DomainError("source and target have different hole counts");
            auto r = derive(TwistMultiset(a.word), TwistMultiset(b.word), limits);
            json doc = {{"status", to_string(r.status)}, {"states_visited", r.states_visited}};
            if (r.certificate) doc["certificate"] = io::certificate_json(*r.certificate);
            print(doc);
            switch (r.status) {
                case DeriveStatus::Found: return kFound;
                case DeriveStatus::ImageMismatch: return kNone;
                default: return kInconclusive;
            }
        }
        if (*ver) {
            if (ver_files.size() == 1) throw CLI::ValidationError("verify", "give zero or two word files");
            bool all = true;
            json conv = json::array();
            for (const auto& c : all_conventions()) conv.push_back({{"convention", c.str()}, {"classical_lantern", classical_lantern_holds(c)}});
            json gl = json::array();
            for (int k = 1; k <= k_max; ++k) {
                auto g = generalized_lantern(k);
                bool abel = abelianize(g.left) == abelianize(g.right);
                bool exact = elements_equal(compose_word(g.left), compose_word(g.right));
                all = all && abel && exact;
                gl.push_back({{"k", k}, {"abelian", abel}, {"exact", exact}});
            }
            json doc = {{"pinned_convention", pinned_convention().str()}, {"conventions", conv}, {"generalized_lantern", gl}};
            int code = all ? kFound : 1;
            if (ver_files.size() == 2) {
                auto a = io::parse_word_file(ver_files[0]), b = io::parse_word_file(ver_files[1]);
                if (a.word.holes() != b.word.holes()) throw DomainError("words have different hole counts");
                auto ea = compose_word(a.word), eb = compose_word(b.word);
                bool equal = elements_equal(ea, eb);
                doc["comparison"] = {{"equal", equal},
                                     {"abelian_equal", ea.ab == eb.ab},
                                     {"action_equal", ea.aut == eb.aut}};
                if (all && !equal) code = kNone;
            }
            print(doc);
            return code;
        }
        if (*hom) {
            auto wf = hom_src.load();
            print(io::homology_json(filling_homology(wf.word)));
            return kFound;
        }
        if (*grid) {
            SolveOptions opts;
            opts.node_budget = node_budget(g_budget);
            json rows = json::array();
            std::ostringstream csv;
            csv << "r1,r2,r3,k1,k2,c1,predicate,solver_status,solutions,agree\n";
            bool all_agree = true, inconclusive = false;
            for (const auto& r1 : rational_list(g_r1))
                for (const auto& r2 : rational_list(g_r2))
                    for (const auto& r3 : rational_list(g_r3)) {
                        SeifertParams sp{r1, r2, r3};
                        auto verdict = fillability_predicate(sp);
                        auto r = enumerate_positive_factorizations(abelianize(seifert_word(sp).word), opts);
                        std::string status = r.status == SolveStatus::Inconclusive ? "inconclusive"
                                             : r.solutions.empty()                 ? "empty"
                                                                                   : "found";
                        bool agree = r.status != SolveStatus::Inconclusive &&
                                     r.solutions.empty() == (verdict == FillabilityVerdict::NonfillableExists);
                        inconclusive = inconclusive || r.status == SolveStatus::Inconclusive;
                        all_agree = all_agree && agree;
                        csv << r1 << "," << r2 << "," << r3 << "," << sp.k1() << "," << sp.k2() << "," << sp.c1() << ","
                            << to_string(verdict) << "," << status << "," << r.solutions.size() << ","
                            << (agree ? "yes" : "no") << "\n";
                        rows.push_back({{"r1", r1.str()}, {"r2", r2.str()}, {"r3", r3.str()}, {"k1", sp.k1()},
                                        {"k2", sp.k2()}, {"c1", sp.c1()}, {"predicate", to_string(verdict)},
                                        {"solver_status", status}, {"solutions", r.solutions.size()}, {"agree", agree}});
                    }
            if (g_format == "json")
                print(rows);
            else
                std::cout << csv.str();
            if (inconclusive) return kInconclusive;
            return all_agree ? kFound : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
