// Command-line front end: graph info, coclique census, classification,
// generic search, theorem/appendix verification and the two nonexistence
// checks. Exit codes: 0 pass, 1 fail, 2 inconclusive (budget), 64 usage.

#include "doob/appendix.hpp"
#include "doob/classification.hpp"
#include "doob/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace doob;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

std::string class_name(PartitionClass c) {
    return std::string(1, static_cast<char>('a' + static_cast<int>(c)));
}

int run_graph_info(const std::string& kind, bool as_json) {
    const FactorGraph* g = nullptr;
    if (kind == "shrikhande") g = &shrikhande();
    else if (kind == "k4") g = &k4();
    else if (kind == "k4x4") g = &k4_squared();
    if (!g) {
        std::cerr << "unknown graph kind '" << kind << "' (shrikhande|k4|k4x4)\n";
        return kExitUsage;
    }
    size_t aut = g->kind == FactorKind::Shrikhande ? shrikhande_group().size()
                                                   : automorphism_group(*g).size();
    auto srg = srg_params(*g);
    std::vector<int> degrees;
    for (int v = 0; v < g->vertex_count; ++v) degrees.push_back(g->degree(v));
    if (as_json) {
        json j{{"kind", kind},
               {"vertices", g->vertex_count},
               {"degrees", degrees},
               {"automorphism_group_order", aut}};
        if (srg) j["srg"] = {srg->v, srg->k, srg->lambda, srg->mu};
        else j["srg"] = nullptr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << kind << ": " << g->vertex_count << " vertices, degree "
                  << g->degree(0) << ", |Aut| = " << aut << "\n";
        if (srg)
            std::cout << "srg(" << srg->v << "," << srg->k << "," << srg->lambda << ","
                      << srg->mu << ")\n";
        else
            std::cout << "not strongly regular (complete graph)\n";
    }
    return kExitPass;
}

int run_cocliques(bool partitions, bool as_json) {
    auto cs = enumerate_cocliques(shrikhande());
    json j;
    j["cocliques"] = json::array();
    if (!as_json) std::cout << cs.size() << " cocliques:\n";
    for (Coclique c : cs) {
        std::string type = coclique_type(c) == CocliqueType::Linear ? "linear" : "semilinear";
        std::vector<std::string> members;
        for (int v = 0; v < 16; ++v)
            if (c & (1u << v)) members.push_back(pair_to_string(static_cast<Z4Pair>(v)));
        if (as_json) {
            j["cocliques"].push_back({{"members", members}, {"type", type}});
        } else {
            std::cout << " ";
            for (const auto& s : members) std::cout << " " << s;
            std::cout << "  [" << type << "]\n";
        }
    }
    if (partitions) {
        auto ps = enumerate_partitions(shrikhande());
        j["partitions"] = json::array();
        if (!as_json) std::cout << ps.size() << " coclique partitions:\n";
        for (const auto& p : ps) {
            std::string cls = class_name(classify_partition(p));
            std::vector<std::vector<std::string>> parts;
            for (Coclique part : p) {
                parts.emplace_back();
                for (int v = 0; v < 16; ++v)
                    if (part & (1u << v))
                        parts.back().push_back(pair_to_string(static_cast<Z4Pair>(v)));
            }
            if (as_json) {
                j["partitions"].push_back({{"parts", parts}, {"class", cls}});
            } else {
                std::cout << " ";
                for (const auto& part : parts) {
                    std::cout << " {";
                    for (size_t i = 0; i < part.size(); ++i)
                        std::cout << (i ? " " : "") << part[i];
                    std::cout << "}";
                }
                std::cout << "  class " << cls << "\n";
            }
        }
    }
    if (as_json) std::cout << j.dump(2) << "\n";
    return kExitPass;
}

int run_classify(int m, int n, int k, bool as_json) {
    ClassificationResult res;
    try {
        res = classify(m, n, k);
    } catch (const std::runtime_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    }
    if (as_json) {
        json j{{"m", m}, {"n", n}, {"k", k}, {"d", res.d},
               {"class_count", res.class_count()}, {"notes", res.notes}};
        j["representatives"] = json::array();
        for (const Code& c : res.representatives)
            j["representatives"].push_back(json::parse(code_to_json(c)));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "(" << m << "+" << n << ",4^" << k << "," << res.d << "): "
                  << res.class_count() << " equivalence classes\n";
        for (const Code& c : res.representatives) std::cout << "\n" << code_to_text(c);
        for (const auto& note : res.notes) std::cout << "  " << note << "\n";
    }
    return kExitPass;
}

int run_search(int m, int n, int k, uint64_t budget, const std::string& symmetry, int jobs,
               bool as_json) {
    SearchConfig cfg;
    cfg.params = {m, n};
    cfg.k = k;
    cfg.node_budget = budget;
    cfg.jobs = jobs;
    if (symmetry == "none") cfg.symmetry = SymmetryMode::None;
    else if (symmetry == "stabilized") cfg.symmetry = SymmetryMode::CoordinateStabilized;
    else if (symmetry == "full") cfg.symmetry = SymmetryMode::FullCanonicalAugmentation;
    else {
        std::cerr << "unknown symmetry mode '" << symmetry << "' (none|stabilized|full)\n";
        return kExitUsage;
    }
    SearchOutcome out = search_mds(cfg);
    bool complete = out.status == SearchStatus::Complete;
    json j{{"m", m}, {"n", n}, {"k", k},
           {"status", complete ? "complete" : "budget-exceeded"},
           {"nodes_visited", out.nodes_visited},
           {"raw_codes", out.raw_codes},
           {"class_count", out.classes.size()}};
    if (as_json) {
        j["classes"] = json::array();
        for (const Code& c : out.classes) j["classes"].push_back(json::parse(code_to_json(c)));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump() << "\n";
        for (const Code& c : out.classes) std::cout << "\n" << code_to_text(c);
    }
    return complete ? kExitPass : kExitInconclusive;
}

int run_verify_theorem(int max_weight, uint64_t budget, bool as_json) {
    auto report = verify_main_theorem(max_weight, budget);
    bool any_fail = false, any_inconclusive = false;
    json items = json::array();
    for (const TheoremCheck& c : report) {
        const char* status = c.inconclusive ? "inconclusive" : (c.pass ? "pass" : "fail");
        any_fail |= !c.pass && !c.inconclusive;
        any_inconclusive |= c.inconclusive;
        if (as_json)
            items.push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}});
        else
            std::cout << "[" << status << "] " << c.name
                      << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    if (as_json)
        std::cout << json{{"command", "verify-theorem"},
                          {"status", any_fail ? "fail"
                                              : (any_inconclusive ? "inconclusive" : "pass")},
                          {"checks", items}}
                         .dump(2)
                  << "\n";
    if (any_fail) return kExitFail;
    return any_inconclusive ? kExitInconclusive : kExitPass;
}

int run_verify_appendix(const std::string& data_dir, bool as_json) {
    AppendixReport report = verify_appendix(data_dir);
    json items = json::array();
    for (const auto& item : report.items) {
        if (as_json)
            items.push_back({{"name", item.name},
                             {"status", item.pass ? "pass" : "fail"},
                             {"detail", item.detail}});
        else
            std::cout << "[" << (item.pass ? "pass" : "fail") << "] " << item.name
                      << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
    }
    if (as_json)
        std::cout << json{{"command", "verify-appendix"},
                          {"status", report.all_pass() ? "pass" : "fail"},
                          {"checks", items}}
                         .dump(2)
                  << "\n";
    return report.all_pass() ? kExitPass : kExitFail;
}

int run_check(const std::string& which, uint64_t budget, bool as_json) {
    const NonexistenceCheck* c = nullptr;
    if (which == "304") c = &check_304(budget);
    else if (which == "n6d5") c = &check_n6d5(budget);
    else {
        std::cerr << "unknown check '" << which << "' (304|n6d5)\n";
        return kExitUsage;
    }
    const char* status =
        !c->complete ? "inconclusive" : (c->nonexistent ? "pass" : "fail");
    if (as_json) {
        std::cout << json{{"command", "check " + which},
                          {"status", status},
                          {"nodes_visited", c->nodes_visited},
                          {"details", c->details}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "[" << status << "] check " << which << "\n";
        for (const auto& s : c->details) std::cout << "  " << s << "\n";
    }
    if (!c->complete) return kExitInconclusive;
    return c->nonexistent ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MDS codes in Doob graphs D(m,n): construction, classification, search"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    auto* graph = app.add_subcommand("graph", "factor graph queries");
    graph->require_subcommand(1);
    graph->fallthrough();
    std::string kind;
    auto* info = graph->add_subcommand("info", "vertex/degree/SRG/automorphism summary");
    info->add_option("kind", kind, "shrikhande|k4|k4x4")->required();
    info->fallthrough();

    bool partitions = false;
    auto* coc = app.add_subcommand("cocliques", "coclique census of the Shrikhande graph");
    coc->add_flag("--partitions", partitions, "also list the coclique partitions");
    coc->fallthrough();

    int m = 1, n = 0, k = 1, jobs = 1, max_weight = 10;
    uint64_t budget = 1'000'000'000;
    std::string symmetry = "full", data_dir, which;

    auto* cls = app.add_subcommand("classify", "constructive classification for (m,n,k)");
    cls->add_option("--m", m)->required();
    cls->add_option("--n", n)->required();
    cls->add_option("--k", k)->required();
    cls->fallthrough();

    auto* search = app.add_subcommand("search", "generic backtracking search oracle");
    search->add_option("--m", m)->required();
    search->add_option("--n", n)->required();
    search->add_option("--k", k)->required();
    search->add_option("--budget", budget, "node budget");
    search->add_option("--symmetry", symmetry, "none|stabilized|full");
    search->add_option("--jobs", jobs, "worker threads");
    search->fallthrough();

    auto* vt = app.add_subcommand("verify-theorem", "reproduce the classification theorem");
    vt->add_option("--max", max_weight, "largest 2m+n covered by reduction chains");
    vt->add_option("--budget", budget, "node budget for the search cross-checks");
    vt->fallthrough();

    auto* va = app.add_subcommand("verify-appendix", "validate the embedded code tables");
    va->add_option("--data-dir", data_dir, "override the table directory");
    va->fallthrough();

    auto* chk = app.add_subcommand("check", "nonexistence searches");
    chk->add_option("which", which, "304|n6d5")->required();
    chk->add_option("--budget", budget, "node budget");
    chk->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (info->parsed()) return run_graph_info(kind, as_json);
        if (coc->parsed()) return run_cocliques(partitions, as_json);
        if (cls->parsed()) return run_classify(m, n, k, as_json);
        if (search->parsed()) return run_search(m, n, k, budget, symmetry, jobs, as_json);
        if (vt->parsed()) return run_verify_theorem(max_weight, budget, as_json);
        if (va->parsed()) return run_verify_appendix(data_dir, as_json);
        if (chk->parsed()) return run_check(which, budget, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
