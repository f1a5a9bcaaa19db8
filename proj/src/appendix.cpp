#include "doob/appendix.hpp"

#include "doob/classification.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>

#ifndef DOOB_APPENDIX_DIR
#define DOOB_APPENDIX_DIR "data/appendix"
#endif

namespace doob {

namespace {

struct TableSpec {
    const char* id;
    const char* file;
    int m, n, k;
};

// Captioned parameters; d = 2m+n-k+1 throughout.
const TableSpec kTables[] = {
    {"T2", "table2.txt", 2, 0, 2},        {"T3", "table3.txt", 2, 0, 2},
    {"T4", "table4.txt", 1, 2, 2},        {"T5", "table5.txt", 2, 1, 2},
    {"T6", "table6.txt", 2, 1, 2},        {"T7", "table7.txt", 1, 3, 2},
    {"T8", "table8.txt", 2, 1, 3},        {"T9", "table9.txt", 2, 1, 3},
    {"table1331", "table1331.txt", 1, 3, 3}, {"T10", "table10.txt", 2, 2, 3},
};

} // namespace

std::string default_data_dir() {
    if (const char* env = std::getenv("DOOB_DATA_DIR")) return env;
    return DOOB_APPENDIX_DIR;
}

const std::vector<AppendixTable>& appendix_tables(const std::string& data_dir) {
    static std::mutex mu;
    static std::string cached_dir;
    static std::vector<AppendixTable> cached;
    std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    std::lock_guard<std::mutex> lock(mu);
    if (cached.empty() || cached_dir != dir) {
        std::vector<AppendixTable> out;
        for (const TableSpec& spec : kTables) {
            AppendixTable t;
            t.id = spec.id;
            t.params = {spec.m, spec.n};
            t.k = spec.k;
            t.d = t.params.weight() - spec.k + 1;
            t.code = load_code(dir + "/" + spec.file);
            if (t.code.params != t.params || t.code.declared_k != t.k)
                throw std::runtime_error(std::string("appendix table ") + spec.id +
                                         ": parameters disagree with file header");
            out.push_back(std::move(t));
        }
        cached = std::move(out);
        cached_dir = dir;
    }
    return cached;
}

const AppendixTable& appendix_table(const std::string& id, const std::string& data_dir) {
    for (const AppendixTable& t : appendix_tables(data_dir))
        if (t.id == id) return t;
    throw std::invalid_argument("unknown appendix table: " + id);
}

AppendixReport verify_appendix(const std::string& data_dir) {
    AppendixReport rep;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        rep.items.push_back({std::move(name), pass, std::move(detail)});
    };
    const auto& tables = appendix_tables(data_dir);

    for (const AppendixTable& t : tables) {
        bool mds = is_mds(t.code) && min_distance(t.code) == t.d;
        add(t.id + " is an MDS (" + std::to_string(t.params.m) + "+" +
                std::to_string(t.params.n) + ",4^" + std::to_string(t.k) + "," +
                std::to_string(t.d) + ") code",
            mds);
    }

    auto get = [&](const char* id) -> const Code& { return appendix_table(id, data_dir).code; };
    for (auto [a, b] : {std::pair{"T2", "T3"}, {"T5", "T6"}, {"T8", "T9"}}) {
        bool ineq = !codes_equivalent(get(a), get(b)).has_value();
        add(std::string(a) + " inequivalent to " + b, ineq);
    }

    // Uniqueness / completeness claims against the classification pipeline.
    struct Claim {
        const char* id;
        int m, n, k;
    };
    for (const Claim& cl : {Claim{"T4", 1, 2, 2}, {"T7", 1, 3, 2}, {"table1331", 1, 3, 3},
                            {"T10", 2, 2, 3}}) {
        ClassificationResult r = classify(cl.m, cl.n, cl.k);
        bool ok = r.class_count() == 1 &&
                  codes_equivalent(r.representatives.front(), get(cl.id)).has_value();
        add(std::string(cl.id) + " is the unique class representative", ok);
    }
    // The paired tables must exhaust their two classes.
    for (auto [a, b, m, n, k] :
         {std::tuple{"T2", "T3", 2, 0, 2}, {"T5", "T6", 2, 1, 2}, {"T8", "T9", 2, 1, 3}}) {
        ClassificationResult r = classify(m, n, k);
        bool ok = r.class_count() == 2;
        if (ok) {
            for (const char* id : {a, b}) {
                int hits = 0;
                for (const Code& rep : r.representatives)
                    if (codes_equivalent(rep, get(id))) ++hits;
                ok = ok && hits == 1;
            }
        }
        add(std::string(a) + "/" + b + " exhaust the two classes", ok);
    }
    return rep;
}

} // namespace doob
