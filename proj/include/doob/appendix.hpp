#pragma once

// Embedded golden data: the published code tables, stored as text files in
// data/appendix and loaded through the codes module's format.

#include "doob/codes.hpp"

#include <string>
#include <vector>

namespace doob {

struct AppendixTable {
    std::string id; // "T2".."T10" plus "table1331" for the (1+3,4^3,3) code
    DoobParams params;
    int k = 0;
    int d = 0;
    Code code;
};

// Directory resolution: explicit argument > DOOB_DATA_DIR environment
// variable > compiled-in default.
std::string default_data_dir();

const std::vector<AppendixTable>& appendix_tables(const std::string& data_dir = "");

const AppendixTable& appendix_table(const std::string& id, const std::string& data_dir = "");

struct AppendixReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

// is_mds with captioned parameters for every table; the captioned
// inequivalences (T2/T3, T5/T6, T8/T9) and the uniqueness claims checked
// against the classification representatives.
AppendixReport verify_appendix(const std::string& data_dir = "");

} // namespace doob
