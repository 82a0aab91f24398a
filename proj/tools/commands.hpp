#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace jetcalc::cli {

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json expected;  // null when nothing printed is available
    nlohmann::json computed = nlohmann::json::object();
    bool match = false;
    nlohmann::json tags = nlohmann::json::object();
    long elapsed_ms = 0;

    nlohmann::json to_json() const;
    std::string text() const;
};

// args excludes the program name; returns 0 matched, 1 mismatch, 2 usage error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetcalc::cli
