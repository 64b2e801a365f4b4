#pragma once

#include "hopfkit/check.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hopfkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "hopfkit 1.0.0";

/// One pipeline stage: its checks plus free-form details (dims, seeds,
/// certificates).
struct Stage {
    std::string name;
    CheckList checks;
    Json details = Json::object();
    std::string error;  // set when the stage aborted
    bool pass() const { return error.empty() && checks.ok(); }
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // (description, sha256)
    Json parameters = Json::object();
    std::vector<Stage> stages;

    bool pass() const;
    Stage& add_stage(std::string name);
    Json to_json() const;
    std::string to_text() const;
    static Report from_json(const Json& j);
};

Json checks_to_json(const CheckList& c);
CheckList checks_from_json(const Json& j);

std::string sha256_hex(const std::string& data);

}  // namespace hopfkit
