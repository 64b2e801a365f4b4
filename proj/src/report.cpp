#include "hopfkit/report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

bool Report::pass() const {
    for (const auto& s : stages)
        if (!s.pass()) return false;
    return !stages.empty();
}

Stage& Report::add_stage(std::string name) {
    stages.push_back(Stage{std::move(name), {}, Json::object(), {}});
    return stages.back();
}

Json checks_to_json(const CheckList& c) {
    Json arr = Json::array();
    for (const auto& k : c.items()) {
        Json o;
        o["id"] = k.id;
        o["pass"] = k.pass;
        o["evaluated"] = k.evaluated;
        if (!k.witness.empty()) o["witness"] = k.witness;
        arr.push_back(std::move(o));
    }
    return arr;
}

CheckList checks_from_json(const Json& j) {
    CheckList c;
    for (const auto& o : j) c.add(o.at("id").get<std::string>(), o.at("pass").get<bool>(), o.value("witness", std::string()),
                                  o.at("evaluated").get<std::size_t>());
    return c;
}

Json Report::to_json() const {
    Json j;
    j["tool"] = kToolVersion;
    j["command"] = command;
    Json in = Json::array();
    for (const auto& [name, digest] : inputs) in.push_back({{"input", name}, {"sha256", digest}});
    j["inputs"] = std::move(in);
    j["parameters"] = parameters;
    Json st = Json::array();
    for (const auto& s : stages) {
        Json o;
        o["stage"] = s.name;
        o["verdict"] = s.pass() ? "pass" : "fail";
        if (!s.error.empty()) o["error"] = s.error;
        o["checks"] = checks_to_json(s.checks);
        o["details"] = s.details;
        st.push_back(std::move(o));
    }
    j["stages"] = std::move(st);
    j["verdict"] = pass() ? "pass" : "fail";
    return j;
}

Report Report::from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& i : j.at("inputs")) r.inputs.emplace_back(i.at("input").get<std::string>(), i.at("sha256").get<std::string>());
    r.parameters = j.at("parameters");
    for (const auto& s : j.at("stages")) {
        Stage st;
        st.name = s.at("stage").get<std::string>();
        st.error = s.value("error", std::string());
        st.checks = checks_from_json(s.at("checks"));
        st.details = s.at("details");
        r.stages.push_back(std::move(st));
    }
    return r;
}

namespace {

void render_details(std::ostringstream& os, const Json& d, const std::string& indent) {
    for (auto it = d.begin(); it != d.end(); ++it) {
        const Json& v = it.value();
        if (v.is_object()) {
            os << indent << it.key() << ":\n";
            render_details(os, v, indent + "  ");
        } else if (v.is_array() && v.size() > 8) {
            os << indent << it.key() << ": [" << v.size() << " entries]\n";
        } else {
            os << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << kToolVersion << "  " << command << "\n";
    for (const auto& [name, digest] : inputs) os << "input " << name << "  sha256:" << digest << "\n";
    if (!parameters.empty()) render_details(os, parameters, "param ");
    for (const auto& s : stages) {
        os << "\n[" << (s.pass() ? "PASS" : "FAIL") << "] " << s.name << "\n";
        if (!s.error.empty()) os << "  error: " << s.error << "\n";
        for (const auto& c : s.checks.items()) {
            os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.id << " (" << c.evaluated << ")";
            if (!c.pass && !c.witness.empty()) os << "  witness: " << c.witness;
            os << "\n";
        }
        render_details(os, s.details, "  ");
    }
    os << "\nverdict: " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

}  // namespace hopfkit
