#include "grb/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace grb {

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

void Report::add(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
}

void Report::merge(const ValidationReport& rep, const std::string& prefix) {
    for (auto c : rep.checks) {
        c.name = prefix.empty() ? c.name : prefix + ":" + c.name;
        checks.push_back(std::move(c));
    }
}

std::string Report::text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "input:   " << digest << "\n";
    for (auto& c : checks)
        os << (c.pass ? "  [ ok ] " : "  [FAIL] ") << c.name
           << (c.detail.empty() ? "" : "  -- " + c.detail) << "\n";
    os << (pass() ? "PASS" : "FAIL") << "\n";
    if (emitted) os << "---\n" << *emitted;
    return os.str();
}

std::string Report::machine() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["digest"] = digest;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    if (emitted) j["emitted"] = *emitted;
    return j.dump(2) + "\n";
}

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hexDigest(const std::string& data) {
    uint64_t h = fnv1a(data);
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (i * 4)) & 0xf);
    return os.str();
}

} // namespace grb
