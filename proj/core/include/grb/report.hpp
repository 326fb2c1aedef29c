#pragma once

#include "grb/validate.hpp"

#include <optional>

namespace grb {

/// Command outcome in both human and machine form. The machine form has
/// the stable key set {command, digest, checks, emitted?} and is
/// byte-identical for identical inputs and seeds.
struct Report {
    std::string command;
    std::string digest;
    std::vector<CheckResult> checks;
    std::optional<std::string> emitted;

    bool pass() const;
    void add(const std::string& name, bool ok, const std::string& detail = "");
    void merge(const ValidationReport& rep, const std::string& prefix = "");
    std::string text() const;
    std::string machine() const;
};

uint64_t fnv1a(const std::string& data);
std::string hexDigest(const std::string& data);

} // namespace grb
