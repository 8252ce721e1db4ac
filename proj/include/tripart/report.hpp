#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tripart {

enum class VerdictStatus { Pass, Fail, Observed };

std::string to_string(VerdictStatus s);
VerdictStatus parse_verdict_status(const std::string& s);

struct Verdict {
    std::string name;
    VerdictStatus status = VerdictStatus::Observed;
    std::string detail;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

/// Outcome of one command. Everything except `workers` and `elapsed_ms` is a
/// pure function of the command and its parameters.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Verdict> verdicts;
    std::vector<Table> tables;
    std::vector<std::string> notes;
    std::string tool_version;
    unsigned workers = 1;
    double elapsed_ms = 0.0;

    RunReport();
    explicit RunReport(std::string cmd);

    void param(const std::string& key, const std::string& value) { parameters.emplace_back(key, value); }
    void verdict(const std::string& name, bool ok, const std::string& detail = {});
    void observe(const std::string& name, const std::string& detail);
    Table& table(const std::string& name, std::vector<std::string> columns);

    /// No failed verdicts.
    bool passed() const;

    /// Machine format. Execution details (workers, timing) go under "execution"
    /// and are omitted when `include_execution` is false.
    nlohmann::ordered_json to_json(bool include_execution = true) const;
    static RunReport from_json(const nlohmann::ordered_json& j);
    std::string to_machine(bool include_execution = true) const;
    std::string to_text() const;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

} // namespace tripart
