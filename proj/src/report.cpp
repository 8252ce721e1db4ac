#include "tripart/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tripart/version.hpp"

namespace tripart {

std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Observed: return "observed";
    }
    return "observed";
}

VerdictStatus parse_verdict_status(const std::string& s) {
    if (s == "pass") return VerdictStatus::Pass;
    if (s == "fail") return VerdictStatus::Fail;
    if (s == "observed") return VerdictStatus::Observed;
    throw std::invalid_argument("unknown verdict status '" + s + "'");
}

RunReport::RunReport() : tool_version(kToolVersion) {}
RunReport::RunReport(std::string cmd) : command(std::move(cmd)), tool_version(kToolVersion) {}

void RunReport::verdict(const std::string& name, bool ok, const std::string& detail) {
    verdicts.push_back({name, ok ? VerdictStatus::Pass : VerdictStatus::Fail, detail});
}

void RunReport::observe(const std::string& name, const std::string& detail) {
    verdicts.push_back({name, VerdictStatus::Observed, detail});
}

Table& RunReport::table(const std::string& name, std::vector<std::string> columns) {
    tables.push_back({name, std::move(columns), {}});
    return tables.back();
}

bool RunReport::passed() const {
    return std::none_of(verdicts.begin(), verdicts.end(),
                        [](const Verdict& v) { return v.status == VerdictStatus::Fail; });
}

nlohmann::ordered_json RunReport::to_json(bool include_execution) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["tool_version"] = tool_version;
    auto& params = j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["passed"] = passed();
    auto& vs = j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) vs.push_back({{"name", v.name}, {"status", to_string(v.status)}, {"detail", v.detail}});
    auto& ts = j["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : tables) ts.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
    j["notes"] = notes;
    if (include_execution) j["execution"] = {{"workers", workers}, {"elapsed_ms", elapsed_ms}};
    return j;
}

RunReport RunReport::from_json(const nlohmann::ordered_json& j) {
    RunReport r(j.at("command").get<std::string>());
    r.tool_version = j.at("tool_version").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items()) r.parameters.emplace_back(k, v.get<std::string>());
    for (const auto& v : j.at("verdicts")) {
        r.verdicts.push_back({v.at("name").get<std::string>(), parse_verdict_status(v.at("status").get<std::string>()),
                              v.at("detail").get<std::string>()});
    }
    for (const auto& t : j.at("tables")) {
        r.tables.push_back({t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                            t.at("rows").get<std::vector<std::vector<std::string>>>()});
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("execution")) {
        r.workers = j["execution"].at("workers").get<unsigned>();
        r.elapsed_ms = j["execution"].at("elapsed_ms").get<double>();
    }
    return r;
}

std::string RunReport::to_machine(bool include_execution) const { return to_json(include_execution).dump(2) + "\n"; }

namespace {

void print_table(std::ostringstream& out, const Table& t) {
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    const auto line = [&](const std::vector<std::string>& cells) {
        out << " ";
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << " " << cells[c];
            if (c + 1 < cells.size() && c < width.size()) out << std::string(width[c] - cells[c].size(), ' ');
        }
        out << "\n";
    };
    out << t.name << "\n";
    line(t.columns);
    for (const auto& row : t.rows) line(row);
}

} // namespace

std::string RunReport::to_text() const {
    std::ostringstream out;
    out << command << " (tripart " << tool_version << ")\n";
    for (const auto& [k, v] : parameters) out << "  " << k << " = " << v << "\n";
    for (const auto& t : tables) print_table(out, t);
    for (const auto& v : verdicts) {
        out << (v.status == VerdictStatus::Pass ? "PASS " : v.status == VerdictStatus::Fail ? "FAIL " : "INFO ")
            << v.name;
        if (!v.detail.empty()) out << ": " << v.detail;
        out << "\n";
    }
    for (const auto& n : notes) out << "note: " << n << "\n";
    out << "result: " << (passed() ? "ok" : "FAILED") << " (" << elapsed_ms << " ms, " << workers << " worker"
        << (workers == 1 ? "" : "s") << ")\n";
    return out.str();
}

} // namespace tripart
