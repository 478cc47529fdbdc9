#pragma once

// Run reporting for the command-line driver. A report carries the echoed
// command, one entry per action or sweep with counts and wall time, and the
// first failing check of each entry. The text and JSON renderings both derive
// their status from ok(), so the exit code and the machine output agree.

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace mzv {

struct ReportEntry {
    std::string name;
    size_t checked = 0;
    size_t failed = 0;
    double seconds = 0.0;
    std::string detail;  // first failure label, or a result summary
};

struct RunReport {
    std::string command;
    std::vector<ReportEntry> entries;

    bool ok() const {
        for (const ReportEntry& e : entries)
            if (e.failed > 0) return false;
        return true;
    }

    std::string text() const {
        std::string out = "command: " + command + "\n";
        for (const ReportEntry& e : entries) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "  %-16s %6zu items, %zu failed, %.2f s  %s\n",
                          e.name.c_str(), e.checked, e.failed, e.seconds,
                          e.failed == 0 ? "PASS" : "FAIL");
            out += buf;
            if (!e.detail.empty()) out += "    " + e.detail + "\n";
        }
        out += std::string("status: ") + (ok() ? "PASS" : "FAIL") + "\n";
        return out;
    }

    std::string json_text() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["status"] = ok() ? "pass" : "fail";
        j["entries"] = nlohmann::ordered_json::array();
        for (const ReportEntry& e : entries) {
            nlohmann::ordered_json je;
            je["name"] = e.name;
            je["checked"] = e.checked;
            je["failed"] = e.failed;
            je["seconds"] = e.seconds;
            je["detail"] = e.detail;
            j["entries"].push_back(je);
        }
        return j.dump() + "\n";
    }
};

}  // namespace mzv
