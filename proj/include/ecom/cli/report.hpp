#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ecom::cli {

using nlohmann::json;

inline constexpr const char* kReportSchema = "ecom-report/1";

struct Check {
    std::string name;
    json expected;
    json actual;
    std::string source;  // "published" or "derived"
    bool ok = false;
    friend bool operator==(const Check&, const Check&) = default;
};

/// Result of one command. Everything but `timings` is a pure function of the inputs.
class Report {
public:
    explicit Report(std::string command = "");

    const std::string& command() const { return command_; }
    json& arguments() { return arguments_; }
    json& results() { return results_; }
    const json& results() const { return results_; }

    /// Records the SHA-256 of an input's bytes under `name`.
    void add_input(const std::string& name, const std::string& content);
    void add_note(const std::string& text) { notes_.push_back(text); }
    /// ok = (expected == actual).
    void check(const std::string& name, const json& expected, const json& actual, const std::string& source);
    /// A boolean property; expected true.
    void check_true(const std::string& name, bool value, const std::string& source);
    void set_error(const std::string& kind, const std::string& message);
    void set_timing(const std::string& stage, double milliseconds) { timings_[stage] = milliseconds; }

    const std::vector<Check>& checks() const { return checks_; }
    bool has_error() const { return !error_.is_null(); }
    bool ok() const;
    /// 0 all good, 1 a check failed, 2 an engine error.
    int exit_code() const;

    json to_json(bool with_timings = true) const;
    static Report from_json(const json& j);
    std::string to_text(bool with_timings = true) const;

    friend bool operator==(const Report& a, const Report& b) { return a.to_json() == b.to_json(); }

private:
    std::string command_;
    json arguments_ = json::object();
    json inputs_ = json::object();
    json results_ = json::object();
    std::vector<Check> checks_;
    std::vector<std::string> notes_;
    json error_;
    json timings_ = json::object();
};

}  // namespace ecom::cli
