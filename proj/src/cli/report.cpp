#include "ecom/cli/report.hpp"

#include <sstream>

#include "ecom/util/hash.hpp"

namespace ecom::cli {

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::add_input(const std::string& name, const std::string& content) {
    inputs_[name] = util::sha256_hex(content);
}

void Report::check(const std::string& name, const json& expected, const json& actual, const std::string& source) {
    checks_.push_back({name, expected, actual, source, expected == actual});
}

void Report::check_true(const std::string& name, bool value, const std::string& source) {
    check(name, true, value, source);
}

void Report::set_error(const std::string& kind, const std::string& message) {
    error_ = {{"kind", kind}, {"message", message}};
}

bool Report::ok() const {
    if (has_error()) return false;
    for (const auto& c : checks_)
        if (!c.ok) return false;
    return true;
}

int Report::exit_code() const { return has_error() ? 2 : ok() ? 0 : 1; }

json Report::to_json(bool with_timings) const {
    json j;
    j["schema"] = kReportSchema;
    j["command"] = command_;
    j["arguments"] = arguments_;
    j["inputs"] = inputs_;
    j["results"] = results_;
    j["checks"] = json::array();
    for (const auto& c : checks_)
        j["checks"].push_back(
            {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"source", c.source}, {"ok", c.ok}});
    j["notes"] = notes_;
    j["status"] = has_error() ? "error" : ok() ? "ok" : "mismatch";
    if (has_error()) j["error"] = error_;
    if (with_timings) j["timings_ms"] = timings_;
    return j;
}

Report Report::from_json(const json& j) {
    Report r(j.at("command").get<std::string>());
    r.arguments_ = j.at("arguments");
    r.inputs_ = j.at("inputs");
    r.results_ = j.at("results");
    for (const auto& c : j.at("checks"))
        r.checks_.push_back({c.at("name").get<std::string>(), c.at("expected"), c.at("actual"),
                             c.at("source").get<std::string>(), c.at("ok").get<bool>()});
    r.notes_ = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("error")) r.error_ = j.at("error");
    if (j.contains("timings_ms")) r.timings_ = j.at("timings_ms");
    return r;
}

namespace {

bool is_flat(const json& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& e : v)
        if (e.is_array() || e.is_object()) return false;
    return true;
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string flat(const json& v) {
    if (!v.is_array()) return scalar(v);
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar(v[i]);
    return out + "]";
}

void render(std::ostringstream& os, const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [k, e] : v.items()) {
            if (is_flat(e)) {
                os << pad << k << ": " << flat(e) << "\n";
            } else {
                os << pad << k << ":\n";
                render(os, e, indent + 2);
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (is_flat(e)) {
                os << pad << "- " << flat(e) << "\n";
            } else {
                os << pad << "-\n";
                render(os, e, indent + 2);
            }
        }
    } else {
        os << pad << scalar(v) << "\n";
    }
}

}  // namespace

std::string Report::to_text(bool with_timings) const {
    std::ostringstream os;
    render(os, to_json(with_timings), 0);
    return os.str();
}

}  // namespace ecom::cli
