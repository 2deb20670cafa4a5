#include "doctest.h"
#include "ecom/cli/commands.hpp"
#include "ecom/cli/published.hpp"
#include "ecom/cli/report.hpp"

using namespace ecom::cli;

namespace {

void leaves(const json& j, std::vector<std::string>& out) {
    if (j.is_structured()) {
        for (const auto& v : j) leaves(v, out);
    } else if (j.is_string()) {
        out.push_back(j.get<std::string>());
    } else if (!j.is_null()) {
        out.push_back(j.dump());
    }
}

}  // namespace

TEST_CASE("report status and exit codes") {
    Report r("demo");
    r.check("a", 1, 1, "published");
    CHECK(r.ok());
    CHECK(r.exit_code() == 0);
    r.check_true("b", false, "derived");
    CHECK(r.exit_code() == 1);
    CHECK(r.to_json()["status"] == "mismatch");
    r.set_error("NoSolution", "nothing");
    CHECK(r.exit_code() == 2);
    CHECK(r.to_json()["status"] == "error");
}

TEST_CASE("input hashes are SHA-256") {
    Report r("demo");
    r.add_input("empty", "");
    CHECK(r.to_json()["inputs"]["empty"] == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("reports round-trip through JSON") {
    for (const Report& r : {cmd_snf("[[2,4,4],[-6,6,12],[10,-4,-16]]"), cmd_u3t2(3), cmd_flag(3, true),
                            cmd_group_cohomology("S3", "M_S", 11, 3)}) {
        const Report back = Report::from_json(r.to_json());
        CHECK(back == r);
        CHECK(back.to_json().dump() == r.to_json().dump());
        CHECK(Report::from_json(json::parse(r.to_json().dump())) == r);
    }
}

TEST_CASE("text and JSON carry the same values") {
    const Report r = cmd_serre("flbar3", 3u, std::nullopt);
    const std::string text = r.to_text(false);
    std::vector<std::string> values;
    leaves(r.to_json(false), values);
    for (const auto& v : values) CHECK_MESSAGE(text.find(v) != std::string::npos, v);
}

TEST_CASE("commands are deterministic") {
    CHECK(cmd_serre("fl3xfl3", 2u, std::nullopt).to_json(false).dump() ==
          cmd_serre("fl3xfl3", 2u, std::nullopt).to_json(false).dump());
    CHECK(cmd_ecom_u3(3).to_json(false).dump() == cmd_ecom_u3(3).to_json(false).dump());
}

TEST_CASE("snf") {
    const Report r = cmd_snf("[[2,4,4],[-6,6,12],[10,-4,-16]]");
    CHECK(r.ok());
    CHECK(r.results()["invariant_factors"] == json{"2", "6", "12"});
    CHECK(guarded("snf", [] { return cmd_snf("[[1,2],[3]]"); }).exit_code() == 2);
    CHECK(guarded("snf", [] { return cmd_snf("not json"); }).exit_code() == 2);
}

TEST_CASE("grpcoh against the published tables") {
    const Report t = cmd_group_cohomology("Σ3", "trivial", 12);
    CHECK(t.ok());
    CHECK(t.checks().size() == 1);
    CHECK(t.results()["cohomology"][4] == "Z/6");
    CHECK(cmd_group_cohomology("S3", "standard⊗sign", 11, 3).results()["cohomology"] ==
          json{"0", "Z/3", "0", "0", "0", "Z/3", "0", "0", "0", "Z/3", "0", "0"});
    CHECK(cmd_group_cohomology("S3", "trivial", 0).results()["cohomology"] == json{"Z"});
    const Report bad = guarded("grpcoh", [] { return cmd_group_cohomology("A5", "trivial", 3); });
    CHECK(bad.exit_code() == 2);
    CHECK(bad.to_json()["error"]["kind"] == "UnknownName");
}

TEST_CASE("published tables") {
    const auto z = published_sigma3_cohomology("trivial", 0, 12);
    REQUIRE(z.has_value());
    CHECK(z->at(0).to_string() == "Z");
    CHECK(z->at(8).to_string() == "Z/6");
    CHECK_FALSE(published_sigma3_cohomology("M'", 0, 4).has_value());
    CHECK(published_total_cohomology("flbar3_p3", 6)->at(5).to_string() == "Z/3");
}

TEST_CASE("serre over the bundled configs") {
    for (const char* name : {"flbar3", "fl3xfl3"})
        for (unsigned p : {2u, 3u}) CHECK(cmd_serre(name, p, std::nullopt).ok());
    const Report loose = guarded("serre", [] { return cmd_serre("flbar3", 3u, 20); });
    CHECK(loose.exit_code() == 2);
    CHECK(loose.to_json()["error"]["kind"] == "Ambiguous");
    CHECK(guarded("serre", [] { return cmd_serre("/nonexistent.json", std::nullopt, std::nullopt); }).exit_code() == 2);
}

TEST_CASE("ecom-u3 and rational-ring status") {
    CHECK(cmd_ecom_u3(3).exit_code() == 0);
    const Report two = cmd_ecom_u3(2);
    CHECK(two.results()["dimensions"][0] == 1);
    CHECK(cmd_u3t2(2).ok());
    const Report q = cmd_rational_ring();
    CHECK(q.results()["poincare"] == "1+t^4+2t^6+t^8+t^12");
}
