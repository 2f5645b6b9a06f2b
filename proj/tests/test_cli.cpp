// Integration tests driving the installed CLI binary (path in $PHONCAS_CLI).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("PHONCAS_CLI");
    REQUIRE_MESSAGE(env != nullptr, "PHONCAS_CLI must point at the phoncas binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Data rows of a CSV output: skips '#' comments and the header row.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

fs::path write_temp(const std::string& name, const std::string& body) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << body;
    return p;
}

} // namespace

TEST_CASE("csv output is deterministic without the timestamp line") {
    const std::string args =
        "profile --geometry slab --gap 1e-6 --z 2e-7 --sweep z --from 1e-7 --to 9e-7 "
        "--points 7 --method image --no-timestamp";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
    // With the timestamp the first comment line differs in general, data rows
    // must still be identical.
    const RunResult c = run("profile --geometry halfspace --z 1e-9 --sweep z --from 1e-9 "
                            "--to 2e-9 --points 2");
    CHECK(c.out.find("# generated:") != std::string::npos);
}

TEST_CASE("half-space sweep follows the inverse fourth power") {
    const RunResult r = run("profile --geometry halfspace --z 1e-9 --sweep z "
                            "--from 1e-9 --to 2e-9 --points 2 --no-timestamp");
    REQUIRE(r.exit_code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    const double v1 = std::stod(rows[0][1]);
    const double v2 = std::stod(rows[1][1]);
    CHECK(v2 == doctest::Approx(v1 / 16.0).epsilon(1e-12));
    CHECK(v1 < 0.0);
}

TEST_CASE("slab sweep is symmetric about the midplane") {
    const RunResult r = run("profile --geometry slab --gap 1e-6 --z 1e-7 --sweep z "
                            "--from 2e-7 --to 8e-7 --points 4 --method image "
                            "--no-timestamp");
    REQUIRE(r.exit_code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 4);
    // z grid: 2e-7, 4e-7, 6e-7, 8e-7 pairs (0,3) and (1,2) mirror each other.
    CHECK(std::stod(rows[0][1]) == doctest::Approx(std::stod(rows[3][1])).epsilon(1e-11));
    CHECK(std::stod(rows[1][1]) == doctest::Approx(std::stod(rows[2][1])).epsilon(1e-11));
}

TEST_CASE("cubic torus sweep scales as L^-4") {
    const RunResult r = run("profile --geometry torus --L1 1e-6 --L2 1e-6 --L3 1e-6 "
                            "--sweep L --from 1e-6 --to 2e-6 --points 2 --no-timestamp");
    REQUIRE(r.exit_code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[0][1]) ==
          doctest::Approx(16.0 * std::stod(rows[1][1])).epsilon(1e-12));
}

TEST_CASE("profile rejects bad sweep configuration") {
    CHECK(run("profile --geometry halfspace --z 1e-9 --sweep gap --from 1 --to 2 "
              "--points 2").exit_code == 2);
    CHECK(run("profile --geometry halfspace --z 1e-9 --sweep z --from 1e-9 --to 2e-9 "
              "--points 1").exit_code == 2);
    CHECK(run("profile --geometry halfspace --z 1e-9 --sweep z --from 1e-9 --to 2e-9 "
              "--points 2 --medium unobtainium").exit_code == 2);
}

TEST_CASE("oracle-check verdicts and exit codes") {
    const RunResult hs = run("oracle-check --geometry halfspace --z 1e-8");
    CHECK(hs.exit_code == 0);
    CHECK(json::parse(hs.out)["report"]["verdict"] == "consistent");

    const RunResult slab = run("oracle-check --geometry slab --gap 1e-6 --z 3e-7");
    CHECK(slab.exit_code == 0);
    const json jslab = json::parse(slab.out);
    CHECK(jslab["report"]["verdict"] == "constant-factor");
    const double ratio = jslab["report"]["ratio_printed_over_image"].get<double>();
    CHECK(1.0 / ratio ==
          doctest::Approx(std::numbers::pi * std::numbers::pi).epsilon(1e-8));

    char alpha[32];
    std::snprintf(alpha, sizeof(alpha), "%.17g", 2.0 * std::numbers::pi / 3.0);
    const RunResult cone =
        run(std::string("oracle-check --geometry cone --alpha ") + alpha + " --r 1e-7");
    CHECK(cone.exit_code == 0);
    CHECK(json::parse(cone.out)["report"]["verdict"] == "consistent");

    // Wedge without an image construction: admissibility error, exit 2.
    CHECK(run("oracle-check --geometry wedge --alpha 0.9 --r 1e-7 --theta 0.3")
              .exit_code == 2);

    const RunResult ff = run("oracle-check --target freefield");
    CHECK(ff.exit_code == 0);
    CHECK(json::parse(ff.out)["verdict"] == "consistent");
    CHECK(json::parse(ff.out)["points"].size() == 20);
}

TEST_CASE("scattering command and the omega convention flag") {
    const RunResult vac = run("scattering --lambda 350e-9 --format json");
    REQUIRE(vac.exit_code == 0);
    const json jvac = json::parse(vac.out);
    const double R_vac = jvac["ratio_zp_thermal"].get<double>();
    CHECK(R_vac > 0.0035);
    CHECK(R_vac < 0.0065);
    CHECK(jvac["omega_convention"] == "vacuum");

    const RunResult med = run("scattering --lambda 350e-9 --omega-in-medium --format json");
    REQUIRE(med.exit_code == 0);
    const double R_med = json::parse(med.out)["ratio_zp_thermal"].get<double>();
    CHECK(R_med / R_vac == doctest::Approx(1.4).epsilon(1e-12));

    const RunResult fwd = run("scattering --lambda 350e-9 --theta 0 --format json");
    CHECK(json::parse(fwd.out)["ratio_zp_thermal"].get<double>() == 0.0);

    // Zero-temperature medium: thermal comparison undefined, exit 3.
    const fs::path cfg = write_temp("phoncas_cli_zero_t.json",
                                    R"({"media":{"cold":{"rho0":145,"c_sound":238,)"
                                    R"("eta":1.026,"depsilon":0.1,"temperature":0}}})");
    CHECK(run("scattering --lambda 350e-9 --medium cold --config " + cfg.string())
              .exit_code == 3);
    fs::remove(cfg);
}

TEST_CASE("media subcommand lists and validates configs") {
    const fs::path cfg = write_temp("phoncas_cli_media.json",
                                    R"({"media":{"He4":{"rho0":145,"c_sound":238,)"
                                    R"("eta":1.026,"depsilon":0.1,"temperature":1.2}}})");
    const RunResult list = run("media list --config " + cfg.string() + " --format json");
    CHECK(list.exit_code == 0);
    const json jl = json::parse(list.out);
    CHECK(jl["media"].contains("He4"));
    CHECK(jl["media"].contains("water_293K"));
    CHECK(jl["media"]["water_293K"]["builtin"] == true);

    CHECK(run("media validate --config " + cfg.string()).exit_code == 0);
    fs::remove(cfg);

    const fs::path bad = write_temp("phoncas_cli_bad.json",
                                    R"({"media":{"water_293K":{"rho0":1,"c_sound":1,)"
                                    R"("eta":1,"depsilon":0,"temperature":1}}})");
    CHECK(run("media validate --config " + bad.string()).exit_code == 2);
    fs::remove(bad);
}

TEST_CASE("casimir-force reports the EM ratio") {
    const RunResult r = run("casimir-force --gap 1e-6 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["pressure"].get<double>() == doctest::Approx(3.2092e-9).epsilon(1e-4));
    CHECK(j["ratio_to_em"].get<double>() ==
          doctest::Approx(1480.0 / (2.0 * 2.99792458e8)).epsilon(1e-12));
    CHECK(j["attractive"] == true);
}

TEST_CASE("squeezed-profile: vacuum limit is identically zero") {
    const RunResult r = run("squeezed-profile --r 0 --k 1e6 --points 5 --no-timestamp");
    REQUIRE(r.exit_code == 0);
    for (const auto& row : csv_rows(r.out)) CHECK(std::stod(row[1]) == 0.0);
}

TEST_CASE("parabola-scan emits rows and a summary with the expected exponents") {
    const RunResult r = run("parabola-scan --b-points 2 --a-points 4 --no-timestamp");
    REQUIRE(r.exit_code == 0);
    // Last line is the JSON summary; everything above is CSV.
    const auto nl = r.out.find_last_of('\n', r.out.size() - 2);
    const std::string last = r.out.substr(nl + 1);
    const json summary = json::parse(last);
    CHECK(summary["slope_a"].get<double>() == doctest::Approx(-3.0).epsilon(0.017));
    CHECK(summary["slope_b"].get<double>() == doctest::Approx(-1.0).epsilon(0.05));
    CHECK(summary["C"].get<double>() > 0.0);
    CHECK(summary["residual"].get<double>() < 0.05);

    const auto rows = csv_rows(r.out.substr(0, nl + 1));
    CHECK(rows.size() == 8);
    for (const auto& row : rows) {
        CHECK(std::stod(row[3]) < 0.0); // all variances negative
        CHECK(std::stoi(row[5]) == 0);  // no ray failures
    }
}

TEST_CASE("parabola-scan numerical failure keeps partial output and exits 3") {
    // No incoming direction admits a ray pair over this aperture/field-point
    // combination, so the scan fails numerically on the first grid point.
    const RunResult r =
        run("parabola-scan --aperture 0.2 --gamma 0.3 --b-points 2 --a-points 2 "
            "--no-timestamp");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("a,b,gamma,value") != std::string::npos); // header retained
}

TEST_CASE("json profile mode carries rows and a null error on success") {
    const RunResult r = run("profile --geometry halfspace --z 1e-9 --sweep z --from 1e-9 "
                            "--to 4e-9 --points 3 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["error"].is_null());
    CHECK(j["rows"][0]["method"] == "closed_form_as_printed");
}
