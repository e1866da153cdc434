#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(LOZENGE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("documented examples") {
    Run t = run("tgf --family Q --x 1 --dents 1");
    CHECK(t.code == 0);
    CHECK(t.out == "1\n");
    Run f = run("formula pp-q 1 1 1");
    CHECK(f.code == 0);
    CHECK(f.out == "1 + q\n");
    Run c = run("check ratio-s --x 0 --y 1 --left 2 --right 1");
    CHECK(c.code == 0);
    CHECK(c.out.rfind("PASS", 0) == 0);
    Run q = run("formula ratio-q --x 0 --y 1 --dents 2");
    CHECK(q.code == 0);
    CHECK_FALSE(q.out.empty());
    Run k = run("check kuo --family S --x 1 --left 2 --right 1,3 --fill-right 1,3 --variant plus2 --seed 3");
    CHECK(k.code == 0);
    CHECK(k.out.rfind("PASS kuo-plus2", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run("tgf --family Q --bogus 1").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("tgf --family Q --x 1 --dents 3").code == 2);
    CHECK(run("check lemma-p --x 0 --n 2").code == 1);
    CHECK(run("check lemma-p-corrected --x 0 --n 2").code == 0);
    CHECK(run("--help").code == 0);
}

TEST_CASE("every subcommand is reachable") {
    Run region = run("region --family S --x 1 --left 2 --right 1 --json");
    CHECK(region.code == 0);
    auto j = nlohmann::json::parse(region.out);
    CHECK(j["family"] == "S");
    CHECK(j["cells"].size() == 6);
    CHECK(j.contains("scheme"));
    Run ascii = run("region --family P --x 1 --n 2 --tiling");
    CHECK(ascii.code == 0);
    CHECK(ascii.out.find('^') != std::string::npos);
    CHECK(run("tgf --family S --x 1 --left 2 --right 1 --engine fast").out == run("tgf --family S --x 1 --left 2 --right 1").out);
    CHECK(nlohmann::json::parse(run("tgf --family Sbase --x 1 --dents 1,3 --json").out).contains("tgf"));
    CHECK(run("tgf --family S --x 2 --left 2 --right 2 --symmetric").code == 0);
    CHECK(run("formula p-corrected --x 1 --n 2").code == 0);
    CHECK(run("check macmahon 2 2 2").code == 0);
    CHECK(run("check tileability --family Q --x 1 --dents 2,3").code == 0);
    CHECK(run("check kuo-proof --family Q --x 1 --dents 3,5,6").code == 0);
    CHECK(run("check splitting --family S --x 1 --left 1,3 --right 2,4 --level 2").code == 0);
    CHECK(run("check engines --family Qprime --x 1 --dents 1,4").code == 0);
    CHECK(run("check reciprocity --x 1 --y 2 --dents 2,3").code == 0);
    Run cal = run("calibrate --family SprimeBase --json");
    CHECK(cal.code == 0);
    CHECK(nlohmann::json::parse(cal.out)["status"] == "unique");
}

TEST_CASE("calibrate regenerates the shipped table") {
    const auto dir = std::filesystem::temp_directory_path() / "lozenge_cli_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "calibration.json").string();
    CHECK(run("calibrate --family Qprime --write " + path).code == 0);
    auto written = nlohmann::json::parse(slurp(path));
    auto shipped = nlohmann::json::parse(slurp(std::string(LOZENGE_SOURCE_DIR) + "/config/calibration.json"));
    CHECK(written == shipped);
    CHECK(run("check ratio-qprime --x 1 --y 2 --dents 1,4 --calibration " + path).code == 0);
}

TEST_CASE("suite output is byte-identical across runs") {
    const auto dir = std::filesystem::temp_directory_path() / "lozenge_cli_test";
    std::filesystem::create_directories(dir);
    const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
    Run first = run("suite --criteria 5,9,11 --output " + a);
    Run second = run("suite --criteria 5,9,11 --output " + b);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(slurp(a) == slurp(b));
    CHECK(nlohmann::json::parse(slurp(a))["criteria"].size() == 3);
    CHECK(run("suite --criteria 10 --output " + a).code == 1);
}
