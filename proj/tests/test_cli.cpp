#include <doctest.h>

#include "unitfit/render.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + UNITFIT_CLI_PATH + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "unitfit_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("list-datasets prints the whole corpus") {
    const auto r = run_cli("list-datasets");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1   dwelling               31") != std::string::npos);
    CHECK(r.output.find("4   flood                  20") != std::string::npos);
    int rows = 0;
    for (char c : r.output) rows += c == '\n';
    CHECK(rows == 14);
}

TEST_CASE("describe by id, name and file") {
    const auto flood = run_cli("describe 4");
    CHECK(flood.exit_code == 0);
    CHECK(flood.output.find("0.4050") != std::string::npos);

    const auto dwelling = run_cli("describe dwelling --format json");
    CHECK(dwelling.exit_code == 0);
    const auto doc = unitfit::Json::parse(dwelling.output);
    CHECK(std::fabs(doc["stats"]["skewness"].get<double>() - 2.5981) <= 0.001);

    CHECK(run_cli("describe missing.txt").exit_code == 2);

    const auto dir = temp_dir();
    {
        std::ofstream f(dir / "ok.txt");
        f << "# sample\n0.2, 0.4; 0.6\n0.8\n";
    }
    const auto file = run_cli("describe " + (dir / "ok.txt").string());
    CHECK(file.exit_code == 0);
    CHECK(file.output.find("0.5000") != std::string::npos);

    {
        std::ofstream f(dir / "bad.txt");
        f << "0.5 1.2\n";
    }
    CHECK(run_cli("describe " + (dir / "bad.txt").string()).exit_code == 3);
}

TEST_CASE("fit emits the full inference block") {
    const auto r = run_cli("fit 1 --family gombur1 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = unitfit::Json::parse(r.output);
    const auto& fam = doc["families"][0];
    CHECK(std::fabs(fam["log_lik"].get<double>() - 81.0731) <= 0.005);
    CHECK(std::fabs(fam["params"]["n"].get<double>() - 5.7248) <= 0.01);

    const auto mbur = run_cli("fit 1 --family mbur");
    CHECK(mbur.exit_code == 0);
    CHECK(mbur.output.find("alpha=2.3519") != std::string::npos);

    CHECK(run_cli("fit 1 --family nosuch").exit_code == 2);
    CHECK(run_cli("fit 99 --family mbur").exit_code == 2);
}

TEST_CASE("json output re-rendered as markdown equals the direct rendering") {
    const auto md = run_cli("fit 4 --family kumaraswamy");
    const auto js = run_cli("fit 4 --family kumaraswamy --format json");
    REQUIRE(md.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    const auto doc = unitfit::Json::parse(js.output);
    CHECK(unitfit::comparison_markdown(doc) == md.output);
}

TEST_CASE("compare renders decision rows") {
    const auto r = run_cli("compare 1 --families topp_leone,gombur1");
    CHECK(r.exit_code == 0);
    // column order follows the request: topp_leone rejects, the generalized fit does not
    CHECK(r.output.find("| h0 | reject | Fail to reject |") != std::string::npos);

    const auto q = run_cli("compare 2 --families beta,kumaraswamy,mbur,topp_leone,unit_lindley");
    CHECK(q.exit_code == 0);
    CHECK(q.output.find("reject") != std::string::npos);
    CHECK(q.output.find("| h0 | Fail to reject | Fail to reject | Fail to reject | Fail to "
                        "reject | Fail to reject |") != std::string::npos);

    const auto canada = run_cli("compare 6 --families mbur");
    CHECK(canada.exit_code == 0);
    CHECK(canada.output.find("| h0 | reject |") != std::string::npos);
}

TEST_CASE("identical invocations are bit-identical") {
    const auto a = run_cli("compare 4 --families mbur,gombur1 --format csv");
    const auto b = run_cli("compare 4 --families mbur,gombur1 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("plot writes csv and svg") {
    const auto dir = temp_dir();
    const auto base = (dir / "pp_plot").string();
    const auto r = run_cli("plot 1 --kind pp --families mbur,gombur1 --out " + base);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(base + ".csv");
    int data_rows = -1;  // header
    for (char c : csv) data_rows += c == '\n';
    CHECK(data_rows == 62);  // two families, 31 points each
    const std::string svg = slurp(base + ".svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // pp diagonal
}

TEST_CASE("ecdf staircase ends at the sample maximum") {
    const auto dir = temp_dir();
    const auto base = (dir / "ecdf_plot").string();
    const auto r = run_cli("plot 1 --kind ecdf --families mbur --out " + base);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(base + ".csv");
    CHECK(csv.find("ecdf,0.259") != std::string::npos);
    // last ecdf row carries height 1
    const auto pos = csv.rfind("ecdf,");
    const auto line = csv.substr(pos, csv.find('\n', pos) - pos);
    CHECK(line.find(",1") != std::string::npos);
}

TEST_CASE("unwritable plot path exits with the io code") {
    CHECK(run_cli("plot 1 --kind pp --families mbur --out /nonexistent/dir/plot").exit_code == 5);
}

TEST_CASE("iteration override via the environment") {
    const auto r = run_cli("fit 4 --family beta --format json", "UNITFIT_MAX_ITERS=1");
    CHECK(r.exit_code == 4);  // results still printed, flagged unconverged
    const auto doc = unitfit::Json::parse(r.output);
    CHECK(doc["families"][0]["converged"].get<bool>() == false);

    CHECK(run_cli("fit 4 --family beta", "UNITFIT_MAX_ITERS=zebra").exit_code == 2);
    CHECK(run_cli("fit 4 --family beta", "UNITFIT_MAX_ITERS=-3").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("fit --family mbur").exit_code == 2);      // missing dataset
    CHECK(run_cli("unknown-subcommand").exit_code == 2);
    CHECK(run_cli("plot 1 --kind sombrero --out /tmp/x").exit_code == 2);
    CHECK(run_cli("fit 1 --family mbur --format yaml").exit_code == 2);
}
