// end-to-end checks of the installed command-line tool

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RECONF_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("cli build and formats") {
    auto k4 = write_temp("cli_k4.el", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");

    auto json = run("build --rule ts --k 2 --in " + k4.string() + " --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"rule\": \"ts\"") != std::string::npos);
    CHECK(json.out.find("\"k\": 2") != std::string::npos);

    auto dot = run("build --rule simplex --in " + k4.string() + " --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.substr(0, 8) == "graph g ");

    auto el = run("build --rule tj --k 3 --in " + k4.string() + " --format edgelist");
    CHECK(el.exit_code == 0);
    CHECK(el.out.find("n 4") != std::string::npos);

    SUBCASE("byte determinism across runs") {
        auto again = run("build --rule ts --k 2 --in " + k4.string() + " --format json");
        CHECK(again.out == json.out);
    }
}

TEST_CASE("cli cliques") {
    auto p = write_temp("cli_p3.el", "a b\nb c\n");
    auto r = run("cliques --size 2 --in " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "a b\nb c\n");
}

TEST_CASE("cli verify exit codes") {
    auto k5 = write_temp("cli_k5.el", "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    auto pass = run("verify --theorem omega-formula --k 2 --in " + k5.string());
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("\"pass\": true") != std::string::npos);

    auto usage = run("verify --theorem no-such-theorem --in " + k5.string());
    CHECK(usage.exit_code == 2);
    CHECK(run("verify --theorem omega-formula --in /no/such/file").exit_code == 2);
    CHECK(run("build --rule bogus --in " + k5.string()).exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("cli reconstruct") {
    // a star is not 2-good: violation exit with a JSON witness
    auto star = write_temp("cli_star.el", "c a\nc b\nc d\n");
    auto bad = run("reconstruct --k 2 --in " + star.string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("\"reason\"") != std::string::npos);

    auto k2 = write_temp("cli_k2.el", "u v\n");
    auto good = run("reconstruct --k 3 --in " + k2.string());
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("n 5") != std::string::npos);  // bowtie

    auto dia = write_temp("cli_dia.el", "a b\na c\nb c\nb d\nc d\n");
    auto verify = run("reconstruct --verify --in " + dia.string());
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("cli corpus") {
    auto r = run("corpus --family trees --n 5 --count 3 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("seed=1") != std::string::npos);

    auto v = run("corpus --family planar --n 8 --count 10 --seed 7 --theorem ts-planar --k 3 --jobs 4");
    CHECK(v.exit_code == 0);
    for (int i = 0; i < 10; ++i)
        CHECK(v.out.find("graph " + std::to_string(i) + ": pass") != std::string::npos);

    SUBCASE("deterministic across thread counts") {
        auto serial = run("corpus --family random-gnp --n 7 --count 8 --seed 3 --theorem diamond-free");
        auto parallel =
            run("corpus --family random-gnp --n 7 --count 8 --seed 3 --theorem diamond-free --jobs 8");
        CHECK(serial.out == parallel.out);
    }

    SUBCASE("timeout aborts with exit 3") {
        auto t = run("--timeout 0.000001 corpus --family random-gnp --n 8 --count 50 "
                     "--seed 5 --theorem omega-formula --k 2");
        CHECK(t.exit_code == 3);
    }
}
