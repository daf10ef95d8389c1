// End-to-end tests of the command line tool. argv[1] is the binary path.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace {

int failures = 0;
std::string cli;

#define CHECK(cond)                                                                               \
    do {                                                                                          \
        if (!(cond)) {                                                                            \
            ++failures;                                                                           \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << ": " #cond "\n";               \
        }                                                                                         \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        std::cerr << "cannot spawn: " << cmd << "\n";
        ++failures;
        return r;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string temp_path(const std::string& name) {
    return "/tmp/glulib_cli_test_" + std::to_string(getpid()) + "_" + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 2;
    }
    cli = argv[1];

    // ---- analyze ----
    {
        RunResult r = run("analyze 9,11,13,15");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "frobenius: 34"));
        CHECK(contains(r.out, "cm type: 2"));
        CHECK(contains(r.out, "kind: aci_type2"));
        CHECK(contains(r.out, "decomposable: no"));
    }
    {
        RunResult r = run("analyze 2,3");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "kind: hypersurface"));
    }

    // ---- decompose ----
    {
        RunResult r = run("decompose 187,289,425,323,140,364,336");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "k1=17"));
        CHECK(contains(r.out, "k2=28"));
        CHECK(contains(r.out, "rho=x1*x2 - y1*y2")); // generators sorted: B = (5,12,13)
        CHECK(contains(r.out, "deg=476"));
        // deterministic output
        RunResult again = run("decompose 187,289,425,323,140,364,336");
        CHECK(again.out == r.out);
    }
    {
        RunResult r = run("decompose 187,289,425,323,140,364,336 --all");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "gluing(s)"));
    }

    // ---- betti ----
    {
        RunResult r = run("betti 450,522,612,576,305,793,732");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "betti totals: 1,11,43,81,80,40,8"));
    }
    {
        RunResult r = run("betti 9,11,13,15 --graded --oracle");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "betti totals: 1,4,5,2"));
        CHECK(contains(r.out, "oracle GF(2): match"));
        CHECK(contains(r.out, "oracle GF(32003): match"));
    }
    {
        RunResult r = run("betti 4,6,9 --oracle --char 7");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "oracle GF(7): match"));
    }

    // ---- hilbert ----
    {
        RunResult r = run("hilbert 4,6,9 --expand 40");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "matches membership: yes"));
    }

    // ---- resolution ----
    {
        RunResult r = run("resolution 4,6,9 --verify");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "d2=ok"));
        CHECK(contains(r.out, "exactness: certified"));
    }
    {
        std::string m2 = temp_path("res.m2");
        RunResult r = run("resolution 187,289,425,323,140,364,336 --export m2 --out " + m2);
        CHECK(r.exit_code == 0);
        std::ifstream f(m2);
        std::stringstream ss;
        ss << f.rdbuf();
        CHECK(contains(ss.str(), "isHomogeneous"));
        std::remove(m2.c_str());
    }

    // ---- json reports ----
    {
        RunResult r = run("--json betti 9,11,13,15 --graded");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        CHECK(!j.is_discarded());
        CHECK(j["command"] == "betti");
        CHECK(j["result"]["totals"].size() == 4);
        // round trip
        auto j2 = nlohmann::json::parse(j.dump());
        CHECK(j2 == j);
        // byte-identical rerun
        RunResult again = run("--json betti 9,11,13,15 --graded");
        CHECK(again.out == r.out);
    }

    // ---- affine ----
    {
        std::string file = temp_path("aff.txt");
        write_file(file, "A:\n4 0 0\n3 1 0\n2 2 0\n1 3 0\nB:\n3 3 0\n3 2 1\n3 1 2\n3 0 3\n"
                         "rho:\n1 0 0 2\n2 0 0 0\n");
        RunResult g = run("affine " + file + " gens --bound 12,12,12 --part A");
        CHECK(g.exit_code == 0);
        CHECK(contains(g.out, "3 minimal generator(s)"));

        RunResult v = run("affine " + file + " verify --bound 12,12,12");
        CHECK(v.exit_code == 0);
        CHECK(contains(v.out, "gluing verification: PASS"));
        CHECK(contains(v.out, "(6,6,0)"));

        RunResult p = run("affine " + file + " propagate --bound 12,12,12");
        CHECK(p.exit_code == 0);
        CHECK(contains(p.out, "propagated totals of k[C]: 1,7,19,25,16,4"));
        CHECK(contains(p.out, "pd: 5"));

        RunResult b = run("affine " + file + " betti --bound 12,12,12 --part B");
        CHECK(b.exit_code == 0);
        CHECK(contains(b.out, "1,3,2"));
        std::remove(file.c_str());
    }
    {
        // the wrong rho from the printed example: multidegrees differ
        std::string file = temp_path("aff_bad.txt");
        write_file(file, "A:\n4 0 0\n3 1 0\n2 2 0\n1 3 0\nB:\n3 3 0\n3 2 1\n3 1 2\n3 0 3\n"
                         "rho:\n1 0 0 4\n2 0 0 0\n");
        RunResult v = run("affine " + file + " verify --bound 12,12,12");
        CHECK(v.exit_code == 1);
        std::remove(file.c_str());
    }

    // ---- error paths ----
    CHECK(run("analyze abc").exit_code == 1);
    CHECK(run("analyze 4,6").exit_code == 1);       // gcd 2
    CHECK(run("betti 3,x").exit_code == 1);
    CHECK(run("frobnicate 1,2").exit_code == 1);    // unknown subcommand
    CHECK(run("resolution 4,6,9 --export bogus").exit_code == 1);
    CHECK(run("affine /nonexistent gens --bound 3,3").exit_code == 1);
    CHECK(run("--version").exit_code == 0);
    CHECK(contains(run("--version").out, "glulib"));
    CHECK(run("--help").exit_code == 0);

    if (failures == 0)
        std::cout << "test_cli: all checks passed\n";
    else
        std::cout << "test_cli: " << failures << " failure(s)\n";
    return failures == 0 ? 0 : 1;
}
