// Benchmark the per-degree homology scan: OpenMP kernel vs the serial
// reference. Verifies both produce identical graded tables, then reports
// wall-clock times and speedup.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "glulib/arith.hpp"
#include "glulib/betti_table.hpp"
#include "glulib/oracle.hpp"

using namespace glulib;

namespace {

std::vector<int64> parse_gens(const std::string& s) {
    std::vector<int64> out;
    std::istringstream is(s);
    std::string cur;
    while (std::getline(is, cur, ',')) out.push_back(std::stoll(cur));
    return out;
}

double time_ms(const SemigroupGens& C, const OracleOptions& opts, int repeat, BettiTable& out) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        out = opts.parallel ? graded_betti_oracle(C, opts) : graded_betti_oracle_serial(C, opts);
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    // Default: the seven-generator running example; large enough to show the
    // parallel win, small enough to finish in seconds.
    std::string gens_arg = "450,522,612,576,305,793,732";
    int64 field_char = 32003;
    int repeat = 3;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << a << "\n";
                std::exit(1);
            }
            return argv[++i];
        };
        if (a == "--gens")
            gens_arg = next();
        else if (a == "--char")
            field_char = std::stoll(next());
        else if (a == "--repeat")
            repeat = std::stoi(next());
        else if (a == "--help" || a == "-h") {
            std::cout << "usage: bench_oracle [--gens a,b,c] [--char p] [--repeat n]\n";
            return 0;
        } else {
            std::cerr << "unknown argument " << a << "\n";
            return 1;
        }
    }

    SemigroupGens C(parse_gens(gens_arg));
    std::cout << "semigroup <" << gens_arg << ">, GF(" << field_char << "), best of " << repeat
              << "\n";

    OracleOptions serial_opts;
    serial_opts.field_char = field_char;
    serial_opts.parallel = false;
    OracleOptions par_opts = serial_opts;
    par_opts.parallel = true;

    BettiTable ts, tp;
    double ser = time_ms(C, serial_opts, repeat, ts);
    double par = time_ms(C, par_opts, repeat, tp);

    if (!(ts == tp)) {
        std::cerr << "FAIL: serial and parallel tables differ\n";
        return 1;
    }
    std::cout << "tables identical; totals:";
    for (int64 b : ts.totals()) std::cout << " " << b;
    std::cout << "\nserial:   " << ser << " ms\nparallel: " << par << " ms\nspeedup:  "
              << (par > 0 ? ser / par : 0.0) << "x\n";
    return 0;
}
