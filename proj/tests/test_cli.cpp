#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DEFDIRAC_CLI_PATH
#error "DEFDIRAC_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/defdirac_cli_test_out.txt";
    const std::string cmd =
        std::string(DEFDIRAC_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.out = slurp(out_path);
    std::remove(out_path.c_str());
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("spectrum reproduces pure Coulomb levels") {
    const RunResult r = run_cli("spectrum --e2 0.5 --nu 0 --a 0 --k 1 --nr 0..0 --branch plus");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.86602540378443871") != std::string::npos);
}

TEST_CASE("spectrum shows degenerate partner rows with --branch both") {
    const RunResult r = run_cli("spectrum --e2 0.5 --nu 0.01 --a 0 --k 1 --nr 0..2 --branch both");
    CHECK(r.exit_code == 0);
    // E(minus, n_r) appears again as E(plus, n_r + 1)
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line); // header
    std::string plus_nr1_e, minus_nr0_e;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string k, nr, branch, lam, lstar, n, e;
        std::getline(ls, k, ',');
        std::getline(ls, nr, ',');
        std::getline(ls, branch, ',');
        std::getline(ls, lam, ',');
        std::getline(ls, lstar, ',');
        std::getline(ls, n, ',');
        std::getline(ls, e, ',');
        if (branch == "plus" && nr == "1") plus_nr1_e = e;
        if (branch == "minus" && nr == "0") minus_nr0_e = e;
    }
    CHECK(!plus_nr1_e.empty());
    CHECK(plus_nr1_e == minus_nr0_e);
}

TEST_CASE("empty n_r range yields an empty table and exit 0") {
    const RunResult r = run_cli("spectrum --e2 0.5 --nu 0 --k 1 --nr 3..2 --branch plus");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 1); // header only
}

TEST_CASE("supercritical rows set exit code 2") {
    const RunResult r = run_cli("spectrum --e2 1.5 --nu 0 --a 0 --k 1,2 --nr 0..0 --branch plus");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("supercritical") != std::string::npos);
    // the admissible k = 2 row is still present
    CHECK(r.out.find("\n2,0,plus") != std::string::npos);
}

TEST_CASE("config validation failures exit 1") {
    CHECK(run_cli("spectrum --e2 -1").exit_code == 1);
    CHECK(run_cli("spectrum --k 0").exit_code == 1);
    CHECK(run_cli("spectrum --nu -0.5").exit_code == 1);
    CHECK(run_cli("spectrum --format yaml").exit_code == 1);
    CHECK(run_cli("verify --suite bogus").exit_code == 1);
    CHECK(run_cli("spectrum --config /nonexistent.json").exit_code == 1);
}

TEST_CASE("determinism: identical invocations produce identical bytes") {
    const std::string args =
        "spectrum --e2 0.5 --nu 0.02 --a 0.01 --k 1,2 --nr 0..1 --branch both --numeric "
        "--grid-points 1001";
    const RunResult r1 = run_cli(args);
    const RunResult r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(!r1.out.empty());
}

TEST_CASE("output is independent of the thread budget") {
    const std::string args =
        "spectrum --e2 0.5 --nu 0.02 --k 1,2 --nr 0..1 --branch both --numeric --grid-points 1001";
    RunResult r1, r2;
    {
        setenv("DEFDIRAC_THREADS", "1", 1);
        r1 = run_cli(args);
        setenv("DEFDIRAC_THREADS", "5", 1);
        r2 = run_cli(args);
        unsetenv("DEFDIRAC_THREADS");
    }
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("numeric column stays empty when nu = 0") {
    const RunResult r = run_cli("spectrum --e2 0.5 --nu 0 --k 1 --nr 0..0 --branch plus --numeric");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    // e_numeric is the 9th column (index 8): two consecutive commas
    int col = 0;
    size_t pos = 0;
    for (; col < 8; ++col) pos = row.find(',', pos) + 1;
    CHECK(row[pos] == ',');
}

TEST_CASE("json output mirrors records") {
    const RunResult r =
        run_cli("spectrum --e2 0.5 --nu 0 --k 1 --nr 0..0 --branch plus --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"e_closed\": 0.86602540378443871") != std::string::npos);
    CHECK(r.out.find("\"branch\": \"plus\"") != std::string::npos);
}

TEST_CASE("config file with flag override") {
    const std::string cfg_path = "/tmp/defdirac_test_cfg.json";
    {
        std::ofstream f(cfg_path);
        f << R"({"constants":{"e2":0.5},"deformation":{"nu":0.0,"a":0.0},)"
          << R"("quantum":{"k":[1],"nr":[0,0],"branch":"plus"}})";
    }
    const RunResult base = run_cli("spectrum --config " + cfg_path);
    CHECK(base.exit_code == 0);
    CHECK(base.out.find("0.86602540378443871") != std::string::npos);
    // flag wins over the file value
    const RunResult ovr = run_cli("spectrum --config " + cfg_path + " --e2 0.3");
    CHECK(ovr.exit_code == 0);
    CHECK(ovr.out.find("0.86602540378443871") == std::string::npos);
    std::remove(cfg_path.c_str());
}

TEST_CASE("wavefn export") {
    const std::string path = "/tmp/defdirac_test_wavefn.csv";
    const RunResult r = run_cli("wavefn --e2 0.5 --nu 0.02 --k 1 --nr 1 --branch minus "
                                "--grid-points 1001 --out " + path);
    CHECK(r.exit_code == 0);
    const std::string body = slurp(path);
    CHECK(body.find("# E=") != std::string::npos);
    CHECK(body.find("x,r,chi") != std::string::npos);

    // node count in the file equals n_r = 1
    std::istringstream in(body);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    int nodes = 0;
    double prev = 0.0, peak = 0.0, first_x = -1.0, last_chi = 0.0;
    std::vector<double> chis;
    bool increasing = true;
    double prev_x = -1.0;
    while (std::getline(in, line)) {
        const size_t c1 = line.find(','), c2 = line.rfind(',');
        const double x = std::stod(line.substr(0, c1));
        const double chi = std::stod(line.substr(c2 + 1));
        if (first_x < 0) first_x = x;
        if (x <= prev_x) increasing = false;
        prev_x = x;
        chis.push_back(chi);
        peak = std::max(peak, std::abs(chi));
        last_chi = chi;
    }
    for (double v : chis) {
        if (std::abs(v) < 1e-12 * peak) continue;
        if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++nodes;
        prev = v;
    }
    CHECK(nodes == 1);
    CHECK(increasing);
    CHECK(first_x > 0.0);
    CHECK(std::abs(last_chi) <= 1e-8 * peak);

    // byte-identical rerun
    const std::string again = path + ".2";
    run_cli("wavefn --e2 0.5 --nu 0.02 --k 1 --nr 1 --branch minus --grid-points 1001 --out " +
            again);
    CHECK(slurp(path) == slurp(again));
    std::remove(path.c_str());
    std::remove(again.c_str());
}

TEST_CASE("wavefn rejects unsolvable states with exit 3") {
    // the requested level fails the existence guard (no such bound level)
    const RunResult r = run_cli("wavefn --e2 0.1 --nu 0.02 --k 1 --nr 5 --grid-points 1001");
    CHECK(r.exit_code == 3);
    // supercritical coupling is an admissibility error instead
    const RunResult s = run_cli("wavefn --e2 1.5 --nu 0.01 --k 1 --nr 0");
    CHECK(s.exit_code == 2);
}

TEST_CASE("sweep") {
    SUBCASE("degenerate sweep equals spectrum") {
        const RunResult sw =
            run_cli("sweep --param nu --from 0 --to 0 --steps 1 --e2 0.5 --k 1 --nr 0..1 "
                    "--branch plus");
        const RunResult sp = run_cli("spectrum --e2 0.5 --nu 0 --k 1 --nr 0..1 --branch plus");
        CHECK(sw.exit_code == 0);
        // strip the leading sweep column and compare the rest
        std::istringstream a(sw.out), b(sp.out);
        std::string la, lb;
        while (std::getline(a, la) && std::getline(b, lb)) {
            CHECK(la.substr(la.find(',') + 1) == lb);
        }
    }
    SUBCASE("unbound rows are marked in the status column") {
        const RunResult r = run_cli(
            "sweep --param nu --from 0 --to 0.2 --steps 5 --e2 0.5 --k 2 --nr 0..0 --branch plus");
        CHECK(r.out.find("unbound") != std::string::npos);
    }
    SUBCASE("energy is continuous along the sweep") {
        const RunResult r = run_cli(
            "sweep --param nu --from 0 --to 0.01 --steps 21 --e2 0.5 --k 1 --nr 0..0 --branch plus");
        std::istringstream in(r.out);
        std::string line;
        std::getline(in, line);
        std::vector<double> es;
        while (std::getline(in, line)) {
            int col = 0;
            size_t pos = 0;
            // e_closed is column index 7 (after the sweep value column)
            for (; col < 7; ++col) pos = line.find(',', pos) + 1;
            es.push_back(std::stod(line.substr(pos, line.find(',', pos) - pos)));
        }
        REQUIRE(es.size() == 21);
        double max_step = 0.0;
        for (size_t i = 1; i < es.size(); ++i) max_step = std::max(max_step, std::abs(es[i] - es[i - 1]));
        for (size_t i = 1; i < es.size(); ++i)
            CHECK(std::abs(es[i] - es[i - 1]) <= 10.0 * max_step);
    }
}

TEST_CASE("limits modes run and report") {
    const RunResult nu0 = run_cli("limits --mode nu0 --e2 0.5 --a 0.1 --k 1 --nr 0..0");
    CHECK(nu0.exit_code == 0);
    // fitted residual slope in nu is ~1 (linear approach to the nu = 0 levels)
    const size_t fit_pos = nu0.out.find("fit");
    REQUIRE(fit_pos != std::string::npos);
    const std::string fit_line = nu0.out.substr(fit_pos);
    const double slope = std::stod(fit_line.substr(fit_line.rfind(',') + 1));
    CHECK(slope == doctest::Approx(1.0).epsilon(0.1));

    const RunResult qt = run_cli("limits --mode qt --e2 1.0 --nu 0.05");
    CHECK(qt.exit_code == 0);
    // l = 0 rows reconcile exactly: difference column is literal zero
    CHECK(qt.out.find("\n0,1,") != std::string::npos);
    std::istringstream in(qt.out);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("0,", 0) == 0) CHECK(line.substr(line.rfind(',') + 1) == "0");
    }

    const RunResult som = run_cli("limits --mode sommerfeld --e2 0.1");
    CHECK(som.exit_code == 0);
    const RunResult nonrel = run_cli("limits --mode nonrel --e2 0.5 --nu 0.05 --abar 0 --k 1 --nr 0..0");
    CHECK(nonrel.exit_code == 0);
    CHECK(nonrel.out.find("fit") != std::string::npos);
    const RunResult bad = run_cli("limits --mode wrong");
    CHECK(bad.exit_code == 1);
}
