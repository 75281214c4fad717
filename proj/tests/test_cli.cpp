#include "doctest.h"
#include "oracles.hpp"
#include "tmc/example.hpp"
#include "tmc/generator.hpp"
#include "tmc/json_io.hpp"
#include "tmc/solver.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace tmc;

namespace {

namespace fs = std::filesystem;

const CurveSpec kCubic{3, {2, -1, 1, 1}};
const CurveSpec kQuartic{4, {1, -1, 2, 0, 1}};

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "tmc_cli_tests";
    fs::create_directories(dir);
    return dir;
}

int run_tool(const std::string& args) {
    const std::string cmd = std::string(TMC_BINARY) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("generator is deterministic and puts atoms on the curve") {
        const GenerateSpec spec{kCubic, 4, 12, 7};
        const GeneratedInstance a = generate_instance(spec), b = generate_instance(spec);
        REQUIRE(a.truth.size() == 12);
        CHECK(a.beta == b.beta);
        for (const auto& at : a.truth) {
            CHECK(at.x != 0);
            CHECK(at.y == oracle::curve_y(kCubic.q, at.x));
            CHECK(at.rho > 0);
            CHECK(abs(at.x) <= 5);
        }
        const MomentMatrix mm = moment_matrix(a.beta);
        CHECK(oracle::rank(mm.data) == 12);
        CHECK(is_p_pure(mm, kCubic));
        const GeneratedInstance c = generate_instance({kCubic, 4, 12, 8});
        CHECK_FALSE(c.beta == a.beta);

        const GeneratedInstance one = generate_instance({kCubic, 2, 1, 3});
        CHECK(oracle::rank(moment_matrix(one.beta).data) == 1);
        CHECK_THROWS_AS(generate_measure({kCubic, 2, 1000, 1, 1, 1}), Error);
    }

    TEST_CASE("moments and measures round-trip through JSON") {
        const GeneratedInstance g = generate_instance({kQuartic, 2, 9, 11});
        const MomentsFile f = moments_from_json(Json::parse(moments_to_json(kQuartic, g.beta).dump()));
        CHECK(f.beta == g.beta);
        CHECK(f.curve.m == 4);
        CHECK(f.curve.q == kQuartic.q);

        const AtomicMeasure m = measure_from_json(Json::parse(measure_to_json(g.truth).dump()));
        REQUIRE(m.atoms.size() == g.truth.size());
        for (std::size_t k = 0; k < m.atoms.size(); ++k) {
            CHECK(m.atoms[k].x == to_real(g.truth[k].x));
            CHECK(m.atoms[k].rho == to_real(g.truth[k].rho));
        }
        const AtomicMeasure r = to_real(g.truth);
        const AtomicMeasure back = measure_from_json(Json::parse(measure_to_json(r).dump()));
        for (std::size_t k = 0; k < r.atoms.size(); ++k) CHECK(back.atoms[k].y == r.atoms[k].y);
    }

    TEST_CASE("malformed documents are rejected") {
        const GeneratedInstance g = generate_instance({kCubic, 1, 3, 2});
        Json j = moments_to_json(kCubic, g.beta);
        Json missing = j;
        missing["moments"].erase(missing["moments"].begin());
        CHECK_THROWS_AS(moments_from_json(missing), Error);
        Json dup = j;
        dup["moments"].push_back(dup["moments"][0]);
        CHECK_THROWS_AS(moments_from_json(dup), Error);
        Json odd = j;
        odd["degree"] = 3;
        CHECK_THROWS_AS(moments_from_json(odd), Error);
        Json schema = j;
        schema["schema"] = "something-else";
        CHECK_THROWS_AS(moments_from_json(schema), Error);
        Json curve = j;
        curve["curve"]["q"][0] = "0";
        CHECK_THROWS_AS(moments_from_json(curve), Error);
        Json text = j;
        text["moments"][0]["v"] = "one";
        CHECK_THROWS_AS(moments_from_json(text), Error);
        // decimals are read exactly
        Json dec = j;
        dec["curve"]["q"][1] = 0.1;
        CHECK(moments_from_json(dec).curve.q[1] == Rational(1, 10));

        const fs::path bad = scratch_dir() / "broken.json";
        std::ofstream(bad) << "{ not json";
        CHECK_THROWS_AS(read_json(bad.string()), Error);
        CHECK_THROWS_AS(read_json((scratch_dir() / "absent.json").string()), Error);
    }

    TEST_CASE("reduction document lists the free moments") {
        const GeneratedInstance g = generate_instance({kQuartic, 2, 9, 12});
        const Json r = reduction_to_json(reduce(g.beta, kQuartic));
        CHECK(r["free"]["t1"] == 9);
        CHECK(r["free"]["t2"] == 11);
        CHECK(r["free"]["t3"] == 12);
        CHECK(r["gamma"].size() == 17);  // exponents -2n .. 6n
    }

    TEST_CASE("solve statuses") {
        // a genuine cubic instance
        const GeneratedInstance g = generate_instance({kCubic, 2, 5, 21});
        const SolveOutcome ok = solve(g.beta, kCubic);
        CHECK(ok.status == SolveStatus::Found);
        REQUIRE(ok.measure);
        CHECK(oracle::max_relative_moment_error(*ok.measure, g.beta) < Real(1e-8));

        // moment matrix no longer positive semidefinite
        MomentSequence2D neg = g.beta;
        neg(2, 0) = -1;
        CHECK(solve(neg, kCubic).status == SolveStatus::NoMeasure);

        // moments of a different curve: the curve relation fails in M(3)
        const GeneratedInstance other = generate_instance({CurveSpec{3, {5, 0, 0, 1}}, 3, 12, 22});
        const SolveOutcome wrong = solve(other.beta, kCubic);
        CHECK(wrong.status == SolveStatus::NoMeasure);
        CHECK_FALSE(wrong.reason.empty());

        CHECK_THROWS_AS(solve(g.beta, CurveSpec{5, {1, 0, 0, 0, 0, 1}}), Error);

        const GeneratedInstance q = generate_instance({kQuartic, 2, 12, 23});
        CHECK(solve(q.beta, kQuartic).status == SolveStatus::Found);
    }

    TEST_CASE("command line exit codes") {
        const fs::path dir = scratch_dir();
        const std::string mom = (dir / "m.json").string(), sol = (dir / "s.json").string(), truth = (dir / "t.json").string();
        CHECK(run_tool("generate --m 3 --q 2,-1,1,1 --n 2 --atoms 6 --seed 5 --out " + mom + " --truth " + truth) == 0);
        CHECK(run_tool("reduce " + mom + " --out " + (dir / "r.json").string()) == 0);
        CHECK(run_tool("solve " + mom + " --out " + sol) == 0);
        const Json out = read_json(sol);
        CHECK(out["status"] == "Found");
        CHECK(run_tool("verify --moments " + mom + " --measure " + truth) == 0);

        // break positivity
        Json j = read_json(mom);
        for (auto& e : j["moments"])
            if (e["i"] == 2 && e["j"] == 0) e["v"] = "-1";
        write_json((dir / "neg.json").string(), j);
        CHECK(run_tool("solve " + (dir / "neg.json").string()) == 1);

        CHECK(run_tool("solve " + (dir / "missing.json").string()) == 64);
        CHECK(run_tool("solve " + mom + " --m 4") == 64);
        CHECK(run_tool("frobnicate") == 64);
    }

    TEST_CASE("command line pipeline over several seeds") {
        const fs::path dir = scratch_dir() / "pipeline";
        fs::create_directories(dir);
        for (int seed = 1; seed <= 6; ++seed) {
            const std::string m = seed % 2 ? "3" : "4";
            const std::string atoms = std::to_string(2 + seed * 2);
            const std::string mom = (dir / ("m" + std::to_string(seed) + ".json")).string();
            const std::string sol = (dir / ("s" + std::to_string(seed) + ".json")).string();
            const std::string meas = (dir / ("mu" + std::to_string(seed) + ".json")).string();
            REQUIRE(run_tool("generate --m " + m + " --n 2 --atoms " + atoms + " --seed " + std::to_string(seed) + " --out " + mom) == 0);
            CHECK(run_tool("solve " + mom + " --out " + sol) == 0);
            const Json out = read_json(sol);
            REQUIRE(out.contains("measure"));
            write_json(meas, out["measure"]);
            CHECK(run_tool("verify --moments " + mom + " --measure " + meas) == 0);
        }
    }

    TEST_CASE("command line on the 14-atom example and unsupported degrees") {
        const fs::path dir = scratch_dir();
        const std::string mom = (dir / "eg1.json").string(), sol = (dir / "eg1.solution.json").string();
        write_json(mom, moments_to_json(eg1_curve(), moments_from_measure(eg1_measure(), 8)));
        CHECK(run_tool("solve " + mom + " --out " + sol) == 0);
        const Json out = read_json(sol);
        CHECK(out["status"] == "Found");
        CHECK(out["measure"]["atoms"].size() == 12);
        CHECK(out["certificate"]["beta_window"]["i"] == 2);
        CHECK(out["certificate"]["beta_window"]["j"] == 7);

        const std::string five = (dir / "m5.json").string();
        REQUIRE(run_tool("generate --m 5 --n 3 --atoms 4 --seed 1 --out " + five) == 0);
        CHECK(run_tool("reduce " + five) == 0);
        CHECK(run_tool("solve " + five) == 64);
        CHECK(run_tool("example-eg1") == 0);
    }

    TEST_CASE("batch mode writes one solution per instance") {
        const fs::path dir = scratch_dir() / "batch";
        fs::remove_all(dir);
        fs::create_directories(dir);
        for (int seed = 1; seed <= 4; ++seed)
            REQUIRE(run_tool("generate --m 3 --n 2 --atoms 6 --seed " + std::to_string(seed) + " --out " +
                             (dir / ("case" + std::to_string(seed) + ".json")).string()) == 0);
        const fs::path out = dir / "out";
        CHECK(run_tool("solve --batch " + dir.string() + " --out-dir " + out.string() + " --jobs 3") == 0);
        for (int seed = 1; seed <= 4; ++seed) {
            const fs::path f = out / ("case" + std::to_string(seed) + ".solution.json");
            REQUIRE(fs::exists(f));
            CHECK(read_json(f.string())["status"] == "Found");
        }
    }
}
