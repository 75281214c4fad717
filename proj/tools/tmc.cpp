#include "CLI11.hpp"
#include "tmc/example.hpp"
#include "tmc/generator.hpp"
#include "tmc/json_io.hpp"
#include "tmc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

namespace fs = std::filesystem;
using namespace tmc;

namespace {

constexpr int kExitUsage = 64;

int exit_code(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return 0;
        case SolveStatus::NoMeasure: return 1;
        case SolveStatus::NoMeasureFound: return 2;
    }
    return 2;
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_rational(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

CurveSpec default_curve(int m) {
    CurveSpec c{m, std::vector<Rational>(static_cast<std::size_t>(m + 1), Rational(1))};
    return c;
}

struct SolveFlags {
    std::string input = "-";
    std::string output = "-";
    std::string batch;
    std::string out_dir;
    int m = 0;
    double tol_psd = 0;
    double tol_rank = 0;
    double verify_tol = 1e-8;
    unsigned precision_bits = 256;
    std::string root_choice = "low";
    int search_iters = 200;
    unsigned jobs = 0;
};

SolveOptions make_options(const SolveFlags& f) {
    SolveOptions o;
    o.tol_psd = f.tol_psd > 0 ? Real(f.tol_psd) : default_tolerance();
    o.tol_rank = f.tol_rank > 0 ? Real(f.tol_rank) : default_tolerance();
    o.verify_tol = Real(f.verify_tol);
    o.root_choice = f.root_choice == "high" ? RootChoice::High : f.root_choice == "interior" ? RootChoice::Interior : RootChoice::Low;
    o.search_iters = f.search_iters;
    return o;
}

Json solve_file(const std::string& path, const SolveFlags& f, const SolveOptions& opts, int& code) {
    const MomentsFile in = moments_from_json(read_json(path));
    if (f.m != 0 && f.m != in.curve.m)
        throw Error(ErrorCode::InvalidInput, "--m " + std::to_string(f.m) + " does not match the curve degree " + std::to_string(in.curve.m));
    const SolveOutcome out = solve(in.beta, in.curve, opts);
    code = exit_code(out.status);
    return outcome_to_json(out);
}

int run_batch(const SolveFlags& f, const SolveOptions& opts) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(f.batch)) {
        const std::string name = e.path().filename().string();
        if (e.is_regular_file() && e.path().extension() == ".json" && name.find(".solution.") == std::string::npos)
            files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    const fs::path out_dir = f.out_dir.empty() ? fs::path(f.batch) : fs::path(f.out_dir);
    fs::create_directories(out_dir);

    std::atomic<std::size_t> next{0};
    std::atomic<int> worst{0};
    std::mutex log;
    auto worker = [&] {
        for (std::size_t k = next++; k < files.size(); k = next++) {
            const fs::path& p = files[k];
            int code = kExitUsage;
            Json result;
            try {
                result = solve_file(p.string(), f, opts, code);
            } catch (const std::exception& e) {
                result = {{"schema", kSchema}, {"error", e.what()}};
            }
            const fs::path target = out_dir / (p.stem().string() + ".solution.json");
            write_json(target.string(), result);
            {
                std::lock_guard<std::mutex> lock(log);
                std::cout << p.filename().string() << ": exit " << code << " -> " << target.string() << "\n";
            }
            int prev = worst.load();
            while (code > prev && !worst.compare_exchange_weak(prev, code)) {}
        }
    };
    const unsigned n = std::max(1u, f.jobs ? f.jobs : std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return worst.load();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated moment problem on curves x*y = x^m + q(x)"};
    app.require_subcommand(1);

    // generate
    int gen_m = 3, gen_n = 2, gen_atoms = 3, gen_den = 4;
    std::uint64_t gen_seed = 0;
    std::string gen_q, gen_out = "-", gen_truth;
    auto* gen = app.add_subcommand("generate", "random rational atoms on the curve and their moments");
    gen->add_option("--m", gen_m, "curve degree")->check(CLI::Range(2, 12));
    gen->add_option("--q", gen_q, "q_0,...,q_m (default all ones)");
    gen->add_option("--n", gen_n, "moments up to degree 2n")->check(CLI::Range(1, 12));
    gen->add_option("--atoms", gen_atoms, "number of atoms")->check(CLI::PositiveNumber);
    gen->add_option("--max-denominator", gen_den, "x = k/d with d up to this")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "moments file");
    gen->add_option("--truth", gen_truth, "generating measure file");

    // reduce
    std::string red_in = "-", red_out = "-";
    auto* red = app.add_subcommand("reduce", "strong sequence gamma from the moments");
    red->add_option("input", red_in, "moments file");
    red->add_option("--out", red_out, "output file");

    // solve
    SolveFlags sf;
    auto* sol = app.add_subcommand("solve", "find and verify a representing measure");
    sol->add_option("input", sf.input, "moments file");
    sol->add_option("--out", sf.output, "certificate and measure");
    sol->add_option("--batch", sf.batch, "solve every *.json in this directory")->check(CLI::ExistingDirectory);
    sol->add_option("--out-dir", sf.out_dir, "batch output directory (default: the batch directory)");
    sol->add_option("--jobs", sf.jobs, "batch worker threads (default: hardware threads)");
    sol->add_option("--m", sf.m, "expected curve degree (3 or 4)");
    sol->add_option("--tol-psd", sf.tol_psd, "PSD tolerance (default 2^(-bits/2))")->check(CLI::NonNegativeNumber);
    sol->add_option("--tol-rank", sf.tol_rank, "rank tolerance (default 2^(-bits/2))")->check(CLI::NonNegativeNumber);
    sol->add_option("--verify-tol", sf.verify_tol, "relative tolerance of the final check")->check(CLI::PositiveNumber);
    sol->add_option("--precision-bits", sf.precision_bits, "working precision")->check(CLI::Range(64u, 8192u));
    sol->add_option("--root-choice", sf.root_choice, "cubic window point")->check(CLI::IsMember({"low", "high", "interior"}));
    sol->add_option("--search-iters", sf.search_iters, "quartic golden-section iterations")->check(CLI::NonNegativeNumber);

    // verify
    std::string ver_moments, ver_measure, ver_out = "-";
    double ver_tol = 1e-8;
    unsigned ver_bits = 256;
    auto* ver = app.add_subcommand("verify", "check a measure against moments");
    ver->add_option("--moments", ver_moments, "moments file")->required();
    ver->add_option("--measure", ver_measure, "measure file")->required();
    ver->add_option("--tol", ver_tol, "relative tolerance")->check(CLI::PositiveNumber);
    ver->add_option("--precision-bits", ver_bits, "working precision")->check(CLI::Range(64u, 8192u));
    ver->add_option("--out", ver_out, "report file");

    unsigned eg_bits = 256;
    auto* eg = app.add_subcommand("example-eg1", "the 14-atom cubic example, end to end");
    eg->add_option("--precision-bits", eg_bits, "working precision")->check(CLI::Range(64u, 8192u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) {
            GenerateSpec spec;
            spec.curve = gen_q.empty() ? default_curve(gen_m) : CurveSpec{gen_m, parse_list(gen_q)};
            spec.n = gen_n;
            spec.atoms = gen_atoms;
            spec.seed = gen_seed;
            spec.max_denominator = gen_den;
            const GeneratedInstance g = generate_instance(spec);
            write_json(gen_out, moments_to_json(spec.curve, g.beta));
            if (!gen_truth.empty()) write_json(gen_truth, measure_to_json(g.truth));
            return 0;
        }
        if (*red) {
            const MomentsFile in = moments_from_json(read_json(red_in));
            write_json(red_out, reduction_to_json(reduce(in.beta, in.curve)));
            return 0;
        }
        if (*sol) {
            if (sf.m != 0 && sf.m != 3 && sf.m != 4) throw Error(ErrorCode::WrongDegree, "solve supports m = 3 and m = 4");
            // set before any worker starts: the working precision is process-wide
            set_real_precision_bits(sf.precision_bits);
            const SolveOptions opts = make_options(sf);
            if (!sf.batch.empty()) return run_batch(sf, opts);
            int code = 0;
            write_json(sf.output, solve_file(sf.input, sf, opts, code));
            return code;
        }
        if (*ver) {
            set_real_precision_bits(ver_bits);
            const MomentsFile in = moments_from_json(read_json(ver_moments));
            const AtomicMeasure mu = measure_from_json(read_json(ver_measure));
            const VerifyReport rep = verify_measure(mu, in.beta, in.curve, Real(ver_tol));
            Json j = verify_report_to_json(rep);
            j["schema"] = kSchema;
            write_json(ver_out, j);
            return rep.ok() ? 0 : 1;
        }
        if (*eg) {
            set_real_precision_bits(eg_bits);
            const Eg1Report r = run_eg1(default_tolerance());
            print_eg1(std::cout, r);
            return r.kept_report.moments_ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "tmc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "tmc: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
