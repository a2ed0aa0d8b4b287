// Command-line front end: solve/verify/gen/reduce/bench plus the two
// stdin/stdout contest modes (torty = uniform-length contiguous packing,
// ufos = uniform-length covering).

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "imove/generators.hpp"
#include "imove/solve.hpp"

namespace {

using namespace imove;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    out << text;
}

ProblemKind parse_kind(const std::string& s) {
    auto k = kind_from_name(s);
    if (!k) throw CLI::ValidationError("--problem", "unknown problem kind: " + s);
    return *k;
}

Algo parse_algo(const std::string& s) {
    auto a = algo_from_name(s);
    if (!a) throw CLI::ValidationError("--algo", "unknown algorithm: " + s);
    return *a;
}

int cmd_solve(const std::string& kindName, const std::string& input, const std::string& algoName,
              const std::string& witnessPath, i64 decideTau, bool hasDecide) {
    const ProblemKind kind = parse_kind(kindName);
    const Algo algo = parse_algo(algoName);
    Instance inst = parse_instance(read_file(input));
    if (hasDecide) {
        std::cout << (decide(inst, kind, decideTau, algo) ? "yes" : "no") << '\n';
        return 0;
    }
    MoveAnswer ans = solve(inst, kind, algo);
    if (!ans.feasible) {
        std::cout << "infeasible\n";
        std::cerr << ans.reason << '\n';
        return 0;
    }
    std::cout << "tau_star=" << ans.tauStar << " sigma_star=" << ans.sigmaStar << '\n';
    if (!witnessPath.empty()) {
        if (!ans.witness) throw parse_error("solver produced no witness placement");
        write_file(witnessPath, format_placement(*ans.witness));
    }
    return 0;
}

int cmd_verify(const std::string& kindName, const std::string& input, const std::string& placementPath) {
    const ProblemKind kind = parse_kind(kindName);
    Instance inst = parse_instance(read_file(input));
    Placement pl = parse_placement(read_file(placementPath), inst.n());
    VerifyReport rep = verify(inst, kind, pl);
    std::cout << "moved=" << rep.movedCount << " predicate=" << (rep.predicateHolds ? "true" : "false")
              << '\n';
    for (const auto& v : rep.violations) std::cout << "violation: " << v << '\n';
    return 0;
}

int cmd_gen(std::uint64_t seed, i64 n, int kappa, i64 maxCoord, const std::string& kindName,
            bool planted, i64 displaced, const std::string& output) {
    Instance inst = gen_random(seed, n, kappa, maxCoord, parse_kind(kindName), planted, displaced);
    write_file(output, format_instance(inst));
    return 0;
}

int cmd_reduce(const std::string& from, const std::string& input, const std::string& output) {
    ReductionOutput out;
    if (from == "binpack") {
        out = reduce_binpack(parse_binpack(read_file(input)));
    } else if (from == "clique-kappa") {
        out = reduce_clique_kappa(parse_colored_graph(read_file(input)));
    } else if (from == "clique-tau") {
        out = reduce_clique_tau(parse_colored_graph(read_file(input)));
    } else {
        throw CLI::ValidationError("--from", "expected binpack, clique-kappa, or clique-tau");
    }
    write_file(output, format_instance(out.instance));
    std::cout << "problem=" << kind_name(out.kind) << " n=" << out.instance.n()
              << " bLen=" << out.instance.bLen << " tau=" << out.tau << " sigma=" << out.sigma << '\n';
    return 0;
}

int cmd_bench(std::uint64_t seed, i64 n, int kappa, i64 maxCoord, const std::string& kindName,
              const std::string& algoName, int reps) {
    const ProblemKind kind = parse_kind(kindName);
    const Algo algo = parse_algo(algoName);
    std::cout << "rep\tn\ttime_ms\ttau_star\n";
    for (int r = 0; r < reps; ++r) {
        Instance inst = gen_random(seed + static_cast<std::uint64_t>(r), n, kappa, maxCoord, kind,
                                   /*planted=*/true);
        auto t0 = std::chrono::steady_clock::now();
        MoveAnswer ans = solve(inst, kind, algo);
        auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << r << '\t' << n << '\t' << ms << '\t' << (ans.feasible ? ans.tauStar : -1)
                  << '\n';
    }
    return 0;
}

// Contest stdin format, both modes: "n len bLen" then n start coordinates,
// arbitrary whitespace. Prints a single integer.
bool read_contest(Instance& inst, i64& n) {
    std::ios::sync_with_stdio(false);
    std::cin.tie(nullptr);
    i64 len = 0, b = 0;
    if (!(std::cin >> n >> len >> b) || n < 1 || len < 1 || b < 1) return false;
    inst.bLen = b;
    inst.intervals.reserve(static_cast<size_t>(n));
    for (i64 i = 0; i < n; ++i) {
        i64 x = 0;
        if (!(std::cin >> x)) return false;
        inst.intervals.push_back({x, len});
    }
    return true;
}

int cmd_torty() {
    Instance inst;
    i64 n = 0;
    if (!read_contest(inst, n)) {
        std::cerr << "malformed input\n";
        return 1;
    }
    NormalizedInstance norm = normalize(inst, ProblemKind::JPack);
    if (!norm.ok) {
        std::cerr << norm.reason << '\n';
        return 1;
    }
    std::cout << solve_unit_jfamily(norm).tauStar << '\n';
    return 0;
}

int cmd_ufos() {
    Instance inst;
    i64 n = 0;
    if (!read_contest(inst, n)) {
        std::cerr << "malformed input\n";
        return 1;
    }
    NormalizedInstance norm = normalize(inst, ProblemKind::Cover);
    if (!norm.ok) {
        std::cerr << norm.reason << '\n';
        return 1;
    }
    std::cout << solve_unit_cover_aliens(norm).tauStar << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for interval packing/covering with moves"};
    app.require_subcommand(1);

    std::string kindName = "pack", algoName = "auto", input = "-", output = "-";
    std::string placementPath, witnessPath, from = "binpack";
    std::uint64_t seed = 1;
    i64 n = 8, maxCoord = 100, displaced = -1, decideTau = -1;
    int kappa = 1, reps = 5;
    bool planted = false;
    bool hasDecide = false;

    auto* sSolve = app.add_subcommand("solve", "compute tau* (and optionally a witness)");
    sSolve->add_option("--problem", kindName, "pack|cover|join|jpack|jcover|tile")->required();
    sSolve->add_option("--input", input, "instance file, - for stdin");
    sSolve->add_option("--algo", algoName, "auto|unit|aliens|fpt|oracle");
    sSolve->add_option("--witness", witnessPath, "write witness placement here");
    sSolve->add_option("--decide", decideTau, "decide tau* <= TAU instead of optimizing")
        ->each([&](const std::string&) { hasDecide = true; });

    auto* sVerify = app.add_subcommand("verify", "check a placement against a problem predicate");
    sVerify->add_option("--problem", kindName)->required();
    sVerify->add_option("--input", input);
    sVerify->add_option("--placement", placementPath)->required();

    auto* sGen = app.add_subcommand("gen", "generate a seeded random or planted instance");
    sGen->add_option("--seed", seed);
    sGen->add_option("--n", n);
    sGen->add_option("--kappa", kappa);
    sGen->add_option("--max-coord", maxCoord);
    sGen->add_option("--problem", kindName)->required();
    sGen->add_flag("--planted", planted);
    sGen->add_option("--displaced", displaced, "planted displacement count (-1 = random)");
    sGen->add_option("--output", output);

    auto* sReduce = app.add_subcommand("reduce", "build a hardness instance from a source problem");
    sReduce->add_option("--from", from, "binpack|clique-kappa|clique-tau")->required();
    sReduce->add_option("--input", input);
    sReduce->add_option("--output", output);

    auto* sBench = app.add_subcommand("bench", "time the solver on planted instances");
    sBench->add_option("--seed", seed);
    sBench->add_option("--n", n);
    sBench->add_option("--kappa", kappa);
    sBench->add_option("--max-coord", maxCoord);
    sBench->add_option("--problem", kindName)->required();
    sBench->add_option("--algo", algoName);
    sBench->add_option("--reps", reps);

    app.add_subcommand("torty", "contest mode: uniform shields join inside a battle interval");
    app.add_subcommand("ufos", "contest mode: uniform beams cover a beach");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sSolve->parsed()) return cmd_solve(kindName, input, algoName, witnessPath, decideTau, hasDecide);
        if (sVerify->parsed()) return cmd_verify(kindName, input, placementPath);
        if (sGen->parsed()) return cmd_gen(seed, n, kappa, maxCoord, kindName, planted, displaced, output);
        if (sReduce->parsed()) return cmd_reduce(from, input, output);
        if (sBench->parsed()) return cmd_bench(seed, n, kappa, maxCoord, kindName, algoName, reps);
        if (app.get_subcommand("torty")->parsed()) return cmd_torty();
        if (app.get_subcommand("ufos")->parsed()) return cmd_ufos();
    } catch (const imove::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const imove::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
