// End-to-end acceptance checks. Prints one [PASS]/[FAIL] line per criterion
// and exits nonzero if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "imove/fpt.hpp"
#include "imove/generators.hpp"
#include "imove/oracle.hpp"
#include "imove/solve.hpp"
#include "imove/unit_cover.hpp"
#include "imove/unit_join.hpp"

using namespace imove;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct RunResult {
    int exitCode = -1;
    std::string out;
    double wallMs = 0;
};

RunResult run_cli(const std::string& args, const std::string& stdinPath) {
    const std::string outPath = "/tmp/imove_accept_out.txt";
    std::string cmd = std::string(IMOVE_CLI_PATH) + " " + args;
    if (!stdinPath.empty()) cmd += " < " + stdinPath;
    cmd += " > " + outPath + " 2>/dev/null";
    RunResult r;
    auto t0 = Clock::now();
    int rc = std::system(cmd.c_str());
    r.wallMs = ms_since(t0);
    r.exitCode = rc < 0 ? rc : WEXITSTATUS(rc);
    std::ifstream in(outPath);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

double median5(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[2];
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

bool gOk = true;
void report(int num, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << detail << "\n";
    if (!ok) gOk = false;
}

// Random instance within the oracle-equivalence envelope:
// n <= 8, x in [-12, 24], lengths <= 4, kappa <= 3.
Instance small_instance(Rng& rng, ProblemKind kind) {
    const i64 n = 1 + rng.below(8);
    const int kappa = 1 + static_cast<int>(rng.below(std::min<i64>(3, n)));
    std::vector<i64> pool{1, 2, 3, 4};
    rng.shuffle(pool);
    pool.resize(static_cast<size_t>(kappa));
    Instance inst;
    i64 total = 0;
    for (i64 i = 0; i < n; ++i) {
        const i64 len = i < kappa ? pool[static_cast<size_t>(i)]
                                  : pool[static_cast<size_t>(rng.below(kappa))];
        inst.intervals.push_back({rng.range(-12, 24), len});
        total += len;
    }
    switch (kind) {
        case ProblemKind::Pack:
        case ProblemKind::JPack: inst.bLen = total + rng.below(12); break;
        case ProblemKind::Cover:
        case ProblemKind::JCover: inst.bLen = 1 + rng.below(total); break;
        case ProblemKind::Tile: inst.bLen = total; break;
        case ProblemKind::Join: inst.bLen = 1 + rng.below(24); break;
    }
    return inst;
}

// --- criterion 1: contest samples, byte-exact and fast ---------------------

void criterion1() {
    write_file("/tmp/imove_torty.txt", "6 2 13\n-1 3 4 5 12 11\n");
    write_file("/tmp/imove_ufos.txt", "8 2 10\n-1 -2 3 4 5 8 9 10\n");
    RunResult t = run_cli("torty", "/tmp/imove_torty.txt");
    RunResult u = run_cli("ufos", "/tmp/imove_ufos.txt");
    bool ok = t.exitCode == 0 && t.out == "3\n" && u.exitCode == 0 && u.out == "2\n";

    // solver wall time, in-process (excludes process startup), median of 5
    Instance ti{13, {{-1, 2}, {3, 2}, {4, 2}, {5, 2}, {12, 2}, {11, 2}}};
    Instance ui{10, {{-1, 2}, {-2, 2}, {3, 2}, {4, 2}, {5, 2}, {8, 2}, {9, 2}, {10, 2}}};
    std::vector<double> tms, ums;
    for (int r = 0; r < 5; ++r) {
        auto t0 = Clock::now();
        volatile i64 a = solve_unit_jfamily(normalize(ti, ProblemKind::JPack)).tauStar;
        tms.push_back(ms_since(t0));
        t0 = Clock::now();
        volatile i64 b = solve_unit_cover_aliens(normalize(ui, ProblemKind::Cover)).tauStar;
        ums.push_back(ms_since(t0));
        ok = ok && a == 3 && b == 2;
    }
    const double tm = median5(tms), um = median5(ums);
    ok = ok && tm < 10.0 && um < 10.0;
    std::ostringstream d;
    d << "contest samples: torty=\"" << (t.out.empty() ? "?" : t.out.substr(0, t.out.find('\n')))
      << "\" ufos=\"" << (u.out.empty() ? "?" : u.out.substr(0, u.out.find('\n')))
      << "\", solve medians " << tm << "ms / " << um << "ms (limit 10ms)";
    report(1, ok, d.str());
}

// --- criterion 2: all backends equal the exhaustive oracle -----------------

void criterion2() {
    auto t0 = Clock::now();
    Rng rng(20260826);
    long checked = 0, bad = 0;
    std::string firstBad;
    for (ProblemKind kind : kAllKinds) {
        for (int it = 0; it < 1000; ++it) {
            Instance inst = small_instance(rng, kind);
            MoveAnswer expect = oracle_solve(inst, kind);
            ++checked;
            bool same = true;
            if (inst.kappa() == 1) {
                auto norm = normalize(inst, kind);
                MoveAnswer unit = kind == ProblemKind::Pack  ? solve_unit_pack(norm)
                                  : kind == ProblemKind::Cover ? solve_unit_cover_dp(norm)
                                                               : solve_unit_jfamily(norm);
                same = same && unit.tauStar == expect.tauStar;
            }
            same = same && solve(inst, kind).tauStar == expect.tauStar;
            same = same && fpt_decide_A(inst, kind, expect.tauStar) &&
                   (expect.tauStar == 0 || !fpt_decide_A(inst, kind, expect.tauStar - 1));
            if (kind != ProblemKind::Cover)
                same = same && fpt_decide_Aprime(inst, kind, expect.tauStar) &&
                       (expect.tauStar == 0 || !fpt_decide_Aprime(inst, kind, expect.tauStar - 1));
            if (!same && ++bad == 1)
                firstBad = std::string(kind_name(kind)) + " " + format_instance(inst);
        }
    }
    const double sec = ms_since(t0) / 1000.0;
    std::ostringstream d;
    d << "oracle equivalence on " << checked << " instances, " << bad << " mismatches, " << sec
      << "s (limit 300s)";
    if (bad) d << "; first: " << firstBad;
    report(2, bad == 0 && sec < 300.0, d.str());
}

// --- criterion 3: concavity of the kept-count table -------------------------

void criterion3() {
    auto t0 = Clock::now();
    Rng rng(3333);
    long bad = 0;
    for (int it = 0; it < 200; ++it) {
        const i64 n = 1 + rng.below(50);
        const i64 len = 1 + rng.below(4);
        Instance inst;
        for (i64 i = 0; i < n; ++i) inst.intervals.push_back({rng.range(-30, 90), len});
        inst.bLen = 1 + rng.below(n * len);
        auto norm = normalize(inst, ProblemKind::Cover);
        CoverOrder co = cover_order(norm);
        const size_t sink = static_cast<size_t>(n) + 1;
        std::vector<i64> sig;
        SigmaRow row = sigma_row_first(co);
        sig.push_back(row.values[sink]);
        for (i64 d = 1; d <= n + 1; ++d) {
            row = sigma_row_next(co, row);
            sig.push_back(row.values[sink]);
        }
        for (size_t d = 0; d + 1 < sig.size(); ++d) {
            if (sig[d] <= kNegInf) continue;
            const i64 lam = sig[d + 1] - sig[d];
            if (lam < 0 || lam > n) ++bad;
            if (d > 0 && sig[d - 1] > kNegInf && lam > sig[d] - sig[d - 1]) ++bad;
        }
    }
    const double sec = ms_since(t0) / 1000.0;
    std::ostringstream d;
    d << "concavity on 200 cover tables, " << bad << " violations, " << sec << "s (limit 60s)";
    report(3, bad == 0 && sec < 60.0, d.str());
}

// --- criterion 4: penalty-search solver equals the plain dp -----------------

void criterion4() {
    auto t0 = Clock::now();
    Rng rng(4444);
    long bad = 0;
    for (int it = 0; it < 500; ++it) {
        const i64 n = 1 + rng.below(200);
        const i64 len = 1 + rng.below(4);
        Instance inst;
        for (i64 i = 0; i < n; ++i) inst.intervals.push_back({rng.range(-50, 400), len});
        inst.bLen = 1 + rng.below(n * len);
        auto norm = normalize(inst, ProblemKind::Cover);
        if (solve_unit_cover_aliens(norm).tauStar != solve_unit_cover_dp(norm).tauStar) ++bad;
    }
    const double sec = ms_since(t0) / 1000.0;
    std::ostringstream d;
    d << "penalty search vs dp on 500 cover instances, " << bad << " mismatches, " << sec
      << "s (limit 60s)";
    report(4, bad == 0 && sec < 60.0, d.str());
}

// --- criterion 5: contest modes at maximum size ------------------------------

void criterion5() {
    Rng rng(5555);
    {
        std::ostringstream in;
        const i64 n = 200000, len = 4, b = n * len + 1000;
        in << n << " " << len << " " << b << "\n";
        for (i64 i = 0; i < n; ++i) in << rng.range(-1000000, 1000000) << " \n"[i + 1 == n];
        write_file("/tmp/imove_torty_big.txt", in.str());
    }
    {
        std::ostringstream in;
        const i64 n = 100000, len = 5, b = n * len - n;  // n*len >= b
        in << n << " " << len << " " << b << "\n";
        for (i64 i = 0; i < n; ++i) in << rng.range(-1000, b + 1000) << " \n"[i + 1 == n];
        write_file("/tmp/imove_ufos_big.txt", in.str());
    }
    std::vector<double> tms, ums;
    bool ranOk = true;
    for (int r = 0; r < 5; ++r) {
        RunResult t = run_cli("torty", "/tmp/imove_torty_big.txt");
        RunResult u = run_cli("ufos", "/tmp/imove_ufos_big.txt");
        ranOk = ranOk && t.exitCode == 0 && u.exitCode == 0;
        tms.push_back(t.wallMs);
        ums.push_back(u.wallMs);
    }
    const double tm = median5(tms), um = median5(ums);
    std::ostringstream d;
    d << "large inputs: torty n=2e5 median " << tm << "ms (limit 1000ms), ufos n=1e5 median " << um
      << "ms (limit 2000ms)";
    report(5, ranOk && tm < 1000.0 && um < 2000.0, d.str());
}

// --- criterion 6: hardness-reduction fidelity --------------------------------

void criterion6() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream d;
    try {
        BinPackingInstance bp{{1, 2, 2, 2, 2, 3, 3, 4, 5}, 4, 6};
        ReductionOutput r1 = reduce_binpack(bp);
        ok = ok && r1.instance.n() == 13 && r1.tau == 8 && r1.sigma == 5 &&
             r1.instance.bLen == 28 && r1.instance.total_len() == r1.instance.bLen;
        Placement w1 = witness_from_partition(bp, {{8, 0}, {7, 1}, {5, 6}, {2, 3, 4}}, r1);
        auto rep1 = verify(r1.instance, r1.kind, w1);
        ok = ok && rep1.predicateHolds && rep1.movedCount == 8;

        ColoredGraph g;
        g.vertexCount = 6;
        g.numColors = 3;
        g.colors = {0, 1, 2, 0, 1, 2};
        g.edges = {{0, 1}, {3, 4}, {0, 5}, {3, 2}, {1, 2}, {4, 2}, {4, 5}};

        ReductionOutput r2 = reduce_clique_kappa(g);
        const i64 S2 = r2.meta.scale;
        ok = ok && r2.meta.ellP == 54 && r2.tau == 138 &&
             r2.instance.intervals[r2.meta.vertexPieces[0][0]].len == 63 * S2 &&
             r2.instance.intervals[r2.meta.vertexPieces[0][1]].len == 45 * S2;
        Placement w2 = witness_from_clique(g, {2, 3, 4}, r2, CliqueVariant::Kappa);
        auto rep2 = verify(r2.instance, r2.kind, w2);
        ok = ok && rep2.predicateHolds && rep2.movedCount == 138;

        ReductionOutput r3 = reduce_clique_tau(g);
        const i64 S3 = r3.meta.scale;
        ok = ok && r3.meta.ellP == 324 && r3.tau == 42 &&
             r3.instance.intervals[r3.meta.vertexPieces[0][0]].len == 82 * S3 &&
             r3.instance.intervals[r3.meta.vertexPieces[0][1]].len == 80 * S3;
        Placement w3 = witness_from_clique(g, {2, 3, 4}, r3, CliqueVariant::Tau);
        auto rep3 = verify(r3.instance, r3.kind, w3);
        ok = ok && rep3.predicateHolds && rep3.movedCount == 42;
        d << "reductions: bin packing (n=13, tau=8, sigma=5, B=28), cliques (ell_p 54/324, "
             "witnesses 138/42 moves)";
    } catch (const std::exception& e) {
        ok = false;
        d << "exception: " << e.what();
    }
    const double sec = ms_since(t0) / 1000.0;
    d << ", " << sec << "s (limit 10s)";
    report(6, ok && sec < 10.0, d.str());
}

// --- criterion 7: invariants -------------------------------------------------

void criterion7() {
    auto t0 = Clock::now();
    Rng rng(7777);
    long bad = 0;
    std::string note;
    auto flag = [&](const std::string& what) {
        if (++bad == 1) note = what;
    };

    // decide is monotone in the budget and flips exactly at the optimum
    for (ProblemKind kind : kAllKinds) {
        for (int it = 0; it < 40; ++it) {
            Instance inst = small_instance(rng, kind);
            const i64 tauStar = solve(inst, kind).tauStar;
            bool prev = false;
            for (i64 tau = 0; tau <= inst.n(); ++tau) {
                const bool now = decide(inst, kind, tau);
                if (prev && !now) flag("decide not monotone");
                if (now != (tau >= tauStar)) flag("decide flip not at optimum");
                prev = now;
            }
        }
    }

    // when total interval length equals |B|, all five anchored problems agree
    for (int it = 0; it < 60; ++it) {
        Instance inst = small_instance(rng, ProblemKind::Tile);
        const i64 ref = solve(inst, ProblemKind::Tile).tauStar;
        for (ProblemKind kind : {ProblemKind::Pack, ProblemKind::Cover, ProblemKind::JPack,
                                 ProblemKind::JCover})
            if (solve(inst, kind).tauStar != ref) flag("tiling equivalence");
    }

    // scale invariance for every kind; translation invariance where the
    // target region is not pinned to the origin (join)
    for (ProblemKind kind : kAllKinds) {
        for (int it = 0; it < 25; ++it) {
            Instance inst = small_instance(rng, kind);
            const i64 ref = solve(inst, kind).tauStar;
            const i64 c = 2 + rng.below(5);
            Instance scaled;
            scaled.bLen = inst.bLen * c;
            for (const auto& iv : inst.intervals) scaled.intervals.push_back({iv.x * c, iv.len * c});
            if (solve(scaled, kind).tauStar != ref) flag("scale invariance");
            if (kind == ProblemKind::Join) {
                Instance shifted = inst;
                const i64 s = rng.range(-40, 40);
                for (auto& iv : shifted.intervals) iv.x += s;
                if (solve(shifted, kind).tauStar != ref) flag("translation invariance");
            }
        }
    }

    // witnesses round-trip through the verifier
    for (ProblemKind kind : kAllKinds) {
        for (int it = 0; it < 40; ++it) {
            Instance inst = small_instance(rng, kind);
            MoveAnswer ans = oracle_solve(inst, kind);
            if (!ans.witness) {
                flag("missing witness");
                continue;
            }
            auto rep = verify(inst, kind, *ans.witness);
            if (!rep.predicateHolds || rep.movedCount > ans.tauStar) flag("witness round-trip");
        }
    }

    const double sec = ms_since(t0) / 1000.0;
    std::ostringstream d;
    d << "invariants (decide monotone, tiling equivalence, scale/translation, witness "
         "round-trips), "
      << bad << " violations, " << sec << "s (limit 120s)";
    if (bad) d << "; first: " << note;
    report(7, bad == 0 && sec < 120.0, d.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    return gOk ? 0 : 1;
}
