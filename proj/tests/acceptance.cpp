// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "aco/bench.hpp"
#include "aco/colony.hpp"
#include "aco/construction.hpp"
#include "aco/csv.hpp"
#include "aco/meas.hpp"
#include "aco/oracles.hpp"
#include "aco/pheromone.hpp"
#include "aco/tsplib.hpp"
#include "support.hpp"

using namespace aco;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_s;
    const bool ok = v.pass && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s criterion %d (%s): %s; %.2fs (limit %.0fs%s)\n", ok ? "PASS" : "FAIL", id, title, v.detail.c_str(),
                secs, limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// 1. transition rule, evaporation, deposit

struct ProbCase {
    double alpha;
    double beta;
    std::vector<double> taus;
    std::vector<double> dists;
    std::vector<double> visited;
    std::vector<double> expected;
};

// Expected values computed independently at 40 significant digits.
const std::vector<ProbCase> kProbCases = {
    {1, 0, {2, 1}, {5, 5}, {}, {0.66666666666666666667, 0.33333333333333333333}},
    {1, 2, {1, 1}, {2, 4}, {}, {0.8, 0.2}},
    {0, 0, {3, 1, 7}, {1, 2, 3}, {}, {1.0 / 3, 1.0 / 3, 1.0 / 3}},
    {0, 1, {3, 1, 7}, {1, 2, 4}, {}, {0.57142857142857142857, 0.28571428571428571429, 0.14285714285714285714}},
    {2, 0, {1, 2, 3}, {9, 9, 9}, {}, {0.071428571428571428571, 0.28571428571428571429, 0.64285714285714285714}},
    {1, 1, {1, 1, 1, 1}, {1, 1, 1, 1}, {}, {0.25, 0.25, 0.25, 0.25}},
    {2, 2, {1, 2, 0.25, 1.5, 2}, {76, 93, 68, 27, 75}, {36, 15},
     {0.038934895920924435414, 0.10400645570089468792, 0.0030396836997088497371, 0.69409863839277635479,
      0.15992032628569567214}},
    {2, 1, {1, 0.001, 0.25, 4}, {11, 62, 71, 8}, {1},
     {0.043459963703305957088, 7.7106387215542830301e-9, 0.00042082711332426542955, 0.95611920147273105593}},
    {2, 2, {4, 1, 0.25, 0.5}, {26, 51, 8, 15}, {12},
     {0.90542971147454154926, 0.014707576051441514977, 0.037357817685350957477, 0.042504894788665978285}},
    {2, 5, {4, 0.001, 0.25}, {71, 88, 65}, {},
     {0.99396250858347959598, 2.1238723141075700467e-8, 0.0060374701777972629459}},
    {0, 1, {4, 0.5, 0.5, 0.001, 0.5}, {52, 82, 59, 57, 46}, {13, 37},
     {0.21938399020941277991, 0.1391215547669446897, 0.19335538120151634839, 0.20013978054192043079,
      0.2479992932802057512}},
    {0.5, 0.5, {0.001, 1, 4, 2}, {9, 78, 67, 61}, {},
     {0.019193970175170813665, 0.20617631301463617818, 0.44491665627500681308, 0.32971306053518619507}},
    {0.5, 1, {0.5, 0.25}, {99, 59}, {1}, {0.45735167940163725962, 0.54264832059836274038}},
    {2, 3, {1, 4, 1.5}, {97, 24, 83}, {11, 34},
     {0.00094257290856512650296, 0.99567227335516169078, 0.0033851537362731827182}},
    {2, 1, {4, 4, 1.5, 0.001, 0.001}, {90, 83, 36, 23, 73}, {41, 17},
     {0.41052585483511336053, 0.44514851729108677647, 0.14432549584046954081, 1.0040034493250055431e-7,
      3.1632985389691955467e-8}},
    {3, 0.5, {2, 4, 4}, {75, 67, 94}, {12, 4},
     {0.060204538657341974824, 0.50958008876094794595, 0.43021537258171007922}},
    {2, 0.5, {4, 1, 4, 0.5, 0.5}, {99, 60, 24, 47, 44}, {},
     {0.31671558676425236754, 0.025426783582970105283, 0.64325239755489972174, 0.007182210533090640575,
      0.0074230215647871648642}},
    {0, 0, {2, 1, 1}, {75, 49, 60}, {}, {1.0 / 3, 1.0 / 3, 1.0 / 3}},
    {1, 5, {1, 1.5}, {40, 4}, {2, 21, 25}, {6.6666222225185165432e-6, 0.99999333337777748148}},
    {3, 3, {0.001, 0.5, 1.5, 0.001, 0.001, 1.5}, {36, 68, 26, 1, 64, 55}, {},
     {1.0076511246187438978e-10, 0.0018689641508423169541, 0.90275817414067978616, 4.7012970870212115296e-6,
      1.7934025142750593298e-11, 0.095368160292691738071}},
};

// Node 0 is current; nodes 1..k are feasible, nodes k+1.. were visited.
// Distances not given by the case are 1.
bool check_prob_case(const ProbCase& c) {
    const std::size_t k = c.dists.size();
    const std::size_t n = 1 + k + c.visited.size();
    std::vector<double> m(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = 0.0;
    }
    for (std::size_t j = 1; j < n; ++j) {
        const double d = j <= k ? c.dists[j - 1] : c.visited[j - 1 - k];
        m[j] = d;
        m[j * n] = d;
    }
    const auto inst = Instance::from_matrix("case", m, n);
    PheromoneMatrix ph(n, 1.0, 1e-6);
    for (std::size_t j = 1; j <= k; ++j) {
        ph.set(0, j, c.taus[j - 1]);
    }
    AntState ant(n, c.visited.empty() ? Node{0} : Node{k + 1});
    for (std::size_t v = k + 2; v < n; ++v) {
        ant.visit(v);
    }
    if (!c.visited.empty()) {
        ant.visit(0);
    }
    ColonyConfig cfg = default_config(inst);
    cfg.alpha = c.alpha;
    cfg.beta = c.beta;
    const auto p = transition_probabilities(inst, ph, ant, cfg);
    for (std::size_t j = 1; j <= k; ++j) {
        if (std::abs(p[j] - c.expected[j - 1]) > 1e-12) {
            return false;
        }
    }
    for (std::size_t j = k + 1; j < n; ++j) {
        if (p[j] != 0.0) {
            return false;
        }
    }
    return p[0] == 0.0;
}

Verdict criterion1() {
    int prob_ok = 0;
    for (const auto& c : kProbCases) {
        prob_ok += check_prob_case(c);
    }

    int evap_ok = 0;
    for (const double rho : {0.0, 0.1, 0.5, 1.0}) {
        PheromoneMatrix ph(4, 1.0, 1e-3);
        Rng rng(17);
        for (Node i = 0; i < 4; ++i) {
            for (Node j = i + 1; j < 4; ++j) {
                ph.set(i, j, rng.uniform() * 3.0);
            }
        }
        const std::vector<double> before(ph.values().begin(), ph.values().end());
        evaporate(ph, rho);
        bool ok = true;
        for (Node i = 0; i < 4; ++i) {
            for (Node j = 0; j < 4; ++j) {
                if (i != j) {
                    ok = ok && ph.at(i, j) == std::max((1.0 - rho) * before[i * 4 + j], 1e-3);
                }
            }
        }
        evap_ok += ok;
    }

    int dep_ok = 0;
    {
        const auto tri = aco::testing::triangle();
        PheromoneMatrix ph(3, 0.5, 1e-6);
        const std::vector<Tour> one{make_tour(tri, {0, 1, 2})};
        deposit_as(ph, one, 1.0);
        dep_ok += ph.at(0, 1) == 0.5 + 1.0 / 12.0 && ph.at(1, 2) == 0.5 + 1.0 / 12.0;

        const auto sq = Instance::from_coords("sq", {{0, 0}, {10, 0}, {10, 10}, {0, 10}});
        const std::vector<Tour> two{make_tour(sq, {0, 1, 2, 3}), make_tour(sq, {0, 1, 3, 2})};
        PheromoneMatrix ps(4, 1.0, 1e-6);
        deposit_as(ps, two, 2.0);
        dep_ok += ps.at(0, 1) == 1.0 + 2.0 / 40.0 + 2.0 / 48.0 && ps.at(2, 3) == 1.0 + 2.0 / 40.0 + 2.0 / 48.0 &&
                  ps.at(1, 2) == 1.0 + 2.0 / 40.0 && ps.at(1, 3) == 1.0 + 2.0 / 48.0;

        PheromoneMatrix pe(3, 0.5, 1e-6);
        deposit_as(pe, {}, 1.0);
        dep_ok += pe.at(0, 1) == 0.5;
    }

    char buf[160];
    std::snprintf(buf, sizeof buf, "probabilities %d/20, evaporation %d/4, deposit %d/3", prob_ok, evap_ok, dep_ok);
    return {prob_ok == 20 && evap_ok == 4 && dep_ok == 3, buf};
}

// ---------------------------------------------------------------------------
// 2. exact solvers agree

Verdict criterion2() {
    Rng rng(2);
    int agree = 0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 4 + static_cast<std::size_t>(k % 8);
        const auto inst = generate_uniform_instance(n, rng.next());
        agree += held_karp_exact(inst).length == brute_force_optimum(inst).length;
    }
    return {agree == 50, std::to_string(agree) + "/50 instances agree"};
}

// ---------------------------------------------------------------------------
// 3. hit rate at n=10

int hit_count(Algorithm algo, const Instance& inst, double opt, std::size_t iters, std::size_t ants,
              const std::function<void(ColonyConfig&)>& tweak = {}) {
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        ColonyConfig cfg = default_config(inst);
        cfg.max_iterations = iters;
        cfg.ants = ants;
        cfg.seed = seed;
        if (tweak) {
            tweak(cfg);
        }
        hits += run_algorithm(algo, inst, cfg).best_tour.length == opt;
    }
    return hits;
}

Verdict criterion3() {
    // rand10_s16 is the first generated 10-node instance on which AS misses
    // the optimum at least once in 100 runs of 300 iterations.
    const auto inst = generate_uniform_instance(10, 16);
    const double opt = held_karp_exact(inst).length;
    const int meas = hit_count(Algorithm::MEAS, inst, opt, 300, 10);
    const int as = hit_count(Algorithm::AS, inst, opt, 300, 10);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s opt %g: MEAS %d/100, AS %d/100", inst.name().c_str(), opt, meas, as);
    return {meas >= 95 && as < meas, buf};
}

// ---------------------------------------------------------------------------
// 4. MEAS vs EAS at n=30

Verdict criterion4() {
    ExperimentSpec spec;
    for (std::uint64_t s = 1; s <= 5; ++s) {
        spec.instances.push_back(GeneratedInstance{30, s});
    }
    spec.algorithms = {Algorithm::EAS, Algorithm::MEAS};
    spec.runs_per_cell = 10;
    spec.common.max_iterations = 1000;
    const auto result = run_experiment(spec);
    int wins = 0;
    std::string detail;
    for (std::size_t i = 0; i < result.cells.size(); i += 2) {
        const auto& eas = result.cells[i];
        const auto& meas = result.cells[i + 1];
        wins += meas.mean <= eas.mean;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s%s MEAS %.1f vs EAS %.1f", detail.empty() ? "" : ", ",
                      eas.instance.c_str(), meas.mean, eas.mean);
        detail += buf;
    }
    return {wins >= 4, std::to_string(wins) + "/5 with MEAS <= EAS (" + detail + ")"};
}

// ---------------------------------------------------------------------------
// 5. berlin52

Verdict criterion5() {
    ExperimentSpec spec;
    spec.instances = {std::filesystem::path(aco::testing::berlin52_path())};
    spec.algorithms = {Algorithm::MEAS};
    spec.runs_per_cell = 10;
    spec.common.max_iterations = 1000;
    spec.common.ants = 50;
    spec.known_optima = load_optima(aco::testing::source_dir() + "/data/optima.txt");
    const auto result = run_experiment(spec);
    const auto& cell = result.cells.front();
    if (!cell.mean_relative_error) {
        return {false, "no optimum known for " + cell.instance};
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "mean %.1f, best %.0f, mean relative error %.4f", cell.mean, cell.best,
                  *cell.mean_relative_error);
    return {*cell.mean_relative_error <= 0.05, buf};
}

// ---------------------------------------------------------------------------
// 6. invariants

Verdict criterion6() {
    std::vector<std::string> broken;
    Rng rng(6);

    // Pheromone floor and symmetry under random update sequences.
    int sequences_ok = 0;
    for (int s = 0; s < 10000; ++s) {
        const std::size_t n = 3 + rng.below(6);
        const auto inst = generate_uniform_instance(n, rng.next());
        ColonyConfig cfg = default_config(inst);
        PheromoneMatrix ph = init_pheromone(inst, cfg);
        Rng local(rng.next());
        std::vector<Tour> tours;
        for (int k = 0; k < 3; ++k) {
            std::vector<Node> order(n);
            std::iota(order.begin(), order.end(), Node{0});
            for (std::size_t i = n - 1; i > 0; --i) {
                std::swap(order[i], order[local.below(i + 1)]);
            }
            tours.push_back(make_tour(inst, order));
        }
        std::sort(tours.begin(), tours.end(), [](const Tour& a, const Tour& b) { return a.length < b.length; });
        bool ok = true;
        for (int step = 0; step < 8; ++step) {
            switch (local.below(5)) {
                case 0: evaporate(ph, local.uniform()); break;
                case 1: deposit_as(ph, tours, 1.0); break;
                case 2: deposit_elite(ph, tours.front(), 3.0, 1.0); break;
                case 3: global_update_meas(ph, tours.front(), tours.back(), 2.0, 0.99 * local.uniform(), 1.0); break;
                default: escape(ph, 0.01 + 0.99 * local.uniform()); break;
            }
            ok = ok && ph.is_symmetric() && ph.min_off_diagonal() >= ph.tau_min();
        }
        sequences_ok += ok;
    }
    if (sequences_ok != 10000) {
        broken.push_back("floor/symmetry " + std::to_string(sequences_ok) + "/10000");
    }

    // Probability normalization and tour validity during real runs.
    bool norm_ok = true;
    bool tours_ok = true;
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 4 + rng.below(20);
        const auto inst = generate_uniform_instance(n, rng.next());
        ColonyConfig cfg = default_config(inst);
        cfg.alpha = 3.0 * rng.uniform();
        cfg.beta = 5.0 * rng.uniform();
        PheromoneMatrix ph = init_pheromone(inst, cfg);
        Rng local(rng.next());
        for (int k = 0; k < 5; ++k) {
            AntState ant(n, static_cast<Node>(local.below(n)));
            while (!ant.complete()) {
                const auto p = transition_probabilities(inst, ph, ant, cfg);
                const double sum = std::accumulate(p.begin(), p.end(), 0.0);
                norm_ok = norm_ok && std::abs(sum - 1.0) < 1e-12;
                ant.visit(select_next(p, local));
            }
            const auto tour = construct_tour(inst, ph, cfg, static_cast<Node>(local.below(n)), local);
            try {
                tours_ok = tours_ok && tour_length(inst, tour.order) == tour.length;
            } catch (const std::exception&) {
                tours_ok = false;
            }
            ph.set(local.below(n - 1), n - 1, ph.tau_init() * (0.1 + 5.0 * local.uniform()));
        }
    }
    if (!norm_ok) {
        broken.push_back("normalization");
    }
    if (!tours_ok) {
        broken.push_back("tour validity");
    }

    // Determinism and CSV stability excluding time columns.
    ExperimentSpec spec;
    spec.instances = {GeneratedInstance{15, 3}, GeneratedInstance{12, 8}};
    spec.runs_per_cell = 3;
    spec.common.max_iterations = 40;
    auto strip = [](const std::string& doc, std::size_t col) {
        std::string out;
        for (const auto& row : parse_csv(doc)) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k != col) {
                    out += row[k] + ',';
                }
            }
            out += '\n';
        }
        return out;
    };
    const auto a = run_experiment(spec);
    spec.jobs = 3;
    const auto b = run_experiment(spec);
    const auto da = emit_csv(a.cells, a.runs);
    const auto db = emit_csv(b.cells, b.runs);
    if (strip(da.runs, 6) != strip(db.runs, 6) || strip(da.summary, 6) != strip(db.summary, 6)) {
        broken.push_back("csv stability");
    }

    // Global-only audit for MEAS.
    {
        const auto inst = generate_uniform_instance(20, 1);
        ColonyConfig cfg = default_config(inst);
        cfg.max_iterations = 100;
        const auto r = run_algorithm(Algorithm::MEAS, inst, cfg);
        if (r.updates.ant_deposits != 0 || r.updates.elite_deposits != 0 ||
            r.updates.reinforcements != cfg.max_iterations || r.updates.penalties != cfg.max_iterations) {
            broken.push_back("MEAS update audit");
        }
    }

    std::string detail = broken.empty() ? "all invariants hold" : "broken:";
    for (const auto& b2 : broken) {
        detail += " " + b2;
    }
    return {broken.empty(), detail};
}

// ---------------------------------------------------------------------------
// 7. escape effect

Verdict criterion7() {
    const auto inst = aco::testing::deceptive_bridge();
    const double opt = held_karp_exact(inst).length;
    const std::size_t ants = default_config(inst).ants;
    const int with_escape = hit_count(Algorithm::MEAS, inst, opt, 300, ants);
    const int without = hit_count(Algorithm::MEAS, inst, opt, 300, ants, [](ColonyConfig& cfg) {
        cfg.meas.stagnation_window = MeasParams::kNeverEscape;
    });
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s opt %g: defaults %d/100, escape disabled %d/100", inst.name().c_str(), opt,
                  with_escape, without);
    return {without < with_escape, buf};
}

}  // namespace

int main() {
    report(1, "update equations", 1, criterion1);
    report(2, "exact oracles agree", 30, criterion2);
    report(3, "n=10 hit rate", 120, criterion3);
    report(4, "MEAS vs EAS at n=30", 300, criterion4);
    report(5, "berlin52 relative error", 600, criterion5);
    report(6, "invariants", 60, criterion6);
    report(7, "escape effect", 120, criterion7);
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
