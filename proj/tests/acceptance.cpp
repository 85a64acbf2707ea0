// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sincov/atlas.hpp"
#include "sincov/flows.hpp"
#include "sincov/io.hpp"
#include "sincov/sincov.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sincov;
using sincov::testing::Rng;

namespace
{

struct Outcome
{
    bool pass;
    std::string detail;
};

Rational q(char const* text)
{
    return Rational::parse(text);
}

bool witness_holds(Atlas const& a1, Atlas const& a2, NonIsomorphismWitness const& w)
{
    auto const t1 = transition(a1, w.alpha, w.beta);
    auto const t2 = transition(a2, w.alpha, w.beta);
    return w.in_first ? t1.contains(w.pair) && !t2.contains(w.pair)
                      : t2.contains(w.pair) && !t1.contains(w.pair);
}

std::string fraction(std::size_t good, std::size_t total)
{
    return std::to_string(good) + "/" + std::to_string(total);
}

Outcome atlas_round_trip()
{
    constexpr int cases = 1000;
    Rng rng(1001);
    int exact = 0;
    auto const start = std::chrono::steady_clock::now();
    for (int i = 0; i < cases; ++i) {
        auto atlas = sincov::testing::random_atlas(rng, {6, 12, 10});
        if (i % 2)
            atlas = sincov::testing::thin_atlas(rng, atlas, 0.3);
        auto const system = reconstruct(atlas);
        exact += reconstruct(solve_atlas(system)) == system;
    }
    double const seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << fraction(exact, cases) << " exact, " << seconds << " s (limit 10 s)";
    return {exact == cases && seconds < 10.0, detail.str()};
}

Outcome atlas_converse()
{
    constexpr int cases = 1000;
    Rng rng(2002);
    int clean = 0;
    for (int i = 0; i < cases; ++i)
        clean += check_sincov(reconstruct(sincov::testing::random_atlas(rng))).empty();
    return {clean == cases, fraction(clean, cases) + " with zero violations"};
}

Outcome atlas_isomorphism()
{
    constexpr int cases = 500;
    Rng rng(3003);

    int iso_ok = 0;
    for (int i = 0; i < cases; ++i) {
        auto const a = sincov::testing::random_atlas(rng);
        auto const omega = sincov::testing::random_permutation(rng, carrier(a));
        // relabeled atlas b with compose(b.chart, omega) == a.chart
        Atlas b;
        for (auto const& [alpha, chart] : a.charts)
            b.charts[alpha] = compose(chart, inverse(omega));
        try {
            auto const found = find_isomorphism(a, b);
            iso_ok += verify_isomorphism(a, b, found);
        } catch (Error const&) {
        }
    }

    int non_iso_ok = 0, non_iso_total = 0;
    while (non_iso_total < cases) {
        auto const a1 = sincov::testing::random_atlas(rng, {4, 6, 6});
        Atlas a2;
        if (non_iso_total % 2) {
            // a thinned copy of a1
            a2 = sincov::testing::thin_atlas(rng, a1, 0.15);
        } else {
            auto const other = sincov::testing::random_atlas(rng, {4, 6, 6});
            for (auto const& [alpha, chart] : a1.charts)
                a2.charts[alpha] = other.charts.count(alpha) ? other.charts.at(alpha) : Relation{};
        }
        if (reconstruct(a1) == reconstruct(a2))
            continue;
        ++non_iso_total;
        try {
            find_isomorphism(a1, a2);
        } catch (NotIsomorphic const& e) {
            non_iso_ok += witness_holds(a1, a2, e.witness());
        }
    }
    return {iso_ok == cases && non_iso_ok == non_iso_total,
            "isomorphic " + fraction(iso_ok, cases) + ", non-isomorphic with verified witness " +
                fraction(non_iso_ok, non_iso_total)};
}

Outcome criteria_and_closure()
{
    constexpr int cases = 2000;
    Rng rng(4004);
    int agree = 0;
    for (int i = 0; i < cases; ++i) {
        auto const rho = sincov::testing::random_relation(rng, 30, 1 + i % 12);
        agree += is_injective(rho) == sincov::testing::injective_by_criterion(rho) &&
                 is_coinjective(rho) == sincov::testing::coinjective_by_criterion(rho);
    }

    int closed = 0;
    auto const points = sincov::testing::labels("p", 10);
    for (int i = 0; i < cases; ++i) {
        auto const rho = sincov::testing::random_partial_bijection(rng, points, points);
        auto const sigma = sincov::testing::random_partial_bijection(rng, points, points);
        closed += is_partial_bijection(compose(rho, sigma)) && is_partial_bijection(inverse(rho));
    }
    return {agree == cases && closed == cases,
            "criteria agree " + fraction(agree, cases) + ", closure " + fraction(closed, cases)};
}

std::set<Rational> blow_up_grid()
{
    return {q("-1"), q("0"), q("1/3"), q("1/2"), q("1"), q("2")};
}

std::vector<Seed> blow_up_seeds()
{
    std::vector<Seed> seeds;
    auto const grid = blow_up_grid();
    std::vector<Rational> times(grid.begin(), grid.end());
    int i = 0;
    for (int num = -6; num <= 6; ++num)
        for (int den : {1, 2, 3, 5}) {
            Rational const x{Integer(num), Integer(den)};
            seeds.push_back(Seed{times[i++ % times.size()], ElementId(x.str())});
        }
    // seeds on trajectories already represented
    seeds.push_back(Seed{q("1/2"), ElementId("2")});  // through (0, 1)
    seeds.push_back(Seed{q("-1"), ElementId("1/2")}); // through (0, 1)
    seeds.push_back(Seed{q("2"), ElementId("-1/3")}); // through (0, -1)
    return seeds;
}

Outcome blow_up_laws()
{
    auto const grid = blow_up_grid();
    auto const seeds = blow_up_seeds();
    auto const system = build_system(FlowSpec::blow_up(), grid, seeds);

    bool pos = false, neg = false, zero = false;
    for (auto const& seed : seeds) {
        int const s = Rational::parse(seed.value.str()).sign();
        pos |= s > 0;
        neg |= s < 0;
        zero |= s == 0;
    }

    auto const violations = check_sincov(system);

    // Phi(alpha,beta) is strictly partial when some point present at beta has
    // no image at alpha.
    int partial = 0;
    for (auto const& alpha : system.indices())
        for (auto const& beta : system.indices())
            partial += domain(system.at(alpha, beta)) != domain(system.at(beta, beta));

    return {seeds.size() >= 50 && pos && neg && zero && violations.empty() && partial > 0,
            std::to_string(seeds.size()) + " seeds, " + std::to_string(violations.size()) +
                " violations, " + std::to_string(partial) + " strictly partial entries"};
}

// Independent grouping: seeds s, t share a trajectory iff F(t_s, t_t, x_t) = x_s.
std::size_t trajectory_groups(FlowSpec const& spec, std::vector<Seed> const& seeds)
{
    std::vector<Seed const*> representatives;
    for (auto const& seed : seeds) {
        bool found = false;
        for (auto const* rep : representatives) {
            auto const x = flow_eval(spec, rep->time, seed.time, seed.value);
            if (x && *x == rep->value) {
                found = true;
                break;
            }
        }
        if (!found)
            representatives.push_back(&seed);
    }
    return representatives.size();
}

Outcome quotient_is_trajectories()
{
    auto const spec = FlowSpec::blow_up();
    std::vector<std::vector<Seed>> seed_sets{blow_up_seeds()};
    Rng rng(6006);
    auto const grid = blow_up_grid();
    std::vector<Rational> times(grid.begin(), grid.end());
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Seed> seeds;
        for (int i = 0; i < 12; ++i) {
            auto const& t = times[sincov::testing::uniform(rng, 0, times.size() - 1)];
            Rational const x(Integer(int(sincov::testing::uniform(rng, 0, 8)) - 4),
                             Integer(int(sincov::testing::uniform(rng, 1, 3))));
            seeds.push_back(Seed{t, ElementId(x.str())});
            // sometimes add a second seed on the same solution
            auto const& u = times[sincov::testing::uniform(rng, 0, times.size() - 1)];
            if (auto y = flow_eval(spec, u, t, x); y && sincov::testing::coin(rng))
                seeds.push_back(Seed{u, ElementId(y->str())});
        }
        seed_sets.push_back(std::move(seeds));
    }

    int matched = 0;
    for (auto const& seeds : seed_sets) {
        auto const atlas = solve_atlas(build_system(spec, grid, seeds));
        matched += carrier(atlas).size() == trajectory_groups(spec, seeds);
    }
    return {matched == int(seed_sets.size()),
            fraction(matched, seed_sets.size()) + " seed sets with class count = trajectory count"};
}

Outcome vector_field_recovery()
{
    auto const spec = FlowSpec::blow_up();
    std::vector<std::pair<char const*, char const*>> const expected{
        {"1/10", "1/9"}, {"1/100", "1/99"}, {"1/1000", "1/999"}};
    int exact = 0;
    std::string detail;
    for (auto const& [h, r] : expected) {
        auto const residual = vector_field_residual(spec, q("0"), q("1"), q(h));
        exact += residual == q(r);
        detail += std::string(detail.empty() ? "" : ", ") + "h=" + h + " -> " + residual.str();
    }
    return {exact == 3, detail};
}

Outcome group_case()
{
    struct Case
    {
        FlowSpec spec;
        std::set<Rational> grid;
        std::vector<Seed> seeds;
    };

    std::map<ElementId, ElementId> table;
    // cycles (0 1 2)(3 4)(5)
    std::vector<std::pair<char const*, char const*>> const arrows{
        {"0", "1"}, {"1", "2"}, {"2", "0"}, {"3", "4"}, {"4", "3"}, {"5", "5"}};
    for (auto const& [from, to] : arrows)
        table.emplace(ElementId(from), ElementId(to));

    std::vector<Case> cases;
    cases.push_back({FlowSpec::permutation(table),
                     {q("0"), q("1"), q("2"), q("3"), q("4")},
                     {Seed{q("0"), ElementId("0")}, Seed{q("2"), ElementId("3")},
                      Seed{q("4"), ElementId("5")}}});
    cases.push_back({FlowSpec::doubling(),
                     {q("-2"), q("-1"), q("0"), q("1"), q("3")},
                     {Seed{q("0"), ElementId("1")}, Seed{q("1"), ElementId("-3/2")},
                      Seed{q("-2"), ElementId("0")}, Seed{q("3"), ElementId("8")},
                      Seed{q("3"), ElementId("5/7")}}});

    int total = 0, ok = 0;
    for (auto const& c : cases) {
        auto const system = build_system(c.spec, c.grid, c.seeds);
        auto const solved = solve_atlas(system);
        for (auto const& gamma : system.indices()) {
            ++total;
            try {
                auto const fixed = solve_via_fixed_index(system, gamma);
                auto const iso = find_isomorphism(fixed, solved);
                ok += verify_isomorphism(fixed, solved, iso) && reconstruct(fixed) == system;
            } catch (Error const& e) {
                std::cerr << "  gamma " << gamma << ": " << e.what() << '\n';
            }
        }
    }
    return {ok == total, fraction(ok, total) + " fixed indices solved and isomorphic"};
}

std::string slurp(std::string const& path)
{
    std::ifstream file(path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int invoke(std::vector<std::string> const& args, std::string const& input, std::string& output)
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int const code = cli::run(args, in, out, err);
    output = out.str();
    return code;
}

Outcome cli_pipeline()
{
    std::string const dir = SINCOV_GOLDEN_DIR;
    int pipelines = 0;
    for (auto kind : {"blowup", "translation", "doubling", "permutation"}) {
        std::string generated, solved, rebuilt;
        bool ok = invoke({"flow-gen", dir + "/flow_" + kind + ".flow.json"}, "", generated) == 0 &&
                  invoke({"solve", "-"}, generated, solved) == 0 &&
                  invoke({"reconstruct", "-"}, solved, rebuilt) == 0;
        ok = ok && io::canonical(io::parse(rebuilt)) == io::canonical(io::parse(generated)) &&
             rebuilt == generated;
        pipelines += ok;
    }

    int goldens = 0;
    for (auto name : {"solve_one_class", "solve_empty", "solve_two_classes"}) {
        std::string atlas;
        goldens += invoke({"solve", dir + "/" + name + ".system.json"}, "", atlas) == 0 &&
                   atlas == slurp(dir + "/" + name + ".atlas.json");
    }
    return {pipelines == 4 && goldens == 3,
            "pipelines " + fraction(pipelines, 4) + ", golden files " + fraction(goldens, 3)};
}

} // namespace

int main()
{
    std::vector<std::pair<char const*, std::function<Outcome()>>> const criteria{
        {"1 solve/reconstruct round-trip", atlas_round_trip},
        {"2 reconstructed systems satisfy the laws", atlas_converse},
        {"3 atlas isomorphism", atlas_isomorphism},
        {"4 injectivity criteria and closure", criteria_and_closure},
        {"5 blow-up flow laws", blow_up_laws},
        {"6 quotient classes = trajectories", quotient_is_trajectories},
        {"7 vector-field recovery", vector_field_recovery},
        {"8 group case", group_case},
        {"9 CLI pipeline and golden files", cli_pipeline},
    };

    int failures = 0;
    for (auto const& [name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (std::exception const& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += !outcome.pass;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": " << outcome.detail
                  << std::endl;
    }
    std::cout << (failures ? "acceptance FAILED" : "acceptance passed") << " (" << failures
              << " failing criteria)" << std::endl;
    return failures ? 1 : 0;
}
