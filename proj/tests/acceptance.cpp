// End-to-end acceptance suite. One PASS/FAIL line per criterion; exits
// nonzero if any criterion fails.
//
// usage: flexval_acceptance <flexval-cli> <party.json> <scratch-dir>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flexval/bayes.hpp"
#include "flexval/dynamic_flex.hpp"
#include "flexval/envelope.hpp"
#include "flexval/oracle.hpp"
#include "flexval/static_flex.hpp"
#include "party_fixture.hpp"

namespace {

using namespace flexval;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void near(const std::string& what, double got, double want, double tol) {
        if (!(std::abs(got - want) <= tol)) {
            ok = false;
            detail << what << ": got " << got << " want " << want << " (tol " << tol << "); ";
        }
    }
    void require(const std::string& what, bool cond) {
        if (!cond) {
            ok = false;
            detail << what << "; ";
        }
    }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<void(Check&)>& body) {
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << "exception: " << e.what();
    }
    std::printf("[%s] criterion %d: %s", c.ok ? "PASS" : "FAIL", id, name.c_str());
    if (!c.ok) {
        std::printf(" -- %s", c.detail.str().c_str());
        ++failures;
    }
    std::printf("\n");
}

double max_of(const std::vector<Line>& lines, double p) {
    double best = lines.front().at(p);
    for (const auto& l : lines) best = std::max(best, l.at(p));
    return best;
}

std::string run(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    if (status != 0) throw std::runtime_error("command failed: " + command);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: flexval_acceptance <flexval-cli> <party.json> <scratch-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string party_file = argv[2];
    const std::filesystem::path scratch = argv[3];
    std::filesystem::create_directories(scratch);

    const auto model = testing::party_model();
    const auto family = testing::party_family();
    const auto lines = ce_lines(model, family);
    const auto env = upper_envelope(lines);

    report(1, "party MEU at p = 0.8 is outdoors, 80", [&](Check& c) {
        const auto r = meu(model, distribution_at(family, 0.8));
        c.require("best == {outdoors}", r.best == std::vector<std::string>{"outdoors"});
        c.near("value", r.value, 80.0, 1e-9);
    });

    report(2, "envelope breakpoints 0.375 and 2/3, indoors -> porch -> outdoors", [&](Check& c) {
        c.require("three segments", env.segments.size() == 3);
        if (env.segments.size() != 3) return;
        c.near("first breakpoint", env.segments[1].lo, 0.375, 1e-9);
        c.near("second breakpoint", env.segments[2].lo, 2.0 / 3.0, 1e-9);
        c.require("segment order", env.segments[0].line.label == "indoors" &&
                                       env.segments[1].line.label == "porch" &&
                                       env.segments[2].line.label == "outdoors");
    });

    report(3, "belief brittleness 7.2917 / 17.2917 / 12.2917, quadrature agrees", [&](Check& c) {
        const auto r = brittleness_belief(model, family);
        c.near("porch", r.value_of("porch"), 175.0 / 24.0, 1e-6);
        c.near("indoors", r.value_of("indoors"), 1245.0 / 72.0, 1e-6);
        c.near("outdoors", r.value_of("outdoors"), 12.2917, 1e-4);
        c.near("outdoors exact", r.value_of("outdoors"), 295.0 / 24.0, 1e-6);
        for (const auto& line : lines) {
            const double numeric = oracle::quadrature(
                [&](double p) { return max_of(lines, p) - line.at(p); }, 0.0, 1.0,
                {1'000'000, oracle::QuadratureRule::Midpoint});
            c.near("quadrature " + line.label, numeric, r.value_of(line.label), 1e-4);
        }
        // The printed 12.74 cannot share an envelope area with 7.29 and 17.30.
        c.require("printed 12.74 rejected", std::abs(r.value_of("outdoors") - 12.74) > 0.4);
    });

    report(4, "clairvoyance line 50 + 50p, brittleness 20 / 30 / 25", [&](Check& c) {
        const auto line = clairvoyance_line(model, family);
        c.near("intercept", line.intercept, 50.0, 1e-9);
        c.near("slope", line.slope, 50.0, 1e-9);
        const auto r = brittleness_clairvoyance(model, family);
        c.near("porch", r.value_of("porch"), 20.0, 1e-9);
        c.near("indoors", r.value_of("indoors"), 30.0, 1e-9);
        c.near("outdoors", r.value_of("outdoors"), 25.0, 1e-9);
    });

    report(5, "clairvoyance minus belief brittleness is constant and nonnegative", [&](Check& c) {
        const auto belief = brittleness_belief(model, family);
        const auto clair = brittleness_clairvoyance(model, family);
        const double gap = clair.values[0].second - belief.values[0].second;
        c.require("gap >= 0", gap >= -1e-9);
        for (std::size_t a = 0; a < belief.values.size(); ++a) {
            c.near("gap " + belief.values[a].first,
                   clair.values[a].second - belief.values[a].second, gap, 1e-9);
        }
    });

    report(6, "meteorologist example: posteriors, preposterior, 73.30, F = 3.30", [&](Check& c) {
        const auto ts = testing::party_two_stage(0.7);
        const auto& porch = ts.commitment("porch-option");
        c.near("P(rain | rain report)", posterior(ts.prior, ts.evidence, "rain").weight("rain"),
               27.0 / 34.0, 1e-9);
        c.near("P(sun | sun report)", posterior(ts.prior, ts.evidence, "sun").weight("sun"),
               21.0 / 22.0, 1e-9);
        c.near("P(sun report)", preposterior(ts.prior, ts.evidence)[0], 0.66, 1e-12);
        const double v = value_with_flexibility(ts, porch);
        c.near("value with flexibility", v, 73.30, 1e-6);
        c.near("against printed 72.9", v, 72.9, 0.5);
        c.near("against enumeration", v,
               oracle::best_policy(oracle::enumerate_two_stage(ts), porch.label).value, 1e-9);
        c.near("flexibility value", flexibility_value(ts, porch).flexibility_value, 3.30, 1e-6);
    });

    report(7, "least outcome-brittle set equals MEU set on 1000+ random models", [&](Check& c) {
        testing::RandomModels gen(1);
        int violations = 0;
        for (int trial = 0; trial < 1200; ++trial) {
            const auto m = gen.model(gen.count(2, 6), gen.count(2, 5));
            const auto dist = gen.distribution(m.states);
            violations += brittleness_outcomes(m, dist).least_brittle != meu(m, dist).best;
        }
        c.require(std::to_string(violations) + " violations", violations == 0);
    });

    report(8, "oracle equivalence: policy enumeration (1e-9) and quadrature (1e-4)", [&](Check& c) {
        testing::RandomModels gen(2);
        double worst_enum = 0.0;
        for (int trial = 0; trial < 250; ++trial) {
            const auto ts = gen.two_stage();
            const auto policies = oracle::enumerate_two_stage(ts);
            for (const auto& com : ts.commitments) {
                worst_enum = std::max(worst_enum,
                                      std::abs(oracle::best_policy(policies, com.label).value -
                                               value_with_flexibility(ts, com)));
            }
        }
        c.near("enumeration max deviation", worst_enum, 0.0, 1e-9);
        double worst_quad = 0.0;
        for (int trial = 0; trial < 220; ++trial) {
            const auto m = gen.model(gen.count(2, 6), gen.count(2, 5));
            const auto f = gen.family(m.states);
            const auto ls = ce_lines(m, f);
            const auto r = brittleness_belief(m, f);
            for (std::size_t a = 0; a < ls.size(); ++a) {
                const double numeric = oracle::quadrature(
                    [&](double p) { return max_of(ls, p) - ls[a].at(p); }, 0.0, 1.0, {100'000});
                worst_quad = std::max(worst_quad, std::abs(numeric - r.values[a].second));
            }
        }
        c.near("quadrature max deviation", worst_quad, 0.0, 1e-4);
    });

    report(9, "free perfect information equals the clairvoyance line at the prior", [&](Check& c) {
        auto ts = testing::party_two_stage(0.7);
        ts.evidence = testing::forecast(1.0, 0.0);
        ts.commitments[2].switch_cost = 0.0;
        const double v = value_with_flexibility(ts, ts.commitment("porch-option"));
        c.near("value", v, clairvoyance_line(model, family).at(0.7), 1e-9);
        c.near("party instance", v, 85.0, 1e-9);
    });

    report(10, "CLI output is byte-identical across runs", [&](Check& c) {
        const std::string base = "'" + cli + "' ";
        const std::string m = " --model '" + party_file + "'";
        const std::vector<std::string> commands = {
            base + "meu" + m,
            base + "meu" + m + " --format json --verify",
            base + "envelope" + m + " --verify",
            base + "brittleness --def outcomes" + m,
            base + "brittleness --def belief" + m + " --verify",
            base + "brittleness --def clairvoyance" + m + " --format json",
            base + "flexvalue" + m + " --p 0.7 --verify",
            base + "flexvalue" + m + " --commitment porch-option --format json",
        };
        for (const auto& cmd : commands) {
            c.require("stdout differs: " + cmd, run(cmd) == run(cmd));
        }
        const auto svg_a = (scratch / "a.svg").string();
        const auto svg_b = (scratch / "b.svg").string();
        const std::string plot = base + "plot" + m +
                                 " --layers ce,envelope,clairvoyance,prior,two-stage --shade outdoors --out ";
        const auto out_a = run(plot + "'" + svg_a + "'");
        const auto out_b = run(plot + "'" + svg_a + "'");
        const auto first = slurp(svg_a);
        run(plot + "'" + svg_b + "'");
        c.require("plot stdout differs", out_a == out_b);
        c.require("svg empty", !first.empty());
        c.require("svg differs", first == slurp(svg_b));
    });

    std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
