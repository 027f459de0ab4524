#include "qstat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qstat/errors.hpp"
#include "qstat/estimators.hpp"
#include "qstat/moments.hpp"
#include "qstat/qgaussian.hpp"
#include "qstat/qlaplace.hpp"
#include "qstat/verify.hpp"

namespace qstat {

namespace {

using nlohmann::json;

std::string fmt(double v)
{
    char b[64];
    std::snprintf(b, sizeof b, "%.15g", v);
    return b;
}

// no JSON literal for NaN/inf, and the serializer would quietly write null;
// making that explicit keeps parse(print(x)) = x for the in-memory documents
json jnum(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

std::uint64_t default_seed()
{
    if (const char* s = std::getenv("QSTAT_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0')
            return v;
    }
    return 12345;
}

std::vector<double> parse_grid(const std::string& csv)
{
    std::vector<double> g;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("--q-grid: bad number '" + tok + "'");
        g.push_back(v);
    }
    return g;
}

struct MomentRow {
    std::string name;
    std::optional<double> closed;
    double oracle = 0.0;
    bool converged = false;
};

void print_moment_row(const MomentRow& r, const std::string& format, std::ostream& out)
{
    const double abs_err = r.closed ? std::fabs(*r.closed - r.oracle) : 0.0;
    const double den = r.closed ? std::max(std::fabs(*r.closed), std::fabs(r.oracle)) : 0.0;
    const double rel_err = den > 0.0 ? abs_err / den : 0.0;
    if (format == "json") {
        json j;
        j["name"] = r.name;
        j["closed_form"] = r.closed ? jnum(*r.closed) : json(nullptr);
        j["oracle"] = jnum(r.oracle);
        j["abs_err"] = r.closed ? jnum(abs_err) : json(nullptr);
        j["rel_err"] = r.closed ? jnum(rel_err) : json(nullptr);
        j["oracle_converged"] = r.converged;
        out << j.dump() << '\n';
        return;
    }
    if (r.closed)
        out << fmt(*r.closed) << "  oracle=" << fmt(r.oracle) << " abs_err=" << fmt(abs_err)
            << " rel_err=" << fmt(rel_err) << " converged=" << (r.converged ? "yes" : "no")
            << '\n';
    else
        out << fmt(r.oracle) << "  (oracle only; no closed form for this order/power)"
            << " converged=" << (r.converged ? "yes" : "no") << '\n';
}

int run_verify_cmd(const VerifyOptions& opt, const std::string& format, std::ostream& out)
{
    const VerifyReport rep = run_verify(opt);
    if (format == "json") {
        json j;
        j["seed"] = rep.seed;
        j["version"] = rep.version;
        j["pass"] = rep.pass;
        j["fail"] = rep.fail;
        j["skipped"] = rep.skipped;
        j["entries"] = json::array();
        for (const auto& e : rep.entries) {
            json je;
            je["name"] = e.name;
            je["locus"] = e.locus;
            je["closed"] = jnum(e.closed);
            je["oracle"] = jnum(e.oracle);
            je["tol"] = jnum(e.tol);
            je["status"] = e.status;
            je["note"] = e.note;
            j["entries"].push_back(std::move(je));
        }
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << "name,locus,closed,oracle,abs_err,rel_err,status\n";
        for (const auto& e : rep.entries) {
            const double abs_err = std::fabs(e.closed - e.oracle);
            const double den = std::max(std::fabs(e.closed), std::fabs(e.oracle));
            const double rel_err = den > 0.0 ? abs_err / den : 0.0;
            out << e.name << ',' << e.locus << ',' << fmt(e.closed) << ',' << fmt(e.oracle)
                << ',' << fmt(abs_err) << ',' << fmt(rel_err) << ',' << e.status << '\n';
        }
    } else {
        for (const auto& e : rep.entries) {
            char line[160];
            std::snprintf(line, sizeof line, "%-17s %-44s [%s]", e.status.c_str(),
                          e.name.c_str(), e.locus.c_str());
            out << line << " closed=" << fmt(e.closed) << " oracle=" << fmt(e.oracle)
                << " tol=" << fmt(e.tol);
            if (!e.note.empty())
                out << "  -- " << e.note;
            out << '\n';
        }
        out << rep.entries.size() << " checks: " << rep.pass << " PASS, " << rep.fail
            << " FAIL, " << rep.skipped << " SKIPPED-divergent (seed " << rep.seed
            << ", version " << rep.version << ")\n";
    }
    return rep.fail == 0 ? 0 : 1;
}

} // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err,
             std::istream* in)
{
    CLI::App app{"q-Gaussian distribution toolkit: evaluation, sampling, estimation, "
                 "and closed-form-vs-oracle verification"};
    app.require_subcommand(1);

    double q = 1.0, m = 0.0, sigma2 = 1.0;
    std::string format = "text";

    auto add_member = [&](CLI::App* c) {
        c->add_option("--q", q, "entropic index (q < 3)")->required();
        c->add_option("--m", m, "location (default 0)");
        c->add_option("--sigma2", sigma2, "scale parameter sigma^2 (default 1)");
    };
    auto add_format = [&](CLI::App* c, bool csv) {
        c->add_option("--format", format, csv ? "text|json|csv" : "text|json")
            ->check(csv ? CLI::IsMember({"text", "json", "csv"})
                        : CLI::IsMember({"text", "json"}));
    };

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate pdf, cdf, or quantile at a point");
    double eval_x = 0.0;
    std::string what = "pdf";
    add_member(eval);
    eval->add_option("--x", eval_x, "evaluation point (probability in (0,1) for quantile)")
        ->required();
    eval->add_option("--what", what, "pdf|cdf|quantile")
        ->check(CLI::IsMember({"pdf", "cdf", "quantile"}));
    add_format(eval, false);

    // moments
    auto* mom = app.add_subcommand("moments", "ordinary and escort moments, closed vs oracle");
    int order = 1;
    std::string kind = "raw";
    double power = std::numeric_limits<double>::quiet_NaN();
    add_member(mom);
    mom->add_option("--order", order, "moment order n >= 0")->required();
    mom->add_option("--kind", kind, "raw|unnormalized|normalized")
        ->check(CLI::IsMember({"raw", "unnormalized", "normalized"}));
    mom->add_option("--power", power,
                    "density power for the deformed kinds (default q, 2q-1, 4q-3 for "
                    "orders 1, 2, 4)");
    add_format(mom, false);

    // laplace
    auto* lap = app.add_subcommand("laplace", "deformed Laplace transform of a member");
    double theta = 0.0;
    std::string method = "closed";
    add_member(lap);
    lap->add_option("--theta", theta, "transform argument")->required();
    lap->add_option("--method", method, "closed|oracle")
        ->check(CLI::IsMember({"closed", "oracle"}));
    add_format(lap, false);

    // sample
    auto* smp = app.add_subcommand("sample", "draw reproducible variates, one per line");
    std::size_t n = 0;
    std::uint64_t seed = default_seed();
    add_member(smp);
    smp->add_option("--n", n, "number of draws")->required();
    smp->add_option("--seed", seed, "RNG seed (default: QSTAT_SEED env, else 12345)");

    // estimate
    auto* est = app.add_subcommand("estimate",
                                   "summarize newline-separated reals from stdin or --file");
    std::string file;
    double sigma2_known = std::numeric_limits<double>::quiet_NaN();
    double level = 0.95;
    std::string z_source = "normal";
    est->add_option("--q", q, "entropic index of the assumed member")->required();
    est->add_option("--file", file, "read data from this file instead of stdin");
    est->add_option("--sigma2-known", sigma2_known,
                    "known scale; triggers a confidence interval for the mean");
    est->add_option("--level", level, "interval confidence level (default 0.95)");
    est->add_option("--z-source", z_source,
                    "interval quantile source: normal (default) or qgaussian")
        ->check(CLI::IsMember({"normal", "qgaussian"}));
    add_format(est, false);

    // verify
    auto* ver = app.add_subcommand("verify", "run every invariant suite and adjudication");
    std::string q_grid_csv;
    double tol_scale = 1.0;
    std::uint64_t vseed = default_seed();
    ver->add_option("--q-grid", q_grid_csv, "comma-separated q values overriding suite grids");
    ver->add_option("--tol-scale", tol_scale,
                    "strictness scale: tolerances are divided by this, so values below 1 "
                    "loosen every gate")
        ->check(CLI::PositiveNumber);
    ver->add_option("--seed", vseed, "seed for the randomized and Monte Carlo checks");
    add_format(ver, true);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*eval) {
            const auto p = make_params(q, m, sigma2);
            double v = 0.0;
            if (what == "pdf")
                v = pdf(p, eval_x);
            else if (what == "cdf")
                v = cdf(p, eval_x);
            else
                v = quantile(p, eval_x);
            if (format == "json") {
                json j{{"q", q},     {"m", m},       {"sigma2", sigma2},
                       {"x", eval_x}, {"what", what}, {"value", jnum(v)}};
                out << j.dump() << '\n';
            } else {
                out << fmt(v) << '\n';
            }
            return 0;
        }

        if (*mom) {
            const auto p = make_params(q, m, sigma2);
            if (order < 0)
                throw std::invalid_argument("--order must be >= 0");
            if (std::isnan(power)) {
                if (order == 1)
                    power = q;
                else if (order == 2)
                    power = 2.0 * q - 1.0;
                else if (order == 4)
                    power = 4.0 * q - 3.0;
                else if (kind != "raw")
                    throw std::invalid_argument(
                        "--power is required for this order with deformed kinds");
            }
            auto matches = [&](double want) { return std::fabs(power - want) < 1e-12; };
            MomentRow row;
            QuadratureResult ora;
            // a closed form outside its validity window is simply unavailable;
            // the oracle then decides alone, and true divergence exits as
            // non-convergence rather than as a usage error
            auto closed_or_nothing = [&](auto&& f) -> std::optional<double> {
                try {
                    return f();
                } catch (const std::domain_error&) {
                    return std::nullopt;
                }
            };
            if (kind == "raw") {
                row.name = "raw n=" + std::to_string(order);
                row.closed = closed_or_nothing([&]() -> double {
                    const double V = order >= 2 ? variance_closed(p) : 0.0;
                    switch (order) {
                    case 0: return 1.0;
                    case 1: return m;
                    case 2: return V + m * m;
                    case 3: return m * m * m + 3.0 * m * V;
                    case 4:
                        return kurtosis_closed(q) * V * V + 6.0 * m * m * V + m * m * m * m;
                    default: throw std::domain_error("no closed form");
                    }
                });
                ora = raw_moment_oracle(p, order, 1e-9);
            } else if (kind == "unnormalized") {
                row.name = "unnormalized n=" + std::to_string(order);
                if (order == 1 && matches(q))
                    row.closed = closed_or_nothing([&] { return eq_x_closed(p); });
                else if (order == 2 && matches(2.0 * q - 1.0))
                    row.closed = closed_or_nothing([&] { return e2qm1_x2_closed(p); });
                ora = unnormalized_q_moment(p, order, power, 1e-10);
            } else {
                // escort moments are reported about the mean; odd ones vanish
                row.name = "normalized n=" + std::to_string(order);
                if (order % 2 == 1)
                    row.closed = 0.0;
                else if (order == 2 && matches(2.0 * q - 1.0))
                    row.closed = closed_or_nothing([&] { return normalized_q_variance(p); });
                else if (order == 4 && matches(4.0 * q - 3.0))
                    row.closed = closed_or_nothing([&]() -> double {
                        const double nv = normalized_q_variance(p);
                        return normalized_kurtosis(q) * nv * nv;
                    });
                ora = normalized_q_moment_oracle(p, order, power, 1e-9);
            }
            row.oracle = ora.value;
            row.converged = ora.converged;
            if (!ora.converged)
                throw convergence_error("moment oracle did not converge (divergent or "
                                        "beyond quadrature reach)");
            print_moment_row(row, format, out);
            return 0;
        }

        if (*lap) {
            const auto p = make_params(q, m, sigma2);
            LaplaceEval ev;
            if (method == "closed") {
                ev = laplace_closed(p, theta);
            } else {
                ev = laplace_oracle(p, theta, 1e-12);
                if (!ev.converged)
                    throw convergence_error(
                        "transform oracle did not converge (integrand pole crossed?)");
            }
            if (format == "json") {
                json j{{"q", q},
                       {"m", m},
                       {"sigma2", sigma2},
                       {"theta", theta},
                       {"method", method},
                       {"value", jnum(ev.value)},
                       {"converged", ev.converged}};
                out << j.dump() << '\n';
            } else {
                out << fmt(ev.value) << '\n';
            }
            return 0;
        }

        if (*smp) {
            const auto p = make_params(q, m, sigma2);
            RandomSource rng(seed);
            for (const double x : sample(p, rng, n))
                out << fmt(x) << '\n';
            return 0;
        }

        if (*est) {
            std::vector<double> data;
            if (!file.empty()) {
                std::ifstream fs(file);
                if (!fs)
                    throw std::invalid_argument("cannot open " + file);
                double v;
                while (fs >> v)
                    data.push_back(v);
                if (!fs.eof())
                    throw std::invalid_argument("non-numeric input in " + file);
            } else {
                std::istream& is = in ? *in : std::cin;
                double v;
                while (is >> v)
                    data.push_back(v);
                if (!is.eof())
                    throw std::invalid_argument("non-numeric input on stdin");
            }
            const auto st = summarize(data, q);
            std::optional<ConfidenceInterval> ci;
            if (!std::isnan(sigma2_known))
                ci = confidence_interval(st, sigma2_known, level,
                                         z_source == "normal" ? ZSource::normal
                                                              : ZSource::qgaussian);
            if (format == "json") {
                json j{{"n", st.n},
                       {"mean", jnum(st.mean)},
                       {"s2", jnum(st.s2)},
                       {"sigma2_hat", jnum(st.sigma2_hat)},
                       {"q", st.q}};
                if (ci)
                    j["ci"] = json{{"lo", jnum(ci->lo)}, {"hi", jnum(ci->hi)},
                                   {"level", ci->level}};
                out << j.dump() << '\n';
            } else {
                out << "n=" << st.n << " mean=" << fmt(st.mean) << " s2=" << fmt(st.s2)
                    << " sigma2_hat=" << fmt(st.sigma2_hat) << " q=" << fmt(st.q) << '\n';
                if (ci)
                    out << "ci: [" << fmt(ci->lo) << ", " << fmt(ci->hi)
                        << "] level=" << fmt(ci->level) << '\n';
            }
            return 0;
        }

        if (*ver) {
            VerifyOptions opt;
            opt.q_grid = parse_grid(q_grid_csv);
            opt.tol_scale = tol_scale;
            opt.seed = vseed;
            return run_verify_cmd(opt, format, out);
        }
    } catch (const convergence_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace qstat
