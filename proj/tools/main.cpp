#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lamecn/checks.hpp"
#include "lamecn/closedform.hpp"
#include "lamecn/floquet_oracle.hpp"
#include "lamecn/specfun.hpp"
#include "report.hpp"

namespace cf = lamecn::closedform;
namespace orc = lamecn::oracle;
namespace cli = lamecn::cli;

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 numerical failure.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

struct OutputTarget {
    std::string path;  // empty = stdout

    template <typename Fn>
    void emit(Fn&& write) const {
        if (path.empty()) {
            write(std::cout);
            std::cout.flush();
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw std::domain_error("cannot open output file: " + path);
        }
        write(f);
    }
};

void write_rows(const OutputTarget& out, const std::string& format,
                const std::vector<cli::Row>& rows) {
    out.emit([&](std::ostream& os) {
        if (format == "json") {
            cli::write_json(os, rows);
        } else {
            cli::write_csv(os, rows);
        }
    });
}

std::optional<int> band_index_of(double kappa, double mu_tilde) {
    if (mu_tilde <= 0.0) {
        return std::nullopt;
    }
    const double diff = std::sqrt(1.0 + 8.0 * kappa * kappa) / 4.0;
    return static_cast<int>(std::nearbyint(diff));
}

struct SweepRow {
    double kappa = 0.0;
    double delta = 0.0;  // alpha - beta
    double mu_re1 = 0.0, mu_im1 = 0.0, mu_re2 = 0.0, mu_im2 = 0.0;
    double mu_tilde = 0.0;
    bool in_band = false;
    std::optional<int> band_index;
    std::optional<double> oracle_mu_tilde;
    std::optional<double> mu_tilde_abs_err;
};

SweepRow compute_sweep_row(double kappa, double tol, bool with_oracle) {
    SweepRow row;
    row.kappa = kappa;
    const cf::FloquetResult r = cf::multipliers_exponents(kappa);
    row.delta = cf::reduce_to_hypergeometric(kappa).diff;
    row.mu_re1 = r.mu1.real();
    row.mu_im1 = r.mu1.imag();
    row.mu_re2 = r.mu2.real();
    row.mu_im2 = r.mu2.imag();
    row.mu_tilde = cf::growth_rate(kappa);  // exact zero in stable regions
    row.in_band = row.mu_tilde > 0.0;
    row.band_index = band_index_of(kappa, row.mu_tilde);
    if (with_oracle) {
        const double numeric = orc::numeric_exponents(kappa, tol).mu_tilde;
        row.oracle_mu_tilde = numeric;
        row.mu_tilde_abs_err = std::fabs(numeric - row.mu_tilde);
    }
    return row;
}

cli::Row to_output_row(const SweepRow& s) {
    cli::Row row{
        {"kappa", s.kappa},
        {"delta", s.delta},
        {"mu_re1", s.mu_re1},
        {"mu_im1", s.mu_im1},
        {"mu_re2", s.mu_re2},
        {"mu_im2", s.mu_im2},
        {"mu_tilde", s.mu_tilde},
        {"in_band", s.in_band},
        {"band_index",
         s.band_index ? cli::Value(static_cast<long long>(*s.band_index))
                      : cli::Value(std::monostate{})},
    };
    if (s.oracle_mu_tilde) {
        row.push_back({"oracle_mu_tilde", *s.oracle_mu_tilde});
        row.push_back({"mu_tilde_abs_err", *s.mu_tilde_abs_err});
    }
    return row;
}

void require_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::domain_error("--tol must be positive");
    }
}

int cmd_exponents(double kappa, double tol, bool with_oracle,
                  const std::string& format, const OutputTarget& out) {
    require_tol(tol);
    const cf::FloquetResult r = cf::multipliers_exponents(kappa);
    const cf::HypergeometricParams p = cf::reduce_to_hypergeometric(kappa);
    const double mu_tilde = cf::growth_rate(kappa);
    const std::optional<int> band = band_index_of(kappa, mu_tilde);

    cli::Row row{
        {"kappa", kappa},
        {"delta", p.diff},
        {"theta", p.theta},
        {"lambda_re1", r.lambda1.real()},
        {"lambda_im1", r.lambda1.imag()},
        {"lambda_re2", r.lambda2.real()},
        {"lambda_im2", r.lambda2.imag()},
        {"rho_re1", r.rho1.real()},
        {"rho_im1", r.rho1.imag()},
        {"rho_re2", r.rho2.real()},
        {"rho_im2", r.rho2.imag()},
        {"mu_re1", r.mu1.real()},
        {"mu_im1", r.mu1.imag()},
        {"mu_re2", r.mu2.real()},
        {"mu_im2", r.mu2.imag()},
        {"mu_tilde", mu_tilde},
        {"in_band", mu_tilde > 0.0},
        {"band_index", band ? cli::Value(static_cast<long long>(*band))
                            : cli::Value(std::monostate{})},
    };
    if (with_oracle) {
        const orc::MonodromyMatrix m = orc::monodromy(kappa, tol);
        const cf::FloquetResult num = orc::numeric_exponents(kappa, tol);
        const double closed_trace = (r.rho1 + r.rho2).real();
        const double num_trace = m.m11 + m.m22;
        row.push_back({"oracle_mu_tilde", num.mu_tilde});
        row.push_back({"oracle_trace", num_trace});
        row.push_back({"oracle_det", m.m11 * m.m22 - m.m12 * m.m21});
        row.push_back({"mu_tilde_abs_err", std::fabs(num.mu_tilde - mu_tilde)});
        row.push_back({"trace_abs_err", std::fabs(num_trace - closed_trace)});
    }
    write_rows(out, format, {row});
    return kOk;
}

int cmd_bands(unsigned n_max, const std::string& format,
              const OutputTarget& out) {
    if (n_max < 1) {
        throw std::domain_error("--n-max must be >= 1");
    }
    std::vector<cli::Row> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        const cf::AmplificationBand b =
            cf::amplification_band(static_cast<int>(n));
        rows.push_back({
            {"n", static_cast<long long>(b.n)},
            {"kappa_lo", b.kappa_lo},
            {"kappa_hi", b.kappa_hi},
            {"kappa_peak", b.kappa_peak},
            {"mu_peak", b.mu_peak},
        });
    }
    write_rows(out, format, rows);
    return kOk;
}

int cmd_sweep(double kappa_lo, double kappa_hi, unsigned steps, double tol,
              bool with_oracle, const std::string& format,
              const OutputTarget& out) {
    require_tol(tol);
    if (!(kappa_lo >= 0.0) || !(kappa_lo < kappa_hi) ||
        !std::isfinite(kappa_hi)) {
        throw std::domain_error("need 0 <= --kappa-min < --kappa-max");
    }
    if (steps < 2) {
        throw std::domain_error("--steps must be >= 2");
    }

    std::vector<double> grid(steps);
    for (unsigned i = 0; i < steps; ++i) {
        grid[i] = kappa_lo + (kappa_hi - kappa_lo) *
                                 (static_cast<double>(i) / (steps - 1));
    }
    grid.back() = kappa_hi;  // endpoint inclusive regardless of rounding

    std::vector<SweepRow> rows(steps);
    unsigned workers = 1;
    if (with_oracle && steps >= 16) {
        workers = std::min(std::thread::hardware_concurrency(), 8u);
        if (workers == 0) workers = 1;
    }
    if (workers == 1) {
        for (unsigned i = 0; i < steps; ++i) {
            rows[i] = compute_sweep_row(grid[i], tol, with_oracle);
        }
    } else {
        // Fan out, merge back in kappa order; each row is a pure function of
        // its kappa so the partition cannot change the output bytes.
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (unsigned i = w; i < steps; i += workers) {
                        rows[i] = compute_sweep_row(grid[i], tol, with_oracle);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
        for (const std::exception_ptr& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    std::vector<cli::Row> output;
    output.reserve(steps);
    for (const SweepRow& s : rows) {
        output.push_back(to_output_row(s));
    }
    write_rows(out, format, output);
    return kOk;
}

int cmd_verify(double tol, const OutputTarget& out) {
    require_tol(tol);
    const std::vector<lamecn::checks::CheckResult> results =
        lamecn::checks::run_all(tol);
    bool all_passed = true;
    out.emit([&](std::ostream& os) {
        for (const auto& r : results) {
            char line[256];
            std::snprintf(line, sizeof line, "%s  %-28s measured %.3e  limit %.3e",
                          r.passed ? "PASS" : "FAIL", r.name.c_str(),
                          r.measured, r.limit);
            os << line;
            if (!r.detail.empty()) {
                os << "  (" << r.detail << ')';
            }
            os << '\n';
            all_passed = all_passed && r.passed;
        }
        os << (all_passed ? "VERIFY OK\n" : "VERIFY FAILED\n");
    });
    return all_passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Characteristic (Floquet) exponents of X'' + kappa^2 cn^2(z,1/sqrt2) X "
        "= 0:\nclosed-form evaluation, amplification bands, stability sweeps "
        "and a\nnumerical cross-validation suite."};
    app.require_subcommand(1);

    double kappa = 0.0, kappa_min = 0.0, kappa_max = 0.0, tol = 1e-10;
    unsigned steps = 0, n_max = 0;
    bool with_oracle = false;
    std::string format = "csv", out_path;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path,
                        "Write output to this file instead of stdout");
    };

    CLI::App* exponents = app.add_subcommand(
        "exponents", "Multipliers and exponents for one kappa");
    exponents->add_option("--kappa", kappa, "Coupling kappa")->required();
    exponents->add_option("--tol", tol, "Oracle integration tolerance");
    exponents->add_flag("--oracle", with_oracle,
                        "Append monodromy-oracle values and discrepancies");
    add_io(exponents);

    CLI::App* bands =
        app.add_subcommand("bands", "Amplification bands 1..n-max");
    bands->add_option("--n-max", n_max, "Last band index")->required();
    add_io(bands);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Uniform kappa sweep for stability charts");
    sweep->add_option("--kappa-min", kappa_min, "Sweep start (default 0)");
    sweep->add_option("--kappa-max", kappa_max, "Sweep end")->required();
    sweep->add_option("--steps", steps, "Number of rows (>= 2)")->required();
    sweep->add_option("--tol", tol, "Oracle integration tolerance");
    sweep->add_flag("--oracle", with_oracle,
                    "Append oracle growth rate and absolute error per row");
    add_io(sweep);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the oracle-vs-closed-form invariant suite");
    verify->add_option("--tol", tol, "Oracle integration tolerance");
    verify->add_option("--out", out_path, "Write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    const OutputTarget out{out_path};
    try {
        if (exponents->parsed()) {
            return cmd_exponents(kappa, tol, with_oracle, format, out);
        }
        if (bands->parsed()) {
            return cmd_bands(n_max, format, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(kappa_min, kappa_max, steps, tol, with_oracle,
                             format, out);
        }
        return cmd_verify(tol, out);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}
