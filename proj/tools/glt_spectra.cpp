// glt-spectra: spectral-symbol analysis of Sturm-Liouville discretizations.
// Subcommands dump spectra, rearrangements, grids and matrices as CSV and
// regenerate the experiment tables/figures. Exit codes: 0 ok, 2 bad
// configuration, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spectra/analysis.hpp"
#include "spectra/csv.hpp"
#include "spectra/eig.hpp"
#include "spectra/fd.hpp"
#include "spectra/grids.hpp"
#include "spectra/iga.hpp"
#include "spectra/problems.hpp"
#include "spectra/symbol.hpp"
#include "spectra/tables.hpp"

namespace {

using namespace spectra;

struct RunConfig {
    std::string method = "fd";
    std::string problem = "euler-cauchy";
    double alpha = 1.0;
    int n = 100;
    int eta = 1;
    std::string grid = "uniform";
    int r = 1000;
    bool exact = false;
    std::string out;
    int jobs = 1;
};

void validate(const RunConfig& cfg, bool needs_matrix) {
    if (cfg.n < 1) throw std::invalid_argument("--n must be >= 1");
    if (cfg.eta < 1) throw std::invalid_argument("--eta must be >= 1");
    if (cfg.method != "fd" && cfg.method != "iga") throw std::invalid_argument("--method must be fd or iga");
    if (cfg.grid != "uniform" && cfg.grid != "exp") throw std::invalid_argument("--grid must be uniform or exp");
    if (cfg.problem != "euler-cauchy" && cfg.problem != "laplacian-1d" && cfg.problem != "l1-case")
        throw std::invalid_argument("unknown --problem");
    if (cfg.problem == "euler-cauchy" && cfg.alpha <= 0.0) throw std::invalid_argument("--alpha must be positive");
    if (cfg.grid == "exp" && cfg.problem != "euler-cauchy")
        throw std::invalid_argument("--grid exp applies to the euler-cauchy problem only");
    if (cfg.problem == "l1-case") {
        if (cfg.method != "fd" || cfg.eta != 1) throw std::invalid_argument("l1-case supports fd with --eta 1 only");
        if (cfg.grid != "uniform") throw std::invalid_argument("l1-case forbids --grid exp");
    }
    if (cfg.method == "iga") {
        if (cfg.eta > 10) throw std::invalid_argument("iga --eta must be in 1..10");
        if (cfg.problem == "l1-case") throw std::invalid_argument("iga does not support l1-case");
    }
    if (needs_matrix && cfg.n > tables::max_n_cap())
        throw std::invalid_argument("--n exceeds the desk-scale cap (override with GLT_SPECTRA_MAX_N)");
}

problems::SLProblem make_problem(const RunConfig& cfg) {
    if (cfg.problem == "euler-cauchy") return problems::euler_cauchy(cfg.alpha);
    if (cfg.problem == "laplacian-1d") return problems::dirichlet_laplacian(0.0, 1.0);
    return problems::l1_problem();
}

grids::Diffeomorphism make_map(const RunConfig& cfg) {
    return cfg.grid == "exp" ? grids::exp_map(cfg.alpha) : grids::identity_map();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output file " + path);
    return os;
}

void cmd_spectrum(const RunConfig& cfg) {
    validate(cfg, true);
    eig::SpectrumResult res;
    if (cfg.method == "fd") {
        const fd::System sys = fd::assemble(make_problem(cfg), make_map(cfg), cfg.n, cfg.eta);
        const fd::Operator op = fd::to_operator(sys);
        res = op.symmetric ? eig::eigvals_sym(op.A) : eig::eigvals_general(op.A);
    } else {
        const iga::GalerkinPair pair = iga::assemble(make_problem(cfg), make_map(cfg), cfg.n, cfg.eta);
        const iga::GenEigProblem gep = iga::to_eigenproblem(pair);
        res = eig::eigvals_gen_sym(gep.K, gep.M);
    }
    std::ofstream os = open_out(cfg.out);
    csv::write_header(os, {"k", "lambda_re", "lambda_im"});
    for (size_t k = 0; k < res.values.size(); ++k)
        csv::write_row(os, {static_cast<double>(k + 1), res.values[k],
                            res.imag.empty() ? 0.0 : res.imag[k]});
}

void cmd_rearrange(const RunConfig& cfg) {
    validate(cfg, false);
    if (cfg.r < 2) throw std::invalid_argument("--r must be >= 2");
    if (cfg.exact && cfg.problem != "euler-cauchy")
        throw std::invalid_argument("--exact requires the euler-cauchy problem");
    std::ofstream os = open_out(cfg.out);
    csv::write_header(os, {"x", "omega_tilde"});
    if (cfg.exact) {
        for (int k = 1; k <= cfg.n; ++k) {
            const double x = static_cast<double>(k) / (cfg.n + 1);
            csv::write_row(os, {x, symbol::euler_cauchy_omega_tilde(cfg.alpha, x)});
        }
        return;
    }
    symbol::SeparableSymbol sym;
    if (cfg.problem == "l1-case") {
        sym = symbol::l1_symbol();
    } else {
        auto freq = cfg.method == "iga" ? iga::frequency_symbol(cfg.eta) : fd::frequency_symbol(cfg.eta);
        sym = symbol::make_symbol(make_problem(cfg), make_map(cfg), std::move(freq));
    }
    const symbol::MonotoneRearrangement rear = symbol::rearrange(sym, cfg.r);
    const std::vector<double> vals = symbol::sample_rearrangement(rear, cfg.n);
    for (int k = 1; k <= cfg.n; ++k)
        csv::write_row(os, {static_cast<double>(k) / (cfg.n + 1), vals[k - 1]});
}

void cmd_grid(const RunConfig& cfg) {
    validate(cfg, false);
    const problems::SLProblem prob = make_problem(cfg);
    const grids::ExtendedGrid grid =
        grids::mapped_grid(grids::uniform_grid(prob.a, prob.b, cfg.n, cfg.eta), make_map(cfg));
    std::ofstream os = open_out(cfg.out);
    csv::write_header(os, {"j", "x"});
    for (int j = 1 - grid.eta(); j <= grid.n() + grid.eta(); ++j)
        csv::write_row(os, {static_cast<double>(j), grid.node(j)});
}

void dump_band(const std::string& path, const BandMatrix& m) {
    std::ofstream os = open_out(path);
    os << "i,j,value\n";
    for (int i = 0; i < m.size(); ++i)
        for (int j = std::max(0, i - m.bandwidth()); j <= std::min(m.size() - 1, i + m.bandwidth()); ++j)
            if (m.get(i, j) != 0.0)
                os << i + 1 << ',' << j + 1 << ',' << csv::fmt17(m.get(i, j)) << '\n';
}

void cmd_matrix(const RunConfig& cfg) {
    validate(cfg, true);
    if (cfg.method == "fd") {
        const fd::Operator op = fd::to_operator(fd::assemble(make_problem(cfg), make_map(cfg), cfg.n, cfg.eta));
        dump_band(cfg.out, op.A);
    } else {
        // stiffness to --out, mass alongside it
        const iga::GalerkinPair pair = iga::assemble(make_problem(cfg), make_map(cfg), cfg.n, cfg.eta);
        dump_band(cfg.out, pair.K);
        dump_band(cfg.out + ".mass.csv", pair.M);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GLT spectral-symbol analysis of Sturm-Liouville discretizations"};
    app.require_subcommand(1);

    RunConfig cfg;
    int table_id = 0;
    std::string figure_id;

    auto add_common = [&cfg](CLI::App* sub, bool with_r) {
        sub->add_option("--method", cfg.method, "fd or iga");
        sub->add_option("--problem", cfg.problem, "euler-cauchy, laplacian-1d or l1-case");
        sub->add_option("--alpha", cfg.alpha, "Euler-Cauchy coefficient");
        sub->add_option("--n", cfg.n, "mesh fineness parameter");
        sub->add_option("--eta", cfg.eta, "order of approximation");
        sub->add_option("--grid", cfg.grid, "uniform or exp");
        if (with_r) sub->add_option("--r", cfg.r, "rearrangement sampling parameter");
        sub->add_option("--out", cfg.out, "output CSV path")->required();
    };

    CLI::App* sp = app.add_subcommand("spectrum", "eigenvalues of the assembled operator");
    add_common(sp, false);
    CLI::App* re = app.add_subcommand("rearrange", "monotone rearrangement samples");
    add_common(re, true);
    re->add_flag("--exact", cfg.exact, "use the exact Euler-Cauchy rearrangement");
    CLI::App* gr = app.add_subcommand("grid", "dump the (mapped) extended grid");
    add_common(gr, false);
    CLI::App* mx = app.add_subcommand("matrix", "dump the operator in CSV triplet form");
    add_common(mx, false);

    CLI::App* tb = app.add_subcommand("table", "regenerate a numeric table");
    tb->add_option("id", table_id, "table id (1..8)")->required();
    tb->add_option("--out", cfg.out, "output directory")->required();
    tb->add_option("--jobs", cfg.jobs, "concurrent solves");

    CLI::App* fg = app.add_subcommand("figure", "emit plot-ready figure data");
    fg->add_option("id", figure_id, "figure id")->required();
    fg->add_option("--out", cfg.out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sp->parsed()) cmd_spectrum(cfg);
        else if (re->parsed()) cmd_rearrange(cfg);
        else if (gr->parsed()) cmd_grid(cfg);
        else if (mx->parsed()) cmd_matrix(cfg);
        else if (tb->parsed()) {
            if (table_id < 1 || table_id > 8) throw std::invalid_argument("table id must be in 1..8");
            tables::write_table(table_id, cfg.out, cfg.jobs);
        } else if (fg->parsed()) {
            tables::write_figure(figure_id, cfg.out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
