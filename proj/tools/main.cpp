#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mqmf/cascade.hpp"
#include "mqmf/factorize.hpp"
#include "mqmf/families.hpp"
#include "mqmf/json_io.hpp"
#include "mqmf/localsolve.hpp"
#include "mqmf/qmf.hpp"
#include "mqmf/rotations.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;

std::string slurp(const std::string& path) {
    if (path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << payload << "\n";
}

void write_csv(const std::string& path, const mqmf::SampledMatrixFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << "x";
    for (int i = 1; i <= f.dim; ++i)
        for (int j = 1; j <= f.dim; ++j) out << ",F" << i << j;
    out << "\n";
    char buf[64];
    for (int k = 0; k < static_cast<int>(f.values.size()); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", f.x(k));
        out << buf;
        const mqmf::Mat& m = f.values[static_cast<size_t>(k)];
        for (int i = 0; i < f.dim; ++i)
            for (int j = 0; j < f.dim; ++j) {
                std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
                out << "," << buf;
            }
        out << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal matrix wavelet filter bank toolkit"};
    app.require_subcommand(1);

    std::string construct_in, construct_out, construct_seed = "haar";
    auto* cmd_construct = app.add_subcommand("construct", "build a bank from a rotation step list");
    cmd_construct->add_option("--in", construct_in, "step list JSON (default: stdin)");
    cmd_construct->add_option("--out", construct_out, "bank JSON (default: stdout)");
    cmd_construct->add_option("--seed-bank", construct_seed, "starting system: haar | trivial")
        ->check(CLI::IsMember({"haar", "trivial"}));

    std::string family_tag, family_out;
    double family_a = 0.0, family_b = 0.0;
    auto* cmd_family = app.add_subcommand("family", "emit a closed-form d=2 family bank");
    cmd_family->add_option("--tag", family_tag, "first | second | diagonal | fourth")
        ->required()
        ->check(CLI::IsMember({"first", "second", "diagonal", "fourth"}));
    cmd_family->add_option("--a", family_a, "parameter a in [-1,1]")->required();
    cmd_family->add_option("--b", family_b, "parameter b in [-1,1] (fourth family)");
    cmd_family->add_option("--out", family_out, "bank JSON (default: stdout)");

    std::string verify_in, verify_out;
    double verify_tol = 1e-10;
    int verify_moments = 1;
    auto* cmd_verify = app.add_subcommand("verify", "check QMF, full-rank and sum-rule conditions");
    cmd_verify->add_option("--in", verify_in, "bank JSON (default: stdin)");
    cmd_verify->add_option("--out", verify_out, "report JSON (default: stdout)");
    cmd_verify->add_option("--tol", verify_tol, "tolerance (default 1e-10)");
    cmd_verify->add_option("--moments", verify_moments, "sum rules up to order moments-1");

    std::string solve_param = "lie", solve_out, solve_report;
    int solve_moments = 2, solve_restarts = 1;
    unsigned long long solve_seed = 0;
    double solve_tol = 1e-12;
    auto* cmd_solve = app.add_subcommand("solve", "impose full-rank/sum-rule constraints");
    cmd_solve->add_option("--param", solve_param, "parameterization: givens | lie")
        ->check(CLI::IsMember({"givens", "lie"}));
    cmd_solve->add_option("--moments", solve_moments, "sum rules up to order moments-1");
    cmd_solve->add_option("--restarts", solve_restarts, "number of random restarts");
    cmd_solve->add_option("--seed", solve_seed, "RNG seed (default 0)");
    cmd_solve->add_option("--tol", solve_tol, "success threshold on the residual");
    cmd_solve->add_option("--out", solve_out, "bank JSON (default: stdout)");
    cmd_solve->add_option("--report", solve_report, "run report JSON file");

    std::string analyze_in, analyze_out, analyze_signal;
    auto* cmd_analyze = app.add_subcommand("analyze", "two-channel analysis of a signal");
    cmd_analyze->add_option("--in", analyze_in, "bank JSON (default: stdin)");
    cmd_analyze->add_option("--signal", analyze_signal, "signal JSON file")->required();
    cmd_analyze->add_option("--out", analyze_out, "signal pair JSON (default: stdout)");

    std::string synth_in, synth_out, synth_signals;
    auto* cmd_synth = app.add_subcommand("synthesize", "reconstruct a signal from channel pairs");
    cmd_synth->add_option("--in", synth_in, "bank JSON (default: stdin)");
    cmd_synth->add_option("--signals", synth_signals, "signal pair JSON file")->required();
    cmd_synth->add_option("--out", synth_out, "signal JSON (default: stdout)");

    std::string cascade_in, cascade_out, cascade_wavelet_out;
    int cascade_levels = 8;
    auto* cmd_cascade = app.add_subcommand("cascade", "sample the matrix scaling function");
    cmd_cascade->add_option("--in", cascade_in, "bank JSON (default: stdin)");
    cmd_cascade->add_option("--levels", cascade_levels, "dyadic refinement level")->required();
    cmd_cascade->add_option("--out", cascade_out, "scaling function CSV")->required();
    cmd_cascade->add_option("--wavelet-out", cascade_wavelet_out, "wavelet CSV");

    std::string fact_in, fact_out;
    auto* cmd_fact = app.add_subcommand("factorize", "peel a bank into rotation steps");
    cmd_fact->add_option("--in", fact_in, "bank JSON (default: stdin)");
    cmd_fact->add_option("--out", fact_out, "certificate JSON (default: stdout)");

    std::string jac_out;
    auto* cmd_jac = app.add_subcommand("jacobian", "local linearization at the Haar system");
    cmd_jac->add_option("--out", jac_out, "report JSON (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_construct->parsed()) {
            mqmf::StepList list = mqmf::steps_from_json(slurp(construct_in));
            if (list.steps.empty())
                throw std::invalid_argument("construct: empty step list (dimension unknown)");
            const int d = list.steps.front().M.rows / 2;
            const mqmf::Seed seed =
                (construct_seed == "haar") ? mqmf::Seed::haar : mqmf::Seed::trivial;
            mqmf::FilterBank bank = mqmf::construct(list.steps, d, seed);
            bank.A = mqmf::translate(bank.A, -list.pre_translate);
            bank.B = mqmf::translate(bank.B, -list.pre_translate);
            emit(construct_out, mqmf::to_json(bank));
            return kExitOk;
        }
        if (cmd_family->parsed()) {
            emit(family_out, mqmf::to_json(mqmf::family_by_tag(family_tag, family_a, family_b)));
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            mqmf::FilterBank bank = mqmf::filter_bank_from_json(slurp(verify_in));
            mqmf::QmfReport report = mqmf::verify_bank(bank, verify_tol, verify_moments);
            emit(verify_out, mqmf::to_json(report));
            return report.all_pass() ? kExitOk : kExitMath;
        }
        if (cmd_solve->parsed()) {
            mqmf::SolveOptions opts;
            opts.restarts = solve_restarts;
            opts.seed = solve_seed;
            opts.tol = solve_tol;
            const mqmf::Parameterization kind = (solve_param == "givens")
                                                    ? mqmf::Parameterization::givens
                                                    : mqmf::Parameterization::lie;
            mqmf::SolveResult result =
                mqmf::solve_constraints(std::vector<double>(12, 0.0), kind, solve_moments, opts);
            if (!solve_report.empty()) emit(solve_report, mqmf::to_json(result));
            std::cerr << "solve: converged=" << (result.converged ? "yes" : "no")
                      << " residual=" << result.residual_norm << "\n";
            if (!result.converged) return kExitMath;
            emit(solve_out, mqmf::to_json(mqmf::parameterized_bank(result.params, kind)));
            return kExitOk;
        }
        if (cmd_analyze->parsed()) {
            mqmf::FilterBank bank = mqmf::filter_bank_from_json(slurp(analyze_in));
            mqmf::VectorSignal s = mqmf::vector_signal_from_json(slurp(analyze_signal));
            auto [s0, s1] = mqmf::analyze(bank, s);
            emit(analyze_out, mqmf::to_json_signal_pair(s0, s1));
            return kExitOk;
        }
        if (cmd_synth->parsed()) {
            mqmf::FilterBank bank = mqmf::filter_bank_from_json(slurp(synth_in));
            auto [s0, s1] = mqmf::signal_pair_from_json(slurp(synth_signals));
            emit(synth_out, mqmf::to_json(mqmf::synthesize(bank, s0, s1)));
            return kExitOk;
        }
        if (cmd_cascade->parsed()) {
            mqmf::FilterBank bank = mqmf::filter_bank_from_json(slurp(cascade_in));
            const mqmf::QmfReport report = mqmf::check_qmf(bank, 1e-8);
            if (!report.orthonormality_pass)
                std::cerr << "warning: bank fails the QMF conditions (residual "
                          << report.orthonormality_residual << "); cascade may not converge\n";
            write_csv(cascade_out, mqmf::cascade_scaling(bank, cascade_levels));
            if (!cascade_wavelet_out.empty())
                write_csv(cascade_wavelet_out, mqmf::cascade_wavelet(bank, cascade_levels));
            return kExitOk;
        }
        if (cmd_fact->parsed()) {
            mqmf::FilterBank bank = mqmf::filter_bank_from_json(slurp(fact_in));
            mqmf::PeelCertificate cert;
            try {
                cert = mqmf::factorize(bank);
            } catch (const mqmf::OrthogonalityError& e) {
                std::cerr << "factorize: " << e.what() << "\n";
                return kExitMath;
            }
            emit(fact_out, mqmf::to_json(cert));
            return cert.ok() ? kExitOk : kExitMath;
        }
        if (cmd_jac->parsed()) {
            const mqmf::Mat j = mqmf::jacobian_at_origin();
            const mqmf::SvdResult svd = mqmf::jacobi_svd(j);
            const int rank = mqmf::numeric_rank(svd, 1e-8);
            const mqmf::Mat kernel = mqmf::null_space(j, 1e-8);
            char buf[64];
            std::string out = "{\"rank\":" + std::to_string(rank) + ",\"singular_values\":[";
            for (size_t i = 0; i < svd.s.size(); ++i) {
                if (i) out += ",";
                std::snprintf(buf, sizeof(buf), "%.17g", svd.s[i]);
                out += buf;
            }
            out += "],\"kernel\":[";
            for (int c = 0; c < kernel.cols; ++c) {
                if (c) out += ",";
                out += "[";
                for (int r = 0; r < kernel.rows; ++r) {
                    if (r) out += ",";
                    std::snprintf(buf, sizeof(buf), "%.17g", kernel(r, c));
                    out += buf;
                }
                out += "]";
            }
            out += "]}";
            emit(jac_out, out);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitUsage;
}
