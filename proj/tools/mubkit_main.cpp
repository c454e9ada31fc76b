// mubkit command-line frontend: constructs bases, runs verifications, and
// emits JSON/CSV/table artifacts.
//
// Exit codes: 0 all checks passed, 1 verification failure (witness emitted),
// 2 invalid configuration.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mubkit/mub.hpp"
#include "mubkit/qdft.hpp"
#include "mubkit/serialize.hpp"
#include "mubkit/su2_basis.hpp"
#include "mubkit/weyl_pauli.hpp"

namespace {

using nlohmann::json;
using namespace mubkit;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidConfig = 2;

struct CommonOpts {
    std::string mode = "exact";
    double tol = 1e-10;
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--mode", opts.mode, "Arithmetic mode: exact or float")
        ->envname("MUBKIT_MODE")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--tol", opts.tol, "Float-mode tolerance");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--output", opts.output, "Write the artifact to this file");
    cmd->add_option("--seed", opts.seed, "Seed for randomized checks");
}

Mode parse_mode(const CommonOpts& opts) {
    return opts.mode == "float" ? Mode::Float : Mode::Exact;
}

void emit(const std::string& text, const CommonOpts& opts) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.output);
    out << text;
}

json report_to_json(const CheckReport& r, bool include_residual) {
    json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["witnesses"] = r.failures;
    if (include_residual) j["max_residual"] = r.max_residual;
    return j;
}

json pair_to_json(const PairCheck& p) {
    json j;
    j["left"] = p.left;
    j["right"] = p.right;
    j["passed"] = p.passed;
    switch (p.verdict) {
        case PairVerdict::Unbiased: j["verdict"] = "unbiased"; break;
        case PairVerdict::IdenticalOrthonormal: j["verdict"] = "identical-orthonormal"; break;
        case PairVerdict::Failed:
            j["verdict"] = "failed";
            j["witness"] = json{{"alpha", p.alpha}, {"beta", p.beta}, {"modulus", p.modulus}};
            break;
    }
    return j;
}

/// Assembles the verification artifact, writes it in the requested format,
/// and maps the outcome to the exit-code contract.
class VerifyRun {
public:
    VerifyRun(std::string command, const CommonOpts& opts)
        : opts_(opts), mode_(parse_mode(opts)), start_(std::chrono::steady_clock::now()) {
        artifact_["schema"] = 1;
        artifact_["command"] = std::move(command);
        artifact_["mode"] = mode_name(mode_);
    }

    Mode mode() const { return mode_; }
    double tol() const { return opts_.tol; }

    void config(const json& cfg) { artifact_["config"] = cfg; }

    void add(const CheckReport& report) {
        all_passed_ = all_passed_ && report.passed;
        checks_.push_back(report_to_json(report, mode_ == Mode::Float));
        reports_.push_back(report);
    }

    void add_pairs(const MubReport& report) {
        json pairs = json::array();
        for (const auto& p : report.pairs) {
            all_passed_ = all_passed_ && p.passed;
            pairs.push_back(pair_to_json(p));
        }
        checks_.push_back(json{{"name", "pairwise unbiasedness"},
                               {"passed", report.all_passed()},
                               {"pairs", std::move(pairs)}});
        pair_reports_.push_back(report);
    }

    int finish() {
        artifact_["checks"] = checks_;
        artifact_["all_passed"] = all_passed_;
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start_)
                              .count();
        // Exact-mode artifacts must be byte-deterministic, so the timing only
        // enters the float artifact; it always goes to stderr.
        if (mode_ == Mode::Float) artifact_["wall_time_ms"] = ms;
        std::cerr << "mubkit: " << artifact_["command"].get<std::string>() << " "
                  << (all_passed_ ? "passed" : "FAILED") << " in " << ms << " ms\n";

        if (opts_.format == "json") {
            emit(artifact_.dump(2) + "\n", opts_);
        } else if (opts_.format == "csv") {
            emit(to_csv(), opts_);
        } else {
            emit(to_table(), opts_);
        }
        return all_passed_ ? kExitOk : kExitVerificationFailed;
    }

private:
    std::string to_csv() const {
        std::ostringstream out;
        out << "check,passed,max_residual,witness\n";
        for (const auto& r : reports_) {
            out << r.name << ',' << (r.passed ? 1 : 0) << ',' << r.max_residual << ",\""
                << (r.failures.empty() ? "" : r.failures.front()) << "\"\n";
        }
        for (const auto& mr : pair_reports_)
            for (const auto& p : mr.pairs)
                out << p.left << " vs " << p.right << ',' << (p.passed ? 1 : 0) << ",,"
                    << (p.passed
                            ? "\"\""
                            : "\"alpha=" + std::to_string(p.alpha) + " beta=" +
                                  std::to_string(p.beta) + " modulus=" +
                                  std::to_string(p.modulus) + "\"")
                    << "\n";
        return out.str();
    }

    std::string to_table() const {
        std::ostringstream out;
        out << "== " << artifact_["command"].get<std::string>() << " ("
            << artifact_["mode"].get<std::string>() << ") ==\n";
        for (const auto& r : reports_) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (mode_ == Mode::Float) out << "  max residual " << r.max_residual;
            out << "\n";
            for (const auto& f : r.failures) out << "      " << f << "\n";
        }
        for (const auto& mr : pair_reports_) {
            for (const auto& p : mr.pairs) {
                out << (p.passed ? "PASS " : "FAIL ") << p.left << " vs " << p.right;
                if (!p.passed && p.verdict == PairVerdict::Failed && p.alpha >= 0)
                    out << "  witness alpha=" << p.alpha << " beta=" << p.beta
                        << " |overlap|=" << p.modulus;
                out << "\n";
            }
        }
        out << (all_passed_ ? "ALL CHECKS PASSED\n" : "CHECKS FAILED\n");
        return out.str();
    }

    CommonOpts opts_;
    Mode mode_;
    std::chrono::steady_clock::time_point start_;
    json artifact_;
    json checks_ = json::array();
    std::vector<CheckReport> reports_;
    std::vector<MubReport> pair_reports_;
    bool all_passed_ = true;
};

// Overlap-modulus grids scaled by sqrt(d): unbiased pairs read as all-ones.
std::string overlap_table(const std::vector<Basis>& bases, int d) {
    std::ostringstream out;
    const double scale = std::sqrt(static_cast<double>(d));
    out.setf(std::ios::fixed);
    out.precision(3);
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t k = i + 1; k < bases.size(); ++k) {
            out << bases[i].name() << " vs " << bases[k].name() << "  (|overlap| * sqrt(d))\n";
            for (int alpha = 0; alpha < d; ++alpha) {
                out << "  ";
                for (int beta = 0; beta < d; ++beta) {
                    const double m = std::abs(
                        inner_product(bases[i].vectors()[alpha], bases[k].vectors()[beta]));
                    out << m * scale << (beta + 1 == d ? "\n" : "  ");
                }
            }
        }
    return out.str();
}

std::string bases_to_csv(const std::vector<Basis>& bases) {
    std::ostringstream out;
    out << "basis,vector,n,re,im\n";
    out.precision(17);
    for (const auto& b : bases)
        for (int alpha = 0; alpha < b.d(); ++alpha) {
            const auto& v = b.vectors()[alpha];
            for (int n = 0; n < b.d(); ++n)
                out << b.name() << ',' << v.label() << ',' << n << ',' << v.floats()[n].real()
                    << ',' << v.floats()[n].imag() << '\n';
        }
    return out.str();
}

int run_gen(const std::string& which, const std::vector<Basis>& bases, const CommonOpts& opts) {
    if (opts.format == "json") {
        emit(bases_to_json_text(bases), opts);
    } else if (opts.format == "csv") {
        emit(bases_to_csv(bases), opts);
    } else {
        std::ostringstream out;
        out << which << ": " << bases.size() << " bases of dimension " << bases.front().d()
            << "\n";
        out << overlap_table(bases, bases.front().d());
        emit(out.str(), opts);
    }
    return kExitOk;
}

std::string exact_sum_string(const GroupRingElement& e) {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < e.order(); ++k) {
        const Coeff c = e.coeff(k);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const Coeff mag = std::llabs(c);
        if (mag != 1 || k == 0) out << mag;
        if (k > 0) {
            if (mag != 1) out << "*";
            out << "omega^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mubkit: mutually unbiased bases for qudits, with exact verification"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Construct bases and serialize them");
    gen->require_subcommand(1);
    CommonOpts gen_opts;

    int gen_d = 2, gen_a = 0, gen_b = 0;
    auto* gen_b0a = gen->add_subcommand("b0a", "Basis B_0a from the master formula");
    gen_b0a->add_option("--d", gen_d, "Dimension")->required();
    gen_b0a->add_option("--a", gen_a, "Quadratic parameter a (mod d)");
    add_common(gen_b0a, gen_opts);

    auto* gen_prime = gen->add_subcommand("complete-prime", "Complete set of 1+p MUBs");
    gen_prime->add_option("--d", gen_d, "Prime dimension")->required();
    add_common(gen_prime, gen_opts);

    auto* gen_w4 = gen->add_subcommand("w4", "The five d = 4 MUBs (W bases + B_4)");
    add_common(gen_w4, gen_opts);

    auto* gen_tensor = gen->add_subcommand("tensor", "Tensor basis B_0a0b in C^4");
    gen_tensor->add_option("--a", gen_a, "First factor label (0 or 1)")->required();
    gen_tensor->add_option("--b", gen_b, "Second factor label (0 or 1)")->required();
    add_common(gen_tensor, gen_opts);

    // ---- classes ------------------------------------------------------
    auto* classes_cmd =
        app.add_subcommand("classes", "Commuting-class listing of the Pauli operators (CSV)");
    int classes_p = 2;
    CommonOpts classes_opts;
    classes_cmd->add_option("--p", classes_p, "Prime dimension")->required();
    add_common(classes_cmd, classes_opts);

    // ---- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run verification checks");
    verify->require_subcommand(1);
    CommonOpts verify_opts;

    int v_d = 2, v_a = -1, v_p = 2, v_alpha = -1, v_trials = 20;
    double v_r = 0.0, v_a_real = 0.0;
    bool v_naive = false;

    auto* v_mub = verify->add_subcommand("mub-set", "Mutual unbiasedness of a basis set");
    v_mub->add_option("--d", v_d, "Dimension")->required();
    v_mub->add_flag("--naive", v_naive,
                    "Use the 1+d set {B_00..B_0(d-1), B_d} even when d is not prime");
    add_common(v_mub, verify_opts);

    auto* v_su2 = verify->add_subcommand("su2", "Polar decomposition and eigenvector checks");
    v_su2->add_option("--d", v_d, "Dimension 2j+1")->required();
    v_su2->add_option("--r", v_r, "Parameter r");
    v_su2->add_option("--a", v_a_real, "Parameter a");
    v_su2->add_option("--alpha", v_alpha, "Restrict the eigen check to one alpha");
    add_common(v_su2, verify_opts);

    auto* v_weyl = verify->add_subcommand("weyl", "Weyl pair relations");
    v_weyl->add_option("--d", v_d, "Dimension")->required();
    v_weyl->add_option("--a", v_a, "Check V_0a as well (-1: every a)");
    add_common(v_weyl, verify_opts);

    auto* v_part = verify->add_subcommand("partition", "Commuting-class partition");
    v_part->add_option("--p", v_p, "Prime dimension")->required();
    add_common(v_part, verify_opts);

    auto* v_cartan = verify->add_subcommand("cartan", "Cartan decomposition of su(p)");
    v_cartan->add_option("--p", v_p, "Prime dimension")->required();
    add_common(v_cartan, verify_opts);

    auto* v_pars = verify->add_subcommand("parseval", "Parseval conservation across all a");
    v_pars->add_option("--d", v_d, "Dimension")->required();
    v_pars->add_option("--trials", v_trials, "Number of random vector pairs");
    add_common(v_pars, verify_opts);

    auto* v_gauss = verify->add_subcommand("gauss-overlap",
                                           "Overlap-vs-Gauss-sum identity for all parameters");
    v_gauss->add_option("--d", v_d, "Dimension")->required();
    add_common(v_gauss, verify_opts);

    // ---- gauss --------------------------------------------------------
    auto* gauss_cmd = app.add_subcommand("gauss", "Evaluate a generalized quadratic Gauss sum");
    GaussSumParams gauss_params;
    CommonOpts gauss_opts;
    gauss_cmd->add_option("--u", gauss_params.u, "u")->required();
    gauss_cmd->add_option("--v", gauss_params.v, "v")->required();
    gauss_cmd->add_option("--w", gauss_params.w, "w")->required();
    add_common(gauss_cmd, gauss_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        // ---- gen dispatch ----
        if (gen_b0a->parsed())
            return run_gen("b0a", {basis_b0a(gen_d, gen_a, parse_mode(gen_opts))}, gen_opts);
        if (gen_prime->parsed())
            return run_gen("complete-prime", complete_set_prime(gen_d, parse_mode(gen_opts)),
                           gen_opts);
        if (gen_w4->parsed()) return run_gen("w4", w_bases(parse_mode(gen_opts)), gen_opts);
        if (gen_tensor->parsed())
            return run_gen("tensor", {tensor_basis(gen_a, gen_b, parse_mode(gen_opts))},
                           gen_opts);

        if (classes_cmd->parsed()) {
            emit(classes_to_csv(partition(classes_p)), classes_opts);
            return kExitOk;
        }

        // ---- verify dispatch ----
        if (v_mub->parsed()) {
            VerifyRun run("verify mub-set", verify_opts);
            run.config(json{{"d", v_d}, {"naive", v_naive}});
            std::vector<Basis> bases;
            if (v_naive) {
                for (int a = 0; a < v_d; ++a) bases.push_back(basis_b0a(v_d, a, run.mode()));
                bases.push_back(computational_basis(v_d, run.mode()));
            } else if (is_prime(v_d)) {
                bases = complete_set_prime(v_d, run.mode());
            } else {
                std::cerr << "mubkit: d = " << v_d
                          << " is not prime; a complete 1+d set is only constructed for "
                             "primes (use --naive to test the 1+d formula set anyway)\n";
                return kExitInvalidConfig;
            }
            run.add_pairs(check_mutually_unbiased(bases, run.mode(), run.tol()));
            if (verify_opts.format == "table") std::cerr << overlap_table(bases, v_d);
            return run.finish();
        }

        if (v_su2->parsed()) {
            VerifyRun run("verify su2", verify_opts);
            run.config(json{{"d", v_d}, {"r", v_r}, {"a", v_a_real}});
            const SpinLabel j = SpinLabel::from_dimension(v_d);
            const RaParameters p{v_r, v_a_real};
            if (run.mode() == Mode::Exact && !p.exact_compatible()) {
                std::cerr << "mubkit: exact mode requires r = 0 and integer a "
                             "(got r = "
                          << v_r << ", a = " << v_a_real << "); use --mode float\n";
                return kExitInvalidConfig;
            }
            const PolarGenerators gen3 = polar_generators(j, p);
            run.add(check_su2_commutators(gen3.j_plus, gen3.j_minus, gen3.j_z, run.tol()));
            if (run.mode() == Mode::Exact) {
                const int a_int = p.a_as_integer();
                for (int alpha = 0; alpha < v_d; ++alpha) {
                    if (v_alpha >= 0 && alpha != v_alpha) continue;
                    run.add(check_eigen_relation_exact(v_d, a_int, alpha));
                }
                run.add(check_orthonormality_exact(v_d, a_int));
            } else {
                for (int alpha = 0; alpha < v_d; ++alpha) {
                    if (v_alpha >= 0 && alpha != v_alpha) continue;
                    run.add(check_eigen_relation(j, p, alpha, run.tol()));
                }
                run.add(check_orthonormality(j, p, run.tol()));
            }
            return run.finish();
        }

        if (v_weyl->parsed()) {
            VerifyRun run("verify weyl", verify_opts);
            run.config(json{{"d", v_d}, {"a", v_a}});
            run.add(check_weyl(v_d, run.mode(), run.tol()));
            if (v_a >= 0) {
                run.add(check_v0a_weyl(v_d, v_a, run.mode(), run.tol()));
            } else {
                for (int a = 0; a < v_d; ++a) run.add(check_v0a_weyl(v_d, a, run.mode(), run.tol()));
            }
            return run.finish();
        }

        if (v_part->parsed()) {
            VerifyRun run("verify partition", verify_opts);
            run.config(json{{"p", v_p}});
            run.add(check_partition(v_p, run.mode(), run.tol()));
            return run.finish();
        }

        if (v_cartan->parsed()) {
            VerifyRun run("verify cartan", verify_opts);
            run.config(json{{"p", v_p}});
            run.add(check_cartan(v_p, run.mode(), run.tol()));
            return run.finish();
        }

        if (v_pars->parsed()) {
            VerifyRun run("verify parseval", verify_opts);
            run.config(json{{"d", v_d}, {"trials", v_trials}, {"seed", verify_opts.seed}});
            std::mt19937_64 rng(verify_opts.seed);
            std::normal_distribution<double> gauss(0.0, 1.0);
            CheckReport all("parseval over random pairs");
            for (int t = 0; t < v_trials; ++t) {
                std::vector<Complex> x(v_d), xp(v_d);
                for (int n = 0; n < v_d; ++n) {
                    x[n] = Complex(gauss(rng), gauss(rng));
                    xp[n] = Complex(gauss(rng), gauss(rng));
                }
                all.merge(check_parseval(x, xp, run.tol()));
            }
            run.add(all);
            return run.finish();
        }

        if (v_gauss->parsed()) {
            VerifyRun run("verify gauss-overlap", verify_opts);
            run.config(json{{"d", v_d}});
            CheckReport all("overlap equals (1/d) S(u,v,w)");
            for (int a = 0; a < v_d; ++a)
                for (int b = 0; b < v_d; ++b) {
                    if (a == b) continue;
                    for (int alpha = 0; alpha < v_d; ++alpha)
                        for (int beta = 0; beta < v_d; ++beta) {
                            const OverlapComparison cmp =
                                overlap_via_gauss(v_d, a, alpha, b, beta);
                            all.residual(cmp.discrepancy, run.tol(),
                                         "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                             " alpha=" + std::to_string(alpha) +
                                             " beta=" + std::to_string(beta));
                            if (run.mode() == Mode::Exact)
                                all.require(cmp.exact_equal, "exact route mismatch at a=" +
                                                                 std::to_string(a) + " b=" +
                                                                 std::to_string(b));
                        }
                }
            run.add(all);
            return run.finish();
        }

        if (gauss_cmd->parsed()) {
            const std::string err = gauss_params_error(gauss_params);
            if (!err.empty()) {
                std::cerr << "mubkit: invalid Gauss-sum parameters: " << err << "\n";
                return kExitInvalidConfig;
            }
            const GaussSum s = gauss_sum(gauss_params);
            json out;
            out["schema"] = 1;
            out["command"] = "gauss";
            out["u"] = gauss_params.u;
            out["v"] = gauss_params.v;
            out["w"] = gauss_params.w;
            out["value"] = json{{"re", s.value.real()}, {"im", s.value.imag()}};
            out["modulus"] = std::abs(s.value);
            json exps = json::object();
            for (int k = 0; k < s.exact.order(); ++k)
                if (s.exact.coeff(k) != 0) exps[std::to_string(k)] = s.exact.coeff(k);
            out["exact"] = json{{"omega_exponents", std::move(exps)},
                                {"omega", "exp(i*pi/" + std::to_string(std::llabs(gauss_params.w)) + ")"}};
            if (gauss_opts.format == "json") {
                emit(out.dump(2) + "\n", gauss_opts);
            } else {
                std::ostringstream text;
                text << "S(" << gauss_params.u << ", " << gauss_params.v << ", "
                     << gauss_params.w << ") = " << exact_sum_string(s.exact)
                     << "   [omega = exp(i*pi/" << std::llabs(gauss_params.w) << ")]\n"
                     << "  float   = " << s.value.real() << (s.value.imag() < 0 ? " - " : " + ")
                     << std::abs(s.value.imag()) << "i\n"
                     << "  modulus = " << std::abs(s.value) << "\n";
                emit(text.str(), gauss_opts);
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "mubkit: invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "mubkit: invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::cerr << "mubkit: error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }

    std::cerr << "mubkit: no subcommand selected\n";
    return kExitInvalidConfig;
}
