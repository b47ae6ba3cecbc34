// gzmom -- tables and verification runs for the weighted |Gamma zeta|^2
// moments on the critical line.
//
// Subcommands:
//   tnj      exact integer table T(l,j)
//   moments  closed-form moments M_k with decimal values
//   aderiv   derivatives A^{(k)}(1), closed form and (optionally) quadrature
//   verify   moments | aderiv | ramanujan | reciprocity | identities
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gzmom/gzmom.hpp"

namespace {

using nlohmann::json;
using namespace gzmom;

struct GlobalOpts {
    std::string format = "markdown";
    unsigned digits = 10;
    unsigned precision = 30;
    std::string out_path;
};

std::ostream& open_out(const GlobalOpts& g, std::ofstream& file) {
    if (g.out_path.empty()) return std::cout;
    file.open(g.out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open '" + g.out_path + "'");
    return file;
}

unsigned eval_digits(const GlobalOpts& g) { return std::max(g.digits, g.precision); }

// Scale factor between m_N and M_{2N}: M_{2N} = s * pi * m_N with
// s = (-1)^N 2^{1-2N}. Rendered like "2pi", "-pi/2", "pi/8".
Rat moment_scale_over_pi(unsigned N) {
    Rat s = pow2_rat(1 - 2 * static_cast<long>(N));
    return N % 2 == 0 ? s : -s;
}

std::string scale_display(const Rat& s) {
    std::string sign = s.sign() < 0 ? "-" : "";
    Rat a = abs(s);
    std::string num = a.num() == 1 ? "π" : a.num().get_str() + "π";
    if (a.den() == 1) return sign + num;
    return sign + num + "/" + a.den().get_str();
}

// ---------------------------------------------------------------------- tnj

int cmd_tnj(unsigned max_l, const GlobalOpts& g) {
    std::ofstream file;
    std::ostream& os = open_out(g, file);
    std::vector<std::vector<Int>> rows;  // rows l = 2..max_l, cols j = 2..max_l
    for (unsigned l = 2; l <= max_l; ++l) {
        std::vector<Int> row;
        for (unsigned j = 2; j <= max_l; ++j) row.push_back(tcoef(l, j));
        rows.push_back(std::move(row));
    }
    if (g.format == "json") {
        json out;
        out["command"] = "tnj";
        out["max_l"] = max_l;
        out["rows"] = json::array();
        for (unsigned l = 2; l <= max_l; ++l) {
            json r;
            r["l"] = l;
            json vals = json::array();
            for (const Int& v : rows[l - 2]) vals.push_back(v.get_str());
            r["t"] = vals;
            out["rows"].push_back(r);
        }
        os << out.dump(2) << "\n";
    } else if (g.format == "csv") {
        os << "l";
        for (unsigned j = 2; j <= max_l; ++j) os << ",T" << j;
        os << "\n";
        for (unsigned l = 2; l <= max_l; ++l) {
            os << l;
            for (const Int& v : rows[l - 2]) os << "," << v.get_str();
            os << "\n";
        }
    } else {
        // markdown mirrors the triangular layout: cells above the diagonal
        // are blank, in-triangle zeros are printed.
        os << "| l \\ j |";
        for (unsigned j = 2; j <= max_l; ++j) os << " " << j << " |";
        os << "\n|---|";
        for (unsigned j = 2; j <= max_l; ++j) os << "---|";
        os << "\n";
        for (unsigned l = 2; l <= max_l; ++l) {
            os << "| " << l << " |";
            for (unsigned j = 2; j <= max_l; ++j) {
                if (j > l)
                    os << "  |";
                else
                    os << " " << rows[l - 2][j - 2].get_str() << " |";
            }
            os << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------ moments

int cmd_moments(unsigned max_n, const GlobalOpts& g) {
    std::ofstream file;
    std::ostream& os = open_out(g, file);
    const unsigned ed = eval_digits(g);
    if (g.format == "json") {
        json out;
        out["command"] = "moments";
        out["max_n"] = max_n;
        out["digits"] = g.digits;
        out["rows"] = json::array();
        for (unsigned N = 0; N <= max_n; ++N) {
            SymVal m = moment_closed(N).value;
            json r;
            r["k"] = 2 * N;
            r["normalized_zeta_form"] = m;
            r["normalized_pi_form"] = reduce_zeta_even(m);
            r["scale_over_pi"] = moment_scale_over_pi(N).fraction_str();
            r["moment"] = format_real(moment_value(N, ed), g.digits);
            out["rows"].push_back(r);
        }
        os << out.dump(2) << "\n";
    } else if (g.format == "csv") {
        os << "k,moment,scale,normalized_zeta_form,normalized_pi_form\n";
        for (unsigned N = 0; N <= max_n; ++N) {
            SymVal m = moment_closed(N).value;
            os << 2 * N << "," << format_real(moment_value(N, ed), g.digits) << ","
               << scale_display(moment_scale_over_pi(N)) << ",\""
               << to_display_string(m) << "\",\""
               << to_display_string(reduce_zeta_even(m)) << "\"\n";
        }
    } else {
        os << "| k | M_k | scale | normalized moment (zeta form) | pi form |\n";
        os << "|---|---|---|---|---|\n";
        for (unsigned N = 0; N <= max_n; ++N) {
            SymVal m = moment_closed(N).value;
            os << "| " << 2 * N << " | " << format_real(moment_value(N, ed), g.digits)
               << " | " << scale_display(moment_scale_over_pi(N)) << " | "
               << to_display_string(m) << " | "
               << to_display_string(reduce_zeta_even(m)) << " |\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------- aderiv

int cmd_aderiv(unsigned k, bool numeric, const QuadConfig& cfg, const GlobalOpts& g) {
    std::ofstream file;
    std::ostream& os = open_out(g, file);
    const unsigned ed = eval_digits(g);
    SymVal closed = a_deriv_closed(k).value;
    Real value = eval_numeric(closed, ed);
    Real quad, diff;
    if (numeric) {
        quad = a_deriv_numeric(k, cfg);
        diff = abs(quad - value);
    }
    if (g.format == "json") {
        json out;
        out["command"] = "aderiv";
        out["k"] = k;
        out["closed_form"] = to_c_basis_string(closed);
        out["symbolic"] = closed;
        out["value"] = format_real(value, g.digits);
        if (numeric) {
            out["quadrature"] = format_real(quad, g.digits);
            out["abs_diff"] = format_real(diff, 3);
        }
        os << out.dump(2) << "\n";
    } else if (g.format == "csv") {
        os << "k,closed_form,value" << (numeric ? ",quadrature,abs_diff" : "") << "\n";
        os << k << ",\"" << to_c_basis_string(closed) << "\","
           << format_real(value, g.digits);
        if (numeric) os << "," << format_real(quad, g.digits) << "," << format_real(diff, 3);
        os << "\n";
    } else {
        os << "A^(" << k << ")(1) = " << to_c_basis_string(closed) << " = "
           << format_real(value, g.digits) << "\n";
        if (numeric)
            os << "quadrature = " << format_real(quad, g.digits)
               << "   |diff| = " << format_real(diff, 3) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyRecord {
    json fields;
    bool pass = false;
};

int emit_verify(const std::string& suite, const json& params,
                const std::vector<VerifyRecord>& records, double wall_s,
                const GlobalOpts& g) {
    bool all = true;
    for (const auto& r : records) all = all && r.pass;
    std::ofstream file;
    std::ostream& os = open_out(g, file);
    if (g.format == "json") {
        json out;
        out["command"] = "verify";
        out["suite"] = suite;
        out["parameters"] = params;
        out["records"] = json::array();
        for (const auto& r : records) {
            json f = r.fields;
            f["pass"] = r.pass;
            out["records"].push_back(f);
        }
        out["pass"] = all;
        out["wall_time_s"] = wall_s;
        os << out.dump(2) << "\n";
    } else {
        os << "verify " << suite << "  (" << params.dump() << ")\n";
        for (const auto& r : records) {
            os << (r.pass ? "  [pass] " : "  [FAIL] ");
            for (auto it = r.fields.begin(); it != r.fields.end(); ++it)
                os << it.key() << "="
                   << (it->is_string() ? it->get<std::string>() : it->dump()) << " ";
            os << "\n";
        }
        os << (all ? "PASS" : "FAIL") << " (" << wall_s << " s)\n";
    }
    return all ? 0 : 1;
}

int verify_moments_cmd(unsigned max_n, QuadConfig cfg, const GlobalOpts& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto reports = verify_moments(max_n, cfg);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<VerifyRecord> recs;
    for (const auto& r : reports) {
        VerifyRecord v;
        v.fields["n"] = r.N;
        v.fields["k"] = 2 * r.N;
        v.fields["closed"] = format_real(r.closed_decimal, g.digits);
        v.fields["quadrature"] = format_real(r.quadrature_decimal, g.digits);
        v.fields["abs_err"] = format_real(r.abs_err, 3);
        v.fields["rel_err"] = format_real(r.rel_err, 3);
        v.pass = r.pass;
        recs.push_back(std::move(v));
    }
    json params{{"max_n", max_n}, {"tol", cfg.tol}, {"T", cfg.cutoff},
                {"panel_order", cfg.panel_order}, {"threads", cfg.threads}};
    return emit_verify("moments", params, recs, wall, g);
}

int verify_aderiv_cmd(unsigned max_k, const QuadConfig& cfg, double tol, const GlobalOpts& g) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VerifyRecord> recs;
    for (unsigned k = 0; k <= max_k; ++k) {
        Real closed = eval_numeric(a_deriv_closed(k).value, 40);
        Real quad = a_deriv_numeric(k, cfg);
        Real diff = abs(closed - quad);
        VerifyRecord v;
        v.fields["k"] = k;
        v.fields["closed"] = format_real(closed, g.digits);
        v.fields["quadrature"] = format_real(quad, g.digits);
        v.fields["abs_diff"] = format_real(diff, 3);
        v.pass = diff <= Real(tol);
        recs.push_back(std::move(v));
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"max_k", max_k}, {"tol", tol}};
    return emit_verify("aderiv", params, recs, wall, g);
}

int verify_ramanujan_cmd(std::vector<double> vs, const QuadConfig& cfg, double tol,
                         const GlobalOpts& g) {
    if (vs.empty()) vs = {0.0, 0.1, 0.25, 0.5};
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VerifyRecord> recs;
    for (double v : vs) {
        Real res = ramanujan_identity_residual(Real(v), cfg);
        VerifyRecord r;
        r.fields["v"] = v;
        r.fields["residual"] = format_real(res, 3);
        r.pass = res <= Real(tol);
        recs.push_back(std::move(r));
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"tol", tol}};
    return emit_verify("ramanujan", params, recs, wall, g);
}

int verify_reciprocity_cmd(unsigned long h, unsigned long k, const QuadConfig& cfg,
                           double tol, const GlobalOpts& g) {
    std::vector<std::pair<unsigned long, unsigned long>> pairs;
    if (h != 0 && k != 0)
        pairs = {{h, k}};
    else
        pairs = {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 5}};
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VerifyRecord> recs;
    for (auto [hh, kk] : pairs) {
        Real res = reciprocity_residual(hh, kk, cfg);
        VerifyRecord r;
        r.fields["h"] = hh;
        r.fields["k"] = kk;
        r.fields["residual"] = format_real(res, 3);
        r.pass = res <= Real(tol);
        recs.push_back(std::move(r));
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"tol", tol}};
    return emit_verify("reciprocity", params, recs, wall, g);
}

int verify_identities_cmd(const GlobalOpts& g) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VerifyRecord> recs;
    auto check = [&](const std::string& name, bool ok) {
        VerifyRecord r;
        r.fields["name"] = name;
        r.pass = ok;
        recs.push_back(std::move(r));
    };

    {
        bool ok = true;
        const unsigned N = 30;
        for (unsigned i = 0; i <= N && ok; ++i)
            for (unsigned j = 0; j <= N && ok; ++j) {
                Int acc = 0;
                for (unsigned p = 0; p <= N; ++p)
                    acc += stirling2(i, static_cast<long>(p)) *
                           stirling1(p, static_cast<long>(j));
                ok = (acc == (i == j ? 1 : 0));
            }
        check("stirling-inverse", ok);
    }
    {
        bool ok = true;
        for (unsigned k = 1; k <= 30 && ok; ++k)
            for (unsigned j = 1; j <= k && ok; ++j) {
                Rat acc;
                for (unsigned p = j; p <= k; ++p)
                    acc += Rat(stirling2(k, static_cast<long>(p)) *
                               stirling1(p, static_cast<long>(j)),
                               Int(static_cast<long>(p)));
                ok = (acc == kcoef(k, j));
            }
        check("gkp-kcoef", ok);
    }
    {
        bool ok = true;
        for (unsigned k = 1; k <= 20 && ok; ++k)
            for (unsigned p = 1; p <= k && ok; ++p) {
                Rat lhs = Rat(alpha_coef(k, p - 1)) - Rat(alpha_coef(k, p));
                Rat rhs = -Rat(alpha_coef(k + 1, p), Int(static_cast<long>(p)));
                ok = (lhs == rhs);
            }
        check("alpha-recurrence", ok);
    }
    {
        std::vector<Rat> iota, eta;
        for (unsigned kk = 0; kk <= 25; ++kk) {
            iota.push_back(Rat(1L, static_cast<long>(kk) + 1));
            eta.push_back(harmonic(static_cast<long>(kk) - 1));
        }
        auto Ei = seq_E(iota, 25);
        auto Ee = seq_E(eta, 25);
        bool ok1 = true, ok2 = true;
        for (unsigned n = 0; n <= 25; ++n) {
            ok1 = ok1 && (Ei[n] == bernoulli(n));
            Rat expect = Rat(static_cast<long>(n)) * Rat(n % 2 == 0 ? 1 : -1) +
                         Rat(n == 1 ? 1 : 0);
            ok2 = ok2 && (Ee[n] == expect);
        }
        check("seq-E-iota-bernoulli", ok1);
        check("seq-E-eta", ok2);
    }
    {
        bool ok = true;
        const std::size_t M = 15;
        auto run = [&](const std::vector<Rat>& u) {
            PowerSeries fu(M, std::vector<Rat>(u.begin(), u.begin() + M + 1));
            auto comp = series_compose_one_minus_exp(fu);
            auto Eu = seq_E(u, M);
            for (std::size_t n = 0; n <= M; ++n) {
                Rat expect = Eu[n] / Rat(factorial(n));
                if (n % 2 == 1) expect = -expect;
                if (comp[n] != expect) return false;
            }
            return true;
        };
        std::vector<Rat> iota, eta;
        for (unsigned kk = 0; kk <= M; ++kk) {
            iota.push_back(Rat(1L, static_cast<long>(kk) + 1));
            eta.push_back(harmonic(static_cast<long>(kk) - 1));
        }
        ok = run(iota) && run(eta);
        for (unsigned j = 1; j <= 5 && ok; ++j) {
            std::vector<Rat> u;
            for (unsigned kk = 0; kk <= M; ++kk)
                u.push_back(Rat(binomial(kk, static_cast<long>(j) - 1)));
            ok = run(u);
        }
        check("genfunc-identity-order15", ok);
    }
    {
        bool ok = true;
        for (unsigned N = 0; N <= 25 && ok; ++N)
            ok = (bernoulli_poly_half(N) ==
                  (pow2_rat(1 - static_cast<long>(N)) - Rat(1)) * bernoulli(N));
        check("bernoulli-half", ok);
    }
    {
        bool ok = true;
        for (unsigned N = 0; N <= 12 && ok; ++N)
            ok = (g_deriv_at_0(2 * N) == moment_closed(N).value);
        check("dual-route-moments", ok);
    }
    {
        bool ok = true;
        for (unsigned N = 1; N <= 25 && ok; N += 2) ok = g_deriv_at_0(N).is_zero();
        check("odd-vanishing", ok);
    }
    {
        bool ok = true;
        for (unsigned k = 0; k <= 20 && ok; ++k)
            ok = (psi_route_a_deriv(k) == a_deriv_closed(k).value);
        check("psi-route", ok);
    }
    {
        bool ok = true;
        for (unsigned N = 0; N <= 25 && ok; ++N) {
            std::vector<SymVal> c, i_, e, b;
            for (unsigned kk = 0; kk <= N; ++kk) {
                c.push_back(constant_C() * Rat(kk == 0 ? 2 : 1));
                i_.push_back(SymVal(Rat(1L, static_cast<long>(kk) + 1)));
                e.push_back(SymVal(harmonic(static_cast<long>(kk) - 1)));
                SymVal bk;
                for (unsigned j = 2; j <= kk; ++j) {
                    Rat coef = Rat(binomial(kk, static_cast<long>(j) - 1)) *
                               bernoulli(j) / Rat(static_cast<long>(j));
                    if (!coef.is_zero())
                        bk.add_term(ConstSymbol::Zeta(static_cast<int>(j)), coef);
                }
                b.push_back(bk);
            }
            SymVal lc = seq_L(seq_E(c, N), N);
            SymVal li = seq_L(seq_E(i_, N), N);
            SymVal le = seq_L(seq_E(e, N), N);
            SymVal lb = seq_L(seq_E(b, N), N);
            Rat even = Rat(N % 2 == 0 ? 2 : 0);
            ok = ok && (lc == constant_C() * even);
            ok = ok && (li == SymVal((Rat(2) - pow2_rat(static_cast<long>(N))) * bernoulli(N)));
            ok = ok && (le == SymVal(Rat(2L * static_cast<long>(N)) * even));
            SymVal tb;
            for (unsigned j = 2; j <= N; ++j) {
                Rat coef = Rat(tcoef(N, j)) * bernoulli(j) / Rat(static_cast<long>(j));
                if (!coef.is_zero())
                    tb.add_term(ConstSymbol::Zeta(static_cast<int>(j)), coef);
            }
            ok = ok && (lb == tb);
        }
        check("loe-closed-forms", ok);
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit_verify("identities", json::object(), recs, wall, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerically verified moments of the weighted "
                 "|Gamma zeta|^2 measure on the critical line"};
    app.require_subcommand(1);

    GlobalOpts g;
    QuadConfig cfg;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->envname("GZMOM_FORMAT");
    app.add_option("--digits", g.digits, "Significant digits to print")
        ->check(CLI::Range(1u, 45u))
        ->envname("GZMOM_DIGITS");
    app.add_option("--precision", g.precision, "Internal evaluation digits")
        ->check(CLI::Range(1u, 45u))
        ->envname("GZMOM_PRECISION");
    app.add_option("--out", g.out_path, "Write output to a file instead of stdout")
        ->envname("GZMOM_OUT");
    app.add_option("--T", cfg.cutoff, "Quadrature truncation point")
        ->envname("GZMOM_T");
    app.add_option("--panel-order", cfg.panel_order, "Gauss-Legendre nodes per panel")
        ->envname("GZMOM_PANEL_ORDER");
    app.add_option("--panel-count", cfg.panel_count, "Uniform panel count (0 = default grading)")
        ->envname("GZMOM_PANEL_COUNT");
    app.add_option("--threads", cfg.threads, "Worker threads (0 = auto)")
        ->envname("GZMOM_THREADS");

    auto* tnj = app.add_subcommand("tnj", "Exact integer table T(l,j)");
    tnj->fallthrough();
    unsigned max_l = 8;
    tnj->add_option("--max-l", max_l, "Largest row")->check(CLI::Range(2u, 64u));

    auto* moments = app.add_subcommand("moments", "Closed-form moment table");
    moments->fallthrough();
    unsigned max_n = 6;
    moments->add_option("--max-n", max_n, "Largest N (row k = 2N)")
        ->check(CLI::Range(0u, 20u));

    auto* aderiv = app.add_subcommand("aderiv", "Derivative A^{(k)}(1)");
    aderiv->fallthrough();
    unsigned ak = 0;
    bool a_numeric_flag = false;
    aderiv->add_option("--k", ak, "Derivative order")->check(CLI::Range(0u, 20u));
    aderiv->add_flag("--numeric", a_numeric_flag, "Also verify by quadrature (k <= 8)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    verify->set_help_flag("--help", "Print help");  // frees -h for the h of x = h/k
    std::string suite;
    verify->add_option("suite", suite, "moments|aderiv|ramanujan|reciprocity|identities")
        ->required()
        ->check(CLI::IsMember({"moments", "aderiv", "ramanujan", "reciprocity", "identities"}));
    unsigned v_max_n = 4, v_max_k = 8;
    unsigned long v_h = 0, v_k = 0;
    std::vector<double> v_vs;
    double tol = 0;
    verify->add_option("--max-n", v_max_n, "Largest moment index")->check(CLI::Range(0u, 8u));
    verify->add_option("--max-k", v_max_k, "Largest derivative order")->check(CLI::Range(0u, 8u));
    verify->add_option("--h", v_h, "Numerator of x = h/k");
    verify->add_option("--k", v_k, "Denominator of x = h/k");
    verify->add_option("--v", v_vs, "Ramanujan evaluation points (repeatable)");
    verify->add_option("--tol", tol, "Tolerance (default: suite-specific)")
        ->envname("GZMOM_TOL");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (tnj->parsed()) return cmd_tnj(max_l, g);
        if (moments->parsed()) return cmd_moments(max_n, g);
        if (aderiv->parsed()) {
            if (a_numeric_flag && ak > 8) {
                std::cerr << "aderiv: --numeric supports k <= 8\n";
                return 2;
            }
            return cmd_aderiv(ak, a_numeric_flag, cfg, g);
        }
        if (verify->parsed()) {
            if (suite == "moments") {
                cfg.tol = tol > 0 ? tol : 1e-8;
                return verify_moments_cmd(v_max_n, cfg, g);
            }
            if (suite == "aderiv")
                return verify_aderiv_cmd(v_max_k, cfg, tol > 0 ? tol : 1e-6, g);
            if (suite == "ramanujan")
                return verify_ramanujan_cmd(v_vs, cfg, tol > 0 ? tol : 1e-6, g);
            if (suite == "reciprocity") {
                if ((v_h == 0) != (v_k == 0)) {
                    std::cerr << "verify reciprocity: provide both --h and --k or neither\n";
                    return 2;
                }
                return verify_reciprocity_cmd(v_h, v_k, cfg, tol > 0 ? tol : 1e-6, g);
            }
            return verify_identities_cmd(g);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
