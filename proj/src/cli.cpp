#include "mcs/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mcs/charcore.hpp"
#include "mcs/csv.hpp"
#include "mcs/lowerbound.hpp"
#include "mcs/maxsearch.hpp"
#include "mcs/randmodels.hpp"
#include "mcs/sums.hpp"
#include "mcs/svg.hpp"

namespace mcs {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
    return out;
}

// "a:b" pairs separated by commas, e.g. "0:1,0.25:1"
std::vector<std::pair<double, double>> parse_ab_list(const std::string& s) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected alpha:beta pairs, got '" + item + "'");
        out.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty alpha:beta list");
    return out;
}

// policies: all | legendre | index-C | order-D | sample-N
std::vector<DirichletCharacter> select_characters(std::shared_ptr<const PrimeModulus> m,
                                                  const std::string& policy,
                                                  std::uint64_t seed) {
    if (policy == "all") return enumerate_characters(m, true);
    if (policy == "legendre") return {legendre_character(m)};
    if (policy.rfind("index-", 0) == 0) {
        return {DirichletCharacter(m, std::stoull(policy.substr(6)))};
    }
    if (policy.rfind("order-", 0) == 0) {
        auto chi = character_of_order(m, std::stoull(policy.substr(6)));
        if (!chi)
            throw std::invalid_argument("no character of order " + policy.substr(6) +
                                        " mod " + std::to_string(m->p()));
        return {*chi};
    }
    if (policy.rfind("sample-", 0) == 0) {
        const std::uint64_t n = std::stoull(policy.substr(7));
        const std::uint64_t pm1 = m->p() - 1;
        std::vector<DirichletCharacter> out;
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::uint64_t c = 1 + counter_rng(seed, 0, i) % (pm1 - 1);
            out.emplace_back(m, c);
        }
        return out;
    }
    throw std::invalid_argument("unknown character policy '" + policy + "'");
}

std::string g_command;  // current subcommand, for the CSV provenance line

std::string join_args(const std::vector<std::string>& args) {
    std::string s = "mcs " + g_command;
    for (const auto& a : args) s += " " + a;
    return s;
}

void emit(const CsvTable& t, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        std::cout << to_csv_string(t);
    else
        write_csv(t, out_path);
}

// CLI11 wants the argument vector reversed; returns false on --help.
bool parse_args(CLI::App& app, const std::vector<std::string>& args) {
    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return false;
    }
    return true;
}

int cmd_eval(const std::vector<std::string>& args) {
    CLI::App app{"evaluate F_chi(alpha,beta;theta) by direct summation"};
    std::int64_t p = 0;
    std::int64_t char_index = -1;
    bool legendre = false;
    double alpha = 0.0, beta = 1.0;
    std::optional<double> theta;
    std::optional<std::int64_t> k;
    std::optional<double> t;
    app.add_option("--p", p, "prime modulus")->required();
    app.add_option("--char-index", char_index, "character index c");
    app.add_flag("--legendre", legendre, "use the Legendre symbol");
    app.add_option("--alpha", alpha)->required();
    app.add_option("--beta", beta)->required();
    app.add_option("--theta", theta, "evaluation point");
    app.add_option("--k", k, "grid index for theta = (k+t)/p");
    app.add_option("--t", t, "grid offset for theta = (k+t)/p");
    if (!parse_args(app, args)) return 0;

    auto m = std::make_shared<const PrimeModulus>(static_cast<std::uint64_t>(p));
    DirichletCharacter chi = legendre
                                 ? legendre_character(m)
                                 : DirichletCharacter(m, static_cast<std::uint64_t>(
                                                             char_index < 0 ? 0 : char_index));
    if (!legendre && char_index < 0)
        throw std::invalid_argument("eval: give --legendre or --char-index");
    SumSpec s(chi, alpha, beta);
    double th;
    if (theta) {
        th = *theta;
    } else if (k && t) {
        th = (static_cast<double>(*k) + *t) / static_cast<double>(p);
    } else {
        throw std::invalid_argument("eval: give --theta or both --k and --t");
    }
    const cd v = direct_sum(s, th);
    std::cout << format_g9(v.real()) << " " << format_g9(v.imag()) << " "
              << format_g9(std::abs(v)) << "\n";
    return 0;
}

int cmd_max(const std::vector<std::string>& args) {
    CLI::App app{"certified maximum sweep, one CSV row per character"};
    std::string primes_str;
    std::string chars = "legendre";
    double alpha = 0.0, beta = 1.0, eps = 1.0 / 16;
    std::uint64_t seed = 1;
    std::string out;
    app.add_option("--primes", primes_str, "comma-separated primes")->required();
    app.add_option("--chars", chars, "all|legendre|index-C|order-D|sample-N");
    app.add_option("--alpha", alpha);
    app.add_option("--beta", beta);
    app.add_option("--eps", eps, "relative bracket gap target");
    app.add_option("--seed", seed);
    app.add_option("--out", out, "output CSV path (default stdout)");
    if (!parse_args(app, args)) return 0;

    CsvTable table;
    table.invocation = join_args(args);
    table.columns = {"p",      "c",  "d",       "lo",              "hi",
                     "argmax", "M",  "lo_norm", "hi_norm"};
    for (std::int64_t p : parse_int_list(primes_str)) {
        auto m = std::make_shared<const PrimeModulus>(static_cast<std::uint64_t>(p));
        for (const DirichletCharacter& chi : select_characters(m, chars, seed)) {
            if (chi.is_principal()) continue;
            SumSpec s(chi, alpha, beta);
            const CertifiedMax cm = certified_max(s, eps);
            const double sqrtp = std::sqrt(static_cast<double>(p));
            const double lp = std::log(static_cast<double>(p));
            table.rows.push_back({std::to_string(p), std::to_string(chi.index()),
                                  std::to_string(chi.order()), format_g9(cm.lo),
                                  format_g9(cm.hi), std::to_string(cm.argmax),
                                  std::to_string(cm.M),
                                  format_g9(cm.lo / (sqrtp * std::log(lp))),
                                  format_g9(cm.hi / (sqrtp * lp))});
        }
    }
    emit(table, out);
    return 0;
}

int cmd_witness(const std::vector<std::string>& args) {
    CLI::App app{"lower-bound witness sweep, one CSV row per (p, chi, alpha, beta)"};
    std::string config_path, primes_str, chars = "legendre", ab_str = "0:1";
    std::uint64_t seed = 1;
    std::string out;
    auto* oc = app.add_option("--config", config_path, "key=value defaults file");
    auto* op = app.add_option("--primes", primes_str, "comma-separated primes");
    auto* och = app.add_option("--chars", chars, "all|legendre|index-C|order-D|sample-N");
    auto* oab = app.add_option("--ab", ab_str, "alpha:beta pairs, comma separated");
    auto* os = app.add_option("--seed", seed);
    auto* oo = app.add_option("--out", out, "output CSV path (default stdout)");
    if (!parse_args(app, args)) return 0;

    if (oc->count()) {
        for (const auto& [key, value] : load_config(config_path)) {
            if (key == "primes" && !op->count()) primes_str = value;
            else if (key == "chars" && !och->count()) chars = value;
            else if (key == "ab" && !oab->count()) ab_str = value;
            else if (key == "seed" && !os->count()) seed = std::stoull(value);
            else if (key == "out" && !oo->count()) out = value;
            else if (op->count() || och->count() || oab->count() || os->count() || oo->count()) {
                // flag override in effect for this key
            }
        }
    }
    if (primes_str.empty())
        throw std::invalid_argument("witness: --primes (or a config 'primes' key) required");

    CsvTable table;
    table.invocation = join_args(args);
    table.columns = {"p",        "c",         "d",           "alpha",       "beta",
                     "t",        "K0",        "k",           "residual",    "tilde_abs",
                     "minorant", "lower_ratio", "final_ratio", "error"};
    for (std::int64_t p : parse_int_list(primes_str)) {
        auto m = std::make_shared<const PrimeModulus>(static_cast<std::uint64_t>(p));
        for (const DirichletCharacter& chi : select_characters(m, chars, seed)) {
            if (chi.is_principal()) continue;
            for (const auto& [alpha, beta] : parse_ab_list(ab_str)) {
                std::vector<std::string> row = {std::to_string(p), std::to_string(chi.index()),
                                                std::to_string(chi.order()), format_g9(alpha),
                                                format_g9(beta)};
                try {
                    SumSpec s(chi, alpha, beta);
                    const LowerBoundWitness w = lower_bound_witness(s);
                    row.insert(row.end(),
                               {format_g9(w.t), std::to_string(w.targets.K0),
                                std::to_string(w.k), format_g9(w.residual),
                                format_g9(std::abs(w.tilde_value)), format_g9(w.tilde_minorant),
                                format_g9(w.lower_ratio), format_g9(w.final_ratio), ""});
                } catch (const std::exception& e) {
                    std::string msg = e.what();
                    for (char& ch : msg)
                        if (ch == ',' || ch == '\n') ch = ';';
                    row.insert(row.end(), {"", "", "", "", "", "", "", "", msg});
                }
                table.rows.push_back(std::move(row));
            }
        }
    }
    emit(table, out);
    return 0;
}

int cmd_random(const std::vector<std::string>& args) {
    CLI::App app{"random comparison models, normalized max per trial"};
    std::string kind = "rademacher-iid";
    std::int64_t N = 4096;
    int trials = 50;
    std::uint64_t seed = 1;
    std::string out;
    app.add_option("--kind", kind, "rademacher-iid|rmf-rademacher|rmf-steinhaus");
    app.add_option("--N", N, "polynomial length")->required();
    app.add_option("--trials", trials);
    app.add_option("--seed", seed);
    app.add_option("--out", out, "output CSV path (default stdout)");
    if (!parse_args(app, args)) return 0;

    RandomPolyKind k;
    if (kind == "rademacher-iid") k = RandomPolyKind::rademacher_iid;
    else if (kind == "rmf-rademacher") k = RandomPolyKind::rmf_rademacher;
    else if (kind == "rmf-steinhaus") k = RandomPolyKind::rmf_steinhaus;
    else throw std::invalid_argument("random: unknown kind '" + kind + "'");

    const MaxStats stats = random_poly_max(k, N, trials, seed);
    CsvTable table;
    table.invocation = join_args(args);
    table.columns = {"kind", "N", "seed", "trial", "normalized_max"};
    for (std::size_t i = 0; i < stats.per_trial.size(); ++i)
        table.rows.push_back({kind, std::to_string(N), std::to_string(seed),
                              std::to_string(i), format_g9(stats.per_trial[i])});
    emit(table, out);
    return 0;
}

int cmd_plot(const std::vector<std::string>& args) {
    CLI::App app{"scatter plot from a sweep CSV"};
    std::string csv_path, xcol, ycol, out_path;
    bool logx = false, connect = false;
    app.add_option("--csv", csv_path)->required();
    app.add_option("--x", xcol, "x column name")->required();
    app.add_option("--y", ycol, "y column name")->required();
    app.add_option("--out", out_path, "output SVG path")->required();
    app.add_flag("--logx", logx, "log-scale the x axis");
    app.add_flag("--connect", connect, "draw a connecting polyline");
    if (!parse_args(app, args)) return 0;

    const CsvTable t = read_csv(csv_path);
    if (t.rows.empty()) throw std::invalid_argument("plot: CSV has no data rows");
    auto col_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            if (t.columns[i] == name) return i;
        throw std::invalid_argument("plot: missing column '" + name + "'");
    };
    const std::size_t xi = col_of(xcol), yi = col_of(ycol);
    std::vector<double> xs, ys;
    for (const auto& row : t.rows) {
        if (xi >= row.size() || yi >= row.size()) continue;
        if (row[xi].empty() || row[yi].empty()) continue;  // rows carrying errors
        xs.push_back(std::stod(row[xi]));
        ys.push_back(std::stod(row[yi]));
    }
    if (xs.empty()) throw std::invalid_argument("plot: no usable rows");
    PlotOptions opt;
    opt.xlabel = xcol;
    opt.ylabel = ycol;
    opt.log_x = logx;
    opt.connect = connect;
    write_scatter_svg(out_path, xs, ys, opt);
    return 0;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("load_config: cannot open " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) out.emplace_back(key, value);
    }
    return out;
}

int run_cli(const std::vector<std::string>& args) {
    try {
        if (args.empty()) {
            std::cerr << "usage: mcs <eval|max|witness|random|plot> [options]\n";
            return 2;
        }
        const std::string cmd = args[0];
        g_command = cmd;
        const std::vector<std::string> rest(args.begin() + 1, args.end());
        if (cmd == "eval") return cmd_eval(rest);
        if (cmd == "max") return cmd_max(rest);
        if (cmd == "witness") return cmd_witness(rest);
        if (cmd == "random") return cmd_random(rest);
        if (cmd == "plot") return cmd_plot(rest);
        std::cerr << "mcs: unknown command '" << cmd << "'\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "mcs: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mcs: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mcs: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace mcs
