#include "cli.hpp"

#include "report.hpp"

#include "thetalab/asympt.hpp"
#include "thetalab/combinat.hpp"
#include "thetalab/graphs.hpp"
#include "thetalab/theta_lp.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace thetalab::cli {

namespace {

struct Options {
    long n = 0;
    int k = 0;
    std::string L;
    bool sigma = false;
    std::string format = "text";
    int precision = 12;
    std::optional<std::size_t> cap;
    bool seedless = false;
    std::uint64_t budget = kDefaultNodeBudget;
    bool timing = false;
    std::string command;

    long from = 0, to = 0, step = 1;
    int k_max = 10;
    bool inject_fault = false;
    int q = 0;
    std::string n_list = "50,100,200,400";
};

/// Raised for failed identity checks inside a command.
struct IdentityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t vertex_cap(const Options& o) {
    if (o.cap) return *o.cap;
    if (const char* env = std::getenv("THETALAB_CAP")) {
        std::string text = env;
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("THETALAB_CAP must be a nonnegative integer, got '" + text + "'");
        return std::stoull(text);
    }
    return kDefaultVertexCap;
}

LSpec spec_of(const Options& o) { return LSpec::make(o.n, o.k, parse_L(o.L, o.k)); }

Record inputs(const Options& o, const std::string& command, const LSpec& spec) {
    Record r(o.precision);
    r.add("command", command);
    r.add("n", spec.n());
    r.add("k", spec.k());
    r.add("L", join_list(spec.L()));
    return r;
}

/// Solves and checks the certificate; a bad certificate is an identity failure.
Rational certified(const LSpec& spec, SignMode mode) {
    LpProblem lp = build_lp(spec, mode);
    LpSolution sol = solve_exact(lp);
    if (sol.status != LpStatus::Optimal)
        throw IdentityFailure(std::string("LP not optimal: ") + to_string(sol.status));
    if (!verify_solution(lp, sol)) throw IdentityFailure("LP certificate did not verify");
    return sol.optimum;
}

int cmd_theta(const Options& o, std::ostream& out) {
    LSpec spec = spec_of(o);
    Record r = inputs(o, o.command, spec);
    Rational th = certified(spec, SignMode::Free);
    r.add("theta", th);
    bool ok = true;
    if (o.sigma) {
        Rational sg = certified(spec, SignMode::Nonnegative);
        r.add("sigma", sg);
        ok = sg <= th;
        r.add("sigma_le_theta", std::string(ok ? "pass" : "fail"));
    }
    DefBound def = def_bound(spec);
    r.add("def_bound", def.value);
    r.add("def_bound_valid", def.valid);
    r.add("theta_le_def", th <= def.value);
    BigInt rcw = rcw_bound(spec);
    r.add("rcw_bound", rcw);
    r.add("theta_le_rcw", th <= Rational(rcw));
    write_record(out, r, parse_format(o.format));
    return ok ? kExitOk : kExitIdentity;
}

Rational power(long n, int e) { return Rational(pow_int(BigInt(n), static_cast<unsigned long>(e))); }

Record sweep_row(const LSpec& spec, const LeadingTerm& lead, int precision) {
    Record r(precision);
    long n = spec.n();
    Rational th = certified(spec, SignMode::Free);
    Rational sg = certified(spec, SignMode::Nonnegative);
    if (sg > th) throw IdentityFailure("sigma > theta at n = " + std::to_string(n));
    r.add("n", n);
    r.add("theta", th);
    r.add("sigma", sg);
    r.add("leading", lead.constant * power(n, lead.exponent));
    r.add("residual", scaled_residual(th, lead, n));
    r.add("sigma_residual", scaled_residual(sg, lead, n));
    DefBound def = def_bound(spec);
    r.add("def_bound", def.value);
    r.add("def_bound_valid", def.valid);
    r.add("rcw_bound", rcw_bound(spec));
    return r;
}

/// Evaluates rows concurrently; results land in input order.
std::vector<Record> parallel_rows(const std::vector<long>& ns, const std::function<Record(long)>& row) {
    std::vector<Record> rows(ns.size());
    std::vector<std::exception_ptr> errors(ns.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < ns.size();) {
            try {
                rows[i] = row(ns[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned workers = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, 16);
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(ns.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    std::vector<int> L = parse_L(o.L, o.k);
    if (L.empty()) throw std::invalid_argument("sweep needs a nonempty L (theta is 1 for L = {})");
    if (o.from < 2L * o.k) throw std::invalid_argument("--from must be at least 2k = " + std::to_string(2 * o.k));
    if (o.to < o.from) throw std::invalid_argument("--to must be at least --from");
    if (o.step < 1) throw std::invalid_argument("--step must be positive");
    if ((o.to - o.from) / o.step >= 100000) throw std::invalid_argument("sweep limited to 100000 rows");
    LSpec base = LSpec::make(o.from, o.k, L);
    LeadingTerm lead = leading_constant(o.k, base.L());
    std::vector<long> ns;
    for (long n = o.from; n <= o.to; n += o.step) ns.push_back(n);
    auto rows = parallel_rows(ns, [&](long n) { return sweep_row(base.with_n(n), lead, o.precision); });
    write_table(out, rows, parse_format(o.format));
    return kExitOk;
}

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    std::string detail;
};

SuiteResult suite_complement_constants(int k_max) {
    SuiteResult r{"complement_constants", 0, {}, "leading constants of L and its complement multiply to 1/k!"};
    for (int k = 1; k <= k_max; ++k) {
        Rational want = make_rational(1, factorial(k));
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> L;
            for (int l = 0; l < k; ++l)
                if (mask >> l & 1) L.push_back(l);
            ++r.cases;
            Rational got = complement_constant_product(k, L);
            if (got != want)
                r.failures.push_back("k=" + std::to_string(k) + " L={" + join_list(L) + "} product=" +
                                     to_string(got) + " expected=" + to_string(want));
        }
    }
    return r;
}

Rational theta_maybe_corrupted(const LSpec& spec, bool corrupt, std::vector<std::string>& failures) {
    LpProblem lp = build_lp(spec, SignMode::Free);
    if (corrupt) {
        // Tighten a binding row against the optimal point so the optimum moves.
        LpSolution clean = solve_exact(lp);
        for (std::size_t u = 0; u < lp.constraint_count(); ++u) {
            if (clean.dual[u] <= 0) continue;
            for (std::size_t v = 0; v < lp.variable_count(); ++v) {
                if (clean.assignment[v] == 0) continue;
                lp.coeff(u, v) += clean.assignment[v] > 0 ? -1 : 1;
                u = lp.constraint_count();
                break;
            }
        }
    }
    LpSolution sol = solve_exact(lp);
    if (sol.status != LpStatus::Optimal || !verify_solution(lp, sol)) {
        failures.push_back("n=" + std::to_string(spec.n()) + " k=" + std::to_string(spec.k()) + " L={" +
                           join_list(spec.L()) + "} LP status " + to_string(sol.status) +
                           " or certificate rejected");
        return Rational(0);
    }
    return sol.optimum;
}

SuiteResult suite_product(int k_max, bool inject_fault) {
    SuiteResult r{"product_identity", 0, {}, "theta(L) theta(complement) = C(n,k) at n = 2k, 2k+3"};
    bool corrupt = inject_fault;
    for (int k = 1; k <= k_max; ++k) {
        for (long n : {2L * k, 2L * k + 3}) {
            BigInt N = binom(n, k);
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                // Each unordered pair {L, complement} once.
                if (mask & (1u << (k - 1))) continue;
                std::vector<int> L;
                for (int l = 0; l < k; ++l)
                    if (mask >> l & 1) L.push_back(l);
                LSpec spec = LSpec::make(n, k, L);
                LSpec comp = complement_L(spec);
                bool hit = corrupt && k >= 2 && spec.s() > 0;
                if (hit) corrupt = false;
                ++r.cases;
                Rational a = theta_maybe_corrupted(spec, hit, r.failures);
                Rational b = theta_maybe_corrupted(comp, false, r.failures);
                if (a * b != Rational(N))
                    r.failures.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + " L={" +
                                         join_list(L) + "} theta=" + to_string(a) + " complement theta=" +
                                         to_string(b) + " C(n,k)=" + N.get_str());
            }
        }
    }
    return r;
}

SuiteResult suite_singleton(int k_max) {
    constexpr long kTop = 60;
    SuiteResult r{"singleton_closed_form", 0, {}, ""};
    std::string thresholds;
    for (int k = 1; k <= std::min(k_max, 6); ++k) {
        for (int l = 0; l < k; ++l) {
            ++r.cases;
            // n0: the least n such that the LP agrees with the closed form on [n0, kTop].
            long n0 = kTop + 1;
            for (long n = kTop; n >= 2L * k; --n) {
                LSpec spec = LSpec::make(n, k, {l});
                bool agree = false;
                try {
                    agree = theta(spec) == exact_theta_singleton(n, k, l);
                } catch (const std::domain_error&) {
                }
                if (!agree) break;
                n0 = n;
            }
            if (n0 > kTop)
                r.failures.push_back("k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                     " LP and closed form differ at n=" + std::to_string(kTop));
            if (!thresholds.empty()) thresholds += ' ';
            thresholds += "(" + std::to_string(k) + "," + std::to_string(l) + "):" + std::to_string(n0);
        }
    }
    r.detail = "n0 per (k,l): " + thresholds;
    return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.k_max < 1 || o.k_max > 12) throw std::invalid_argument("--k-max must lie in [1, 12]");
    std::vector<SuiteResult> suites;
    suites.push_back(suite_complement_constants(o.k_max));
    suites.push_back(suite_product(o.k_max, o.inject_fault));
    suites.push_back(suite_singleton(o.k_max));

    Format format = parse_format(o.format);
    bool ok = true;
    std::vector<Record> rows;
    for (const SuiteResult& s : suites) {
        bool pass = s.failures.empty();
        ok = ok && pass;
        if (format == Format::Text) {
            out << s.name << ": " << (pass ? "pass" : "FAIL") << " (" << s.cases << " cases";
            if (!s.detail.empty()) out << "; " << s.detail;
            out << ")\n";
            for (const auto& f : s.failures) out << "  counterexample: " << f << '\n';
            continue;
        }
        Record r(o.precision);
        r.add("suite", s.name);
        r.add("result", std::string(pass ? "pass" : "fail"));
        r.add("cases", s.cases);
        r.add("detail", s.detail);
        std::string joined;
        for (const auto& f : s.failures) joined += (joined.empty() ? "" : "; ") + f;
        r.add("counterexamples", joined);
        rows.push_back(std::move(r));
    }
    if (format != Format::Text) write_table(out, rows, format);
    return ok ? kExitOk : kExitIdentity;
}

std::vector<long> parse_n_list(const std::string& text) {
    std::vector<long> ns;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad entry '" + tok + "' in --n list");
        ns.push_back(std::stol(tok));
    }
    if (ns.empty()) throw std::invalid_argument("--n list is empty");
    return ns;
}

int cmd_gap(const Options& o, std::ostream& out) {
    std::vector<long> ns = parse_n_list(o.n_list);
    std::size_t cap = vertex_cap(o);
    if (!prime_power(o.q)) throw std::invalid_argument("q = " + std::to_string(o.q) + " is not a prime power");
    std::vector<Record> rows;
    for (long n : ns) {
        GapReport g = gap_report(o.q, n, cap, o.budget);
        Record r(o.precision);
        r.add("q", g.q);
        r.add("p", g.p);
        r.add("k", g.k);
        r.add("n", g.n);
        r.add("L", join_list(g.L));
        r.add("vertices", g.vertex_count);
        r.add("theta", g.theta);
        r.add("sigma", g.sigma);
        r.add("minrank_bound", g.minrank_bound);
        r.add("alpha", g.alpha ? std::to_string(*g.alpha) : std::string());
        r.add("alpha_exact", g.alpha ? std::string(g.alpha_exact ? "true" : "false") : std::string());
        r.add("def_bound", g.def.value);
        r.add("def_bound_valid", g.def.valid);
        r.add("rcw_bound", g.rcw);
        r.add_approx("exponent_estimate", g.exponent_estimate);
        r.add("target_exponent", g.target_exponent);
        rows.push_back(std::move(r));
    }
    write_table(out, rows, parse_format(o.format));
    return kExitOk;
}

std::string cap_message(const LSpec& spec, std::size_t cap) {
    return "C(" + std::to_string(spec.n()) + "," + std::to_string(spec.k()) + ") = " +
           binom(spec.n(), spec.k()).get_str() + " vertices exceeds the cap of " + std::to_string(cap) +
           "; raise --cap or THETALAB_CAP, or use `thetalab theta` for bounds only";
}

int cmd_alpha(const Options& o, std::ostream& out) {
    LSpec spec = spec_of(o);
    std::size_t cap = vertex_cap(o);
    if (binom(spec.n(), spec.k()) > BigInt(static_cast<unsigned long>(cap)))
        throw ResourceCapExceeded(cap_message(spec, cap));
    SandwichReport s = sandwich_check(spec, cap, o.budget);
    Record r = inputs(o, o.command, spec);
    r.add("vertices", binom(spec.n(), spec.k()));
    r.add("alpha", s.alpha.size);
    r.add("alpha_exact", s.alpha.exact);
    r.add("nodes", static_cast<long>(s.alpha.nodes));
    r.add("sigma", s.sigma);
    r.add("theta", s.theta);
    r.add("sandwich", std::string("pass"));
    std::string w;
    for (std::size_t v : s.alpha.witness) w += (w.empty() ? "" : " ") + std::to_string(v);
    r.add("witness", w);
    write_record(out, r, parse_format(o.format));
    return kExitOk;
}

int cmd_dump(const Options& o, std::ostream& out) {
    LSpec spec = spec_of(o);
    std::size_t cap = vertex_cap(o);
    if (binom(spec.n(), spec.k()) > BigInt(static_cast<unsigned long>(cap)))
        throw ResourceCapExceeded(cap_message(spec, cap));
    out << dump_adjacency(build_graph(spec, cap));
    return kExitOk;
}

void add_output_flags(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--precision", o.precision, "Significant digits of *_approx fields")
        ->check(CLI::Range(1, 100));
    sub->add_flag("--seedless", o.seedless, "Accepted for scripts; nothing here uses randomness");
    sub->add_flag("--timing", o.timing, "Print elapsed wall time to stderr");
}

void add_nkl(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n, "Ground set size")->required();
    sub->add_option("--k", o.k, "Subset size")->required()->check(CLI::Range(1, 64));
    sub->add_option("--L", o.L, "Allowed intersection sizes, comma separated (\"\" for none)")->required();
}

void add_cap(CLI::App* sub, Options& o) {
    sub->add_option("--cap", o.cap, "Vertex cap for explicit graphs (default 5000, env THETALAB_CAP)");
    sub->add_option("--budget", o.budget, "Branch-and-bound node budget for alpha");
}

}  // namespace

std::vector<int> parse_L(const std::string& text, int k) {
    std::vector<int> L;
    if (text.empty()) return L;
    std::set<int> seen;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(' ');
        auto e = tok.find_last_not_of(' ');
        tok = b == std::string::npos ? std::string() : tok.substr(b, e - b + 1);
        if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("L entry '" + tok + "' is not a nonnegative integer");
        int l = std::stoi(tok);
        if (l >= k)
            throw std::invalid_argument("L entry " + tok + " is outside [0, k-1] = [0, " + std::to_string(k - 1) +
                                        "]");
        if (!seen.insert(l).second) throw std::invalid_argument("L entry " + tok + " is repeated");
        L.push_back(l);
    }
    if (text.back() == ',') throw std::invalid_argument("L has a trailing comma");
    return L;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lovasz numbers and Schrijver bounds of generalized Johnson graphs G(n,k,L)"};
    app.name("thetalab");
    app.require_subcommand(1, 1);
    Options o;

    auto* th = app.add_subcommand("theta", "Exact theta (and sigma with --sigma) with DEF/RCW bounds");
    add_nkl(th, o);
    th->add_flag("--sigma", o.sigma, "Also solve the nonnegative LP");
    add_output_flags(th, o);

    auto* sg = app.add_subcommand("sigma", "Same as theta --sigma");
    add_nkl(sg, o);
    sg->add_flag("--sigma", o.sigma, "Ignored; always on");
    add_output_flags(sg, o);

    auto* sw = app.add_subcommand("sweep", "Table over n of theta, sigma, leading term, residuals, DEF, RCW");
    sw->add_option("--k", o.k, "Subset size")->required()->check(CLI::Range(1, 64));
    sw->add_option("--L", o.L, "Allowed intersection sizes")->required();
    sw->add_option("--from", o.from, "First n (at least 2k)")->required();
    sw->add_option("--to", o.to, "Last n")->required();
    sw->add_option("--step", o.step, "Increment of n");
    add_output_flags(sw, o);

    auto* vf = app.add_subcommand("verify", "Exhaustive identity suites");
    vf->add_option("--k-max", o.k_max, "Largest k (default 10)");
    vf->add_flag("--inject-fault", o.inject_fault, "Corrupt one LP coefficient (first k >= 2 case) to exercise failure reporting");
    add_output_flags(vf, o);

    auto* gp = app.add_subcommand("gap", "Gap family G_q(n, q^2-1) rows");
    gp->add_option("--q", o.q, "Prime power q")->required();
    gp->add_option("--n", o.n_list, "Comma-separated n values (default 50,100,200,400)");
    add_cap(gp, o);
    add_output_flags(gp, o);

    auto* al = app.add_subcommand("alpha", "Exact independence number checked against sigma and theta");
    add_nkl(al, o);
    add_cap(al, o);
    add_output_flags(al, o);

    auto* dg = app.add_subcommand(
        "dump-graph",
        "Adjacency list: one line per vertex in colex order, \"{a,b,...}: i j ...\" with the vertex as a "
        "sorted subset of {1..n} and its neighbours as 0-based vertex indices");
    add_nkl(dg, o);
    add_cap(dg, o);
    add_output_flags(dg, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    for (const CLI::App* sub : app.get_subcommands()) o.command = sub->get_name();
    auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (*th) code = cmd_theta(o, out);
        else if (*sg) {
            o.sigma = true;
            code = cmd_theta(o, out);
        } else if (*sw) code = cmd_sweep(o, out);
        else if (*vf) code = cmd_verify(o, out);
        else if (*gp) code = cmd_gap(o, out);
        else if (*al) code = cmd_alpha(o, out);
        else if (*dg) code = cmd_dump(o, out);
    } catch (const ResourceCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const IdentityViolation& e) {
        err << "identity check failed: " << e.what() << '\n';
        return kExitIdentity;
    } catch (const IdentityFailure& e) {
        err << "identity check failed: " << e.what() << '\n';
        return kExitIdentity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitIdentity;
    }
    if (o.timing) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        err << "elapsed_seconds: " << dt.count() << '\n';
    }
    if (code == kExitIdentity) err << "identity check failed\n";
    return code;
}

}  // namespace thetalab::cli
