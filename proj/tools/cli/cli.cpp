#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "report_io.hpp"
#include "ssz/arith.hpp"
#include "ssz/constants.hpp"
#include "ssz/density.hpp"
#include "ssz/error.hpp"
#include "ssz/extremal.hpp"
#include "ssz/gtable.hpp"
#include "ssz/parallel.hpp"
#include "ssz/sieve.hpp"
#include "ssz/ssf.hpp"

#ifndef SSZ_VERSION
#define SSZ_VERSION "unknown"
#endif

namespace ssz::cli {

namespace {

constexpr std::uint64_t kMinSieve = std::uint64_t{1} << 16;
// Sieve needed so that eta can be evaluated up to the default first anchor.
constexpr std::uint64_t kAnchorSieve = (std::uint64_t{1} << 21) + 2;

enum class Format { text, json, csv };

struct Options {
    std::optional<std::uint64_t> sieve_limit;
    unsigned jobs = 0;
    std::string config_path;
    std::string cache_dir;
    std::string out_path;
    std::string format = "text";
    std::uint64_t exact_limit = kExactLimitDefault;

    std::string kind;
    std::uint64_t n = 0;
    std::string x, y = "1", z = "1", budget = "1";
    std::uint64_t N = 0, N2 = 0, q = 0;
    double h = 1e-3, u_max = 10, r = 0.5;
    bool heuristic = false;
};

struct Output {
    Format format;
    std::string text;
    json doc;
    std::string csv;
};

struct Context {
    Options opt;
    Config cfg;
    Format format = Format::text;
    bool exact_limit_given = false;
    SievePtr sieve;
    double sieve_seconds = 0;

    TruncationParams params(std::uint64_t N, std::uint64_t N2) const {
        TruncationParams p;
        p.N_main = N;
        p.N_secondary = N2;
        p.eta = cfg.eta;
        p.jobs = opt.jobs;
        return p;
    }
};

Rational rat(const std::string& s, const char* what) {
    if (s.empty()) throw InvalidArgument(std::string("missing --") + what);
    return Rational::parse(s);
}

std::uint64_t floor_u64(Rational r) { return r < Rational(0) ? 0 : static_cast<std::uint64_t>(r.floor()); }

std::string join_set(const std::vector<std::uint64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::string mpq_str(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

json set_json(const std::vector<std::uint64_t>& v) { return {{"members", v}, {"size", v.size()}, {"exact", true}}; }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    const u128 v = static_cast<u128>(a) * b;
    return v > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(v);
}

std::uint64_t default_N(const Options& o, const std::string& kind) {
    if (o.N) return o.N;
    return kind == "beta" ? std::uint64_t{1} << 18 : std::uint64_t{1} << 22;
}

std::uint64_t default_N2(const Options& o, const std::string& kind) {
    if (o.N2) return o.N2;
    if (kind == "beta") return std::uint64_t{1} << 16;
    if (kind == "mu" || kind == "derived") return std::uint64_t{1} << 21;
    return 0;
}

// Smallest sieve that lets the command run.
std::uint64_t required_sieve(const std::string& cmd, const Options& o) {
    auto at_least = [](std::uint64_t v) { return std::max(kMinSieve, v); };
    if (cmd == "eval" || cmd == "density") return kMinSieve;
    if (cmd == "count" || cmd == "enum") return at_least(floor_u64(rat(o.x, "x")) + 2);
    if (cmd == "apps") {
        if (o.kind == "R" || o.kind == "H") return kMinSieve;
        if (o.kind == "f") return at_least(o.n + 2);
        return at_least(floor_u64(rat(o.x, "x")) + 2);
    }
    if (cmd == "table") {
        const std::uint64_t N = o.N ? o.N : std::uint64_t{1} << 22;
        return std::max(kAnchorSieve, saturating_mul(7, N) + 2);
    }
    if (cmd == "const") {
        const std::uint64_t N = default_N(o, o.kind), N2 = default_N2(o, o.kind);
        if (o.kind == "c" || o.kind == "a") {
            const Rational yz = std::max(rat(o.y, "y"), Rational::parse(o.z.size() > 2 && o.z.ends_with("-0") ? o.z.substr(0, o.z.size() - 2) : o.z));
            return std::max(kAnchorSieve, saturating_mul(static_cast<std::uint64_t>(yz.ceil()), N) + 2);
        }
        return std::max(kAnchorSieve, std::max(N, N2) + 2);
    }
    return kMinSieve;
}

GTablePtr build_gtable(const Context& ctx, std::uint64_t limit) {
    std::optional<std::filesystem::path> dir;
    if (!ctx.opt.cache_dir.empty()) dir = ctx.opt.cache_dir;
    else if (ctx.cfg.cache_dir) dir = *ctx.cfg.cache_dir;
    return GTable::build(ctx.sieve, limit, dir);
}

Output emit_report(const Context& ctx, const ConstantReport& r) {
    Output o{ctx.format, report_text(r), report_json(r), report_csv_header() + report_csv_rows(r)};
    return o;
}

Output cmd_eval(const Context& ctx) {
    const auto& o = ctx.opt;
    if (o.kind != "F") throw InvalidArgument("eval supports F only");
    const std::uint64_t F = schinzel_szekeres(*ctx.sieve, o.n);
    Output out{ctx.format, std::to_string(F) + "\n", {}, "n,F\n" + std::to_string(o.n) + "," + std::to_string(F) + "\n"};
    out.doc = {{"command", "eval F"}, {"n", exact_json(o.n)}, {"F", exact_json(F)}};
    return out;
}

Output cmd_count(const Context& ctx) {
    const auto& o = ctx.opt;
    const Rational x = rat(o.x, "x");
    std::uint64_t v = 0;
    json args = {{"x", exact_json(x)}};
    if (o.kind == "phi") {
        v = phi_count(*ctx.sieve, x, PrimeCutoff::parse(o.z));
        args["z"] = o.z;
    } else {
        const Rational y = rat(o.y, "y");
        const PrimeCutoff z = PrimeCutoff::parse(o.z);
        v = o.kind == "A" ? count_A(*ctx.sieve, x, y, z) : count_D(*ctx.sieve, x, y, z);
        args["y"] = exact_json(y);
        args["z"] = z.str();
    }
    Output out{ctx.format, std::to_string(v) + "\n", {}, "kind,value\n" + o.kind + "," + std::to_string(v) + "\n"};
    out.doc = {{"command", "count " + o.kind}, {"args", args}, {"value", exact_json(v)}};
    return out;
}

Output cmd_enum(const Context& ctx) {
    const auto& o = ctx.opt;
    const Rational x = rat(o.x, "x");
    const auto& s = *ctx.sieve;
    std::vector<std::uint64_t> set;
    if (o.kind == "members") {
        for (const auto& m : enumerate_members(s, rat(o.y, "y"), PrimeCutoff::parse(o.z), floor_u64(x))) set.push_back(m.n);
    } else if (o.kind == "B") {
        set = enumerate_B(s, x, o.jobs).members;
    } else {
        set = build_B_prime(s, x);
    }
    std::ostringstream csv, txt;
    csv << "n,spf\n";
    for (auto n : set) {
        csv << n << ',' << (n == 1 ? 1 : s.spf(n)) << '\n';
        txt << n << '\n';
    }
    Output out{ctx.format, txt.str(), {}, csv.str()};
    out.doc = {{"command", "enum " + o.kind}, {"x", exact_json(x)}, {"set", set_json(set)}};
    if (o.kind == "members") {
        out.doc["y"] = exact_json(rat(o.y, "y"));
        out.doc["z"] = PrimeCutoff::parse(o.z).str();
    }
    return out;
}

Output cmd_density(const Context& ctx) {
    const auto& o = ctx.opt;
    const DensityGrid omega = solve_omega(o.h, std::max(3.0, o.u_max));
    DensityGrid g;
    if (o.kind == "omega") g = omega;
    else if (o.kind == "d") g = solve_d(o.h, o.u_max, omega);
    else g = solve_dr(o.r, o.h, o.u_max, omega);
    const std::string csv = density_csv(g);
    return Output{ctx.format, csv, density_json(g), csv};
}

Output cmd_const(const Context& ctx) {
    const auto& o = ctx.opt;
    const auto& s = *ctx.sieve;
    const std::uint64_t N = default_N(o, o.kind), N2 = default_N2(o, o.kind);
    if (o.kind == "c") return emit_report(ctx, compute_c(s, rat(o.y, "y"), PrimeCutoff::parse(o.z), ctx.params(N, 0)));
    if (o.kind == "a") return emit_report(ctx, compute_a(s, rat(o.y, "y"), PrimeCutoff::parse(o.z), ctx.params(N, 0)));
    if (o.kind == "beta") return emit_report(ctx, compute_beta(s, *build_gtable(ctx, N2), ctx.params(N, N2)));
    if (o.kind == "mu") {
        const std::uint64_t q = o.q ? o.q : 5;
        return emit_report(ctx, compute_mu(s, *build_gtable(ctx, N2), q, ctx.params(N, N2)));
    }
    // derived: a_{1,1}, beta at its defaults, mu_5 and mu_11.
    const auto a = compute_a(s, Rational(1), PrimeCutoff::real(Rational(1)), ctx.params(N, 0));
    const auto g = build_gtable(ctx, std::max<std::uint64_t>(N2, std::uint64_t{1} << 16));
    const auto beta = compute_beta(s, *g, ctx.params(std::uint64_t{1} << 18, std::uint64_t{1} << 16));
    const auto mu5 = compute_mu(s, *g, 5, ctx.params(N, N2));
    const auto mu11 = compute_mu(s, *g, 11, ctx.params(N, N2));
    const auto d = derived_constants(a, beta, mu5, mu11);
    Output out{ctx.format, {}, {}, report_csv_header()};
    json arr = json::array();
    for (const ConstantReport* r : {&a, &beta, &mu5, &mu11, &d.delta, &d.kappa, &d.a_exp_minus_delta}) {
        out.text += report_text(*r);
        arr.push_back(report_json(*r));
        out.csv += report_csv_rows(*r);
    }
    out.doc = {{"command", "const derived"}, {"reports", arr}};
    return out;
}

Output cmd_table(const Context& ctx) {
    const auto& o = ctx.opt;
    const std::uint64_t N = o.N ? o.N : std::uint64_t{1} << 22;
    const bool first = o.kind == "1";
    const auto cells = first ? table_c(*ctx.sieve, ctx.params(N, 0)) : table_a(*ctx.sieve, ctx.params(N, 0));
    Output out{ctx.format, render_table(first ? "c_{y,z}" : "a_{y,z}", cells), {}, "y,z,lo,hi,width,certified\n"};
    json arr = json::array();
    for (const auto& c : cells) {
        json j = report_json(c.report);
        j["y"] = exact_json(c.y);
        j["z"] = exact_json(c.z);
        arr.push_back(std::move(j));
        out.csv += c.y.str() + "," + c.z.str() + "," + format_double(c.report.value.lo()) + "," +
                   format_double(c.report.value.hi()) + "," + format_double(c.report.value.width()) + "," +
                   certified_prefix(c.report.value) + "\n";
    }
    out.doc = {{"command", std::string("table ") + o.kind}, {"N", N}, {"cells", arr}};
    return out;
}

Output cmd_apps(const Context& ctx) {
    const auto& o = ctx.opt;
    const auto& s = *ctx.sieve;
    Output out{ctx.format, {}, {}, {}};
    if (o.kind == "f") {
        if (o.n == 0) throw InvalidArgument("apps f needs --n >= 1");
        const std::uint64_t lower = f_lower(s, o.n);
        out.doc = {{"command", "apps f"}, {"n", exact_json(o.n)}, {"lower_bound_A", exact_json(lower)}};
        std::string fv = "?";
        if (!o.heuristic) {
            const std::uint64_t f = f_exact(o.n, ctx.exact_limit_given ? o.exact_limit : kPathLimitDefault);
            out.doc["f"] = exact_json(f);
            fv = std::to_string(f);
        }
        out.text = fv + " (A(n/2) = " + std::to_string(lower) + ")\n";
        out.csv = "n,f,lower\n" + std::to_string(o.n) + "," + fv + "," + std::to_string(lower) + "\n";
        return out;
    }
    const Rational x = rat(o.x, "x");
    if (o.kind == "R") {
        const RResult r = o.heuristic ? r_heuristic(s, x) : r_exact(x, o.exact_limit);
        out.text = mpq_str(r.value) + " " + join_set(r.witness) + "\n";
        json v = exact_json(r.value);
        v["exact"] = r.exact;
        out.doc = {{"command", "apps R"}, {"x", exact_json(x)}, {"R", v}, {"witness", set_json(r.witness)}, {"optimal", r.exact}};
        out.csv = "x,R,witness,optimal\n" + x.str() + "," + mpq_str(r.value) + ",\"" + join_set(r.witness) + "\"," +
                  (r.exact ? "true" : "false") + "\n";
    } else if (o.kind == "H") {
        const Rational b = rat(o.budget, "budget");
        const HResult h = h_exact(x, b, o.exact_limit);
        out.text = std::to_string(h.count) + " " + join_set(h.witness) + "\n";
        out.doc = {{"command", "apps H"}, {"x", exact_json(x)}, {"budget", exact_json(b)}, {"H", exact_json(h.count)},
                   {"witness", set_json(h.witness)}};
        out.csv = "x,budget,H,witness\n" + x.str() + "," + b.str() + "," + std::to_string(h.count) + ",\"" +
                  join_set(h.witness) + "\"\n";
    } else if (o.kind == "Hstar") {
        const Rational b = rat(o.budget, "budget");
        const HStarResult h = h_star(s, x, b);
        out.doc = {{"command", "apps Hstar"}, {"x", exact_json(x)}, {"budget", exact_json(b)}, {"feasible", h.feasible}};
        if (h.feasible) {
            out.text = std::to_string(h.count) + " tau=" + h.tau.str() + " sum=" + mpq_str(h.recip_sum) + "\n";
            out.doc["Hstar"] = exact_json(h.count);
            out.doc["tau"] = exact_json(h.tau);
            out.doc["recip_sum"] = exact_json(h.recip_sum);
        } else {
            out.text = "infeasible\n";
        }
        out.csv = "x,budget,feasible,Hstar,tau\n" + x.str() + "," + b.str() + "," + (h.feasible ? "true," : "false,") +
                  (h.feasible ? std::to_string(h.count) + "," + h.tau.str() : ",") + "\n";
    } else {
        const mpq_class b = sum_recip_B(s, x), bp = sum_recip_B_prime(s, x), fr = frac_sum_B(s, x);
        out.doc = {{"command", "apps recipB"}, {"x", exact_json(x)}, {"sum_recip_B", exact_json(b)},
                   {"sum_recip_B_prime", exact_json(bp)}, {"frac_sum_B", exact_json(fr)}};
        out.text = "sum 1/n over B(x):  " + mpq_str(b) + " ~ " + format_double(b.get_d()) + "\n" +
                   "sum 1/n over B'(x): " + mpq_str(bp) + " ~ " + format_double(bp.get_d()) + "\n" +
                   "sum {x/n} over B(x): " + mpq_str(fr) + " ~ " + format_double(fr.get_d()) + "\n";
        out.csv = "x,sum_recip_B,sum_recip_B_prime,frac_sum_B";
        std::string row = x.str() + "," + mpq_str(b) + "," + mpq_str(bp) + "," + mpq_str(fr);
        if (o.q) {
            const mpq_class sl = sum_recip_B_interval(s, x, o.q);
            out.doc["q"] = exact_json(o.q);
            out.doc["slice"] = exact_json(sl);
            out.text += "slice x/(q+1) < n <= x/q:  " + mpq_str(sl) + " ~ " + format_double(sl.get_d()) + "\n";
            out.csv += ",q,slice";
            row += "," + std::to_string(o.q) + "," + mpq_str(sl);
        }
        out.csv += "\n" + row + "\n";
    }
    return out;
}

std::string render(const Output& o, const std::string& manifest_name) {
    switch (o.format) {
    case Format::json: {
        json d = o.doc;
        if (!manifest_name.empty()) d["manifest"] = manifest_name;
        return d.dump(2) + "\n";
    }
    case Format::csv:
        return (manifest_name.empty() ? "" : "# manifest: " + manifest_name + "\n") + o.csv;
    default:
        return o.text + (manifest_name.empty() ? "" : "manifest: " + manifest_name + "\n");
    }
}

void write_file(const std::filesystem::path& p, const std::string& data) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ResourceError("cannot write " + p.string());
    f << data;
    if (!f) throw ResourceError("write failed for " + p.string());
}

int dispatch(CLI::App& app, Context& ctx, const std::vector<std::string>& args, std::ostream& out) {
    std::string cmd;
    for (const auto* sc : app.get_subcommands()) cmd = sc->get_name();
    if (cmd.empty()) throw InvalidArgument("no subcommand given (try --help)");

    if (!ctx.opt.config_path.empty()) ctx.cfg = load_config(ctx.opt.config_path);
    ctx.format = ctx.opt.format == "json" ? Format::json : ctx.opt.format == "csv" ? Format::csv : Format::text;
    if (ctx.opt.jobs) set_default_jobs(ctx.opt.jobs);

    std::uint64_t limit = required_sieve(cmd, ctx.opt);
    if (ctx.opt.sieve_limit) limit = *ctx.opt.sieve_limit;
    else if (ctx.cfg.sieve_limit) limit = *ctx.cfg.sieve_limit;
    SieveOptions so;
    if (cmd == "const" && (ctx.opt.kind == "beta" || ctx.opt.kind == "derived"))
        so.harmonic_limit = std::min(limit, std::max(default_N(ctx.opt, "beta"), std::uint64_t{1} << 18));

    const auto t0 = std::chrono::steady_clock::now();
    ctx.sieve = build_sieve(limit, so);
    const auto t1 = std::chrono::steady_clock::now();

    Output res;
    if (cmd == "eval") res = cmd_eval(ctx);
    else if (cmd == "count") res = cmd_count(ctx);
    else if (cmd == "enum") res = cmd_enum(ctx);
    else if (cmd == "density") res = cmd_density(ctx);
    else if (cmd == "const") res = cmd_const(ctx);
    else if (cmd == "table") res = cmd_table(ctx);
    else res = cmd_apps(ctx);
    const auto t2 = std::chrono::steady_clock::now();

    if (ctx.opt.out_path.empty()) {
        out << render(res, "");
        return kExitOk;
    }
    const std::filesystem::path outp = ctx.opt.out_path;
    const std::filesystem::path manp = outp.string() + ".manifest.json";
    write_file(outp, render(res, manp.filename().string()));

    json cfg = json::object();
    for (const auto& [k, v] : ctx.cfg.entries) cfg[k] = v;
    const json manifest = {
        {"artifact_version", SSZ_VERSION},
        {"command_line", args},
        {"config_file", ctx.opt.config_path},
        {"config", cfg},
        {"sieve_limit", limit},
        {"precision_bits", ctx.cfg.precision_bits},
        {"eta_anchors", anchors_json(ctx.cfg.eta.anchors)},
        {"eta_global_lower", ctx.cfg.eta.global_lower},
        {"timings", {{"sieve_seconds", std::chrono::duration<double>(t1 - t0).count()},
                     {"compute_seconds", std::chrono::duration<double>(t2 - t1).count()}}},
        {"outputs", {outp.string()}}};
    write_file(manp, manifest.dump(2) + "\n");
    out << "wrote " << outp.string() << " (manifest " << manp.string() << ")\n";
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx;
    auto& o = ctx.opt;
    CLI::App app{"Schinzel-Szekeres function, dense-divisor densities and related constants"};
    app.set_version_flag("--version", SSZ_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--sieve-limit", o.sieve_limit, "Sieve size (default: chosen per command)");
    app.add_option("--jobs", o.jobs, "Worker threads (0 = hardware concurrency)");
    app.add_option("--config", o.config_path, "key = value configuration file");
    app.add_option("--cache-dir", o.cache_dir, "Directory for cached tables");
    app.add_option("--out", o.out_path, "Write the result here and a manifest next to it");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    auto* el = app.add_option("--exact-limit", o.exact_limit, "Largest x the exponential solvers accept");

    auto* eval = app.add_subcommand("eval", "Evaluate F(n)");
    eval->add_option("what", o.kind)->required()->check(CLI::IsMember({"F"}));
    eval->add_option("n", o.n)->required()->check(CLI::PositiveNumber);

    auto* count = app.add_subcommand("count", "Counting functions A, D and Phi");
    count->add_option("kind", o.kind)->required()->check(CLI::IsMember({"A", "D", "phi"}));
    count->add_option("--x", o.x)->required();
    count->add_option("--y", o.y, "ratio bound (default 1)");
    count->add_option("--z", o.z, "prime cutoff, e.g. 5, 5/2 or 7-0 (default 1)");

    auto* en = app.add_subcommand("enum", "List D_{y,z} members, B(x) or B'(x)");
    en->add_option("kind", o.kind)->required()->check(CLI::IsMember({"members", "B", "Bprime"}));
    en->add_option("--x", o.x)->required();
    en->add_option("--y", o.y);
    en->add_option("--z", o.z);

    auto* dens = app.add_subcommand("density", "Grid solutions for omega, d and d_r");
    dens->set_help_flag("--help", "Print this help message and exit");
    dens->add_option("kind", o.kind)->required()->check(CLI::IsMember({"omega", "d", "dr"}));
    dens->add_option("--h", o.h, "grid step, 1/h an integer (default 0.001)");
    dens->add_option("--umax", o.u_max, "grid end (default 10)");
    dens->add_option("--r", o.r, "d_r parameter in (0, 1] (default 0.5)");

    auto* cst = app.add_subcommand("const", "Constant enclosures");
    cst->add_option("kind", o.kind)->required()->check(CLI::IsMember({"c", "a", "beta", "mu", "derived"}));
    cst->add_option("--y", o.y);
    cst->add_option("--z", o.z);
    cst->add_option("--N", o.N, "main truncation point");
    cst->add_option("--N2", o.N2, "secondary truncation point (beta: N_R, mu: N_R)");
    cst->add_option("--q", o.q, "mu_q index (default 5)");

    auto* tab = app.add_subcommand("table", "Grids of c_{y,z} (1) or a_{y,z} (2)");
    tab->add_option("which", o.kind)->required()->check(CLI::IsMember({"1", "2"}));
    tab->add_option("--N", o.N);

    auto* apps = app.add_subcommand("apps", "Extremal problems");
    apps->add_option("kind", o.kind)->required()->check(CLI::IsMember({"R", "H", "Hstar", "f", "recipB"}));
    apps->add_option("--x", o.x);
    apps->add_option("--n", o.n, "f(n) argument");
    apps->add_option("--budget", o.budget, "reciprocal-sum budget (default 1)");
    apps->add_option("--q", o.q, "recipB: also report the slice x/(q+1) < n <= x/q");
    apps->add_flag("--heuristic", o.heuristic, "R: best construction instead of exact search; f: bound only");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    ctx.exact_limit_given = el->count() > 0;
    if (o.kind == "f" && o.n == 0 && !o.x.empty()) o.n = floor_u64(Rational::parse(o.x));

    try {
        return dispatch(app, ctx, args, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ResourceError& e) {
        err << "refused: " << e.what() << "\n";
        return kExitResource;
    } catch (const OutOfRange& e) {
        err << "out of range: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::bad_alloc&) {
        err << "refused: out of memory\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace ssz::cli
