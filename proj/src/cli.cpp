#include "dpois/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpois/bell.hpp"
#include "dpois/distribution.hpp"
#include "dpois/errors.hpp"
#include "dpois/moments.hpp"
#include "dpois/report.hpp"
#include "dpois/triangles.hpp"

namespace dpois::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express.
class UsageError : public Error {
    using Error::Error;
};

struct Common {
    std::string output;
    std::string format = "csv";
    bool with_float = false;
};

struct TableFlags {
    std::string kind;
    std::optional<std::string> lambda;
    std::int64_t n_max = 0;
};

struct PolyFlags {
    std::string family;
    std::optional<std::string> lambda;
    std::string x;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> n_max;
    std::size_t max_terms = TruncationBudget{}.max_terms;
    std::optional<std::string> tail_bound;
};

struct DistFlags {
    std::string lambda;
    std::string alpha;
    std::int64_t upto = 0;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    bool truncated = false;
};

struct VerifyFlags {
    std::optional<std::string> suite;
    std::optional<std::string> lambda;
    std::optional<std::string> alpha;
    std::optional<std::int64_t> n_max;
    std::uint64_t seed = 42;
    std::size_t count = 100000;
    double sigmas = 4.0;
    std::size_t max_terms = TruncationBudget{}.max_terms;
    std::optional<std::string> tail_bound;
};

void add_common(CLI::App* cmd, Common& c, bool formats) {
    cmd->add_option("--output,-o", c.output, "Write output to this file instead of standard output");
    if (formats) {
        cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_flag("--float", c.with_float, "Append a decimal rendering next to exact values");
    }
}

TruncationBudget make_budget(std::size_t max_terms, const std::optional<std::string>& tail_bound) {
    TruncationBudget b;
    b.max_terms = max_terms;
    if (tail_bound) b.tail_bound_target = Rational::parse(*tail_bound);
    b.validate();
    return b;
}

std::string decimal(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(17) << r.to_double();
    return os.str();
}

int cmd_table(const TableFlags& f, const Common& c, std::ostream& out) {
    static const std::map<std::string, std::pair<TriangleKind, bool>> kinds{
        {"stirling1-deg", {TriangleKind::Stirling1Deg, true}},
        {"stirling2-deg", {TriangleKind::Stirling2Deg, true}},
        {"stirling1", {TriangleKind::Stirling1Classical, true}},
        {"stirling1-unsigned", {TriangleKind::Stirling1Classical, false}},
        {"lah", {TriangleKind::Lah, true}},
    };
    const auto [kind, signed_value] = kinds.at(f.kind);
    const bool degenerate = kind == TriangleKind::Stirling1Deg || kind == TriangleKind::Stirling2Deg;
    if (degenerate && !f.lambda) throw UsageError("--kind " + f.kind + " requires --lambda");
    if (f.n_max < 0) throw UsageError("--n-max must be nonnegative");
    const DegenParam lambda(f.lambda ? Rational::parse(*f.lambda) : Rational(0));

    if (c.format == "csv") {
        std::ostringstream body;
        body << std::setprecision(17);
        write_triangle_csv(body, kind, lambda, f.n_max, signed_value, c.with_float);
        out << body.str();
        return kExitOk;
    }
    json doc;
    doc["kind"] = f.kind;
    doc["lambda"] = lambda.value().to_string();
    auto rows = json::array();
    TriangleTable& table = triangle_table(kind, lambda);
    for (std::int64_t n = 0; n <= f.n_max; ++n) {
        const auto row = table.row(n);
        for (std::int64_t k = 0; k <= n; ++k) {
            Rational v = row[static_cast<std::size_t>(k)];
            if (!signed_value) v = v.abs();
            json r;
            r["n"] = n;
            r["k"] = k;
            r["value"] = v.to_string();
            if (c.with_float) r["decimal"] = v.to_double();
            rows.push_back(std::move(r));
        }
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_poly(const PolyFlags& f, const Common& c, std::ostream& out) {
    if (f.n.has_value() == f.n_max.has_value()) throw UsageError("poly needs exactly one of --n and --n-max");
    const bool needs_lambda = f.family != "lah-bell";
    if (needs_lambda && !f.lambda) throw UsageError("--family " + f.family + " requires --lambda");
    const Rational x = Rational::parse(f.x);
    const DegenParam lambda(f.lambda ? Rational::parse(*f.lambda) : Rational(0));
    const TruncationBudget budget = make_budget(f.max_terms, f.tail_bound);

    std::optional<EvalPoint> point;
    if (f.family == "bell-deg" || f.family == "dimorphic-bell" || f.family == "lah-bell-deg" ||
        f.family == "lah-bell-zt") {
        point = EvalPoint::make(x, lambda);
    }
    const auto evaluate = [&](std::int64_t n) -> Value {
        if (f.family == "bell-deg") return bell_deg(n, *point, budget);
        if (f.family == "dimorphic-bell") return dimorphic_bell(n, *point, budget);
        if (f.family == "lah-bell-deg") return lah_bell_deg(n, *point, budget);
        if (f.family == "lah-bell-zt") return lah_bell_zt(n, *point, budget);
        if (f.family == "fully-degen-bell") return fully_degen_bell(n, x, lambda);
        return lah_bell(n, x);
    };

    const std::int64_t first = f.n ? *f.n : 0;
    const std::int64_t last = f.n ? *f.n : *f.n_max;
    if (first < 0 || last < 0) throw UsageError("polynomial index must be nonnegative");
    std::vector<Value> values;
    for (std::int64_t n = first; n <= last; ++n) values.push_back(evaluate(n));

    if (c.format == "json") {
        json doc;
        doc["family"] = f.family;
        doc["lambda"] = lambda.value().to_string();
        doc["x"] = x.to_string();
        auto rows = json::array();
        for (std::int64_t n = first; n <= last; ++n) {
            const Value& v = values[static_cast<std::size_t>(n - first)];
            json r;
            r["n"] = n;
            r["value"] = to_json(v);
            if (c.with_float) r["decimal"] = v.midpoint().to_double();
            rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (f.n) {
        out << values.front();
        if (c.with_float) out << " " << decimal(values.front().midpoint());
        out << "\n";
        return kExitOk;
    }
    out << "family,n,lambda,x,value" << (c.with_float ? ",decimal" : "") << "\n";
    for (std::int64_t n = first; n <= last; ++n) {
        const Value& v = values[static_cast<std::size_t>(n - first)];
        out << f.family << "," << n << "," << lambda.value() << "," << x << "," << v;
        if (c.with_float) out << "," << decimal(v.midpoint());
        out << "\n";
    }
    return kExitOk;
}

PoissonParams params_from(const DistFlags& f) {
    return classify_params(DegenParam(Rational::parse(f.lambda)), Rational::parse(f.alpha));
}

json params_json(const PoissonParams& p, bool truncated) {
    json j;
    j["lambda"] = p.lambda().value().to_string();
    j["alpha"] = p.alpha().to_string();
    j["regime"] = std::string(to_string(p.regime()));
    j["truncated"] = truncated;
    return j;
}

int cmd_pmf(const DistFlags& f, const Common& c, std::ostream& out) {
    const PoissonParams p = params_from(f);
    if (f.upto < 0) throw UsageError("--upto must be nonnegative");
    if (c.format == "csv") {
        std::ostringstream body;
        body << std::setprecision(17);
        write_pmf_csv(body, p, f.upto, f.truncated, c.with_float);
        out << body.str();
        return kExitOk;
    }
    json doc;
    doc["params"] = params_json(p, f.truncated);
    auto rows = json::array();
    Rational running(0);
    for (std::int64_t i = f.truncated ? 1 : 0; i <= f.upto; ++i) {
        const Rational mass = f.truncated ? pmf_zt(i, p) : pmf_deg(i, p);
        running += mass;
        json r;
        r["i"] = i;
        r["pmf"] = mass.to_string();
        r["cdf"] = running.to_string();
        if (c.with_float) {
            r["pmf_decimal"] = mass.to_double();
            r["cdf_decimal"] = running.to_double();
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_sample(const DistFlags& f, std::ostream& out) {
    const PoissonParams p = params_from(f);
    if (f.count == 0) throw UsageError("--count must be positive");
    const SampleBatch batch = sample(p, f.seed, f.count, f.truncated);
    std::string body;
    body.reserve(batch.draws.size() * 3);
    for (const auto d : batch.draws) {
        body += std::to_string(d);
        body += '\n';
    }
    out << body;
    json footer;
    footer["seed"] = batch.seed;
    footer["count"] = batch.count;
    footer["params"] = params_json(p, f.truncated);
    out << footer.dump() << "\n";
    return kExitOk;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
    if (f.lambda.has_value() != f.alpha.has_value()) throw UsageError("--lambda and --alpha go together");
    const std::string suite = f.suite ? *f.suite : (f.lambda ? "point" : "exact-default");
    const TruncationBudget budget = make_budget(f.max_terms, f.tail_bound);

    SuiteReport report;
    if (suite == "exact-default") {
        if (f.lambda) throw UsageError("--suite exact-default uses a fixed grid; drop --lambda/--alpha");
        report = run_suite(suite, default_exact_grid(), f.n_max.value_or(8), budget, f.seed);
    } else {
        if (!f.lambda) throw UsageError("--suite " + suite + " requires --lambda and --alpha");
        const GridPoint point{Rational::parse(*f.lambda), Rational::parse(*f.alpha)};
        classify_params(DegenParam(point.lambda), point.alpha);  // regime errors exit 2 before any work
        if (suite == "point") {
            report = run_suite(suite, {point}, f.n_max.value_or(8), budget, f.seed);
        } else {
            if (f.count < 2) throw UsageError("--count must be at least 2 for Monte Carlo checks");
            report = run_mc_suite(point, f.seed, f.count, f.n_max.value_or(3), f.sigmas, budget);
        }
    }
    out << to_json(report).dump(2) << "\n";
    if (report.failed() > 0) {
        err << "verification failed: " << report.failed() << " of " << report.checks.size() << " checks\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degenerate Poisson special functions and moment-identity verification", "dpois"};
    app.require_subcommand(1);

    Common common;
    TableFlags table;
    PolyFlags poly;
    DistFlags dist;
    VerifyFlags verify;

    auto* t = app.add_subcommand("table", "Emit a Stirling or Lah triangle");
    t->add_option("--kind", table.kind, "Triangle kind")
        ->required()
        ->check(CLI::IsMember({"stirling1-deg", "stirling2-deg", "stirling1", "stirling1-unsigned", "lah"}));
    t->add_option("--lambda", table.lambda, "Degeneracy parameter as p/q");
    t->add_option("--n-max", table.n_max, "Last row")->required();
    add_common(t, common, true);

    auto* p = app.add_subcommand("poly", "Evaluate a Bell-family polynomial");
    p->add_option("--family", poly.family, "Polynomial family")
        ->required()
        ->check(CLI::IsMember(
            {"bell-deg", "fully-degen-bell", "dimorphic-bell", "lah-bell", "lah-bell-deg", "lah-bell-zt"}));
    p->add_option("--lambda", poly.lambda, "Degeneracy parameter as p/q");
    p->add_option("--x", poly.x, "Argument as p/q")->required();
    p->add_option("--n", poly.n, "Single index");
    p->add_option("--n-max", poly.n_max, "Emit rows 0..n-max");
    p->add_option("--max-terms", poly.max_terms, "Term budget for certified tails");
    p->add_option("--tail-bound", poly.tail_bound, "Tail bound target as p/q");
    add_common(p, common, true);

    auto* m = app.add_subcommand("pmf", "Tabulate the pmf and cdf");
    m->add_option("--lambda", dist.lambda, "Degeneracy parameter as p/q")->required();
    m->add_option("--alpha", dist.alpha, "Rate parameter as p/q")->required();
    m->add_option("--upto", dist.upto, "Last index")->required();
    m->add_flag("--truncated", dist.truncated, "Use the zero-truncated law");
    add_common(m, common, true);

    auto* s = app.add_subcommand("sample", "Draw deterministic inverse-CDF samples");
    s->add_option("--lambda", dist.lambda, "Degeneracy parameter as p/q")->required();
    s->add_option("--alpha", dist.alpha, "Rate parameter as p/q")->required();
    s->add_option("--count", dist.count, "Number of draws")->required();
    s->add_option("--seed", dist.seed, "Generator seed");
    s->add_flag("--truncated", dist.truncated, "Use the zero-truncated law");
    add_common(s, common, false);

    auto* v = app.add_subcommand("verify", "Run the identity verification suite");
    v->add_option("--suite", verify.suite, "Suite name")->check(CLI::IsMember({"exact-default", "point", "mc"}));
    v->add_option("--lambda", verify.lambda, "Degeneracy parameter as p/q");
    v->add_option("--alpha", verify.alpha, "Rate parameter as p/q");
    v->add_option("--n-max", verify.n_max, "Largest moment order");
    v->add_option("--seed", verify.seed, "Suite seed");
    v->add_option("--count", verify.count, "Monte Carlo draws per check");
    v->add_option("--sigmas", verify.sigmas, "Monte Carlo band half-width in standard errors");
    v->add_option("--max-terms", verify.max_terms, "Term budget for certified tails");
    v->add_option("--tail-bound", verify.tail_bound, "Tail bound target as p/q");
    add_common(v, common, false);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ofstream file;
    if (!common.output.empty()) {
        file.open(common.output);
        if (!file) {
            err << "error: cannot open " << common.output << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = common.output.empty() ? out : file;

    try {
        if (t->parsed()) return cmd_table(table, common, sink);
        if (p->parsed()) return cmd_poly(poly, common, sink);
        if (m->parsed()) return cmd_pmf(dist, common, sink);
        if (s->parsed()) return cmd_sample(dist, sink);
        return cmd_verify(verify, sink, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace dpois::cli
