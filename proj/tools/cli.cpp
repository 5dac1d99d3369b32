#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pfrob/pfrob.hpp"

namespace pfrob::cli {

using nlohmann::json;

namespace {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const Point& p) { return json(p.values()); }
json to_json(const ExpVec& e) { return json(e.values()); }

json to_json(const FrobeniusResult& r) { return r.is_infinite() ? json("infinite") : to_json(r.value()); }

json to_json(const Binomial& b) {
    return json{{"lead", to_json(b.lead)}, {"trail", to_json(b.trail)}, {"binomial", binomial_text(b)}};
}

struct Output {
    json result;
    json meta = json::object();
    std::string text;
};

struct CommonOptions {
    std::string input;
    std::string inline_semigroup;
    std::string order;
    std::string format = "json";
    double budget_seconds = 60.0;
};

struct Context {
    LoadedSemigroup loaded;
    OrderSpec order;
    OracleBudget budget;
};

Status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::Validation: return Status::Validation;
    case ErrorCode::Unsupported: return Status::Unsupported;
    case ErrorCode::Overflow: return Status::Overflow;
    case ErrorCode::OracleBudget: return Status::OracleBudget;
    }
    return Status::Validation;
}

Context load_context(const CommonOptions& opts) {
    json doc;
    if (!opts.inline_semigroup.empty() && !opts.input.empty())
        throw CLI::ValidationError("--input and --semigroup are mutually exclusive");
    if (!opts.inline_semigroup.empty()) {
        doc = json::parse(opts.inline_semigroup, nullptr, false);
    } else if (!opts.input.empty()) {
        std::ifstream in(opts.input);
        if (!in) fail(ErrorCode::Validation, "cannot open input file '" + opts.input + "'");
        doc = json::parse(in, nullptr, false);
    } else {
        throw CLI::ValidationError("a semigroup is required: pass --input PATH or --semigroup JSON");
    }
    if (doc.is_discarded()) throw ParseError("input is not valid JSON");

    Context ctx{semigroup_from_json(doc), OrderSpec(), OracleBudget{}};
    ctx.order = opts.order.empty() ? ctx.loaded.order : OrderSpec::parse(opts.order);
    require(opts.budget_seconds > 0, "--budget must be positive");
    ctx.budget.wall = std::chrono::milliseconds(static_cast<long long>(opts.budget_seconds * 1000.0));
    return ctx;
}

json sorted_factorizations(const FactorizationSet& z, const OrderSpec& order) {
    std::vector<ExpVec> facts = z.factorizations();
    std::sort(facts.begin(), facts.end(), [&](const ExpVec& a, const ExpVec& b) { return order.greater(a, b); });
    json out = json::array();
    for (const ExpVec& f : facts) out.push_back(to_json(f));
    return out;
}

void add_run_meta(json& meta, const FpRun& run) {
    if (run.lambda) meta["lambda"] = to_json(*run.lambda);
    if (run.basis_size) meta["basis_size"] = run.basis_size;
    if (run.candidate_count) meta["candidates"] = run.candidate_count;
    if (run.scanned) meta["scanned"] = run.scanned;
    if (run.omega_size) meta["omega"] = *run.omega_size;
    if (run.complement_size) meta["complement"] = *run.complement_size;
    if (run.indispensable_count) meta["indispensable"] = *run.indispensable_count;
}

std::string text_of_run(const std::string& label, const FpRun& run) {
    std::ostringstream os;
    os << label << " = " << run.result.to_string() << '\n';
    if (run.lambda) os << "Lambda = " << to_string(*run.lambda) << '\n';
    if (run.candidate_count) os << "candidates = " << run.candidate_count << '\n';
    if (run.omega_size) os << "|Omega| = " << *run.omega_size << '\n';
    if (run.complement_size) os << "|complement| = " << *run.complement_size << '\n';
    if (run.indispensable_count) os << "indispensable binomials = " << *run.indispensable_count << '\n';
    return os.str();
}

Output cmd_check_finite(const Context& ctx) {
    const Semigroup& s = ctx.loaded.semigroup;
    Output out;
    const bool finite = is_fp_finite(s);
    out.result = finite;
    json rays = json::array();
    std::ostringstream text;
    text << "F_p finite: " << (finite ? "yes" : "no") << '\n';
    for (const RayDirection& ray : extremal_ray_directions(s)) {
        const auto on_ray = std::count_if(s.generators().begin(), s.generators().end(),
                                          [&](const Point& g) { return RayDirection(g) == ray; });
        rays.push_back(json{{"direction", to_json(ray.point())}, {"generators", on_ray}});
        text << "extremal ray " << to_string(ray.point()) << ": " << on_ray << " generator(s)\n";
    }
    out.meta["extremal_rays"] = rays;
    out.text = text.str();
    return out;
}

Output cmd_groebner(const Context& ctx) {
    const GroebnerBasis basis = reduced_groebner_basis(ctx.loaded.semigroup, ctx.order);
    Output out;
    out.result = json::array();
    std::ostringstream text;
    for (const Binomial& b : basis) {
        out.result.push_back(to_json(b));
        text << binomial_text(b) << "    " << to_string(b.lead) << " " << to_string(b.trail) << '\n';
    }
    out.meta["size"] = basis.size();
    out.meta["order"] = std::string(ctx.order.name());
    if (is_fp_finite(ctx.loaded.semigroup))
        out.meta["lambda"] = to_json(lambda_bounds(ctx.loaded.semigroup, basis).lambda);
    out.text = text.str();
    return out;
}

Output cmd_factorize(const Context& ctx, const std::string& element) {
    const Point n = parse_element(element);
    const FactorizationSet z = factorizations(ctx.loaded.semigroup, n);
    Output out;
    out.result = sorted_factorizations(z, ctx.order);
    out.meta["element"] = to_json(n);
    out.meta["count"] = z.size();
    std::ostringstream text;
    text << "#Z" << to_string(n) << " = " << z.size() << '\n';
    for (const auto& f : out.result) text << to_string(ExpVec(f.get<std::vector<Int>>())) << '\n';
    out.text = text.str();
    return out;
}

Output cmd_fp(const Context& ctx, std::optional<Int> p_opt, const std::string& algorithm, bool verify) {
    const Semigroup& s = ctx.loaded.semigroup;
    FpRun run;
    Int p = p_opt.value_or(algorithm == "f2" ? 2 : 1);
    if (algorithm == "general") {
        run = run_fp_general(s, p, ctx.order);
    } else if (algorithm == "normalform" || algorithm == "staircase") {
        require(p == 1, "--algorithm " + algorithm + " computes F_1 only");
        run = algorithm == "normalform" ? run_f1_normalform(s, ctx.order) : run_f1_staircase(s, ctx.order);
    } else if (algorithm == "f2") {
        require(p == 2, "--algorithm f2 computes F_2 only");
        run = run_f2_improved(s, ctx.order);
    } else {
        throw CLI::ValidationError("unknown algorithm '" + algorithm + "'");
    }
    Output out;
    out.result = to_json(run.result);
    out.meta["p"] = p;
    out.meta["algorithm"] = algorithm;
    out.meta["order"] = std::string(ctx.order.name());
    add_run_meta(out.meta, run);
    out.text = text_of_run("F_" + std::to_string(p), run);
    if (verify && (p == 0 || run.result.is_finite())) {
        const OracleReport report = oracle_fp(s, p, ctx.order, ctx.budget);
        out.meta["oracle"] = json{{"result", to_json(report.result)}, {"agrees", report.result == run.result}};
        out.text += "oracle = " + report.result.to_string() + (report.result == run.result ? " (agrees)\n" : " (DISAGREES)\n");
    }
    return out;
}

Output cmd_indispensable(const Context& ctx) {
    const std::vector<Binomial> found = indispensable_binomials(ctx.loaded.semigroup, ctx.order);
    Output out;
    out.result = json::array();
    std::ostringstream text;
    for (const Binomial& b : found) {
        out.result.push_back(to_json(b));
        text << binomial_text(b) << "    degree " << to_string(s_degree(ctx.loaded.semigroup, b.lead)) << '\n';
    }
    out.meta["count"] = found.size();
    out.meta["order"] = std::string(ctx.order.name());
    out.text = text.str();
    return out;
}

Output cmd_nabla(const Context& ctx, const std::string& element) {
    const Point m = parse_element(element);
    const auto components = nabla_components(ctx.loaded.semigroup, m);
    Output out;
    out.result = json::array();
    std::ostringstream text;
    for (const auto& component : components) {
        json c = json::array();
        text << "{";
        for (std::size_t i = 0; i < component.size(); ++i) {
            c.push_back(to_json(component[i]));
            text << (i ? ", " : "") << to_string(component[i]);
        }
        text << "}\n";
        out.result.push_back(c);
    }
    out.meta["element"] = to_json(m);
    out.meta["components"] = components.size();
    out.meta["connected"] = components.size() <= 1;
    out.text = text.str();
    return out;
}

Output cmd_glue(const Context& ctx, Int d, const std::string& gamma, Int p, bool verify) {
    const Semigroup& s = ctx.loaded.semigroup;
    const GluingSpec spec{d, parse_element(gamma)};
    const Semigroup glued = glue(s, spec);
    const Point bound = fp_glued_bound(s, p, spec, ctx.order);

    Output out;
    out.result = json{{"semigroup", semigroup_to_json(glued, ctx.order)}, {"bound", to_json(bound)}};
    std::ostringstream text;
    text << "S' generators:";
    for (const Point& g : glued.generators()) text << ' ' << to_string(g);
    text << "\nbound d*F_" << p << "(S) + (d-1)*gamma = " << to_string(bound) << '\n';
    if (p >= 1) {
        const GluingVerdict verdict = gluing_equality(s, p, spec, ctx.order);
        out.result["equality"] = std::string(verdict_name(verdict));
        text << "equality: " << verdict_name(verdict) << '\n';
    } else {
        out.result["equality"] = "not_applicable";
    }
    out.meta["d"] = d;
    out.meta["gamma"] = to_json(spec.gamma);
    out.meta["p"] = p;
    if (verify) {
        const OracleReport report = oracle_fp(glued, p, ctx.order, ctx.budget);
        const Point& value = report.result.value();
        out.meta["oracle"] = json{{"result", to_json(value)},
                                  {"bound_holds", !ctx.order.greater(value, bound)},
                                  {"equals_bound", value == bound}};
        text << "oracle F_" << p << "(S') = " << to_string(value) << '\n';
    }
    out.text = text.str();
    return out;
}

Output cmd_oracle(const Context& ctx, std::optional<Int> p, const std::string& element, std::optional<Int> degree_bound) {
    const Semigroup& s = ctx.loaded.semigroup;
    const int chosen = (p ? 1 : 0) + (element.empty() ? 0 : 1) + (degree_bound ? 1 : 0);
    if (chosen != 1) throw CLI::ValidationError("oracle needs exactly one of --p, --element, --degree-bound");
    Output out;
    std::ostringstream text;
    if (p) {
        const OracleReport report = oracle_fp(s, *p, ctx.order, ctx.budget);
        out.result = to_json(report.result);
        out.meta["p"] = *p;
        out.meta["order"] = std::string(ctx.order.name());
        if (report.lambda) out.meta["lambda"] = to_json(*report.lambda);
        out.meta["scanned_bound"] = report.scanned_bound;
        out.meta["grid_extent"] = to_json(report.grid_extent);
        out.meta["cells"] = report.cells;
        out.meta["certificate"] = report.certificate;
        text << "F_" << *p << " = " << report.result.to_string() << '\n' << report.certificate << '\n';
    } else if (!element.empty()) {
        const Point n = parse_element(element);
        const Int count = oracle_count(s, n, ctx.budget);
        out.result = count;
        out.meta["element"] = to_json(n);
        text << "#Z" << to_string(n) << " = " << count << '\n';
    } else {
        const auto counts = oracle_counts_up_to(s, *degree_bound, ctx.budget);
        out.result = json::array();
        for (const auto& [n, count] : counts) {
            out.result.push_back(json{to_json(n), count});
            text << to_string(n) << ' ' << count << '\n';
        }
        out.meta["degree_bound"] = *degree_bound;
    }
    out.text = text.str();
    return out;
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--input", opts.input, "Semigroup JSON file");
    cmd->add_option("--semigroup", opts.inline_semigroup, "Semigroup JSON given inline");
    cmd->add_option("--order", opts.order, "Monomial order: grlex or grevlex (overrides the input)");
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--budget", opts.budget_seconds, "Oracle wall-clock budget in seconds");
}

void emit_error(std::ostream& out, std::ostream& err, const CommonOptions& opts, std::string_view code,
                const std::string& message) {
    err << "error [" << code << "]: " << message << '\n';
    if (opts.format == "json") out << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

} // namespace

LoadedSemigroup semigroup_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("semigroup JSON must be an object");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw ParseError("semigroup JSON needs a \"generators\" array");
    std::vector<Point> gens;
    for (const json& g : j["generators"]) {
        if (!g.is_array()) throw ParseError("each generator must be an array of integers");
        std::vector<Int> coords;
        for (const json& x : g) {
            if (!x.is_number_integer()) throw ParseError("generator coordinates must be integers");
            coords.push_back(x.get<Int>());
        }
        gens.emplace_back(std::move(coords));
    }
    require(!gens.empty(), "a semigroup needs at least one generator");
    if (j.contains("q")) {
        if (!j["q"].is_number_integer()) throw ParseError("\"q\" must be an integer");
        const auto q = j["q"].get<Int>();
        for (const Point& g : gens)
            require(static_cast<Int>(g.size()) == q, "generator " + to_string(g) + " does not have dimension q = " + std::to_string(q));
    }
    OrderSpec order;
    if (j.contains("order")) {
        const json& o = j["order"];
        if (!o.is_object() || !o.contains("kind") || !o["kind"].is_string())
            throw ParseError("\"order\" must be an object with a string \"kind\"");
        order = OrderSpec::parse(o["kind"].get<std::string>());
    }
    const std::size_t given = gens.size();
    Semigroup s = minimalize_generators(std::move(gens));
    std::vector<std::string> warnings;
    if (s.size() != given)
        warnings.push_back("input generators were not minimal; kept " + std::to_string(s.size()) + " of " +
                           std::to_string(given));
    return LoadedSemigroup{std::move(s), order, std::move(warnings)};
}

json semigroup_to_json(const Semigroup& s, OrderSpec order) {
    json gens = json::array();
    for (const Point& g : s.generators()) gens.push_back(to_json(g));
    return json{{"q", s.dim()}, {"generators", gens}, {"order", {{"kind", std::string(order.name())}}}};
}

Point parse_element(std::string_view csv) {
    std::vector<Int> coords;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        std::string_view field = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        Int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            fail(ErrorCode::Validation, "malformed element '" + std::string(csv) + "': expected comma-separated integers");
        coords.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Point(std::move(coords));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-Frobenius vectors of affine semigroups", "pfrob"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::optional<Int> p;
    Int glue_p = 1;
    std::string algorithm = "general";
    std::string element;
    std::optional<Int> degree_bound;
    Int d = 2;
    std::string gamma;
    bool verify = false;

    auto* check = app.add_subcommand("check-finite", "Decide whether F_p(S) is finite");
    auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis of the semigroup ideal");
    auto* factorize = app.add_subcommand("factorize", "Enumerate the factorizations of an element");
    auto* fp = app.add_subcommand("fp", "Compute the p-Frobenius vector");
    auto* indisp = app.add_subcommand("indispensable", "Indispensable binomials of the semigroup ideal");
    auto* nabla = app.add_subcommand("nabla", "Connected components of the factorization complex");
    auto* gl = app.add_subcommand("glue", "Glue S with N^q and bound F_p of the result");
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference values");
    for (CLI::App* cmd : {check, groebner, factorize, fp, indisp, nabla, gl, oracle}) add_common(cmd, opts);

    factorize->add_option("--element", element, "Element as comma-separated integers")->required();
    nabla->add_option("--element", element, "Element as comma-separated integers")->required();
    fp->add_option("--p", p, "p >= 0 (default 1, or 2 for --algorithm f2)");
    fp->add_option("--algorithm", algorithm, "Algorithm")
        ->check(CLI::IsMember({"general", "normalform", "staircase", "f2"}));
    fp->add_flag("--verify", verify, "Cross-check against the brute-force oracle");
    gl->add_option("--d", d, "Multiplier d >= 2")->required();
    gl->add_option("--gamma", gamma, "Gluing element as comma-separated integers")->required();
    gl->add_option("--p", glue_p, "p >= 0 (p = 0 needs q = 1)");
    gl->add_flag("--verify", verify, "Compute F_p(S') with the oracle");
    oracle->add_option("--p", p, "Compute F_p by brute force");
    oracle->add_option("--element", element, "Count the factorizations of one element");
    oracle->add_option("--degree-bound", degree_bound, "Count every element up to this total degree");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return static_cast<int>(Status::Ok);
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return static_cast<int>(Status::Ok);
    } catch (const CLI::ParseError& e) {
        emit_error(out, err, opts, "USAGE", e.what());
        return static_cast<int>(Status::Usage);
    }

    try {
        const Context ctx = load_context(opts);
        for (const std::string& w : ctx.loaded.warnings) err << "warning: " << w << '\n';

        Output result;
        if (*check) result = cmd_check_finite(ctx);
        else if (*groebner) result = cmd_groebner(ctx);
        else if (*factorize) result = cmd_factorize(ctx, element);
        else if (*fp) result = cmd_fp(ctx, p, algorithm, verify);
        else if (*indisp) result = cmd_indispensable(ctx);
        else if (*nabla) result = cmd_nabla(ctx, element);
        else if (*gl) result = cmd_glue(ctx, d, gamma, glue_p, verify);
        else result = cmd_oracle(ctx, p, element, degree_bound);

        if (!ctx.loaded.warnings.empty()) result.meta["warnings"] = ctx.loaded.warnings;
        if (opts.format == "text") {
            out << result.text;
        } else {
            out << json{{"result", result.result}, {"meta", result.meta}}.dump() << '\n';
        }
        return static_cast<int>(Status::Ok);
    } catch (const CLI::ParseError& e) {
        emit_error(out, err, opts, "USAGE", e.what());
        return static_cast<int>(Status::Usage);
    } catch (const ParseError& e) {
        emit_error(out, err, opts, "PARSE", e.what());
        return static_cast<int>(Status::Parse);
    } catch (const json::exception& e) {
        emit_error(out, err, opts, "PARSE", e.what());
        return static_cast<int>(Status::Parse);
    } catch (const Error& e) {
        emit_error(out, err, opts, error_code_name(e.code()), e.what());
        return static_cast<int>(status_of(e.code()));
    }
}

} // namespace pfrob::cli
