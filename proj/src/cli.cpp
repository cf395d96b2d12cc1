#include <edl/cli.hpp>

#include <edl/canonical.hpp>
#include <edl/families.hpp>
#include <edl/io.hpp>
#include <edl/metrics.hpp>
#include <edl/search.hpp>
#include <edl/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

namespace edl {

namespace {

GraphFormat format_for_path(const std::string & path, const std::string & explicit_format)
{
    if (! explicit_format.empty())
        return parse_graph_format(explicit_format);
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".json")
        return GraphFormat::json;
    if (ext == ".dot")
        return GraphFormat::dot;
    return GraphFormat::adm;
}

DenseDigraph load(const std::string & path, const std::string & explicit_format)
{
    const auto f = format_for_path(path, explicit_format);
    if (f == GraphFormat::dot)
        throw DomainError("dot is an export-only format");
    try {
        return parse(read_file(path), f);
    } catch (const ParseError & e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
}

void print_json(std::ostream & out, const Json & j) { out << j.dump(2) << '\n'; }

Json partition_json(const VertexPartition & p)
{
    Json j = Json::array();
    for (int v = 0; v < p.order(); ++v)
        j.push_back(p.class_of(v));
    return j;
}

std::pair<int, int> parse_pair(const std::string & text)
{
    const auto comma = text.find_first_of(",+x");
    if (comma == std::string::npos)
        throw DomainError("expected two class sizes such as 3,3, got '" + text + "'");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

struct ConstructOpts {
    std::string family;
    FamilySpec spec;
    std::string format = "json";
};

struct MetricsOpts {
    std::string input;
    std::string from;
    bool degree_bound = false;
};

struct FormulaOpts {
    std::string bound;
    int n = 0;
    int r = 0;
    int rad2 = 0;
};

struct SearchOpts {
    int n = 0;
    bool strong = false;
    std::string bipartite;
    std::optional<int> rad_out;
    std::optional<int> rad2;
    std::optional<int> diameter;
    std::string objective = "max_size";
    std::string mode = "backtracking";
    int threads = 1;
    std::string checkpoint;
    bool no_timing = false;
};

struct VerifyOpts {
    std::string check;
    std::string depth = "family_crosscheck";
    std::optional<int> n;
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::optional<int> r;
    std::optional<int> r_min;
    std::optional<int> r_max;
    int threads = 1;
    bool extended = false;
    bool list = false;
    std::string reports_dir = "reports";
    std::string format = "json";
    bool no_timing = false;
};

struct IsoOpts {
    std::vector<std::string> inputs;
    std::string from;
};

struct ConvertOpts {
    std::string input;
    std::string from;
    std::string to = "json";
    std::string output;
};

int cmd_construct(const ConstructOpts & o, std::ostream & out)
{
    FamilySpec spec = o.spec;
    spec.kind = parse_family_name(o.family);
    const auto built = build(spec);
    const auto format = parse_graph_format(o.format);
    if (format != GraphFormat::json) {
        out << serialize(built.digraph, format);
        return kExitOk;
    }
    Json j = to_json(built.digraph);
    j["family"] = to_json(spec);
    j["extremal_profile"] = built.extremal_profile;
    if (built.partition)
        j["partition"] = partition_json(*built.partition);
    print_json(out, j);
    return kExitOk;
}

int cmd_metrics(const MetricsOpts & o, std::ostream & out)
{
    const auto d = load(o.input, o.from);
    Json j = to_json(metric_summary(d));
    if (o.degree_bound) {
        const int r = outradius(d);
        if (r == kUnreachable)
            throw DomainError("degree bound needs a finite outradius");
        j["degree_bound"] = to_json(check_outradius_degree_bound(d, r));
    }
    print_json(out, j);
    return kExitOk;
}

int cmd_formula(const FormulaOpts & o, std::ostream & out)
{
    const auto name = parse_bound_name(o.bound);
    const auto value = closed_form(name, BoundParams{o.n, o.r, o.rad2});
    Json j;
    j["bound"] = bound_name(name);
    j["n"] = o.n;
    if (name == BoundName::gamma_2r1)
        j["rad2"] = o.rad2 > 0 ? o.rad2 : 2 * o.r;
    else
        j["r"] = o.r;
    j["value"] = value;
    print_json(out, j);
    return kExitOk;
}

int cmd_search(const SearchOpts & o, std::ostream & out)
{
    SearchTask task;
    task.n = o.n;
    task.constraints.strong = o.strong;
    if (! o.bipartite.empty())
        task.constraints.bipartite = parse_pair(o.bipartite);
    task.constraints.rad_out_eq = o.rad_out;
    task.constraints.rad2_eq = o.rad2;
    task.constraints.diameter_eq = o.diameter;
    task.objective = parse_objective(o.objective);
    task.mode = parse_mode(o.mode);
    task.threads = o.threads;
    if (! o.checkpoint.empty())
        task.checkpoint_path = o.checkpoint;
    print_json(out, to_json(enumerate(task), ! o.no_timing));
    return kExitOk;
}

int cmd_verify(const VerifyOpts & o, std::ostream & out, std::ostream & err)
{
    if (o.list) {
        Json j = Json::array();
        for (const auto & info : list_checks())
            j.push_back(to_json(info));
        print_json(out, j);
        return kExitOk;
    }
    if (o.check.empty())
        throw DomainError("verify needs --check ID (or --list)");
    const auto depth = parse_depth(o.depth);
    std::vector<CheckId> ids;
    if (o.check == "all") {
        for (const auto & info : list_checks())
            for (const auto & s : info.depths)
                if (s.depth == depth && ! s.extended)
                    ids.push_back(info.id);
    } else {
        ids.push_back(parse_check_name(o.check));
    }
    const bool ranged = o.n || o.n_min || o.n_max || o.r || o.r_min || o.r_max;
    if (ranged && ids.size() > 1)
        throw DomainError("parameter ranges need a single --check");

    std::vector<VerificationReport> reports;
    for (auto id : ids) {
        TheoremCheck check;
        check.id = id;
        check.depth = depth;
        check.threads = o.threads;
        check.allow_extended = o.extended;
        if (ranged) {
            const auto & info = check_info(id);
            const auto it = std::find_if(info.depths.begin(), info.depths.end(),
                                         [&](const DepthSupport & s) { return s.depth == depth; });
            if (it == info.depths.end())
                throw DomainError(info.name + " does not support depth " + depth_name(depth));
            ParamRange p = it->range;
            if (o.n)
                p.n_min = p.n_max = *o.n;
            if (o.r)
                p.r_min = p.r_max = *o.r;
            p.n_min = o.n_min.value_or(p.n_min);
            p.n_max = o.n_max.value_or(p.n_max);
            p.r_min = o.r_min.value_or(p.r_min);
            p.r_max = o.r_max.value_or(p.r_max);
            check.params = p;
        }
        reports.push_back(verify_theorem(check));
    }

    if (! o.reports_dir.empty()) {
        std::filesystem::create_directories(o.reports_dir);
        for (const auto & rep : reports)
            write_file((std::filesystem::path(o.reports_dir) / report_file_name(rep)).string(),
                       to_json(rep, ! o.no_timing).dump(2) + "\n");
        write_file((std::filesystem::path(o.reports_dir) / "summary.md").string(), summary_markdown(reports));
    }
    if (o.format == "md") {
        out << summary_markdown(reports);
    } else if (reports.size() == 1) {
        print_json(out, to_json(reports.front(), ! o.no_timing));
    } else {
        Json j = Json::array();
        for (const auto & rep : reports)
            j.push_back(to_json(rep, ! o.no_timing));
        print_json(out, j);
    }
    bool refuted = false;
    for (const auto & rep : reports) {
        if (rep.verdict != Verdict::refuted)
            continue;
        refuted = true;
        err << check_name(rep.id) << ": REFUTED: " << rep.detail << '\n';
    }
    return refuted ? kExitRefuted : kExitOk;
}

int cmd_iso_classify(const IsoOpts & o, std::ostream & out)
{
    std::vector<DenseDigraph> ds;
    for (const auto & path : o.inputs)
        ds.push_back(load(path, o.from));
    Json j = Json::array();
    for (const auto & cls : classify_isomorphism(ds)) {
        Json members = Json::array();
        for (int m : cls.members)
            members.push_back(o.inputs[static_cast<std::size_t>(m)]);
        j.push_back({{"canonical", adjacency_string(cls.representative)},
                     {"n", cls.representative.order()},
                     {"arcs", cls.representative.arc_count()},
                     {"members", members}});
    }
    print_json(out, j);
    return kExitOk;
}

int cmd_convert(const ConvertOpts & o, std::ostream & out)
{
    const auto d = load(o.input, o.from);
    const auto text = serialize(d, parse_graph_format(o.to));
    if (o.output.empty())
        out << text;
    else
        write_file(o.output, text);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Extremal digraph laboratory: size bounds under radius constraints", "edl"};
    app.require_subcommand(1);

    ConstructOpts construct;
    auto * c_construct = app.add_subcommand("construct", "Build a family member");
    c_construct->add_option("--family", construct.family, "Family name, e.g. d-nrs")->required();
    c_construct->add_option("--n", construct.spec.n, "Order");
    c_construct->add_option("--r,--d", construct.spec.r, "Radius parameter (d for the gamma-bar kinds)");
    c_construct->add_option("--s", construct.spec.s, "Blow-up size");
    c_construct->add_option("--i", construct.spec.i, "Blow-up position");
    c_construct->add_option("--a", construct.spec.a, "Stable blow-up a");
    c_construct->add_option("--b", construct.spec.b, "Stable blow-up b");
    c_construct->add_option("--c", construct.spec.c, "Stable blow-up c");
    c_construct->add_option("--j", construct.spec.j, "First blown-up position");
    c_construct->add_option("--format", construct.format, "adm, json or dot")->check(CLI::IsMember({"adm", "json", "dot"}));

    MetricsOpts metrics;
    auto * c_metrics = app.add_subcommand("metrics", "Distance metrics of a digraph file");
    c_metrics->add_option("input", metrics.input, "Digraph file (.adm or .json)")->required();
    c_metrics->add_option("--from", metrics.from, "Input format override")->check(CLI::IsMember({"adm", "json"}));
    c_metrics->add_flag("--degree-bound", metrics.degree_bound, "Add the outradius total-degree check");

    FormulaOpts formula;
    auto * c_formula = app.add_subcommand("formula", "Evaluate a closed-form size bound");
    c_formula->add_option("--bound", formula.bound, "Bound name, e.g. VIZING_F")->required();
    c_formula->add_option("--n", formula.n, "Order");
    c_formula->add_option("--r", formula.r, "Radius or outradius");
    c_formula->add_option("--rad2", formula.rad2, "Doubled radius (GAMMA_2R1)");

    SearchOpts search;
    auto * c_search = app.add_subcommand("search", "Exhaustive extremal search");
    c_search->add_option("--n", search.n, "Order")->required();
    c_search->add_flag("--strong", search.strong, "Require strong connectivity");
    c_search->add_option("--bipartite", search.bipartite, "Fixed class sizes, e.g. 3,3");
    c_search->add_option("--rad-out", search.rad_out, "Required outradius");
    c_search->add_option("--rad2", search.rad2, "Required doubled radius");
    c_search->add_option("--diameter", search.diameter, "Required diameter");
    c_search->add_option("--objective", search.objective, "max_size, min_wiener or count_extremal");
    c_search->add_option("--mode", search.mode, "full, row_capped or backtracking");
    c_search->add_option("--threads", search.threads, "Worker count")->check(CLI::PositiveNumber);
    c_search->add_option("--checkpoint", search.checkpoint, "Checkpoint file");
    c_search->add_flag("--no-timing", search.no_timing, "Omit wall_time_ms");

    VerifyOpts verify;
    auto * c_verify = app.add_subcommand("verify", "Run a registered theorem check");
    c_verify->add_option("--check", verify.check, "Check id or 'all'");
    c_verify->add_option("--depth", verify.depth, "formula_only, family_crosscheck or exhaustive");
    c_verify->add_option("--n", verify.n, "Single order");
    c_verify->add_option("--n-min", verify.n_min, "Smallest order");
    c_verify->add_option("--n-max", verify.n_max, "Largest order");
    c_verify->add_option("--r", verify.r, "Single radius parameter");
    c_verify->add_option("--r-min", verify.r_min, "Smallest radius parameter");
    c_verify->add_option("--r-max", verify.r_max, "Largest radius parameter");
    c_verify->add_option("--threads", verify.threads, "Worker count")->check(CLI::PositiveNumber);
    c_verify->add_flag("--extended", verify.extended, "Allow hour-scale checks");
    c_verify->add_flag("--list", verify.list, "List registered checks");
    c_verify->add_option("--reports-dir", verify.reports_dir, "Report directory ('' disables)");
    c_verify->add_option("--format", verify.format, "json or md")->check(CLI::IsMember({"json", "md"}));
    c_verify->add_flag("--no-timing", verify.no_timing, "Omit runtime_ms");

    IsoOpts iso;
    auto * c_iso = app.add_subcommand("iso-classify", "Group digraph files into isomorphism classes");
    c_iso->add_option("inputs", iso.inputs, "Digraph files")->required();
    c_iso->add_option("--from", iso.from, "Input format override")->check(CLI::IsMember({"adm", "json"}));

    ConvertOpts convert;
    auto * c_convert = app.add_subcommand("convert", "Convert between adm, json and dot");
    c_convert->add_option("input", convert.input, "Digraph file")->required();
    c_convert->add_option("--from", convert.from, "Input format override")->check(CLI::IsMember({"adm", "json"}));
    c_convert->add_option("--to", convert.to, "adm, json or dot")->check(CLI::IsMember({"adm", "json", "dot"}));
    c_convert->add_option("--output,-o", convert.output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (! reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*c_construct)
            return cmd_construct(construct, out);
        if (*c_metrics)
            return cmd_metrics(metrics, out);
        if (*c_formula)
            return cmd_formula(formula, out);
        if (*c_search)
            return cmd_search(search, out);
        if (*c_verify)
            return cmd_verify(verify, out, err);
        if (*c_iso)
            return cmd_iso_classify(iso, out);
        if (*c_convert)
            return cmd_convert(convert, out);
    } catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

} // namespace edl
