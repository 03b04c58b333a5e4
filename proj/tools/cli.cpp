#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/combinat/trees.hpp"
#include "treecalc/errors.hpp"
#include "treecalc/fqsym/fqsym.hpp"
#include "treecalc/identities/functional.hpp"
#include "treecalc/identities/hook.hpp"
#include "treecalc/identities/plane.hpp"
#include "treecalc/series/fixed_point.hpp"

namespace treecalc::cli {

namespace {

using nlohmann::json;

OutputFormat parse_format(const std::string &s)
{
    if (s == "json") {
        return OutputFormat::Json;
    }
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    if (s == "text") {
        return OutputFormat::Text;
    }
    throw ParseError("unknown output format '" + s + "'");
}

std::size_t parse_size(const std::string &name, const std::string &value)
{
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError(name + ": expected a nonnegative integer, got '" + value + "'");
    }
    return out;
}

void apply_config_file(CliConfig &cfg, const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read config file " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw ParseError("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("config file " + path + " must hold a JSON object");
    }
    try {
        if (j.contains("max_degree")) {
            cfg.max_degree = j.at("max_degree").get<std::size_t>();
        }
        if (j.contains("truncation_order")) {
            cfg.truncation_order = j.at("truncation_order").get<std::size_t>();
        }
        if (j.contains("output_format")) {
            cfg.output_format = parse_format(j.at("output_format").get<std::string>());
        }
        if (j.contains("unsafe_large")) {
            cfg.unsafe_large = j.at("unsafe_large").get<bool>();
        }
    } catch (const json::exception &e) {
        throw ParseError("config file " + path + ": " + e.what());
    }
}

void apply_env(CliConfig &cfg, const std::map<std::string, std::string> &env)
{
    if (auto it = env.find("TREECALC_MAX_DEGREE"); it != env.end()) {
        cfg.max_degree = parse_size("TREECALC_MAX_DEGREE", it->second);
    }
    if (auto it = env.find("TREECALC_ORDER"); it != env.end()) {
        cfg.truncation_order = parse_size("TREECALC_ORDER", it->second);
    }
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string json_scalar_text(const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string join(const json &array, const std::string &sep)
{
    std::string out;
    for (const auto &v : array) {
        if (!out.empty()) {
            out += sep;
        }
        out += json_scalar_text(v);
    }
    return out;
}

void require_guard(bool exceeded, const CliConfig &cfg, const std::string &what)
{
    if (exceeded && !cfg.unsafe_large) {
        throw SizeGuard(what + " exceeds the configured guard; pass --unsafe-large to override");
    }
}

// ---- hook ------------------------------------------------------------------

struct HookArgs {
    std::string tree;
    std::string statistic = "none";
    bool oracle = false;
    bool dump = false;
};

int cmd_hook(const HookArgs &a, const CliConfig &cfg, std::ostream &out)
{
    const BinaryTree t = BinaryTree::parse(a.tree);
    if (t.empty()) {
        throw ParseError("hook needs a nonempty tree");
    }
    const std::size_t n = t.size();
    const std::string value =
        a.statistic == "none" ? hook_count(t).to_string()
                              : (a.statistic == "imaj" ? qhook_imaj(t) : qhook_inv(t)).to_string();

    json report = {{"tree", t.encode()}, {"statistic", a.statistic}, {"value", value}};
    bool ok = true;
    if (a.oracle) {
        require_guard(n > cfg.max_degree, cfg, "tree size " + std::to_string(n));
        const auto fibers = decreasing_tree_fibers(n, false, cfg.unsafe_large);
        const auto it = fibers.find(t.encode());
        std::string oracle = "0";
        if (it != fibers.end()) {
            const FiberStats &f = it->second;
            oracle = a.statistic == "none" ? std::to_string(f.count)
                                           : (a.statistic == "imaj" ? f.imaj : f.inv).to_string();
        }
        ok = oracle == value;
        report["oracle"] = oracle;
        report["match"] = ok;
    }
    if (a.dump) {
        require_guard(n > cfg.max_degree, cfg, "tree size " + std::to_string(n));
        report["element"] = to_json(tree_term<Rational>(t));
    }

    switch (cfg.output_format) {
    case OutputFormat::Json:
        out << report.dump(2) << "\n";
        break;
    case OutputFormat::Csv:
        out << "tree,statistic,value" << (a.oracle ? ",oracle,match" : "") << "\n";
        out << csv_field(t.encode()) << "," << a.statistic << "," << csv_field(value);
        if (a.oracle) {
            out << "," << csv_field(report["oracle"].get<std::string>()) << "," << (ok ? "true" : "false");
        }
        out << "\n";
        break;
    case OutputFormat::Text:
        out << value << "\n";
        if (a.oracle) {
            out << "oracle: " << report["oracle"].get<std::string>() << (ok ? " (match)" : " (MISMATCH)") << "\n";
        }
        if (a.dump) {
            out << report["element"].dump() << "\n";
        }
        break;
    }
    return ok ? exit_ok : exit_failed;
}

// ---- identity --------------------------------------------------------------

struct IdentityArgs {
    std::string name;
    std::optional<std::size_t> n;
    std::size_t m = 1;
    std::string variant = "las2";
    std::optional<std::size_t> order;
    std::string tree;
    bool per_tree = false;
};

std::size_t require_n(const IdentityArgs &a)
{
    if (!a.n) {
        throw ParseError("identity " + a.name + " needs --n");
    }
    return *a.n;
}

void print_report(const IdentityReport &r, OutputFormat format, std::ostream &out)
{
    switch (format) {
    case OutputFormat::Json:
        out << r.to_json().dump(2) << "\n";
        break;
    case OutputFormat::Csv:
        if (r.per_tree && !r.per_tree->empty()) {
            std::vector<std::string> columns;
            const json &first = r.per_tree->front();
            if (first.contains("tree")) {
                columns.push_back("tree");
            }
            for (const auto &[key, v] : first.items()) {
                if (key != "tree") {
                    columns.push_back(key);
                }
            }
            for (std::size_t i = 0; i < columns.size(); ++i) {
                out << (i ? "," : "") << columns[i];
            }
            out << "\n";
            for (const auto &row : *r.per_tree) {
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    out << (i ? "," : "") << csv_field(json_scalar_text(row.at(columns[i])));
                }
                out << "\n";
            }
        } else {
            out << "identity,lhs,rhs,equal,passed\n";
            out << r.identity << "," << csv_field(r.lhs) << "," << csv_field(r.rhs) << "," << (r.equal ? "true" : "false")
                << "," << (r.passed() ? "true" : "false") << "\n";
        }
        break;
    case OutputFormat::Text:
        out << "identity: " << r.identity << "\n";
        out << "parameters: " << r.parameters.dump() << "\n";
        out << "lhs: " << r.lhs << "\n";
        out << "rhs: " << r.rhs << "\n";
        out << "equal: " << (r.equal ? "true" : "false") << "\n";
        for (const auto &[name, ok] : r.cross_checks) {
            out << "check " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
        }
        if (r.per_tree) {
            for (const auto &row : *r.per_tree) {
                std::string line;
                for (const auto &[key, v] : row.items()) {
                    line += (line.empty() ? "" : "  ") + key + "=" + json_scalar_text(v);
                }
                out << line << "\n";
            }
        }
        out << "elapsed_ms: " << r.elapsed_ms << "\n";
        break;
    }
}

int cmd_identity(const IdentityArgs &a, const CliConfig &cfg, std::ostream &out)
{
    const std::size_t order = a.order.value_or(cfg.truncation_order);
    IdentityReport r;
    if (a.name == "postnikov") {
        r = postnikov_check(require_n(a), cfg.unsafe_large, a.per_tree);
    } else if (a.name == "eisenstein") {
        r = eisenstein_check(order, cfg.unsafe_large);
    } else if (a.name == "duliu") {
        r = duliu_check(parse_duliu_variant(a.variant), require_n(a), a.m, cfg.unsafe_large, a.per_tree);
    } else if (a.name == "lagrange") {
        r = lagrange_fixed_point_check(a.m, order, cfg.unsafe_large);
    } else if (a.name == "ft") {
        if (a.tree.empty()) {
            throw ParseError("identity ft needs --tree");
        }
        r = ft_check(PlaneTree::parse(a.tree), cfg.unsafe_large);
    } else {
        throw ParseError("unknown identity '" + a.name + "'");
    }
    print_report(r, cfg.output_format, out);
    return r.passed() ? exit_ok : exit_failed;
}

// ---- expand ----------------------------------------------------------------

struct ExpandArgs {
    std::string equation;
    std::optional<std::size_t> order;
    std::size_t m = 1;
    bool per_tree = false;
};

constexpr std::size_t expand_binary_guard = 12;
constexpr std::size_t expand_plane_guard = 7;

int emit_expansion(json payload, bool ok, OutputFormat format, std::ostream &out)
{
    payload["agrees"] = ok;
    switch (format) {
    case OutputFormat::Json:
        out << payload.dump(2) << "\n";
        break;
    case OutputFormat::Csv:
        if (payload.contains("terms") && !payload["terms"].empty()) {
            out << "tree,n,coefficient\n";
            for (const auto &t : payload["terms"]) {
                std::size_t n = 0;
                for (const auto &c : t["term"]) {
                    out << csv_field(t["tree"].get<std::string>()) << "," << n++ << "," << csv_field(c.get<std::string>())
                        << "\n";
                }
            }
        } else {
            out << "n,coefficient\n";
            std::size_t n = 0;
            for (const auto &c : payload["sum"]) {
                out << n++ << "," << csv_field(c.get<std::string>()) << "\n";
            }
        }
        break;
    case OutputFormat::Text: {
        // Binomial-basis coefficients contain commas themselves.
        const bool nested = payload["sum"].dump().find("C(t,") != std::string::npos;
        const std::string sep = nested ? "; " : ",";
        out << join(payload["sum"], sep) << "\n";
        if (payload.contains("terms")) {
            for (const auto &t : payload["terms"]) {
                out << t["tree"].get<std::string>() << "  " << join(t["term"], sep) << "\n";
            }
        }
        if (!ok) {
            out << "cross-check FAILED\n";
        }
        break;
    }
    }
    return ok ? exit_ok : exit_failed;
}

template <class Expansion>
json expansion_payload(const std::string &equation, std::size_t order, const Expansion &e, bool per_tree)
{
    json j = expansion_to_json(e);
    if (!per_tree) {
        j.erase("terms");
    }
    j["equation"] = equation;
    j["order"] = order;
    return j;
}

int cmd_expand(const ExpandArgs &a, const CliConfig &cfg, std::ostream &out)
{
    const std::size_t order = a.order.value_or(cfg.truncation_order);
    if (a.equation == "inverse-linear" || a.equation == "postnikov") {
        require_guard(order > expand_binary_guard, cfg, "order " + std::to_string(order));
        const auto op = a.equation == "postnikov" ? postnikov_op() : inverse_linear_op();
        const auto one = RationalSeries::constant(Rational(1), order);
        const auto e = fixed_point_binary(op, one, order, a.per_tree);
        const bool ok = picard_binary(op, one, order) == e.sum();
        return emit_expansion(expansion_payload(a.equation, order, e, a.per_tree), ok, cfg.output_format, out);
    }
    if (a.equation == "duliu") {
        if (a.m == 0) {
            throw ParseError("--m must be at least 1");
        }
        require_guard(order > lagrange_guard || a.m > lagrange_max_m, cfg,
                      "order " + std::to_string(order) + " with m=" + std::to_string(a.m));
        const auto op = duliu_op(a.m);
        const auto one = AlphaSeries::constant(AlphaPoly(1), order);
        const auto e = fixed_point_mary(a.m, op, one, order, a.per_tree);
        const bool ok = picard_mary(a.m, op, one, order) == e.sum();
        json payload = expansion_payload(a.equation, order, e, a.per_tree);
        payload["m"] = a.m;
        return emit_expansion(std::move(payload), ok, cfg.output_format, out);
    }
    if (a.equation == "plane-q") {
        require_guard(order > expand_plane_guard, cfg, "order " + std::to_string(order));
        const auto family = plane_q_family();
        const auto one = PlaneSeries::constant(BinomialPoly<Rational>(1), order);
        const auto e = fixed_point_plane(family, one, order, a.per_tree);
        const bool ok = picard_plane(family, one, order) == e.sum() && plane_q_difference_equation_holds(e.sum());
        return emit_expansion(expansion_payload(a.equation, order, e, a.per_tree), ok, cfg.output_format, out);
    }
    throw ParseError("unknown equation '" + a.equation + "'");
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
    std::string family;
    std::size_t n = 0;
    std::size_t m = 1;
    bool count_only = false;
};

int cmd_enumerate(const EnumerateArgs &a, const CliConfig &cfg, std::ostream &out)
{
    const Family f = parse_family(a.family);
    if (f == Family::MAryTrees && a.m == 0) {
        throw ParseError("--m must be at least 1");
    }
    if (a.count_only) {
        const auto c = count(f, a.n, a.m, cfg.unsafe_large);
        switch (cfg.output_format) {
        case OutputFormat::Json:
            out << json{{"family", a.family}, {"n", a.n}, {"count", c}}.dump(2) << "\n";
            break;
        case OutputFormat::Csv:
            out << "family,n,count\n" << a.family << "," << a.n << "," << c << "\n";
            break;
        case OutputFormat::Text:
            out << c << "\n";
            break;
        }
        return exit_ok;
    }
    if (cfg.output_format == OutputFormat::Json) {
        json objects = json::array();
        enumerate(f, a.n, a.m, cfg.unsafe_large, [&](const std::string &s) { objects.push_back(s); });
        out << json{{"family", a.family}, {"n", a.n}, {"objects", std::move(objects)}}.dump(2) << "\n";
        return exit_ok;
    }
    if (cfg.output_format == OutputFormat::Csv) {
        out << "object\n";
    }
    enumerate(f, a.n, a.m, cfg.unsafe_large, [&](const std::string &s) {
        out << (cfg.output_format == OutputFormat::Csv ? csv_field(s) : s) << "\n";
    });
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const std::map<std::string, std::string> &env)
{
    CLI::App app{"Exact hook-length identities, tree expansions and enumeration", "treecalc"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> format_flag;
    std::optional<std::size_t> max_degree_flag;
    std::optional<std::string> config_path;
    bool unsafe_flag = false;
    app.add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--max-degree", max_degree_flag, "Largest permutation size for oracles and dumps");
    app.add_option("--config", config_path, "JSON config file");
    app.add_flag("--unsafe-large", unsafe_flag, "Override size guards");

    HookArgs hook;
    auto *hook_cmd = app.add_subcommand("hook", "Hook length count or q-hook polynomial of a binary tree");
    hook_cmd->add_option("tree", hook.tree, "Binary tree, e.g. \"((_,_),((_,_),_))\"")->required();
    hook_cmd->add_option("--q", hook.statistic, "Statistic")->check(CLI::IsMember({"imaj", "inv", "none"}));
    hook_cmd->add_flag("--oracle", hook.oracle, "Compare with the brute-force fiber of the decreasing-tree map");
    hook_cmd->add_flag("--dump", hook.dump, "Print B_T(1) in the G basis as JSON");

    IdentityArgs identity;
    auto *identity_cmd = app.add_subcommand("identity", "Verify an identity exactly");
    identity_cmd->add_option("name", identity.name, "Identity")
        ->required()
        ->check(CLI::IsMember({"postnikov", "eisenstein", "duliu", "lagrange", "ft"}));
    identity_cmd->add_option("--n", identity.n, "Number of tree nodes");
    identity_cmd->add_option("--m", identity.m, "Arity parameter (trees are (m+1)-ary)");
    identity_cmd->add_option("--variant", identity.variant, "Du-Liu variant")
        ->check(CLI::IsMember({"las1", "las2", "las3"}));
    identity_cmd->add_option("--order", identity.order, "Truncation order");
    identity_cmd->add_option("--tree", identity.tree, "Plane tree, e.g. \"((**)(**)(***))\"");
    identity_cmd->add_flag("--per-tree", identity.per_tree, "Include the per-tree breakdown");

    ExpandArgs expand;
    auto *expand_cmd = app.add_subcommand("expand", "Tree expansion of a fixed-point equation");
    expand_cmd->add_option("equation", expand.equation, "Equation")
        ->required()
        ->check(CLI::IsMember({"inverse-linear", "postnikov", "duliu", "plane-q"}));
    expand_cmd->add_option("--order", expand.order, "Truncation order");
    expand_cmd->add_option("--m", expand.m, "Arity parameter for duliu");
    expand_cmd->add_flag("--per-tree", expand.per_tree, "Print every tree term");

    EnumerateArgs enumerate_args;
    auto *enumerate_cmd = app.add_subcommand("enumerate", "List or count a combinatorial family");
    enumerate_cmd->add_option("family", enumerate_args.family, "Family")
        ->required()
        ->check(CLI::IsMember({"binary-trees", "mary-trees", "plane-trees", "permutations", "packed-words"}));
    enumerate_cmd->add_option("--n", enumerate_args.n, "Size")->required();
    enumerate_cmd->add_option("--m", enumerate_args.m, "Arity parameter for mary-trees");
    enumerate_cmd->add_flag("--count-only", enumerate_args.count_only, "Print only the number of objects");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }

    try {
        CliConfig cfg;
        if (config_path) {
            apply_config_file(cfg, *config_path);
        }
        apply_env(cfg, env);
        if (format_flag) {
            cfg.output_format = parse_format(*format_flag);
        }
        if (max_degree_flag) {
            cfg.max_degree = *max_degree_flag;
        }
        if (unsafe_flag) {
            cfg.unsafe_large = true;
        }

        if (*hook_cmd) {
            return cmd_hook(hook, cfg, out);
        }
        if (*identity_cmd) {
            return cmd_identity(identity, cfg, out);
        }
        if (*expand_cmd) {
            return cmd_expand(expand, cfg, out);
        }
        return cmd_enumerate(enumerate_args, cfg, out);
    } catch (const SizeGuard &e) {
        err << "error: " << e.what() << "\n";
        return exit_guard;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const VariantArityMismatch &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return exit_failed;
    }
}

} // namespace treecalc::cli
