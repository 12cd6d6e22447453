#include "cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulrich/beilinson.hpp"
#include "ulrich/classify.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/io.hpp"
#include "ulrich/rel_diff.hpp"
#include "ulrich/verify.hpp"

namespace ulrich::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string scroll;
    std::string div;
    std::string pair;
    std::optional<int> p;
    std::string type;
    std::string profile;
    std::optional<Int> rank;
    std::optional<Int> h0;
    std::string suite;
    int dim = 0;
    std::optional<Int> k;
    std::string format = "json";
};

ScrollData scroll_of(const Options& o)
{
    if (o.scroll.empty())
        throw InvalidInput("--scroll is required");
    return ScrollData::make(parse_int_list(o.scroll));
}

Divisor divisor_of(const Options& o)
{
    if (!o.div.empty() && !o.pair.empty())
        throw InvalidInput("give either --div or --pair, not both");
    if (!o.div.empty())
        return parse_divisor(o.div);
    if (!o.pair.empty())
        return parse_pair(o.pair);
    throw InvalidInput("a divisor is required (--div \"aH+bF\" or --pair \"u,v\")");
}

bool has_divisor(const Options& o) { return !o.div.empty() || !o.pair.empty(); }

int need_p(const Options& o)
{
    if (!o.p)
        throw InvalidInput("--p is required");
    return *o.p;
}

json divisor_json(const Divisor& d)
{
    PairCoords q = to_pair(d);
    return {{"h", d.h}, {"f", d.f}, {"pair", {q.u, q.v}}};
}

json line_coh(const Options& o)
{
    ScrollData s = scroll_of(o);
    Divisor d = divisor_of(o);
    CohomTable h = line_cohomology(s, d);
    return {{"divisor", divisor_json(d)}, {"h", to_json(h)}, {"chi", h.chi}};
}

json omega_coh(const Options& o)
{
    ScrollData s = scroll_of(o);
    int p = need_p(o);
    Divisor d = divisor_of(o);
    auto atom = make_atom(s, p, d);
    CohomTable h = omega_cohomology(s, p, d);
    return {{"p", p},
            {"divisor", divisor_json(d)},
            {"sheaf", atom ? to_string(*atom) : std::string("0")},
            {"h", to_json(h)},
            {"chi", h.chi}};
}

json blocks(const Options& o)
{
    ScrollData s = scroll_of(o);
    json out = json::array();
    for (int i = 0; i <= s.n(); ++i) {
        FormalSheaf b = block(s, i);
        SlopeData d = deg_slope(s, b);
        UlrichVerdict v = is_ulrich(s, b);
        out.push_back({{"i", i},
                       {"sheaf", to_string(b)},
                       {"rank", d.rank},
                       {"c1", to_json(d.c1)},
                       {"h0", v.h0},
                       {"slope", slope_string(d.slope)},
                       {"ulrich", v.pass}});
    }
    return out;
}

UlrichType type_of(const ScrollData& s, const Options& o) { return parse_type(o.type, s.n()); }

BeilinsonTable beilinson(const Options& o)
{
    ScrollData s = scroll_of(o);
    int given = !o.type.empty() + !o.profile.empty() + (o.p.has_value() || has_divisor(o));
    if (given != 1)
        throw InvalidInput("beilinson needs exactly one of --type, --profile, or --p with a divisor");
    if (!o.type.empty())
        return beilinson_table(s, block_sum(s, type_of(s, o)).twisted({-1, 0}));
    if (!o.profile.empty())
        return beilinson_table(s, load_profile(o.profile));
    FormalSheaf a;
    a.add(make_atom(s, need_p(o), divisor_of(o)));
    return beilinson_table(s, a);
}

json classify_cmd(const Options& o)
{
    ScrollData s = scroll_of(o);
    if (o.type.empty() == o.profile.empty())
        throw InvalidInput("classify needs exactly one of --type or --profile");
    UlrichType t = !o.type.empty() ? classify(s, block_sum(s, type_of(s, o))) : classify(s, load_profile(o.profile));
    return to_json(describe_type(s, t));
}

json enumerate_cmd(const Options& o)
{
    ScrollData s = scroll_of(o);
    if (o.rank.has_value() == o.h0.has_value())
        throw InvalidInput("enumerate needs exactly one of --rank or --h0");
    auto types = o.rank ? enumerate_types_by_rank(s, *o.rank) : enumerate_types_by_h0(s, *o.h0);
    json out = json::array();
    for (const auto& t : types)
        out.push_back(to_json(t));
    return out;
}

SuiteReport run_suite(const Options& o)
{
    ScrollData s = scroll_of(o);
    if (o.suite == "duality")
        return duality_suite(s);
    if (o.suite == "blocks")
        return blocks_suite(s);
    if (o.suite == "homvanish")
        return homvanish_suite(s);
    if (o.suite == "chi-oracle")
        return chi_oracle_suite(s);
    throw InvalidInput("unknown suite '" + o.suite + "'");
}

BeilinsonTable veronese(const Options& o)
{
    bool atom = o.p.has_value() || o.k.has_value();
    if (atom == !o.profile.empty())
        throw InvalidInput("veronese needs either --profile or --p with --k");
    if (!o.profile.empty())
        return veronese_table(o.dim, load_profile(o.profile));
    if (!o.p || !o.k)
        throw InvalidInput("veronese needs both --p and --k");
    return veronese_table(o.dim, *o.p, *o.k);
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Generic rendering of non-table results: one row per object.
std::string render_rows(const json& result, bool latex)
{
    json rows = result.is_array() ? result : json::array({result});
    if (rows.empty())
        return latex ? "\\begin{tabular}{}\n\\end{tabular}\n" : "(none)\n";
    std::vector<std::string> keys;
    for (const auto& [key, _] : rows.front().items())
        keys.push_back(key);
    std::string out;
    if (latex) {
        out += "\\begin{tabular}{" + std::string(keys.size(), 'l') + "}\n";
        for (std::size_t i = 0; i < keys.size(); ++i)
            out += (i ? " & " : "") + keys[i];
        out += " \\\\\n\\hline\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < keys.size(); ++i)
                out += (i ? " & " : "") + cell(r.value(keys[i], json()));
            out += " \\\\\n";
        }
        out += "\\end{tabular}\n";
        return out;
    }
    out += "|";
    for (const auto& k : keys)
        out += " " + k + " |";
    out += "\n|";
    for (std::size_t i = 0; i < keys.size(); ++i)
        out += "---|";
    out += "\n";
    for (const auto& r : rows) {
        out += "|";
        for (const auto& k : keys)
            out += " " + cell(r.value(k, json())) + " |";
        out += "\n";
    }
    return out;
}

void emit(std::ostream& out, const Options& o, const std::string& command, const json& scroll, const json& result,
          const BeilinsonTable* table = nullptr)
{
    if (o.format == "json") {
        json doc{{"command", command}, {"scroll", scroll}, {"result", result}};
        out << doc.dump(2) << "\n";
    } else if (table) {
        out << render_table(*table, o.format == "md" ? TableFormat::Markdown : TableFormat::Latex);
    } else {
        out << render_rows(result, o.format == "latex");
    }
}

json scroll_json(const Options& o)
{
    if (o.scroll.empty())
        return nullptr;
    return scroll_of(o).degrees();
}

int dispatch(const std::string& command, const Options& o, std::ostream& out, std::ostream& err)
{
    if (command == "line-coh") {
        emit(out, o, command, scroll_json(o), line_coh(o));
    } else if (command == "omega-coh") {
        emit(out, o, command, scroll_json(o), omega_coh(o));
    } else if (command == "blocks") {
        emit(out, o, command, scroll_json(o), blocks(o));
    } else if (command == "beilinson") {
        BeilinsonTable t = beilinson(o);
        emit(out, o, command, scroll_json(o), to_json(t), &t);
    } else if (command == "classify") {
        emit(out, o, command, scroll_json(o), classify_cmd(o));
    } else if (command == "enumerate") {
        emit(out, o, command, scroll_json(o), enumerate_cmd(o));
    } else if (command == "verify") {
        SuiteReport r = run_suite(o);
        json result{{"suite", r.suite}, {"checks", r.checks}, {"pass", r.pass()}, {"failures", r.failures}};
        emit(out, o, command, scroll_json(o), result);
        if (!r.pass()) {
            err << "verify " << r.suite << ": " << r.failures.size() << " failure(s)\n";
            return CheckFailed;
        }
    } else if (command == "veronese") {
        BeilinsonTable t = veronese(o);
        json result = to_json(t);
        result["dim"] = o.dim;
        try {
            result["diagonal"] = veronese_diagonal(t);
        } catch (const NotUlrich& e) {
            result["diagonal"] = nullptr;
            result["note"] = e.what();
        }
        result["duality"] = verify_veronese_duality(o.dim).pass;
        emit(out, o, command, nullptr, result, &t);
    }
    return Ok;
}

} // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cohomology and Ulrich bundles on rational normal scrolls"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json, md or latex")->check(CLI::IsMember({"json", "md", "latex"}));
    };
    auto scroll = [&](CLI::App* sub) { sub->add_option("--scroll", o.scroll, "degrees a0,a1,...")->required(); };
    auto divisor = [&](CLI::App* sub) {
        sub->add_option("--div", o.div, "divisor aH+bF");
        sub->add_option("--pair", o.pair, "divisor in the pair basis u,v");
    };

    auto* lc = app.add_subcommand("line-coh", "cohomology of O_S(D)");
    scroll(lc), divisor(lc), common(lc);
    auto* oc = app.add_subcommand("omega-coh", "cohomology of Omega^p_{S|P^1}(D)");
    scroll(oc), divisor(oc), common(oc);
    oc->add_option("--p", o.p)->required();
    auto* bl = app.add_subcommand("blocks", "the building blocks Omega^i(i,i+1)");
    scroll(bl), common(bl);
    auto* be = app.add_subcommand("beilinson", "Beilinson table of a type, profile or atom");
    scroll(be), divisor(be), common(be);
    be->add_option("--type", o.type, "a0,...,an");
    be->add_option("--profile", o.profile, "profile JSON path");
    be->add_option("--p", o.p);
    auto* cl = app.add_subcommand("classify", "filtration type of an Ulrich sheaf");
    scroll(cl), common(cl);
    cl->add_option("--type", o.type, "a0,...,an");
    cl->add_option("--profile", o.profile, "profile JSON path");
    auto* en = app.add_subcommand("enumerate", "Ulrich numeric types of given rank or h0");
    scroll(en), common(en);
    en->add_option("--rank", o.rank);
    en->add_option("--h0", o.h0);
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    scroll(ve), common(ve);
    ve->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"duality", "blocks", "homvanish", "chi-oracle"}));
    auto* vr = app.add_subcommand("veronese", "tables on the Veronese surface and threefold");
    common(vr);
    vr->add_option("--dim", o.dim)->required();
    vr->add_option("--profile", o.profile, "profile JSON path");
    vr->add_option("--p", o.p);
    vr->add_option("--k", o.k);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : BadInput;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), o, out, err);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return BadInput;
    } catch (const ulrich::Indeterminate& e) {
        err << "indeterminate: " << e.what() << "\n";
        return Indeterminate;
    } catch (const NotUlrich& e) {
        err << e.what() << "\n";
        return CheckFailed;
    }
}

} // namespace ulrich::cli
