#include "dehn/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _WIN32
#define DEHN_ISATTY() false
#else
#include <unistd.h>
#define DEHN_ISATTY() (isatty(fileno(stdout)) != 0)
#endif

#include <CLI11.hpp>

#include "dehn/dsl.hpp"
#include "dehn/engine.hpp"
#include "dehn/farey.hpp"
#include "dehn/verdict_io.hpp"

namespace dehn {

namespace {

using nlohmann::ordered_json;

ordered_json envelope(const char* command) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

struct Options {
    bool json = false;
    bool trace = false;
    int depth = -1;
    bool conjecture = false;
};

Slope cli_slope(const std::string& text) {
    auto s = Slope::parse(text);
    if (!s) throw Error("invalid slope '" + text + "' (expected p or p/q)");
    return *s;
}

void emit_scan_line(std::ostream& out, const Slope& s, const Verdict& v) {
    out << s.str() << ": reducible=" << to_string(v.reducible)
        << " toroidal=" << to_string(v.toroidal) << " lo=" << to_string(v.lo)
        << " nls=" << to_string(v.nls) << " ctf=" << to_string(v.ctf)
        << " l-space=" << to_string(v.l_space) << "\n";
}

int run_parsed(const std::string& cmd, const std::vector<std::string>& pos, const Options& opt,
               const std::string& p_list, const std::string& q_list, long qmax, long pmax,
               std::ostream& out) {
    bool color = !opt.json && &out == &std::cout && DEHN_ISATTY() && !std::getenv("NO_COLOR");

    if (cmd == "classify") {
        KnotPtr knot = parse_expr(pos[0]);
        Slope s = cli_slope(pos[1]);
        Verdict v = classify({knot, s, opt.depth, opt.conjecture});
        std::string canon = to_dsl(knot);
        if (opt.json) {
            ordered_json j = envelope("classify");
            j["results"] = ordered_json::array({classify_result_json(canon, s, v)});
            out << j.dump(2) << "\n";
        } else {
            print_verdict(out, canon, s, v, opt.trace, color);
        }
        return 0;
    }

    if (cmd == "scan") {
        KnotPtr knot = parse_expr(pos[0]);
        auto slopes = slope_grid(parse_int_list(p_list), parse_int_list(q_list));
        auto results = scan(knot, slopes, opt.depth, opt.conjecture);
        std::string canon = to_dsl(knot);
        if (opt.json) {
            ordered_json j = envelope("scan");
            j["results"] = ordered_json::array();
            for (const auto& [s, v] : results)
                j["results"].push_back(classify_result_json(canon, s, v));
            out << j.dump(2) << "\n";
        } else {
            out << canon << "\n";
            for (const auto& [s, v] : results) emit_scan_line(out, s, v);
        }
        return 0;
    }

    if (cmd == "farey-ball") {
        long k = std::stol(pos[0]);
        long pb = pmax != 0 ? pmax : qmax;
        auto all = ball_enumerate(k, std::max(pb, qmax));
        std::vector<Slope> slopes;
        for (const Slope& s : all)
            if (s.is_meridian() ||
                (boost::multiprecision::abs(s.num()) <= pb && s.den() <= qmax))
                slopes.push_back(s);
        if (opt.json) {
            ordered_json j = envelope("farey-ball");
            j["slopes"] = ordered_json::array();
            for (const Slope& s : slopes) j["slopes"].push_back(s.str());
            out << j.dump(2) << "\n";
        } else {
            for (const Slope& s : slopes) out << s.str() << "\n";
        }
        return 0;
    }

    if (cmd == "farey-dist") {
        long d = fg_distance(cli_slope(pos[0]), cli_slope(pos[1]));
        if (opt.json) {
            ordered_json j = envelope("farey-dist");
            j["distance"] = d;
            out << j.dump(2) << "\n";
        } else {
            out << d << "\n";
        }
        return 0;
    }

    if (cmd == "batch") {
        std::ifstream in(pos[0]);
        if (!in) throw Error("cannot open batch file '" + pos[0] + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        DslDocument doc = parse_document(buf.str());
        ordered_json j = envelope("batch");
        j["results"] = ordered_json::array();
        for (const QueryLine& q : doc.queries) {
            const KnotPtr& knot = *doc.find(q.name);
            int depth = q.depth >= 0 ? q.depth : opt.depth;
            bool conj = q.assume_ctf_conjecture || opt.conjecture;
            auto results = scan(knot, q.slopes, depth, conj);
            if (opt.json) {
                ordered_json je;
                je["name"] = q.name;
                je["knot"] = to_dsl(knot);
                je["results"] = ordered_json::array();
                for (const auto& [s, v] : results)
                    je["results"].push_back(classify_result_json(to_dsl(knot), s, v));
                j["results"].push_back(std::move(je));
            } else {
                out << "# " << q.name << " = " << to_dsl(knot) << "\n";
                for (const auto& [s, v] : results) {
                    if (q.trace || opt.trace)
                        print_verdict(out, q.name, s, v, true, color);
                    else
                        emit_scan_line(out, s, v);
                }
            }
        }
        if (opt.json) out << j.dump(2) << "\n";
        return 0;
    }

    throw Error("unknown command");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dehn - surgery verdicts for structured knots"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit the versioned JSON schema instead of tables");
    app.add_flag("--trace", opt.trace, "show fired rules with citations");
    app.add_option("--depth", opt.depth, "recursion depth budget (default: tree height + 2)");
    app.add_flag("--assume-conjecture-1.6", opt.conjecture,
                 "extend CTF rules by assumed meridional detection (traces marked CONJECTURAL)");

    std::string expr_text, slope_a, slope_b, p_list, q_list, file, k_text;
    long qmax = 0, pmax = 0;

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify one surgery");
    classify_cmd->add_option("expr", expr_text, "knot expression")->required();
    classify_cmd->add_option("slope", slope_a, "surgery slope p/q")->required();

    CLI::App* scan_cmd = app.add_subcommand("scan", "classify a grid of slopes");
    scan_cmd->add_option("expr", expr_text, "knot expression")->required();
    scan_cmd->add_option("--p", p_list, "numerators, e.g. 1,2 or -4..4")->required();
    scan_cmd->add_option("--q", q_list, "denominators, e.g. -20..20")->required();

    CLI::App* farey_cmd = app.add_subcommand("farey", "Farey graph utilities");
    farey_cmd->require_subcommand(1);
    CLI::App* ball_cmd = farey_cmd->add_subcommand("ball", "enumerate a bounded distance ball");
    ball_cmd->add_option("k", k_text, "radius")->required();
    ball_cmd->add_option("--qmax", qmax, "denominator bound (also bounds |p| unless --pmax)")
        ->required();
    ball_cmd->add_option("--pmax", pmax, "numerator bound");
    CLI::App* dist_cmd = farey_cmd->add_subcommand("dist", "distance between two slopes");
    dist_cmd->add_option("r", slope_a, "first slope")->required();
    dist_cmd->add_option("s", slope_b, "second slope")->required();

    CLI::App* batch_cmd = app.add_subcommand("batch", "run a batch document");
    batch_cmd->add_option("file", file, "batch file")->required();

    std::vector<const char*> argv;
    argv.push_back("dehn");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (classify_cmd->parsed())
            return run_parsed("classify", {expr_text, slope_a}, opt, "", "", 0, 0, out);
        if (scan_cmd->parsed())
            return run_parsed("scan", {expr_text}, opt, p_list, q_list, 0, 0, out);
        if (ball_cmd->parsed())
            return run_parsed("farey-ball", {k_text}, opt, "", "", qmax, pmax, out);
        if (dist_cmd->parsed())
            return run_parsed("farey-dist", {slope_a, slope_b}, opt, "", "", 0, 0, out);
        if (batch_cmd->parsed())
            return run_parsed("batch", {file}, opt, "", "", 0, 0, out);
        err << "error: no command\n";
        return 1;
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace dehn
