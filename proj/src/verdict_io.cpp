#include "dehn/verdict_io.hpp"

#include <ostream>

namespace dehn {

using nlohmann::ordered_json;

ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    j["reducible"] = to_string(v.reducible);
    j["toroidal"] = to_string(v.toroidal);
    j["lo"] = to_string(v.lo);
    j["nls"] = to_string(v.nls);
    j["ctf"] = to_string(v.ctf);
    j["l_space"] = to_string(v.l_space);
    j["traces"] = ordered_json::array();
    for (const Trace& t : v.traces) {
        ordered_json jt;
        jt["rule"] = t.rule;
        jt["citation"] = t.citation;
        jt["property"] = t.property;
        jt["value"] = to_string(t.value);
        jt["premises"] = t.premises;
        jt["conjectural"] = t.conjectural;
        j["traces"].push_back(std::move(jt));
    }
    j["reductions"] = ordered_json::array();
    for (const Reduction& r : v.reductions) {
        ordered_json jr;
        jr["description"] = r.description;
        jr["knot"] = r.knot;
        jr["slope"] = r.slope.str();
        j["reductions"].push_back(std::move(jr));
    }
    j["notes"] = v.notes;
    return j;
}

ordered_json classify_result_json(const std::string& knot, const Slope& slope, const Verdict& v) {
    ordered_json j;
    j["knot"] = knot;
    j["slope"] = slope.str();
    j["verdict"] = verdict_to_json(v);
    return j;
}

namespace {

const char* paint(Tri t, bool color) {
    if (!color) return "";
    switch (t) {
        case Tri::Yes: return "\x1b[32m";
        case Tri::No: return "\x1b[31m";
        default: return "\x1b[2m";
    }
}

}  // namespace

void print_verdict(std::ostream& out, const std::string& knot, const Slope& slope,
                   const Verdict& v, bool with_trace, bool color) {
    const char* reset = color ? "\x1b[0m" : "";
    out << knot << "  @ " << slope.str() << "\n";
    auto field = [&](const char* name, Tri t) {
        out << "  " << name << " " << paint(t, color) << to_string(t) << reset;
    };
    field("reducible", v.reducible);
    field("toroidal", v.toroidal);
    field("lo", v.lo);
    field("nls", v.nls);
    field("ctf", v.ctf);
    field("l-space", v.l_space);
    out << "\n";
    for (const Reduction& r : v.reductions)
        out << "  reduces: " << r.description << " -> " << r.knot << " @ " << r.slope.str() << "\n";
    for (const std::string& n : v.notes) out << "  note: " << n << "\n";
    if (with_trace) {
        for (const Trace& t : v.traces) {
            out << "  [" << t.property << "=" << to_string(t.value) << "] " << t.rule << " ("
                << t.citation << ")";
            if (t.conjectural) out << " CONJECTURAL";
            for (const std::string& p : t.premises) out << "\n      - " << p;
            out << "\n";
        }
    }
}

}  // namespace dehn
