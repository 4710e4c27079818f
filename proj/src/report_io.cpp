#include "coverreg/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace coverreg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json bounds_record(const BoundsReport& r) {
    ordered_json rec;
    rec["record_type"] = "bounds";
    rec["graph_id"] = r.graph_id;
    rec["n"] = r.n;
    rec["k"] = r.k;
    rec["bipartite"] = r.bipartite;
    rec["unmixed"] = r.unmixed;
    rec["claw_free"] = r.claw_free;
    rec["deg"] = r.deg;
    rec["reg"] = r.reg;
    rec["lower"] = r.lower;
    rec["upper"] = r.upper;
    rec["defect"] = r.defect();
    rec["field"] = r.field.str();
    rec["holds"] = r.holds;
    rec["lower_tight"] = r.lower_tight;
    rec["upper_tight"] = r.upper_tight;
    return rec;
}

ordered_json identity_record(const IdentityReport& r) {
    ordered_json rec;
    rec["record_type"] = "identity";
    rec["identity"] = r.identity;
    rec["graph_id"] = r.graph_id;
    rec["parameters"] = r.parameters;
    rec["pass"] = r.pass;
    if (!r.pass) rec["witness"] = r.witness;
    return rec;
}

std::string csv_escape(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_json(const SweepResult& result) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["records"] = ordered_json::array();
    for (const BoundsReport& r : result.bounds) doc["records"].push_back(bounds_record(r));
    for (const IdentityReport& r : result.identities)
        doc["records"].push_back(identity_record(r));
    doc["errors"] = result.errors;
    doc["summary"] = {
        {"bounds_records", result.bounds.size()},
        {"identity_records", result.identities.size()},
        {"violations", result.violations},
        {"observations", result.observations},
    };
    return doc.dump(2) + "\n";
}

std::string report_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "record_type,graph_id,identity,parameters,n,k,bipartite,unmixed,claw_free,"
           "deg,reg,lower,upper,defect,field,holds,lower_tight,upper_tight,pass,witness\n";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const BoundsReport& r : result.bounds) {
        out << "bounds," << csv_escape(r.graph_id) << ",,," << r.n << ',' << r.k << ','
            << flag(r.bipartite) << ',' << flag(r.unmixed) << ',' << flag(r.claw_free) << ','
            << r.deg << ',' << r.reg << ',' << r.lower << ',' << r.upper << ',' << r.defect()
            << ',' << r.field.str() << ',' << flag(r.holds) << ',' << flag(r.lower_tight) << ','
            << flag(r.upper_tight) << ",,\n";
    }
    for (const IdentityReport& r : result.identities) {
        out << "identity," << csv_escape(r.graph_id) << ',' << r.identity << ','
            << csv_escape(r.parameters) << ",,,,,,,,,,,,,,," << flag(r.pass) << ','
            << csv_escape(r.witness) << '\n';
    }
    return out.str();
}

std::string report_text(const SweepResult& result) {
    std::ostringstream out;
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    for (const BoundsReport& r : result.bounds) {
        out << r.graph_id << " k=" << r.k << ": deg " << r.deg << ", reg " << r.reg << ", bounds ["
            << r.lower << ", " << r.upper << "], defect " << r.defect() << ", "
            << (r.holds ? "holds" : "VIOLATED") << (r.lower_tight ? ", lower tight" : "")
            << (r.upper_tight ? ", upper tight" : "") << " (bipartite " << flag(r.bipartite)
            << ", unmixed " << flag(r.unmixed) << ", claw-free " << flag(r.claw_free) << ", field "
            << r.field.str() << ")\n";
    }
    for (const IdentityReport& r : result.identities) {
        out << r.graph_id << ' ' << r.identity;
        if (!r.parameters.empty()) out << " [" << r.parameters << ']';
        out << ": " << (r.pass ? "pass" : "FAIL");
        if (!r.pass) out << " — " << r.witness;
        out << '\n';
    }
    for (const std::string& e : result.errors) out << "error: " << e << '\n';
    out << "summary: " << result.bounds.size() << " bounds records, " << result.identities.size()
        << " identity records, " << result.violations << " violations, " << result.observations
        << " observations, " << result.errors.size() << " errors\n";
    return out.str();
}

}  // namespace coverreg
