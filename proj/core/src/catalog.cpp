#include "pfaff/catalog.hpp"

#include "pfaff/error.hpp"
#include "report_json.hpp"

#include <sstream>

namespace pfaff {

namespace {

using Getter = std::function<std::string(const SystemDocument&, const AnalysisReport&)>;

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
    return out;
}

std::string list(const std::vector<std::size_t>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
    return out + "]";
}

const PointAnalysis& first_point(const AnalysisReport& r) {
    if (r.points.empty() || r.points.front().degenerate) throw DomainError("analysis point is degenerate");
    return r.points.front();
}

const CharacterReport& chain(const AnalysisReport& r, std::string_view label) {
    for (const auto& c : first_point(r).chains) {
        if (c.label == label) return c.report;
    }
    throw DomainError("no chain labelled '" + std::string(label) + "'");
}

const ChainEntry& chain_entry(const AnalysisReport& r, std::string_view label) {
    for (const auto& c : first_point(r).chains) {
        if (c.label == label) return c;
    }
    throw DomainError("no chain labelled '" + std::string(label) + "'");
}

PfaffianSystem derived_of(const SystemDocument& doc, const AnalysisReport& r) {
    return derived_system(doc.system(r.system_name));
}

Check check(std::string key, std::string expected, std::string provenance, std::string note, Getter g) {
    return Check{std::move(key), std::move(expected), std::move(provenance), std::move(note), std::move(g)};
}

Check ranks(std::string expected, std::string provenance, std::string note = {}) {
    return check("derived_flag.ranks", std::move(expected), std::move(provenance), std::move(note),
                 [](const SystemDocument&, const AnalysisReport& r) { return list(r.derived_ranks); });
}

Check first_derived(std::string expected, std::string provenance, std::string note = {}) {
    return check("derived_flag.generators[1]", std::move(expected), std::move(provenance), std::move(note),
                 [](const SystemDocument&, const AnalysisReport& r) {
                     return r.derived_generators.size() > 1 ? join(r.derived_generators[1]) : std::string("(none)");
                 });
}

Check derived_integrable(std::string expected, std::string provenance, std::string note = {}) {
    return check("derived_system.integrable", std::move(expected), std::move(provenance), std::move(note),
                 [](const SystemDocument& d, const AnalysisReport& r) {
                     return str(is_frobenius_integrable(derived_of(d, r)));
                 });
}

Check derived_contains(std::string form, std::string provenance, std::string note = {}) {
    return check("derived_system.contains(" + form + ")", "true", std::move(provenance), std::move(note),
                 [form](const SystemDocument& d, const AnalysisReport& r) {
                     const PfaffianSystem one(d.nvars(), {d.form(form)});
                     return str(contained_in(one, derived_of(d, r)));
                 });
}

Check integrable(std::string expected, std::string provenance, std::string note = {}) {
    return check("flags.integrable", std::move(expected), std::move(provenance), std::move(note),
                 [](const SystemDocument&, const AnalysisReport& r) { return str(r.integrable); });
}

Check flag_system(std::string expected, std::string provenance, std::string note = {}) {
    return check("flags.flag_system", std::move(expected), std::move(provenance), std::move(note),
                 [](const SystemDocument&, const AnalysisReport& r) { return str(r.flag_system); });
}

Check annihilator(std::string expected, std::string provenance, std::string note = {}) {
    return check("annihilator_dim", std::move(expected), std::move(provenance), std::move(note),
                 [](const SystemDocument&, const AnalysisReport& r) { return str(first_point(r).annihilator_dim); });
}

Check covector_rank(std::string expected, std::string provenance, std::string note = {}) {
    return check("characteristic.covector_rank", std::move(expected), std::move(provenance), std::move(note),
                 [](const SystemDocument&, const AnalysisReport& r) {
                     return str(first_point(r).characteristic->covector_rank);
                 });
}

Check character(std::string label, std::string expected, std::string provenance, std::string note = {}) {
    return check("chains[" + label + "].character_chain", std::move(expected), std::move(provenance), std::move(note),
                 [label](const SystemDocument&, const AnalysisReport& r) { return str(chain(r, label).character_chain); });
}

Check rho_chain(std::string label, std::string expected, std::string provenance, std::string note = {}) {
    return check("chains[" + label + "].rho_chain", std::move(expected), std::move(provenance), std::move(note),
                 [label](const SystemDocument&, const AnalysisReport& r) { return str(chain(r, label).rho_chain); });
}

Check rho_max(std::string expected, std::string provenance, std::string note = {}) {
    return check("chains[default].rho_max", std::move(expected), std::move(provenance), std::move(note),
                 [](const SystemDocument&, const AnalysisReport& r) { return str(chain(r, "default").rho_max); });
}

Check singular(std::string label, std::string expected, std::string provenance, std::string note = {}) {
    return check("chains[" + label + "].singular_char2", std::move(expected), std::move(provenance), std::move(note),
                 [label](const SystemDocument&, const AnalysisReport& r) {
                     const auto& s = chain_entry(r, label).singular_char2;
                     return s ? str(*s) : std::string("not_applicable");
                 });
}

Check gender(GenderConvention c, std::string expected, std::string provenance, std::string note = {}) {
    const bool mod = c == GenderConvention::modulo_system;
    return check(mod ? "gender.modulo_system" : "gender.absolute", std::move(expected), std::move(provenance),
                 std::move(note), [mod](const SystemDocument&, const AnalysisReport& r) {
                     const auto& p = first_point(r);
                     return str(static_cast<std::size_t>(mod ? *p.gender_modulo_system : *p.gender_absolute));
                 });
}

Check darboux(std::size_t generator, std::string expected, std::string provenance, std::string note = {}) {
    return check("darboux_class[" + std::to_string(generator + 1) + "]", std::move(expected), std::move(provenance),
                 std::move(note), [generator](const SystemDocument&, const AnalysisReport& r) {
                     const auto& d = first_point(r).darboux_class.at(generator);
                     return d ? str(static_cast<std::size_t>(*d)) : std::string("undefined");
                 });
}

Check differential(std::string form, std::string expected, std::string provenance, std::string note = {}) {
    return check("d(" + form + ")", std::move(expected), std::move(provenance), std::move(note),
                 [form](const SystemDocument& d, const AnalysisReport&) {
                     return exterior_derivative(d.form(form)).to_string(d.chart);
                 });
}

AnalysisOptions with_system(std::string name) {
    AnalysisOptions o;
    o.system = std::move(name);
    return o;
}

constexpr const char* lit = "literature";
constexpr const char* hand = "hand_computed";
constexpr const char* ident = "identity";

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;

    out.push_back({"example-A", "rank 3 on 5-space, derived system integrable",
                   R"(chart x1 x2 x3 x4 x5;
form w1 = d(x1) + x4*d(x5);
form w2 = d(x2);
form w3 = d(x3);
system A = [w1, w2, w3];
)",
                   with_system("A"),
                   {
                       ranks("[3, 2]", lit),
                       first_derived("dx2, dx3", lit),
                       check("derived_flag.terminal_integrable", "true", lit, {},
                             [](const SystemDocument&, const AnalysisReport& r) {
                                 return str(r.derived_terminal_integrable);
                             }),
                       integrable("false", lit, "d(w1) = dx4^dx5 is not congruent to zero"),
                       differential("w1", "dx4/\\dx5", lit),
                       annihilator("2", lit),
                       character("default", "1", lit, "chain e4"),
                       rho_max("1", lit, "maximal integral manifolds are lines parallel to the x4-axis"),
                       covector_rank("5", hand, "null characteristics"),
                       gender(GenderConvention::modulo_system, "1", hand),
                       darboux(0, "3", hand),
                       darboux(1, "1", ident),
                   }});

    out.push_back({"example-A-prime", "example A with w3 replaced by dx3 + x5*dx1",
                   R"(chart x1 x2 x3 x4 x5;
form w1 = d(x1) + x4*d(x5);
form w2 = d(x2);
form v3 = d(x3) + x5*d(x1);
system A2 = [w1, w2, v3];
)",
                   with_system("A2"),
                   {
                       differential("v3", "-dx1/\\dx5", hand, "equals dx5^dx1"),
                       check("derived_system.rank", "2", lit, {},
                             [](const SystemDocument&, const AnalysisReport& r) { return str(r.derived_ranks.at(1)); }),
                       derived_contains("v3", lit),
                       derived_integrable("false", lit),
                       integrable("false", hand),
                   }});

    out.push_back({"example-B", "rank 3 on 6-space, derived rank two units less",
                   R"(chart x1 x2 x3 x4 x5 x6;
form w1 = d(x1) + x4*d(x5);
form w2 = d(x2) + x5*d(x6);
form w3 = d(x3);
system B = [w1, w2, w3];
# e5 - x4*e1 at the origin
seed line = [(0, 0, 0, 0, 1, 0)];
)",
                   with_system("B"),
                   {
                       ranks("[3, 1]", lit),
                       first_derived("dx3", lit),
                       derived_integrable("true", lit),
                       annihilator("3", lit),
                       rho_chain("line", "1", lit),
                       character("line", "2", lit, "chain relative to the seed e5 - x4*e1"),
                       rho_max("2", hand, "{e4, e6 - x5*e2} is a 2-dimensional integral element"),
                       character("default", "1", hand, "default stream starts at e4"),
                       flag_system("false", lit, "rank drop of two"),
                       integrable("false", lit),
                   }});

    out.push_back({"example-B-prime", "example B with w3 replaced by dx3 + x5*dx1",
                   R"(chart x1 x2 x3 x4 x5 x6;
form w1 = d(x1) + x4*d(x5);
form w2 = d(x2) + x5*d(x6);
form v3 = d(x3) + x5*d(x1);
system B2 = [w1, w2, v3];
seed line = [(0, 0, 0, 0, 1, 0)];
)",
                   with_system("B2"),
                   {
                       first_derived("x5*dx1 + dx3", lit),
                       derived_contains("v3", lit),
                       ranks("[3, 1, 0]", hand),
                       derived_integrable("false", lit),
                       differential("v3", "-dx1/\\dx5", hand, "equals dx5^dx1"),
                       darboux(2, "3", lit),
                       character("line", "2", lit, "chain relative to the seed e5"),
                       rho_max("2", hand, "{e4, e6 - x5*e2} is integral at the origin"),
                   }});

    out.push_back({"example-C", "rank 3 on 6-space with vanishing derived system",
                   R"(chart x1 x2 x3 x4 x5 x6;
form w1 = d(x1) + x4*d(x5);
form w2 = d(x2) + x5*d(x6);
form w3 = d(x3) + x6*d(x4);
system C = [w1, w2, w3];
)",
                   with_system("C"),
                   {
                       ranks("[3, 0]", lit),
                       first_derived("", lit, "zero system"),
                       character("default", "2", lit),
                       rho_max("1", lit, "maximal integral manifolds are lines"),
                       singular("default", "false", hand, "s0 = 3 along the default chain"),
                       covector_rank("6", hand),
                   }});

    out.push_back({"gender-A", "example A generated by the section w1 + x2*w3",
                   R"(chart x1 x2 x3 x4 x5;
form w1 = d(x1) + x4*d(x5);
form w2 = d(x2);
form w3 = d(x3);
form g = w1 + x2*w3;
system G = [g, w2, w3];
)",
                   with_system("G"),
                   {
                       differential("g", "dx2/\\dx3 + dx4/\\dx5", hand),
                       gender(GenderConvention::absolute, "2", lit, "(dg)^2 = 2 dx2^dx3^dx4^dx5"),
                       gender(GenderConvention::modulo_system, "1", hand, "degree forces (dg)^2 ^ P = 0"),
                       ranks("[3, 2]", hand, "same module as example A"),
                   }});

    out.push_back({"darboux-h1", "normal form dy1, dz2 + p1*dz1",
                   R"(chart y1 z1 z2 p1;
form a1 = d(y1);
form th = d(z2) + p1*d(z1);
system D1 = [a1, th];
)",
                   with_system("D1"),
                   {
                       ranks("[2, 1]", lit),
                       first_derived("dy1", lit),
                       derived_integrable("true", lit),
                       character("default", "1", lit),
                       darboux(1, "3", lit),
                   }});

    out.push_back({"darboux-h2", "normal form dy1, dz3 + p1*dz1 + p2*dz2",
                   R"(chart y1 z1 z2 z3 p1 p2;
form a1 = d(y1);
form th = d(z3) + p1*d(z1) + p2*d(z2);
system D2 = [a1, th];
)",
                   with_system("D2"),
                   {
                       ranks("[2, 1]", lit),
                       first_derived("dy1", lit),
                       derived_integrable("true", lit),
                       character("default", "1", lit),
                       darboux(1, "5", lit),
                   }});

    out.push_back({"goursat-2", "Goursat flag on 4-space",
                   R"(chart x y0 y1 y2;
form a0 = d(y0) - y1*d(x);
form a1 = d(y1) - y2*d(x);
system F2 = [a0, a1];
)",
                   with_system("F2"),
                   {
                       ranks("[2, 1, 0]", hand),
                       flag_system("true", hand),
                       character("default", "1", lit, "n - r - 1"),
                   }});

    out.push_back({"goursat-3", "Goursat flag on 5-space",
                   R"(chart x y0 y1 y2 y3;
form a0 = d(y0) - y1*d(x);
form a1 = d(y1) - y2*d(x);
form a2 = d(y2) - y3*d(x);
system F3 = [a0, a1, a2];
)",
                   with_system("F3"),
                   {
                       ranks("[3, 2, 1, 0]", hand),
                       flag_system("true", hand),
                       character("default", "1", lit, "n - r - 1"),
                   }});

    out.push_back({"integrable-23", "{dx2, dx3} on 5-space",
                   R"(chart x1 x2 x3 x4 x5;
form w2 = d(x2);
form w3 = d(x3);
system I = [w2, w3];
)",
                   with_system("I"),
                   {
                       integrable("true", lit),
                       ranks("[2]", ident),
                       flag_system("true", ident, "vacuous"),
                       check("flags.flag_system_trivial", "true", ident, {},
                             [](const SystemDocument&, const AnalysisReport& r) { return str(r.flag_trivial); }),
                       gender(GenderConvention::modulo_system, "0", lit),
                       gender(GenderConvention::absolute, "0", ident),
                       rho_max("3", lit, "rho_max = n - r exactly for integrable systems"),
                       character("default", "0", ident),
                       annihilator("3", ident),
                   }});
    return out;
}

} // namespace

AnalysisReport CatalogEntry::analyze() const { return pfaff::analyze(document(), options, source); }

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
    for (const auto& e : catalog()) {
        if (e.name == name) return e;
    }
    throw DomainError("unknown catalog entry '" + std::string(name) + "'");
}

bool EntryResult::ok() const {
    if (!error.empty()) return false;
    for (const auto& c : checks) {
        if (!c.ok) return false;
    }
    return true;
}

EntryResult run_entry(const CatalogEntry& entry) {
    EntryResult out;
    out.name = entry.name;
    try {
        const SystemDocument doc = entry.document();
        out.report = pfaff::analyze(doc, entry.options, entry.source);
        for (const auto& c : entry.checks) {
            CheckResult res{c.key, c.expected, {}, c.provenance, c.note, false};
            try {
                res.actual = c.actual(doc, *out.report);
            } catch (const Error& e) {
                res.actual = std::string("error: ") + e.what();
            }
            res.ok = res.actual == res.expected;
            out.checks.push_back(std::move(res));
        }
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

std::vector<EntryResult> run_all() {
    std::vector<EntryResult> out;
    for (const auto& e : catalog()) out.push_back(run_entry(e));
    return out;
}

std::string results_json(const std::vector<EntryResult>& results) {
    Json j;
    j["schema_version"] = report_schema_version;
    j["tool_version"] = tool_version();
    bool all = true;
    j["entries"] = Json::array();
    for (const auto& r : results) {
        Json e;
        e["name"] = r.name;
        e["ok"] = r.ok();
        all = all && r.ok();
        if (!r.error.empty()) e["error"] = r.error;
        e["checks"] = Json::array();
        for (const auto& c : r.checks) {
            e["checks"].push_back({{"key", c.key},
                                   {"expected", c.expected},
                                   {"actual", c.actual},
                                   {"ok", c.ok},
                                   {"provenance", c.provenance},
                                   {"note", c.note}});
        }
        if (r.report) e["report"] = report_json(*r.report);
        j["entries"].push_back(std::move(e));
    }
    j["ok"] = all;
    return j.dump(2) + "\n";
}

std::string results_text(const std::vector<EntryResult>& results) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& r : results) {
        out << (r.ok() ? "PASS " : "FAIL ") << r.name << "\n";
        if (!r.error.empty()) out << "  error: " << r.error << "\n";
        for (const auto& c : r.checks) {
            if (c.ok) continue;
            out << "  " << c.key << ": expected " << c.expected << ", got " << c.actual << " [" << c.provenance;
            if (!c.note.empty()) out << "; " << c.note;
            out << "]\n";
        }
        if (!r.ok()) ++failed;
    }
    out << (results.size() - failed) << "/" << results.size() << " entries match\n";
    return out.str();
}

} // namespace pfaff
