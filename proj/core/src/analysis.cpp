#include "pfaff/analysis.hpp"

#include "pfaff/error.hpp"
#include "report_json.hpp"

#include <sstream>

#ifndef PFAFF_VERSION
#define PFAFF_VERSION "0.0.0"
#endif

namespace pfaff {

std::string tool_version() { return PFAFF_VERSION; }

const PointAnalysis& AnalysisReport::at(std::string_view point) const {
    for (const auto& p : points) {
        if (p.name == point) return p;
    }
    throw DomainError("report has no point '" + std::string(point) + "'");
}

namespace {

std::vector<std::string> render_generators(const PfaffianSystem& sys, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& g : sys.generators()) out.push_back(g.to_string(names));
    return out;
}

PointAnalysis analyze_point(const PfaffianSystem& sys, const std::string& name, const Point& p,
                            const std::vector<const NamedSeed*>& seeds, const SearchOptions& search) {
    PointAnalysis out;
    out.name = name;
    out.coordinates = p;
    try {
        sys.require_independent_at(p);
    } catch (const DegeneratePointError& e) {
        out.degenerate = true;
        out.diagnostic = e.what();
        return out;
    }
    out.annihilator_dim = sys.nvars() - sys.rank();
    out.characteristic = characteristic_data_at(sys, p);
    out.gender_modulo_system = system_gender_at(sys, p, GenderConvention::modulo_system);
    out.gender_absolute = system_gender_at(sys, p, GenderConvention::absolute);
    for (const auto& g : sys.generators()) {
        try {
            out.darboux_class.push_back(darboux_class_at(g, p));
        } catch (const DomainError&) {
            out.darboux_class.push_back(std::nullopt);
        }
    }
    auto add_chain = [&](std::string label, const std::optional<std::vector<Vector>>& vectors) {
        try {
            ChainEntry entry{std::move(label), character_report(sys, p, vectors, search), std::nullopt, false};
            entry.singular_char2 = singular_char2_predicate(entry.report);
            entry.systatic = systatic_indicator(entry.report);
            out.chains.push_back(std::move(entry));
        } catch (const SearchLimitError& e) {
            out.diagnostic += (out.diagnostic.empty() ? "" : "; ") + label + ": " + e.what();
        }
    };
    add_chain("default", std::nullopt);
    for (const auto* s : seeds) add_chain(s->name, s->vectors);
    return out;
}

Json rational_json(const Rational& q) { return q.to_string(); }

Json chain_json(const ChainEntry& e) {
    const auto& c = e.report;
    Json j;
    j["label"] = e.label;
    j["seeded"] = c.seeded;
    j["seed_vectors"] = Json::array();
    for (const auto& v : c.seed_vectors) j["seed_vectors"].push_back(vector_json(v));
    j["chain"] = Json::array();
    for (const auto& v : c.chain.vectors) j["chain"].push_back(vector_json(v));
    Json s = Json::array();
    for (std::size_t k = 0; k <= c.chain.dimension(); ++k) s.push_back(c.chain.s(k));
    j["enlarged_characters"] = s;
    j["rho_chain"] = c.rho_chain;
    j["character_chain"] = c.character_chain;
    j["first_polar_codimension"] = c.first_polar_codimension;
    j["monotone"] = c.monotone;
    j["rho_max"] = c.rho_max;
    j["character_min"] = c.character_min;
    j["rho_max_upper_bound"] = c.maximal.upper_bound;
    j["rho_max_certified"] = c.maximal.certified;
    j["search_nodes"] = c.maximal.nodes;
    j["witness"] = Json::array();
    for (const auto& v : c.maximal.witness) j["witness"].push_back(vector_json(v));
    j["singular_char2"] = e.singular_char2 ? Json(*e.singular_char2) : Json("not_applicable");
    j["systatic_indicator"] = e.systatic;
    return j;
}

Json point_json(const PointAnalysis& p) {
    Json j;
    j["name"] = p.name;
    j["coordinates"] = vector_json(p.coordinates);
    j["degenerate"] = p.degenerate;
    if (!p.diagnostic.empty()) j["diagnostic"] = p.diagnostic;
    if (p.degenerate) return j;
    j["annihilator_dim"] = p.annihilator_dim;
    const auto& ch = *p.characteristic;
    j["characteristic"] = {
        {"covector_rank", ch.covector_rank},
        {"characteristic_space", Json::array()},
        {"null_characteristics", ch.characteristic_space.empty()},
    };
    for (const auto& v : ch.characteristic_space) j["characteristic"]["characteristic_space"].push_back(vector_json(v));
    j["gender"] = {{"modulo_system", *p.gender_modulo_system}, {"absolute", *p.gender_absolute}};
    j["darboux_class"] = Json::array();
    for (const auto& d : p.darboux_class) j["darboux_class"].push_back(d ? Json(*d) : Json(nullptr));
    j["chains"] = Json::array();
    for (const auto& c : p.chains) j["chains"].push_back(chain_json(c));
    return j;
}

} // namespace

Json vector_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rational_json(q));
    return out;
}

Json report_json(const AnalysisReport& r) {
    Json j;
    j["schema_version"] = report_schema_version;
    j["tool_version"] = r.tool_version;
    j["input_digest"] = r.input_digest;
    j["system"] = r.system_name;
    j["chart"] = r.chart;
    j["n"] = r.n;
    j["r"] = r.r;
    j["generators"] = r.generators;
    j["pivot_polynomials"] = r.pivot_polynomials;
    j["derived_flag"] = {
        {"ranks", r.derived_ranks},
        {"generators", r.derived_generators},
        {"terminal_integrable", r.derived_terminal_integrable},
    };
    j["flags"] = {
        {"integrable", r.integrable},
        {"flag_system", r.flag_system},
        {"flag_system_trivial", r.flag_trivial},
    };
    j["points"] = Json::array();
    for (const auto& p : r.points) j["points"].push_back(point_json(p));
    return j;
}

AnalysisReport analyze(const SystemDocument& doc, const AnalysisOptions& options, std::string_view source) {
    AnalysisReport out;
    out.tool_version = tool_version();
    out.input_digest = digest(source.empty() ? std::string_view(render(doc)) : source);
    out.system_name = options.system ? *options.system : doc.default_system().name;
    const PfaffianSystem sys = doc.system(out.system_name);
    out.chart = doc.chart;
    out.n = sys.nvars();
    out.r = sys.rank();
    out.generators = render_generators(sys, doc.chart);
    for (const auto& p : sys.pivot_polynomials()) out.pivot_polynomials.push_back(p.to_string(doc.chart));

    const DerivedFlag flag = derived_flag(sys);
    out.derived_ranks = flag.ranks;
    for (const auto& s : flag.systems) out.derived_generators.push_back(render_generators(s, doc.chart));
    out.derived_terminal_integrable = flag.terminal_integrable;
    out.integrable = is_frobenius_integrable(sys);
    const auto cls = is_flag_system(flag);
    out.flag_system = cls.flag_system;
    out.flag_trivial = cls.trivial;

    std::vector<const NamedSeed*> seeds;
    if (options.seed) {
        seeds.push_back(&doc.seed(*options.seed));
    } else {
        for (const auto& s : doc.seeds) seeds.push_back(&s);
    }
    if (options.coordinates) {
        if (options.coordinates->size() != sys.nvars()) throw DimensionError("point has the wrong number of coordinates");
        out.points.push_back(analyze_point(sys, "coords", *options.coordinates, seeds, options.search));
    } else if (options.point) {
        out.points.push_back(analyze_point(sys, *options.point, doc.point(*options.point), seeds, options.search));
    } else if (doc.points.empty()) {
        out.points.push_back(analyze_point(sys, "origin", doc.point("origin"), seeds, options.search));
    } else {
        for (const auto& p : doc.points) out.points.push_back(analyze_point(sys, p.name, p.coordinates, seeds, options.search));
    }
    return out;
}

std::string to_json(const AnalysisReport& report) { return report_json(report).dump(2) + "\n"; }

std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto list = [](const auto& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ", ";
            if constexpr (std::is_same_v<std::decay_t<decltype(xs[i])>, std::string>) {
                s += xs[i];
            } else {
                s += std::to_string(xs[i]);
            }
        }
        return s;
    };
    out << "system " << r.system_name << " on chart (" << list(r.chart) << "), n = " << r.n << ", r = " << r.r << "\n";
    for (std::size_t i = 0; i < r.generators.size(); ++i) out << "  w" << (i + 1) << " = " << r.generators[i] << "\n";
    out << "derived flag ranks: [" << list(r.derived_ranks) << "]"
        << (r.derived_terminal_integrable ? ", terminal integrable" : ", terminal not integrable") << "\n";
    for (std::size_t k = 1; k < r.derived_generators.size(); ++k) {
        out << "  P" << k << " = {" << list(r.derived_generators[k]) << "}\n";
    }
    out << "integrable: " << (r.integrable ? "yes" : "no") << "; flag system: " << (r.flag_system ? "yes" : "no")
        << (r.flag_trivial ? " (trivial)" : "") << "\n";
    for (const auto& p : r.points) {
        out << "\npoint " << p.name << " = " << to_string(p.coordinates) << "\n";
        if (p.degenerate) {
            out << "  degenerate: " << p.diagnostic << "\n";
            continue;
        }
        out << "  dim annihilator: " << p.annihilator_dim << "\n";
        out << "  characteristic covector rank: " << p.characteristic->covector_rank
            << (p.characteristic->characteristic_space.empty() ? " (null characteristics)" : "") << "\n";
        out << "  gender: " << *p.gender_modulo_system << " modulo the system, " << *p.gender_absolute << " absolute\n";
        out << "  Darboux class per generator:";
        for (const auto& d : p.darboux_class) out << " " << (d ? std::to_string(*d) : std::string("-"));
        out << "\n";
        for (const auto& c : p.chains) {
            const auto& rep = c.report;
            out << "  chain [" << c.label << "]:";
            for (const auto& v : rep.chain.vectors) out << " " << to_string(v);
            std::vector<std::size_t> s;
            for (std::size_t k = 0; k <= rep.chain.dimension(); ++k) s.push_back(rep.chain.s(k));
            out << "\n    rho_chain = " << rep.rho_chain << ", character_chain = " << rep.character_chain
                << ", s = [" << list(s) << "]" << (rep.monotone ? "" : " (not monotone)") << "\n";
            out << "    rho_max = " << rep.rho_max << " (bound " << rep.maximal.upper_bound
                << (rep.maximal.certified ? ", certified" : ", not certified") << "), character_min = "
                << rep.character_min << "\n";
            out << "    singular char-2: "
                << (c.singular_char2 ? (*c.singular_char2 ? "yes" : "no") : "not applicable")
                << "; systatic indicator: " << (c.systatic ? "yes" : "no") << "\n";
        }
        if (!p.diagnostic.empty()) out << "  note: " << p.diagnostic << "\n";
    }
    return out.str();
}

} // namespace pfaff
