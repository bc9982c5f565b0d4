// Prints one PASS/FAIL line per acceptance criterion; exits non-zero when any fails.
#include "properties.hpp"
#include "support.hpp"

#include "pfaff/analysis.hpp"
#include "pfaff/catalog.hpp"
#include "pfaff/error.hpp"
#include "pfaff/reduction.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pfaff;
using namespace pfaff::test;

namespace {

constexpr double max_runtime_seconds = 1.0;
constexpr double trace_residual_tolerance = 1e-8;
constexpr double trace_axis_tolerance = 1e-12;
constexpr std::size_t property_cases = 500;
constexpr std::size_t random_integrable_systems = 100;
constexpr std::size_t goursat_points = 5;

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (!ok) detail << "; ";
        ok = false;
        detail << what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PfaffianSystem span_of(std::size_t n, const std::vector<std::size_t>& coords) {
    std::vector<DifferentialForm> gens;
    for (auto i : coords) gens.push_back(dx(n, i));
    return PfaffianSystem(n, std::move(gens));
}

bool same_module(const PfaffianSystem& a, const PfaffianSystem& b) { return contained_in(a, b) && contained_in(b, a); }

const ChainEntry* chain(const PointAnalysis& p, std::string_view label) {
    for (const auto& c : p.chains) {
        if (c.label == label) return &c;
    }
    return nullptr;
}

// The chain an entry documents its character on; the default stream otherwise.
std::string documented_chain(const CatalogEntry& entry) {
    for (const auto& c : entry.checks) {
        const auto open = c.key.find("chains[");
        const auto close = c.key.find("].character_chain");
        if (open == 0 && close != std::string::npos) return c.key.substr(7, close - 7);
    }
    return "default";
}

std::string ranks_string(const std::vector<std::size_t>& ranks) {
    std::string s = "[";
    for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? ", " : "") + std::to_string(ranks[i]);
    return s + "]";
}

Verdict verify_example_a() {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const auto& entry = catalog_entry("example-A");
    const auto doc = entry.document();
    const auto rep = entry.analyze();
    const auto sys = doc.system("A");
    const auto derived = derived_system(sys);
    const double elapsed = seconds_since(start);
    const auto& o = rep.at("origin");
    v.require(rep.derived_ranks == std::vector<std::size_t>{3, 2}, "ranks " + ranks_string(rep.derived_ranks));
    v.require(same_module(derived, span_of(5, {1, 2})), "derived span differs from {dx2, dx3}");
    v.require(rep.derived_terminal_integrable, "terminal not integrable");
    v.require(o.annihilator_dim == 2, "dim Sigma " + std::to_string(o.annihilator_dim));
    v.require(chain(o, "default") && chain(o, "default")->report.character_chain == 1, "character not 1");
    v.require(o.characteristic && o.characteristic->covector_rank == 5, "covector rank not 5");
    v.require(o.characteristic && o.characteristic->characteristic_space.empty(), "characteristics not null");
    v.require(elapsed < max_runtime_seconds, "runtime " + std::to_string(elapsed) + " s");
    if (v.ok) v.detail << "ranks [3, 2], derived {dx2, dx3}, dim Sigma 2, character 1, covector rank 5, " << elapsed << " s";
    return v;
}

Verdict verify_example_a_prime() {
    Verdict v;
    const auto doc = catalog_entry("example-A-prime").document();
    const auto sys = doc.system("A2");
    const auto derived = derived_system(sys);
    v.require(derived.rank() == 2, "derived rank " + std::to_string(derived.rank()));
    v.require(contained_in(PfaffianSystem(5, {doc.form("v3")}), derived), "derived system misses dx3 + x5 dx1");
    v.require(!is_frobenius_integrable(derived), "derived system integrable");
    if (v.ok) v.detail << "derived rank 2, contains dx3 + x5 dx1, not integrable";
    return v;
}

Verdict verify_example_b() {
    Verdict v;
    const auto& entry = catalog_entry("example-B");
    const auto doc = entry.document();
    const auto sys = doc.system("B");
    const auto rep = entry.analyze();
    const auto& o = rep.at("origin");
    v.require(rep.derived_ranks.size() >= 2 && rep.derived_ranks[0] == 3 && rep.derived_ranks[1] == 1,
              "ranks " + ranks_string(rep.derived_ranks));
    v.require(same_module(derived_system(sys), span_of(6, {2})), "derived span differs from {dx3}");
    v.require(o.annihilator_dim == 3, "dim Sigma " + std::to_string(o.annihilator_dim));
    // e5 - x4 e1 at the origin
    const auto seeded = character_report(sys, origin(6), std::vector<Vector>{unit_vector(6, 4)});
    v.require(seeded.character_chain == 2, "seeded character " + std::to_string(seeded.character_chain));
    v.require(verify_integral_element(sys, origin(6), seeded.maximal.witness), "witness not integral");
    v.require(seeded.maximal.witness.size() == seeded.rho_max, "witness dimension differs from rho_max");
    if (v.ok) {
        v.detail << "ranks [3, 1], derived {dx3}, dim Sigma 3, seeded character 2; rho_max " << seeded.rho_max
                 << (seeded.maximal.certified ? " (certified)" : "") << " witness verified";
    }
    return v;
}

Verdict verify_example_b_prime() {
    Verdict v;
    const auto doc = catalog_entry("example-B-prime").document();
    const auto sys = doc.system("B2");
    const auto derived = derived_system(sys);
    const auto v3 = doc.form("v3");
    v.require(same_module(derived, PfaffianSystem(6, {v3})), "derived system is not span{dx3 + x5 dx1}");
    v.require(sys.rank() - derived.rank() == 2, "rank drop " + std::to_string(sys.rank() - derived.rank()));
    v.require(!is_frobenius_integrable(derived), "derived system integrable");
    const unsigned cls = darboux_class_at(v3, origin(6));
    v.require(cls == 3, "Darboux class " + std::to_string(cls));
    if (v.ok) v.detail << "derived span{dx3 + x5 dx1}, rank drop 2, not integrable, Darboux class 3";
    return v;
}

Verdict verify_example_c() {
    Verdict v;
    const auto sys = catalog_entry("example-C").document().system("C");
    const auto derived = derived_system(sys);
    v.require(derived.rank() == 0, "derived rank " + std::to_string(derived.rank()));
    v.require(sys.rank() - derived.rank() == 3, "rank drop not 3");
    if (v.ok) v.detail << "derived system zero, rank drop 3";
    return v;
}

Verdict gender_example() {
    Verdict v;
    const auto doc = catalog_entry("example-A").document();
    const auto a = doc.system("A");
    const std::size_t n = 5;
    const auto omega = a.generators()[0] + var(n, 1) * a.generators()[2];
    const auto d_omega = exterior_derivative(omega);
    const unsigned absolute = gender_of_form_at(a, d_omega, origin(n), GenderConvention::absolute);
    const unsigned modulo = gender_of_form_at(a, d_omega, origin(n), GenderConvention::modulo_system);
    v.require(absolute == 2, "absolute gender " + std::to_string(absolute));
    v.require(modulo == 1, "gender modulo the system " + std::to_string(modulo));
    const auto rep = catalog_entry("gender-A").analyze();
    v.require(rep.at("origin").gender_absolute == 2u, "reported absolute gender differs");
    v.require(rep.at("origin").gender_modulo_system == 1u, "reported modulo gender differs");
    if (v.ok) v.detail << "absolute 2, modulo the system 1";
    return v;
}

// {dy1..dy(r-1), dz(h+1) + sum p_i dz_i} on (y, z, p)
Verdict darboux_model() {
    Verdict v;
    std::ostringstream info;
    for (std::size_t h = 1; h <= 2; ++h) {
        for (std::size_t r = 2; r <= 3; ++r) {
            const std::size_t ny = r - 1, nz = h + 1, n = ny + nz + h;
            std::vector<DifferentialForm> gens;
            std::vector<std::size_t> ys;
            for (std::size_t i = 0; i < ny; ++i) {
                gens.push_back(dx(n, i));
                ys.push_back(i);
            }
            auto theta = dx(n, ny + h);
            for (std::size_t i = 0; i < h; ++i) theta += var(n, ny + nz + i) * dx(n, ny + i);
            gens.push_back(theta);
            const PfaffianSystem sys(n, gens);
            const std::string tag = "h=" + std::to_string(h) + " r=" + std::to_string(r);

            const auto derived = derived_system(sys);
            v.require(same_module(derived, span_of(n, ys)), tag + " derived system is not span{dy}");
            v.require(is_frobenius_integrable(derived), tag + " derived system not integrable");
            const auto rep = character_report(sys, origin(n));
            v.require(rep.character_chain == 1, tag + " character " + std::to_string(rep.character_chain));
            const unsigned cls = darboux_class_at(theta, origin(n));
            v.require(cls == 2 * h + 1, tag + " Darboux class " + std::to_string(cls));
            info << (info.tellp() ? ", " : "") << tag << ": character " << rep.character_chain << " (s0 - s1 = "
                 << rep.first_polar_codimension << "), class " << cls;
        }
    }
    v.detail << (v.ok ? "" : " | ") << info.str();
    return v;
}

Verdict lemma_suite() {
    Verdict v;
    std::size_t checked = 0;
    for (const auto& entry : catalog()) {
        const auto rep = entry.analyze();
        const auto label = documented_chain(entry);
        const std::size_t drop = rep.derived_ranks.size() > 1 ? rep.derived_ranks[0] - rep.derived_ranks[1] : 0;
        for (const auto& p : rep.points) {
            const auto* c = chain(p, label);
            if (!c) {
                v.require(false, entry.name + " has no chain " + label);
                continue;
            }
            ++checked;
            const bool character_one = c->report.character_chain == 1;
            v.require(character_one == (drop == 1), entry.name + ": character " +
                                                        std::to_string(c->report.character_chain) + ", rank drop " +
                                                        std::to_string(drop));
        }
    }
    if (v.ok) v.detail << checked << " catalog chains agree";
    return v;
}

Verdict integrability_suite() {
    Verdict v;
    std::size_t checked = 0;
    auto check = [&](const std::string& tag, const PfaffianSystem& sys, const Point& p) {
        const bool frobenius = is_frobenius_integrable(sys);
        const bool gender_zero = system_gender_at(sys, p, GenderConvention::modulo_system) == 0;
        const auto rep = character_report(sys, p);
        const bool full = rep.rho_max == sys.nvars() - sys.rank();
        v.require(frobenius == gender_zero && gender_zero == full,
                  tag + ": frobenius " + std::to_string(frobenius) + ", gender zero " + std::to_string(gender_zero) +
                      ", rho_max " + std::to_string(rep.rho_max));
        ++checked;
    };
    for (const auto& entry : catalog()) {
        const auto doc = entry.document();
        const auto sys = doc.system(*entry.options.system);
        for (const auto& p : entry.analyze().points) check(entry.name, sys, p.coordinates);
    }
    Random rng(2024);
    std::size_t built = 0;
    for (std::size_t attempt = 0; built < random_integrable_systems && attempt < 50 * random_integrable_systems;
         ++attempt) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(3, 5));
        const std::size_t r = static_cast<std::size_t>(rng.integer(1, 2));
        std::vector<DifferentialForm> gens;
        for (std::size_t i = 0; i < r; ++i) {
            const auto f = rng.polynomial(n, 2, 4) + var(n, i);
            const auto g = rng.polynomial(n, 1, 2) + cst(n, 1);
            gens.push_back(g * exterior_derivative(DifferentialForm::function(f)));
        }
        std::optional<PfaffianSystem> sys;
        try {
            sys.emplace(n, gens);
        } catch (const Error&) {
            continue;
        }
        const Point p = rng.point(n);
        if (!sys->independent_at(p)) continue;
        ++built;
        check("random system " + std::to_string(built), *sys, p);
    }
    v.require(built == random_integrable_systems, "only " + std::to_string(built) + " random systems built");
    if (v.ok) v.detail << checked << " systems agree (" << built << " random integrable)";
    return v;
}

Verdict flag_claim() {
    Verdict v;
    Random rng(77);
    for (const char* name : {"goursat-2", "goursat-3"}) {
        const auto& entry = catalog_entry(name);
        const auto doc = entry.document();
        for (std::size_t k = 0; k < goursat_points; ++k) {
            AnalysisOptions opts = entry.options;
            opts.coordinates = rng.point(doc.nvars());
            const auto rep = analyze(doc, opts);
            const auto& p = rep.points.at(0);
            const auto* c = chain(p, "default");
            v.require(rep.flag_system, std::string(name) + " not a flag system");
            v.require(!p.degenerate && c && c->report.character_chain == rep.n - rep.r - 1,
                      std::string(name) + " character differs from n - r - 1 at point " + std::to_string(k));
        }
    }
    if (v.ok) v.detail << "flag systems with character n - r - 1 at " << goursat_points << " points on 4- and 5-charts";
    return v;
}

Verdict algebra_suites() {
    Verdict v;
    set_invariant_checks(true);
    const auto before = verified_nullspace_calls();
    std::size_t total = 0;
    for (const auto& r : run_all_properties(4242, property_cases)) {
        total += r.cases;
        v.require(r.cases >= property_cases, r.name + " ran " + std::to_string(r.cases) + " cases");
        v.require(r.ok(), r.name + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure);
    }
    const auto verified = verified_nullspace_calls() - before;
    set_invariant_checks(false);
    v.require(verified > 0, "no nullspace call was verified");
    if (v.ok) v.detail << total << " cases, zero failures, " << verified << " nullspace calls checked";
    return v;
}

Verdict curve_tracing() {
    Verdict v;
    const auto sys = catalog_entry("example-A").document().system("A");
    const auto start = std::chrono::steady_clock::now();
    // annihilator basis vector 0 at the origin is e4
    const auto curve = trace_integral_curve(sys, origin(5), Vector{0, 0, 0, 1, 0}, 1e-3, 1000);
    const double elapsed = seconds_since(start);
    double off_axis = 0;
    for (const auto& s : curve.samples) {
        for (std::size_t i : {0, 1, 2, 4}) off_axis = std::max(off_axis, std::fabs(s[i]));
    }
    v.require(curve.samples.size() == 1001, "sample count " + std::to_string(curve.samples.size()));
    v.require(off_axis <= trace_axis_tolerance, "left the x4-axis by " + std::to_string(off_axis));
    v.require(curve.max_residual <= trace_residual_tolerance, "max residual " + std::to_string(curve.max_residual));
    v.require(elapsed < max_runtime_seconds, "runtime " + std::to_string(elapsed) + " s");
    if (v.ok) v.detail << "max residual " << curve.max_residual << ", off-axis " << off_axis << ", " << elapsed << " s";
    return v;
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    pclose(pipe);
    return out;
}

Verdict determinism() {
    Verdict v;
    const std::string command = std::string("\"") + PFAFF_BINARY + "\" catalog run-all --json";
    const auto first = capture(command);
    const auto second = capture(command);
    v.require(!first.empty(), "no output");
    v.require(first == second, "outputs differ");
    v.require(nlohmann::json::accept(first), "output is not a single JSON document");
    if (v.ok) v.detail << first.size() << " identical bytes";
    return v;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"example A", verify_example_a},
        {"example A'", verify_example_a_prime},
        {"example B", verify_example_b},
        {"example B'", verify_example_b_prime},
        {"example C", verify_example_c},
        {"gender example", gender_example},
        {"Darboux model", darboux_model},
        {"character-1 lemma", lemma_suite},
        {"integrability equivalence", integrability_suite},
        {"Goursat flags", flag_claim},
        {"algebra property suites", algebra_suites},
        {"curve tracing", curve_tracing},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        failed += v.ok ? 0 : 1;
        std::cout << (v.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << v.detail.str()
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
