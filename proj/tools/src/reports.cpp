#include <sstream>

#include "twgamma/cli.hpp"

namespace twgamma::cli {

namespace {

// Integers that fit in a long are JSON numbers, larger ones decimal strings.
json int_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Integer int_from(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(j.get<long>());
}

json ints_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_json(x));
    return a;
}

std::vector<Integer> ints_from(const json& j) {
    std::vector<Integer> v;
    for (const auto& x : j) v.push_back(int_from(x));
    return v;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string ints_text(const std::vector<Integer>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.get_str());
    return "[" + join(s, ", ") + "]";
}

std::string abelian_text(std::size_t free_rank, const std::vector<Integer>& factors) {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& f : factors) parts.push_back("Z/" + f.get_str());
    return parts.empty() ? "0" : join(parts, " + ");
}

}  // namespace

std::size_t ExamplesReport::failures() const {
    std::size_t n = 0;
    for (const auto& f : fixtures) n += f.passed ? 0 : 1;
    return n;
}

RingReport make_ring_report(const K0Ring& ring) {
    RingReport r;
    const auto& cq = ring.character_quotient();
    r.group = cq ? cq->spec.name() : ring.label();
    r.isogeny = cq ? cq->isogeny.name() : "";
    r.character_group = ring.group()->factors();
    for (const auto& w : ring.omega_bars()) r.omega_bars.push_back(ring.group()->format(w));
    r.dims = ring.dims();
    r.free_rank = ring.invariants().free_rank;
    r.invariant_factors = ring.invariants().factors;
    const auto p = presentation(ring);
    r.generators = p.generators;
    r.relations = p.relations;
    return r;
}

FiltrationReport make_filtration_report(const FiltrationResult& res, const std::string& mode) {
    FiltrationReport r;
    const K0Ring& ring = *res.ring;
    const FinAbGroup& g = *ring.group();
    const auto& cq = ring.character_quotient();
    r.group = cq ? cq->spec.name() : ring.label();
    r.isogeny = cq ? cq->isogeny.name() : "";
    r.mode = mode;
    r.max_degree = res.max_degree;
    for (const auto& a : g.elements()) r.indices[g.format(a)] = res.assignment.get(a);
    for (const auto& c : res.classes) r.classes.push_back(g.format(c));
    for (int i = 0; i <= res.max_degree; ++i) {
        PieceReport p;
        p.degree = i;
        for (const auto& x : res.piece(i).generators()) {
            p.generators.push_back(x.coeffs());
            p.generator_text.push_back(to_string(x));
        }
        const auto inv = res.piece(i).invariants();
        p.free_rank = inv.free_rank;
        p.invariant_factors = inv.factors;
        r.pieces.push_back(std::move(p));
    }
    for (int i = 0; i < res.max_degree; ++i) {
        const auto q = graded_quotient(res, i);
        r.graded.push_back({i, q.free_rank, q.factors});
    }
    r.sweeps = res.diagnostics.sweeps;
    r.warnings = res.warnings;
    return r;
}

json to_json(const JobSpec& j) {
    json o;
    o["group"] = j.group;
    o["isogeny"] = j.isogeny;
    o["indices"] = j.indices;
    o["max_degree"] = j.max_degree;
    o["format"] = j.json_output ? "json" : "text";
    return o;
}

JobSpec job_from_json(const json& j) {
    JobSpec s;
    if (!j.is_object() || !j.contains("group")) throw Error("job spec needs a \"group\" field");
    s.group = j.at("group").get<std::string>();
    s.isogeny = j.value("isogeny", std::string("sc"));
    if (j.contains("indices")) s.indices = j.at("indices").get<std::map<std::string, std::int64_t>>();
    s.max_degree = j.value("max_degree", 5);
    s.json_output = j.value("format", std::string("text")) == "json";
    return s;
}

json to_json(const RingReport& r) {
    json o;
    o["group"] = r.group;
    o["isogeny"] = r.isogeny;
    o["character_group"] = r.character_group;
    o["omega_bars"] = r.omega_bars;
    o["dims"] = ints_json(r.dims);
    o["free_rank"] = r.free_rank;
    o["invariant_factors"] = ints_json(r.invariant_factors);
    o["generators"] = r.generators;
    o["relations"] = r.relations;
    return o;
}

RingReport ring_report_from_json(const json& j) {
    RingReport r;
    r.group = j.at("group").get<std::string>();
    r.isogeny = j.at("isogeny").get<std::string>();
    r.character_group = j.at("character_group").get<std::vector<std::int64_t>>();
    r.omega_bars = j.at("omega_bars").get<std::vector<std::string>>();
    r.dims = ints_from(j.at("dims"));
    r.free_rank = j.at("free_rank").get<std::size_t>();
    r.invariant_factors = ints_from(j.at("invariant_factors"));
    r.generators = j.at("generators").get<std::vector<std::string>>();
    r.relations = j.at("relations").get<std::vector<std::string>>();
    return r;
}

json to_json(const FiltrationReport& r) {
    json o;
    o["group"] = r.group;
    o["isogeny"] = r.isogeny;
    o["mode"] = r.mode;
    o["max_degree"] = r.max_degree;
    o["indices"] = r.indices;
    o["classes"] = r.classes;
    json pieces = json::array();
    for (const auto& p : r.pieces) {
        json gens = json::array();
        for (const auto& v : p.generators) gens.push_back(ints_json(v));
        pieces.push_back({{"degree", p.degree},
                          {"generators", gens},
                          {"generator_text", p.generator_text},
                          {"free_rank", p.free_rank},
                          {"invariant_factors", ints_json(p.invariant_factors)}});
    }
    o["pieces"] = pieces;
    json graded = json::array();
    for (const auto& g : r.graded)
        graded.push_back(
            {{"degree", g.degree}, {"free_rank", g.free_rank}, {"invariant_factors", ints_json(g.invariant_factors)}});
    o["graded"] = graded;
    o["sweeps"] = r.sweeps;
    o["warnings"] = r.warnings;
    return o;
}

FiltrationReport filtration_report_from_json(const json& j) {
    FiltrationReport r;
    r.group = j.at("group").get<std::string>();
    r.isogeny = j.at("isogeny").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.max_degree = j.at("max_degree").get<int>();
    r.indices = j.at("indices").get<std::map<std::string, std::int64_t>>();
    r.classes = j.at("classes").get<std::vector<std::string>>();
    for (const auto& p : j.at("pieces")) {
        PieceReport pr;
        pr.degree = p.at("degree").get<int>();
        for (const auto& v : p.at("generators")) pr.generators.push_back(ints_from(v));
        pr.generator_text = p.at("generator_text").get<std::vector<std::string>>();
        pr.free_rank = p.at("free_rank").get<std::size_t>();
        pr.invariant_factors = ints_from(p.at("invariant_factors"));
        r.pieces.push_back(std::move(pr));
    }
    for (const auto& g : j.at("graded"))
        r.graded.push_back(
            {g.at("degree").get<int>(), g.at("free_rank").get<std::size_t>(), ints_from(g.at("invariant_factors"))});
    r.sweeps = j.at("sweeps").get<unsigned>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

json to_json(const WitnessReport& r) {
    json o;
    o["kind"] = r.kind;
    o["group"] = r.group;
    o["i_A"] = r.i_A;
    o["index"] = int_json(r.index);
    o["d"] = int_json(r.d);
    o["coefficient"] = int_json(r.coefficient);
    o["value"] = ints_json(r.value);
    o["value_text"] = r.value_text;
    o["value_order"] = int_json(r.value_order);
    o["admissible"] = r.admissible;
    o["nontrivial"] = r.nontrivial;
    o["predicted"] = r.predicted;
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    o["checks"] = checks;
    o["status"] = to_string(r.status);
    o["verdict"] = r.verdict();
    o["trace"] = r.trace;
    return o;
}

WitnessReport witness_report_from_json(const json& j) {
    WitnessReport r;
    r.kind = j.at("kind").get<std::string>();
    r.group = j.at("group").get<std::string>();
    r.i_A = j.at("i_A").get<int>();
    r.index = int_from(j.at("index"));
    r.d = int_from(j.at("d"));
    r.coefficient = int_from(j.at("coefficient"));
    r.value = ints_from(j.at("value"));
    r.value_text = j.at("value_text").get<std::string>();
    r.value_order = int_from(j.at("value_order"));
    r.admissible = j.at("admissible").get<bool>();
    r.nontrivial = j.at("nontrivial").get<bool>();
    r.predicted = j.at("predicted").get<bool>();
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    r.status = parse_witness_status(j.at("status").get<std::string>());
    r.trace = j.at("trace").get<std::vector<std::string>>();
    return r;
}

json to_json(const ExamplesReport& r) {
    json a = json::array();
    for (const auto& f : r.fixtures) a.push_back({{"id", f.id}, {"passed", f.passed}, {"detail", f.detail}});
    return {{"fixtures", a}, {"failures", r.failures()}};
}

ExamplesReport examples_report_from_json(const json& j) {
    ExamplesReport r;
    for (const auto& f : j.at("fixtures"))
        r.fixtures.push_back({f.at("id").get<std::string>(), f.at("passed").get<bool>(), f.at("detail").get<std::string>()});
    return r;
}

std::string render_text(const RingReport& r) {
    std::ostringstream os;
    os << "group " << r.group << " (" << r.isogeny << ")\n";
    std::vector<std::string> a;
    for (auto f : r.character_group) a.push_back("Z/" + std::to_string(f));
    os << "character group A: " << (a.empty() ? "0" : join(a, " + ")) << "\n";
    for (std::size_t i = 0; i < r.omega_bars.size(); ++i)
        os << "  omega_" << i + 1 << ": class " << r.omega_bars[i] << ", dim " << r.dims[i] << "\n";
    if (r.character_group.empty()) {
        os << "ring: Z\n";
        return os.str();
    }
    os << "generators:\n";
    for (const auto& g : r.generators) os << "  " << g << "\n";
    os << "relations:\n";
    for (const auto& g : r.relations) os << "  " << g << "\n";
    os << "additive structure: " << abelian_text(r.free_rank, r.invariant_factors) << "\n";
    os << "torsion: " << ints_text(r.invariant_factors) << "\n";
    return os.str();
}

std::string render_text(const FiltrationReport& r) {
    std::ostringstream os;
    os << r.mode << " filtration of " << r.group << " (" << r.isogeny << "), degrees 0.." << r.max_degree << "\n";
    os << "indices:";
    for (const auto& [k, v] : r.indices) os << " " << k << "=" << v;
    os << "\nfactor classes: " << join(r.classes, " ") << "\n";
    for (const auto& p : r.pieces) {
        os << "piece " << p.degree << ": " << abelian_text(p.free_rank, p.invariant_factors);
        os << "  generated by " << (p.generator_text.empty() ? "0" : join(p.generator_text, ", ")) << "\n";
    }
    for (const auto& g : r.graded)
        os << "graded " << g.degree << "/" << g.degree + 1 << ": " << abelian_text(g.free_rank, g.invariant_factors)
           << "  " << ints_text(g.invariant_factors) << "\n";
    os << "fixpoint sweeps: " << r.sweeps << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string render_text(const WitnessReport& r) {
    std::ostringstream os;
    os << r.kind << " witness for " << r.group << ", i_A = " << r.i_A << " (index " << r.index << ")\n";
    for (const auto& t : r.trace) os << "  " << t << "\n";
    os << "status: " << to_string(r.status) << "\n";
    if (r.kind == "e7" && r.status != WitnessStatus::Failed)
        os << "q(x) in the second graded piece: " << (r.nontrivial ? "non-trivial" : "trivial") << "\n";
    return os.str();
}

std::string render_text(const ExamplesReport& r) {
    std::ostringstream os;
    for (const auto& f : r.fixtures) {
        os << (f.passed ? "PASS " : "FAIL ") << f.id;
        if (!f.passed && !f.detail.empty()) os << "  (" << f.detail << ")";
        os << "\n";
    }
    os << r.fixtures.size() - r.failures() << "/" << r.fixtures.size() << " fixtures passed\n";
    return os.str();
}

}  // namespace twgamma::cli
