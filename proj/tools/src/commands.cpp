#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "twgamma/cli.hpp"

namespace twgamma::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

CommandResult emit(const json& j, const std::string& text, bool as_json, int code = kSuccess) {
    CommandResult r;
    r.exit_code = code;
    r.output = as_json ? j.dump(2) + "\n" : text;
    return r;
}

int status_code(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::Passed: return kSuccess;
        case WitnessStatus::Failed: return kCheckFailed;
        case WitnessStatus::NotApplicable: return kNotApplicable;
    }
    return kCheckFailed;
}

// "i,j=v;i,j=v" with 1-based node numbers.
IntMatrix parse_coefficients(const std::string& text, std::size_t n) {
    IntMatrix a(n, n);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        std::size_t i = 0, j = 0;
        long v = 0;
        char comma = 0, eq = 0;
        std::istringstream is(item);
        if (!(is >> i >> comma >> j >> eq >> v) || comma != ',' || eq != '=' || i < 1 || j < 1 || i > n || j > n)
            throw Error("bad coefficient entry '" + item + "', expected i,j=value");
        if (i > j) std::swap(i, j);
        a(i - 1, j - 1) += v;
    }
    return a;
}

}  // namespace

std::map<std::string, std::int64_t> parse_index_list(const std::string& text) {
    std::map<std::string, std::int64_t> out;
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw Error("unbalanced parentheses in index list");
        if (c == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw Error("unbalanced parentheses in index list");
    items.push_back(cur);
    for (auto item : items) {
        item = trim(item);
        if (item.empty()) continue;
        const auto eq = item.rfind('=');
        if (eq == std::string::npos) throw Error("index entry '" + item + "' needs the form (coords)=value");
        std::string key;
        for (char c : item.substr(0, eq))
            if (c != ' ' && c != '\t') key += c;
        const std::string value = trim(item.substr(eq + 1));
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) throw Error("index value '" + value + "' is not an integer");
        if (out.count(key)) throw Error("index for " + key + " given twice");
        out[key] = v;
    }
    return out;
}

JobSpec load_job(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open job file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("job file " + path + " is not valid JSON: " + e.what());
    }
    return job_from_json(j);
}

TitsIndexAssignment make_assignment(const K0Ring& ring, const std::map<std::string, std::int64_t>& indices,
                                    std::vector<std::string>& warnings) {
    const FinAbGroup& g = *ring.group();
    TitsIndexAssignment ind(g);
    for (const auto& [key, v] : indices) {
        FinAbElem chi;
        try {
            chi = g.parse(key);
        } catch (const Error& e) {
            throw Error("unknown element " + key + " of the character group " + to_string(g) + ": " + e.what());
        }
        if (ind.is_set(chi)) throw Error("index for " + g.format(chi) + " given twice");
        ind.set(chi, v);
    }
    for (const auto& a : g.elements())
        if (!a.is_zero() && !ind.is_set(a)) warnings.push_back("ind" + g.format(a) + " not given, using 1");
    return ind;
}

K0RingPtr build_ring(const std::string& group, const std::string& isogeny, const FixtureOptions& opt) {
    const auto cq = character_quotient(RootSystemSpec::parse(group), IsogenySpec::parse(isogeny));
    auto dims = fundamental_dimensions(RootDatum(cq.spec));
    if (opt.mutate_dims) opt.mutate_dims(cq, dims);
    return build_k0(cq, std::move(dims));
}

CommandResult cmd_ring(const JobSpec& job) {
    const auto ring = build_ring(job.group, job.isogeny);
    const RingReport r = make_ring_report(*ring);
    return emit(to_json(r), render_text(r), job.json_output);
}

CommandResult cmd_filtration(const JobSpec& job, bool split, bool ideal) {
    if (job.max_degree < 1) throw Error("--max-degree must be at least 1");
    const auto ring = build_ring(job.group, job.isogeny);
    FiltrationResult res;
    std::vector<std::string> warnings;
    if (split) {
        if (!job.indices.empty()) throw Error("the split filtration takes no indices");
        res = split_filtration(ring, job.max_degree);
    } else {
        const auto ind = make_assignment(*ring, job.indices, warnings);
        FiltrationOptions opt;
        opt.ideal_mode = ideal;
        res = twisted_filtration(ring, ind, job.max_degree, opt);
    }
    FiltrationReport r = make_filtration_report(res, split ? "split" : (ideal ? "twisted-ideal" : "twisted"));
    r.warnings.insert(r.warnings.begin(), warnings.begin(), warnings.end());
    return emit(to_json(r), render_text(r), job.json_output);
}

CommandResult cmd_witness_hspin(int n, int i_A, bool json_output) {
    if (n < 4 || n % 2) throw Error("--n must be an even integer >= 4 (the group is HSpin(2n))");
    const auto ring = build_ring("D" + std::to_string(n), "hs");
    const auto r = hspin_witness_check(ring, i_A);
    return emit(to_json(r), render_text(r), json_output, status_code(r.status));
}

CommandResult cmd_witness_e7(int i_A, const std::optional<IntMatrix>& coefficients, bool json_output) {
    const auto ring = build_ring("E7", "ad");
    const auto r = e7_special_cycle_check(ring, i_A, coefficients);
    return emit(to_json(r), render_text(r), json_output, status_code(r.status));
}

CommandResult cmd_examples(bool json_output) {
    const auto r = run_examples();
    return emit(to_json(r), render_text(r), json_output, r.failures() ? kCheckFailed : kSuccess);
}

CommandResult run(int argc, const char* const* argv) {
    CLI::App app{"Twisted gamma filtrations of K_0 of split simple groups", "twgamma"};
    app.require_subcommand(1);

    JobSpec job;
    std::string job_file, ind_text, coeff_text, witness_kind;
    bool as_json = false, split = false, ideal = false;
    int n = 0, i_A = -1;

    auto add_job_options = [&](CLI::App* sub) {
        sub->add_option("group", job.group, "root system, e.g. E7 or D8");
        sub->add_option("isogeny", job.isogeny, "sc | ad | so | hs | mu:<m> | sub:[...]");
        sub->add_option("--job", job_file, "JSON job file")->check(CLI::ExistingFile);
        sub->add_flag("--json", as_json, "JSON output");
    };

    auto* ring = app.add_subcommand("ring", "presentation and additive structure of K_0");
    add_job_options(ring);

    auto* filt = app.add_subcommand("filtration", "twisted gamma filtration");
    add_job_options(filt);
    auto* ind_opt = filt->add_option("--ind", ind_text, "Tits indices, e.g. \"(1,0)=4,(0,1)=4,(1,1)=2\"");
    auto* deg_opt = filt->add_option("--max-degree", job.max_degree, "highest degree")->check(CLI::PositiveNumber);
    filt->add_flag("--split", split, "split filtration (all indices 1, all classes)")->excludes(ind_opt);
    filt->add_flag("--ideal", ideal, "close pieces under translation by A");

    auto* wit = app.add_subcommand("witness", "torsion witness checks");
    wit->add_option("kind", witness_kind, "hspin | e7")->required()->check(CLI::IsMember({"hspin", "e7"}));
    wit->add_option("--n", n, "HSpin(2n): the rank n of D_n");
    wit->add_option("--iA", i_A, "2-adic valuation of the index of the Tits algebra")->required()->check(CLI::NonNegativeNumber);
    wit->add_option("--coeffs", coeff_text, "e7: quadratic coefficients \"i,j=v;...\" (1-based nodes)");
    wit->add_flag("--json", as_json, "JSON output");

    auto* ex = app.add_subcommand("examples", "run the regression fixtures");
    ex->add_flag("--json", as_json, "JSON output");

    std::ostringstream out, err;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? kSuccess : kUsage, out.str(), err.str()};
    }

    try {
        if (ring->parsed() || filt->parsed()) {
            if (!job_file.empty()) {
                const JobSpec file = load_job(job_file);
                const int deg = job.max_degree;
                const std::string group = job.group, iso = job.isogeny;
                job = file;
                if (!group.empty()) job.group = group;
                if (ring->count("isogeny") || filt->count("isogeny")) job.isogeny = iso;
                if (deg_opt->count()) job.max_degree = deg;
            }
            if (job.group.empty()) throw Error("a group (e.g. E7) or --job file is required");
            if (as_json) job.json_output = true;
            if (!ind_text.empty()) job.indices = parse_index_list(ind_text);
            return ring->parsed() ? cmd_ring(job) : cmd_filtration(job, split, ideal);
        }
        if (wit->parsed()) {
            if (witness_kind == "hspin") {
                if (n == 0) throw Error("witness hspin needs --n");
                return cmd_witness_hspin(n, i_A, as_json);
            }
            std::optional<IntMatrix> coeffs;
            if (!coeff_text.empty()) coeffs = parse_coefficients(coeff_text, 7);
            return cmd_witness_e7(i_A, coeffs, as_json);
        }
        return cmd_examples(as_json);
    } catch (const std::exception& e) {
        return {kUsage, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace twgamma::cli
