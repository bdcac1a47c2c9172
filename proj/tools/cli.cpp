#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "tcover/algebra.hpp"
#include "tcover/connected.hpp"
#include "tcover/duality.hpp"
#include "tcover/error.hpp"
#include "tcover/lpdual.hpp"
#include "tcover/packing.hpp"

namespace tcover::cli {

namespace {

long long parse_int(std::string_view text, const std::string& what) {
    long long v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size() || text.empty())
        throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
    return v;
}

Json ideal_json(const MonomialIdeal& ideal) { return Json(ideal.to_strings()); }

Json monomials_json(const std::vector<Monomial>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(m.to_string());
    return a;
}

Json header(const RunConfig& c, const Graph& g) {
    Json j;
    j["command"] = c.command;
    j["graph"] = to_graph6(g);
    j["n"] = g.order();
    j["t"] = c.t;
    return j;
}

// Prediction where one exists; t = 1 or t > n have no classification.
std::optional<Classification> prediction(const Graph& g, int t) {
    if (t < 2 || t > g.order() || !g.connected()) return std::nullopt;
    return theorem_classification(g, t);
}

void add_prediction(Json& j, const std::optional<Classification>& cls) {
    if (!cls) return;
    j["predicted"] = cls->verdict;
    j["case"] = to_string(cls->tag);
    if (!cls->reason.empty()) j["reason"] = cls->reason;
}

int cmd_gens(const RunConfig& c, Json& j) {
    Graph g = parse_graph_spec(c.graph);
    TConnInstance inst(g, c.t);
    j = header(c, g);

    auto closed_form = [&]() -> MonomialIdeal {
        if (g == path(g.order())) return path_cover_gens(g.order(), c.t);
        if (g.order() >= 3 && g == cycle(g.order())) return cycle_cover_gens(g.order(), c.t);
        throw UsageError("--closed-form needs a graph given as path:n or cycle:n");
    };

    switch (c.gens_mode) {
        case GensMode::BruteForce: {
            MonomialIdeal ideal = cover_ideal(inst);
            j["mode"] = "brute-force";
            j["count"] = ideal.size();
            j["generators"] = ideal_json(ideal);
            return kOk;
        }
        case GensMode::ClosedForm: {
            MonomialIdeal ideal = closed_form();
            j["mode"] = "closed-form";
            j["count"] = ideal.size();
            j["generators"] = ideal_json(ideal);
            return kOk;
        }
        case GensMode::Check: {
            MonomialIdeal formula = closed_form();
            MonomialIdeal brute = cover_ideal(inst);
            bool same = formula == brute;
            j["mode"] = "check";
            j["equal"] = same;
            j["closed_form"] = ideal_json(formula);
            j["brute_force"] = ideal_json(brute);
            return same ? kOk : kDisagreement;
        }
    }
    return kOk;
}

int cmd_simis(const RunConfig& c, Json& j) {
    Graph g = parse_graph_spec(c.graph);
    MonomialIdeal ideal = cover_ideal(TConnInstance(g, c.t));
    int s_max = c.s_max > 0 ? c.s_max : c.t;
    SimisReport r = simis_check(ideal, s_max, c.generator_cap);
    auto cls = prediction(g, c.t);

    j = header(c, g);
    j["ideal"] = ideal_json(ideal);
    j["s_max"] = s_max;
    j["verdict"] = r.witness ? "WitnessAt" : "EqualUpTo";
    if (r.witness) j["witness"] = {{"s", r.witness->s}, {"monomial", r.witness->monomial.to_string()}};
    add_prediction(j, cls);
    return (r.witness && cls && cls->verdict) ? kDisagreement : kOk;
}

int cmd_konig(const RunConfig& c, Json& j) {
    Graph g = parse_graph_spec(c.graph);
    MonomialIdeal ideal = cover_ideal(TConnInstance(g, c.t));
    KonigResult k = is_konig(ideal);
    j = header(c, g);
    j["ideal"] = ideal_json(ideal);
    j["konig"] = k.konig;
    j["height"] = k.height;
    j["max_disjoint"] = k.max_disjoint;
    j["certificate"] = monomials_json(k.certificate);
    return kOk;
}

int cmd_packing(const RunConfig& c, Json& j) {
    Graph g = parse_graph_spec(c.graph);
    MonomialIdeal ideal = cover_ideal(TConnInstance(g, c.t));
    PackingReport p = is_packed(ideal, c.threads);
    auto cls = prediction(g, c.t);

    j = header(c, g);
    j["packed"] = p.packed;
    j["minors_checked"] = p.minors_checked;
    if (p.witness) {
        const auto& w = *p.witness;
        j["witness"] = {{"zeros", w.minor.zeros().labels()},
                        {"ones", w.minor.ones().labels()},
                        {"restricted_gens", ideal_json(w.restricted)},
                        {"height", w.height},
                        {"max_disjoint", w.max_disjoint}};
    }
    add_prediction(j, cls);
    return (cls && cls->verdict != p.packed) ? kDisagreement : kOk;
}

WeightVector parse_alpha(const std::string& text, int n) {
    if (text.empty()) return WeightVector(static_cast<std::size_t>(n), 1);
    WeightVector alpha;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        long long v = parse_int(item, "alpha entry");
        if (v < 0 || v > 1'000'000) throw UsageError("alpha entries must lie in [0, 1000000]");
        alpha.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(alpha.size()) != n)
        throw UsageError("alpha has " + std::to_string(alpha.size()) + " entries, graph has " + std::to_string(n) +
                         " vertices");
    return alpha;
}

int cmd_lp(const RunConfig& c, Json& j) {
    Graph g = parse_graph_spec(c.graph);
    TConnInstance inst(g, c.t);
    WeightVector alpha = parse_alpha(c.alpha, g.order());
    BinaryMatrix a = incidence_matrix(inst);
    BinaryMatrix b = minimal_solutions(a);
    long long ta = tau(b, alpha), nv = nu(b, alpha);

    j = header(c, g);
    j["alpha"] = alpha;
    j["incidence"] = a.row_strings();
    j["covers"] = b.row_strings();
    j["tau"] = ta;
    j["nu"] = nv;
    j["gap"] = ta != nv;
    return kOk;
}

int cmd_gap_search(const RunConfig& c, Json& j) {
    Graph g = parse_graph_spec(c.graph);
    GapSearchResult r = duality_gap_search(TConnInstance(g, c.t), c.entry_bound, c.alpha_cap);
    j = header(c, g);
    j["bound"] = c.entry_bound;
    j["found"] = r.witness.has_value();
    if (r.witness) {
        j["witness"] = *r.witness;
        j["tau"] = r.tau;
        j["nu"] = r.nu;
    }
    j["evaluated"] = r.evaluated;
    j["skipped_by_symmetry"] = r.skipped_by_symmetry;
    return kOk;
}

int harness_exit(const HarnessReport& r) {
    if (r.disagreements > 0) return kDisagreement;
    if (r.aborted > 0) return kResourceAbort;
    return kOk;
}

int cmd_verify(const RunConfig& c, Json& j) {
    HarnessConfig h;
    h.n_max = c.n_max;
    h.t_min = c.t_min;
    h.t_max = c.t_max;
    h.s_max = c.s_max;
    h.family_n_max = c.family_n_max;
    h.family_t_max = c.family_t_max;
    h.dedup = c.dedup;
    h.threads = c.threads;
    h.generator_cap = c.generator_cap;
    HarnessReport r = verify_theorem(h);
    j = report_to_json(r);
    return harness_exit(r);
}

int cmd_report(const RunConfig& c, Json& j) {
    std::ifstream in(c.input, std::ios::binary);
    if (!in) throw UsageError("cannot open report '" + c.input + "'");
    Json parsed;
    try {
        parsed = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("report is not valid JSON: ") + e.what());
    }
    HarnessReport r = report_from_json(parsed);
    j = report_to_json(r);
    return harness_exit(r);
}

// --- report schema ---------------------------------------------------------

const Json& field(const Json& obj, const char* key, bool (Json::*is)() const noexcept, const char* type) {
    auto it = obj.find(key);
    if (it == obj.end()) throw UsageError(std::string("missing field '") + key + "'");
    if (!((*it).*is)()) throw UsageError(std::string("field '") + key + "' must be " + type);
    return *it;
}

int int_field(const Json& obj, const char* key) {
    const Json& v = field(obj, key, &Json::is_number_integer, "an integer");
    return v.get<int>();
}

std::vector<int> label_list(const Json& v, const char* key) {
    if (!v.is_array()) throw UsageError(std::string("field '") + key + "' must be an array");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer() || e.get<long long>() < 1 || e.get<long long>() > kMaxVertices)
            throw UsageError(std::string("field '") + key + "' must hold vertex labels");
        out.push_back(e.get<int>());
    }
    return out;
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) throw UsageError("unexpected field '" + it.key() + "' in " + where);
    }
}

Json row_to_json(const HarnessRow& r) {
    Json j;
    j["graph"] = r.graph;
    j["n"] = r.n;
    j["t"] = r.t;
    j["predicted"] = r.predicted;
    j["case"] = r.case_tag;
    j["packed_computed"] = r.packed_computed;
    j["simis_bounded"] = r.simis_bounded;
    j["s_max"] = r.s_max;
    if (r.witness_s) j["witness"] = {{"s", *r.witness_s}, {"monomial", r.witness_monomial.value_or("")}};
    if (r.minor_zeros) j["minor"] = {{"zeros", *r.minor_zeros}, {"ones", r.minor_ones.value_or(std::vector<int>{})}};
    if (r.error) j["error"] = *r.error;
    j["disagreement"] = r.disagreement;
    return j;
}

HarnessRow row_from_json(const Json& j) {
    if (!j.is_object()) throw UsageError("row must be an object");
    check_keys(j,
               {"graph", "n", "t", "predicted", "case", "packed_computed", "simis_bounded", "s_max", "witness",
                "minor", "error", "disagreement"},
               "row");
    HarnessRow r;
    r.graph = field(j, "graph", &Json::is_string, "a string").get<std::string>();
    try {
        Graph g = parse_graph6(r.graph);
        r.n = int_field(j, "n");
        if (g.order() != r.n) throw UsageError("row n does not match its graph");
    } catch (const ParseError& e) {
        throw UsageError(std::string("row graph: ") + e.what());
    }
    r.t = int_field(j, "t");
    if (r.t < 2 || r.t > r.n) throw UsageError("row t out of range");
    r.predicted = field(j, "predicted", &Json::is_boolean, "a boolean").get<bool>();
    r.case_tag = field(j, "case", &Json::is_string, "a string").get<std::string>();
    bool known = false;
    for (CaseTag c : {CaseTag::NEqualsT, CaseTag::Path, CaseTag::CycleSpecial, CaseTag::Bipartite, CaseTag::No})
        known = known || r.case_tag == to_string(c);
    if (!known) throw UsageError("unknown case tag '" + r.case_tag + "'");
    if (r.predicted != (r.case_tag != "no")) throw UsageError("predicted disagrees with case tag");
    r.packed_computed = field(j, "packed_computed", &Json::is_boolean, "a boolean").get<bool>();
    r.simis_bounded = field(j, "simis_bounded", &Json::is_string, "a string").get<std::string>();
    if (r.simis_bounded != "EqualUpTo" && r.simis_bounded != "WitnessAt" && r.simis_bounded != "Aborted")
        throw UsageError("unknown simis_bounded value '" + r.simis_bounded + "'");
    r.s_max = int_field(j, "s_max");
    if (auto it = j.find("witness"); it != j.end()) {
        if (!it->is_object()) throw UsageError("witness must be an object");
        check_keys(*it, {"s", "monomial"}, "witness");
        r.witness_s = int_field(*it, "s");
        std::string m = field(*it, "monomial", &Json::is_string, "a string").get<std::string>();
        try {
            r.witness_monomial = Monomial::parse(m).to_string();
        } catch (const Error& e) {
            throw UsageError(std::string("witness monomial: ") + e.what());
        }
        if (*r.witness_monomial != m) throw UsageError("witness monomial is not in normal form");
    }
    if ((r.simis_bounded == "WitnessAt") != r.witness_s.has_value())
        throw UsageError("witness present exactly when simis_bounded is WitnessAt");
    if (auto it = j.find("minor"); it != j.end()) {
        if (!it->is_object()) throw UsageError("minor must be an object");
        check_keys(*it, {"zeros", "ones"}, "minor");
        r.minor_zeros = label_list(field(*it, "zeros", &Json::is_array, "an array"), "zeros");
        r.minor_ones = label_list(field(*it, "ones", &Json::is_array, "an array"), "ones");
    }
    if (auto it = j.find("error"); it != j.end()) {
        if (!it->is_string()) throw UsageError("error must be a string");
        r.error = it->get<std::string>();
    }
    if ((r.simis_bounded == "Aborted") != r.error.has_value())
        throw UsageError("error present exactly when simis_bounded is Aborted");
    r.disagreement = field(j, "disagreement", &Json::is_boolean, "a boolean").get<bool>();
    return r;
}

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) s += (s.empty() ? "" : " ") + cell(e);
        return s;
    }
    if (v.is_object()) {
        std::string s;
        for (auto it = v.begin(); it != v.end(); ++it) s += (s.empty() ? "" : " ") + it.key() + "=" + cell(*it);
        return s;
    }
    return v.dump();
}

void write_output(const RunConfig& c, const Json& j, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (!c.output.empty()) {
        std::ofstream f(c.output, std::ios::binary);
        if (!f || !(f << text)) throw std::runtime_error("cannot write '" + c.output + "'");
        if (c.pretty) out << pretty(j);
        return;
    }
    out << (c.pretty ? pretty(j) : text);
}

}  // namespace

void apply_env_caps(RunConfig& config) {
    auto read = [](const char* name) -> std::optional<long long> {
        const char* v = std::getenv(name);
        if (v == nullptr || *v == '\0') return std::nullopt;
        long long x = parse_int(v, name);
        if (x <= 0) throw UsageError(std::string(name) + " must be positive");
        return x;
    };
    if (auto v = read("TCOVER_GENERATOR_CAP")) config.generator_cap = static_cast<std::size_t>(*v);
    if (auto v = read("TCOVER_ALPHA_CAP")) config.alpha_cap = static_cast<std::uint64_t>(*v);
}

void validate(const RunConfig& c) {
    static const std::vector<std::string> commands = {"gens", "simis",          "konig", "packing", "lp",
                                                      "gap-search", "verify-theorem", "report"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
        throw UsageError("unknown command '" + c.command + "'");
    if (c.generator_cap == 0 || c.alpha_cap == 0) throw UsageError("caps must be positive");
    if (c.threads < 1) throw UsageError("--threads must be at least 1");
    if (c.s_max < 0) throw UsageError("--smax must be positive");
    if (c.command == "verify-theorem") {
        if (c.n_max < 0 || c.n_max > 8) throw UsageError("--n-max must lie in [0, 8]");
        if (c.t_min < 2) throw UsageError("--t-min must be at least 2");
        if (c.t_max < 0 || c.family_n_max < 0 || c.family_t_max < 0) throw UsageError("bounds must be nonnegative");
        if (c.family_n_max > kMaxVars) throw UsageError("--family-n-max exceeds the variable limit");
        if (c.dedup == false && c.n_max > 7) throw UsageError("labeled enumeration without dedup supports n <= 7");
        return;
    }
    if (c.command == "report") {
        if (c.input.empty()) throw UsageError("report needs --input");
        return;
    }
    if (c.graph.empty()) throw UsageError(c.command + " needs --graph");
    if (c.t < 2) throw UsageError("--t must be at least 2");
    if (c.command == "gap-search" && (c.entry_bound < 0 || c.entry_bound > 20))
        throw UsageError("--bound must lie in [0, 20]");
}

Graph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string arg = spec.substr(colon + 1);
        if (kind == "file") {
            std::ifstream in(arg, std::ios::binary);
            if (!in) throw UsageError("cannot open graph file '" + arg + "'");
            std::string line;
            std::getline(in, line);
            return parse_graph6(line);
        }
        long long n = parse_int(arg, kind + " size");
        if (n < 1 || n > kMaxVars) throw UsageError("graph size out of range: " + arg);
        int k = static_cast<int>(n);
        if (kind == "path") return path(k);
        if (kind == "cycle") return cycle(k);
        if (kind == "star") return star(k);
        if (kind == "complete") return complete(k);
        throw UsageError("unknown graph family '" + kind + "'");
    }
    return parse_graph6(spec);
}

Json report_to_json(const HarnessReport& report) {
    Json j;
    Json rows = Json::array();
    for (const auto& r : report.rows) rows.push_back(row_to_json(r));
    j["rows"] = std::move(rows);
    j["disagreements"] = report.disagreements;
    if (!report.rows.empty()) {
        j["summary"] = {{"instances", report.rows.size()},
                        {"predicted_true", report.predicted_true},
                        {"predicted_false", report.predicted_false},
                        {"simis_witnesses", report.simis_witnesses},
                        {"aborted", report.aborted}};
    }
    return j;
}

HarnessReport report_from_json(const Json& j) {
    if (!j.is_object()) throw UsageError("report must be a JSON object");
    check_keys(j, {"rows", "disagreements", "summary"}, "report");
    HarnessReport r;
    for (const auto& row : field(j, "rows", &Json::is_array, "an array")) r.rows.push_back(row_from_json(row));
    int claimed = int_field(j, "disagreements");
    summarize(r);
    if (claimed < 0 || static_cast<std::size_t>(claimed) != r.disagreements)
        throw UsageError("disagreements does not match the rows");
    auto it = j.find("summary");
    if (r.rows.empty() != (it == j.end())) throw UsageError("summary present exactly when there are rows");
    if (it != j.end() && *it != report_to_json(r)["summary"]) throw UsageError("summary does not match the rows");
    return r;
}

std::string pretty(const Json& j) {
    std::ostringstream os;
    if (auto rows = j.find("rows"); rows != j.end() && rows->is_array()) {
        const std::vector<std::string> cols = {"graph", "n",      "t",       "predicted",   "case",
                                               "packed_computed", "simis_bounded", "witness", "disagreement"};
        std::vector<std::vector<std::string>> table{cols};
        for (const auto& row : *rows) {
            std::vector<std::string> line;
            for (const auto& c : cols) line.push_back(row.contains(c) ? cell(row[c]) : "-");
            table.push_back(std::move(line));
        }
        std::vector<std::size_t> width(cols.size(), 0);
        for (const auto& line : table)
            for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
        for (const auto& line : table) {
            for (std::size_t k = 0; k < line.size(); ++k)
                os << std::left << std::setw(static_cast<int>(width[k]) + 2) << line[k];
            os << '\n';
        }
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "rows") continue;
        os << it.key() << ": " << cell(*it) << '\n';
    }
    return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        Json j;
        int code = kOk;
        const std::string& cmd = config.command;
        if (cmd == "gens")
            code = cmd_gens(config, j);
        else if (cmd == "simis")
            code = cmd_simis(config, j);
        else if (cmd == "konig")
            code = cmd_konig(config, j);
        else if (cmd == "packing")
            code = cmd_packing(config, j);
        else if (cmd == "lp")
            code = cmd_lp(config, j);
        else if (cmd == "gap-search")
            code = cmd_gap_search(config, j);
        else if (cmd == "verify-theorem")
            code = cmd_verify(config, j);
        else
            code = cmd_report(config, j);
        write_output(config, j, out);
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceAbort;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kDisagreement;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace tcover::cli
