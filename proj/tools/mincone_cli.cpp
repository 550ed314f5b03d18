#include "mincone/acceptance.hpp"
#include "mincone/classify.hpp"
#include "mincone/cones.hpp"
#include "mincone/diffgeom.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mincone;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--input", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Input is either a cone file ("cone ..." header), a bare clifford system
// ("clifford ..." header, for invariants), or a bare polynomial.
Polynomial read_polynomial(const std::string& text) {
    if (text.rfind("cone ", 0) == 0) {
        std::istringstream in(text);
        return parse_cone(in).polynomial;
    }
    return parse_poly(text, -1);
}

int cmd_construct(const std::string& family, int q, int m, int kplus, int kminus,
                  int p, int pq, int dm, int dd) {
    ConeSpec cone;
    if (family == "clifford" || family == "fkm") {
        if (q < 1 || m < 1) throw CLI::ValidationError("construct", "clifford/fkm need --q and --m");
        int d = delta(q);
        if (m % d != 0)
            throw CLI::ValidationError("construct", "delta(q)=" + std::to_string(d) + " must divide m");
        CliffordSystem s;
        if (kplus < 0 && kminus < 0 && m == d) {
            s = irreducible_system(q);
        } else {
            int kp = kplus < 0 ? m / d - std::max(kminus, 0) : kplus;
            int km = kminus < 0 ? 0 : kminus;
            if (kp + km != m / d)
                throw CLI::ValidationError("construct", "kplus + kminus must equal m / delta(q)");
            s = direct_sum(q, kp, km);
        }
        cone = family == "clifford" ? clifford_cubic(s) : fkm_quartic(s);
    } else if (family == "quadric") {
        if (p < 2 || pq < 2) throw CLI::ValidationError("construct", "quadric needs --p and --q >= 2");
        cone = quadric_cone(p, pq);
    } else if (family == "det") {
        if (dm < 2) throw CLI::ValidationError("construct", "det needs --m >= 2");
        cone = determinant_cone(dm);
    } else if (family == "cartan") {
        if (dd < 1) throw CLI::ValidationError("construct", "cartan needs --d in {1,2,4,8}");
        cone = cartan_cubic(dd);
    } else if (family == "hsiang") {
        cone = hsiang_cubic();
    } else if (family == "reducible") {
        cone = reducible_example();
    } else {
        throw CLI::ValidationError("construct", "unknown family '" + family + "'");
    }
    std::cout << format_cone(cone);
    return kExitOk;
}

int cmd_verify(const std::string& input, bool as_json) {
    Polynomial f = read_polynomial(read_all(input));
    auto rep = verify_eigenfunction(f);
    std::cout << (as_json ? rep.render_json() : rep.render());
    return rep.is_eigenfunction ? kExitOk : kExitMath;
}

int cmd_invariants(const std::string& input, bool as_json) {
    std::string text = read_all(input);
    std::istringstream in(text);
    CliffordSystem s = parse_system(in);
    auto check = verify_system(s);
    auto inv = system_invariants(s);
    if (as_json) {
        json j = {{"q", inv.q}, {"m", inv.m}, {"valid", check.pass}};
        j["omega_trace_abs"] = inv.omega_trace_abs ? json(inv.omega_trace_abs->to_string()) : json(nullptr);
        if (!check.pass) j["witness"] = check.witness;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "q: " << inv.q << "\n";
        std::cout << "m: " << inv.m << "\n";
        std::cout << "valid: " << (check.pass ? "true" : "false") << "\n";
        std::cout << "omega_trace_abs: "
                  << (inv.omega_trace_abs ? inv.omega_trace_abs->to_string() : "none") << "\n";
        if (!check.pass) std::cout << "witness: " << check.witness << "\n";
    }
    return check.pass ? kExitOk : kExitMath;
}

int cmd_classify(long n, bool as_json) {
    auto rep = congruence_class_count(n);
    if (as_json) {
        json pairs = json::array(), classes = json::array();
        for (auto [q, m] : rep.admissible_pairs) pairs.push_back({{"q", q}, {"m", m}});
        for (const auto& c : rep.class_list)
            classes.push_back({{"q", c.q}, {"m", c.m}, {"kplus", c.k_plus}, {"kminus", c.k_minus}});
        json j = {{"n", rep.n}, {"realizable", rep.realizable}, {"class_count", rep.class_count},
                  {"pairs", pairs}, {"classes", classes}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.render();
    }
    return kExitOk;
}

int cmd_scan(long from, long to, bool as_json) {
    auto bad = realizability_scan(from, to);
    if (as_json) {
        json j = {{"from", from}, {"to", to}, {"non_realizable", bad}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (long n : bad) std::cout << "non_realizable: " << n << "\n";
        std::cout << "count: " << bad.size() << "\n";
    }
    return kExitOk;
}

int cmd_table(long max_n, bool as_json) {
    if (as_json) {
        json rows = json::array();
        for (long n = 4; n <= max_n; ++n)
            rows.push_back({{"n", n}, {"classes", congruence_class_count(n).class_count}});
        std::cout << json{{"table", "congruence"}, {"rows", rows}}.dump(2) << "\n";
    } else {
        for (long n = 4; n <= max_n; ++n)
            std::cout << "n=" << n << ": " << congruence_class_count(n).class_count << "\n";
    }
    return kExitOk;
}

int cmd_selftest(double budget, bool as_json) {
    auto results = run_acceptance(budget);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    if (as_json) {
        json rows = json::array();
        for (const auto& r : results)
            rows.push_back({{"criterion", r.id}, {"pass", r.pass}, {"detail", r.detail},
                            {"elapsed_ms", r.elapsed_ms}});
        std::cout << json{{"criteria", rows}, {"failed", failed}}.dump(2) << "\n";
    } else {
        std::cout << render_acceptance(results);
    }
    return failed == 0 ? kExitOk : kExitMath;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic workbench for algebraic minimal cones"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured JSON output");

    auto* construct = app.add_subcommand("construct", "construct a cone polynomial");
    std::string family;
    construct->add_option("family", family, "clifford|quadric|det|cartan|hsiang|reducible|fkm")
        ->required();
    int c_q = -1, c_m = -1, c_kplus = -1, c_kminus = -1, c_p = -1, c_d = -1;
    construct->add_option("--q", c_q, "number of generators minus one (clifford/fkm) or negative-definite count (quadric)");
    construct->add_option("--m", c_m, "half-dimension (clifford/fkm) or matrix size (det)");
    construct->add_option("--kplus", c_kplus, "positive direct summands");
    construct->add_option("--kminus", c_kminus, "negated direct summands");
    construct->add_option("--p", c_p, "positive-definite count (quadric)");
    construct->add_option("--d", c_d, "division algebra dimension (cartan)");

    auto* verify = app.add_subcommand("verify", "verify the eigenfunction property");
    std::string v_input;
    verify->add_option("--input", v_input, "path to cone/polynomial file (default stdin)");

    auto* invariants = app.add_subcommand("invariants", "invariants of a Clifford system");
    std::string i_input;
    invariants->add_option("--input", i_input, "path to system file (default stdin)");

    auto* classify = app.add_subcommand("classify", "admissible pairs and congruence classes");
    long cl_n = 0;
    classify->add_option("--n", cl_n, "ambient dimension")->required();

    auto* scan = app.add_subcommand("scan", "list non-realizable dimensions");
    long s_from = 0, s_to = 0;
    scan->add_option("--from", s_from, "lower bound")->required();
    scan->add_option("--to", s_to, "upper bound")->required();

    auto* table = app.add_subcommand("table", "reproduce a classification table");
    std::string t_name;
    table->add_option("name", t_name, "table name: congruence")->required();
    long t_max = 21;
    table->add_option("--max-n", t_max, "largest dimension");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    double budget = 600.0;
    selftest->add_option("--budget-seconds", budget, "time budget for heavy items");

    try {
        app.parse(argc, argv);
        if (*construct)
            return cmd_construct(family, c_q, c_m, c_kplus, c_kminus, c_p, c_q, c_m, c_d);
        if (*verify) return cmd_verify(v_input, as_json);
        if (*invariants) return cmd_invariants(i_input, as_json);
        if (*classify) return cmd_classify(cl_n, as_json);
        if (*scan) return cmd_scan(s_from, s_to, as_json);
        if (*table) {
            if (t_name != "congruence")
                throw CLI::ValidationError("table", "unknown table '" + t_name + "'");
            return cmd_table(t_max, as_json);
        }
        if (*selftest) return cmd_selftest(budget, as_json);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
