#include "ptolemy/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "ptolemy/asymptotics.hpp"
#include "ptolemy/decomposition.hpp"
#include "ptolemy/enumerate.hpp"
#include "ptolemy/polygon.hpp"
#include "ptolemy/ptolemy.hpp"
#include "ptolemy/series.hpp"

namespace ptolemy::cli {

using json = nlohmann::ordered_json;

namespace {

// Parse or capacity failures detected after CLI11 has run.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json big_to_json(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return json(v.get_si());
    return json(v.get_str());
}

json diagram_json(const Diagram& dg) {
    json diagonals = json::array();
    for (const auto& d : dg.diagonals()) diagonals.push_back(json::array({d.a(), d.b()}));
    return json{{"n", dg.n()}, {"diagonals", std::move(diagonals)}};
}

json region_json(const Region& r) {
    json children = json::array();
    for (const auto& c : r.children)
        children.push_back(json{{"edge", json::array({c.a, c.b})}, {"region", region_json(c.region)}});
    return json{{"kind", std::string(to_string(r.kind))}, {"boundary", r.boundary}, {"children", std::move(children)}};
}

std::vector<std::string> read_lines(std::istream& is) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

struct Inputs {
    std::vector<std::string> positional;
    std::string in_file;
};

std::vector<Diagram> gather_diagrams(const Inputs& inputs, std::istream& in) {
    std::vector<std::string> texts = inputs.positional;
    if (!inputs.in_file.empty()) {
        std::vector<std::string> lines;
        if (inputs.in_file == "-") {
            lines = read_lines(in);
        } else {
            std::ifstream f(inputs.in_file);
            if (!f) throw UsageError("cannot open '" + inputs.in_file + "'");
            lines = read_lines(f);
        }
        texts.insert(texts.end(), lines.begin(), lines.end());
    }
    if (texts.empty()) throw UsageError("no diagram given (pass one as an argument or use --in FILE)");
    std::vector<Diagram> out;
    for (const auto& t : texts) {
        try {
            out.push_back(parse_diagram(t));
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

void write_catalog(const std::string& path, const std::vector<Diagram>& diagrams) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    for (const auto& dg : diagrams) f << to_string(dg) << '\n';
}

// User-facing Dynkin index n; the polygon has n + 3 vertices.
int polygon_of(int n) {
    if (n < 0) throw UsageError("--n must be nonnegative");
    return n + 3;
}

void print_sequence(std::ostream& out, const std::string& format, int first_n, const std::vector<mpz_class>& values) {
    if (format == "oeis") {
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i].get_str();
        out << '\n';
    } else if (format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < values.size(); ++i)
            arr.push_back(json{{"n", first_n + static_cast<int>(i)},
                               {"N", first_n + static_cast<int>(i) + 3},
                               {"value", big_to_json(values[i])}});
        out << arr.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            out << "n=" << first_n + static_cast<int>(i) << ": " << values[i].get_str() << '\n';
    }
}

struct Options {
    std::string format = "text";
    Inputs inputs;
    std::string recognizer = "pairwise";
    std::string recompose_tree;
    int n = -1;
    int max_n = -1;
    std::string method;
    std::string kind = "base";
    std::string out_file;
    bool canonical = false;
};

bool recognize(const Diagram& dg, const std::string& recognizer) {
    if (recognizer == "ncnc") return is_fixed_by_ncnc(dg);
    if (recognizer == "decompose") return std::holds_alternative<CellDecomposition>(try_decompose(dg));
    return is_ptolemy_pairwise(dg);
}

int cmd_check(const Options& o, std::ostream& out, std::istream& in) {
    bool all = true;
    json results = json::array();
    for (const auto& dg : gather_diagrams(o.inputs, in)) {
        bool ok = recognize(dg, o.recognizer);
        all = all && ok;
        if (o.format == "json") {
            json j = diagram_json(dg);
            j["ptolemy"] = ok;
            results.push_back(std::move(j));
        } else {
            out << (ok ? "Ptolemy diagram" : "not a Ptolemy diagram") << '\n';
        }
    }
    if (o.format == "json") out << results.dump() << '\n';
    return all ? kExitOk : kExitNegative;
}

int cmd_nc(const Options& o, std::ostream& out, std::istream& in) {
    json results = json::array();
    for (const auto& dg : gather_diagrams(o.inputs, in)) {
        Diagram r = nc(dg);
        if (o.format == "json")
            results.push_back(diagram_json(r));
        else
            out << to_string(r) << '\n';
    }
    if (o.format == "json") out << results.dump() << '\n';
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
    if (!o.recompose_tree.empty()) {
        std::string text = o.recompose_tree;
        if (text == "-") {
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        CellDecomposition cd;
        try {
            cd = parse_decomposition(text);
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
        Diagram dg = recompose(cd);
        if (o.format == "json")
            out << diagram_json(dg).dump() << '\n';
        else
            out << to_string(dg) << '\n';
        return kExitOk;
    }
    int code = kExitOk;
    for (const auto& dg : gather_diagrams(o.inputs, in)) {
        auto r = try_decompose(dg);
        if (auto* bad = std::get_if<NonPtolemyFace>(&r)) {
            out << "not a Ptolemy diagram\n";
            err << NotPtolemy(bad->face).what() << '\n';
            code = kExitNegative;
            continue;
        }
        const auto& cd = std::get<CellDecomposition>(r);
        if (o.format == "json")
            out << json{{"n", cd.n}, {"root", region_json(cd.root)}}.dump() << '\n';
        else
            out << to_string(cd) << '\n';
    }
    return code;
}

int cmd_torsion_pair(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
    int code = kExitOk;
    for (const auto& dg : gather_diagrams(o.inputs, in)) {
        if (!is_ptolemy_pairwise(dg)) {
            out << "not a Ptolemy diagram\n";
            err << "torsion pairs correspond to Ptolemy diagrams only: " << to_string(dg) << '\n';
            code = kExitNegative;
            continue;
        }
        TorsionPair tp = torsion_pair(dg);
        if (o.format == "json")
            out << json{{"x", diagram_json(tp.x)}, {"y", diagram_json(tp.y)}}.dump() << '\n';
        else
            out << to_string(tp) << '\n';
    }
    return code;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const int polygon = polygon_of(o.n);
    const std::string method = o.method.empty() ? "recursive" : o.method;
    std::vector<Diagram> diagrams;
    if (method == "brute") {
        diagrams = enumerate_brute(polygon, max_brute_n_from_env());
    } else if (method == "recursive") {
        if (polygon > 12) throw CapacityError("recursive enumeration output is limited to N <= 12; use count");
        diagrams = enumerate_recursive(polygon);
    } else {
        throw UsageError("enumerate supports --method brute or recursive");
    }
    if (o.canonical) {
        std::vector<Diagram> reps;
        for (const auto& dg : diagrams)
            if (canonical_rotation_form(dg) == dg) reps.push_back(dg);
        diagrams = std::move(reps);
    }
    if (!o.out_file.empty()) write_catalog(o.out_file, diagrams);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& dg : diagrams) arr.push_back(diagram_json(dg));
        out << arr.dump() << '\n';
    } else if (o.out_file.empty()) {
        for (const auto& dg : diagrams) out << to_string(dg) << '\n';
    } else {
        out << diagrams.size() << " diagrams of the " << polygon << "-gon written to " << o.out_file << '\n';
    }
    return kExitOk;
}

// Resolves --n / --max-n into the list of Dynkin indices to report.
std::pair<int, int> index_range(const Options& o) {
    if ((o.n >= 0) == (o.max_n >= 0)) throw UsageError("pass exactly one of --n or --max-n");
    if (o.n >= 0) return {o.n, o.n};
    return {0, o.max_n};
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err, bool rotation) {
    auto [first, last] = index_range(o);
    std::string name = o.method.empty() ? (rotation ? "series" : "formula") : o.method;
    if (name == "burnside") name = "brute";
    Method method;
    try {
        method = parse_method(name);
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
    const int cap = max_brute_n_from_env();
    std::vector<mpz_class> values;
    if (!rotation && (method == Method::Formula || method == Method::Lagrange) && first != last) {
        for (int n = first; n <= last; ++n) values.push_back(count_diagrams(n + 3, method, cap));
    } else if ((method == Method::Series) && first != last) {
        auto coeffs = integer_coefficients(rotation ? rotation_gf(last + 2) : solve_ptolemy_series(last + 2));
        for (int n = first; n <= last; ++n) values.push_back(coeffs[n + 2]);
    } else {
        for (int n = first; n <= last; ++n)
            values.push_back(rotation ? count_rotation_classes(n + 3, method, cap) : count_diagrams(n + 3, method, cap));
    }
    if (first == last && o.format == "text") {
        err << "# n=" << first << ", N=" << first + 3 << "-gon, method " << to_string(method) << '\n';
        out << values.front().get_str() << '\n';
    } else {
        print_sequence(out, o.format, first, values);
    }
    return kExitOk;
}

int cmd_asymptotics(const Options& o, std::ostream& out) {
    const auto params = asymptotic_params();
    json j{{"rho", params.rho}, {"alpha", params.alpha}};
    if (o.n >= 0) {
        const int coefficient = polygon_of(o.n) - 1;
        j["n"] = o.n;
        j["N"] = o.n + 3;
        j["exact"] = big_to_json(count_closed_formula(o.n));
        j["log_estimate"] = log_asymptotic_estimate(coefficient);
        j["ratio"] = exact_to_estimate_ratio(coefficient);
    }
    if (o.format == "json") {
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << std::setprecision(17);
    out << "rho=" << params.rho << '\n' << "alpha=" << params.alpha << '\n';
    if (o.n >= 0) {
        const int coefficient = o.n + 2;
        out << "n=" << o.n << " N=" << o.n + 3 << '\n';
        out << "exact=" << count_closed_formula(o.n).get_str() << '\n';
        out << "estimate=" << asymptotic_estimate(coefficient) << '\n';
        out << "ratio=" << exact_to_estimate_ratio(coefficient) << '\n';
    }
    return kExitOk;
}

int cmd_sequence(const Options& o, std::ostream& out) {
    if (o.max_n < 0) throw UsageError("sequence needs --max-n");
    const int order = o.max_n + 2;
    auto coeffs = integer_coefficients(o.kind == "rotation" ? rotation_gf(order) : solve_ptolemy_series(order));
    std::vector<mpz_class> values(coeffs.begin() + 2, coeffs.end());
    print_sequence(out, o.format, 0, values);
    return kExitOk;
}

}  // namespace

int max_brute_n_from_env() {
    const char* v = std::getenv("PTOLEMY_MAX_BRUTE_N");
    if (!v || !*v) return kDefaultMaxBrutePolygon;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 3) throw UsageError(std::string("invalid PTOLEMY_MAX_BRUTE_N '") + v + "'");
    if (n > kHardMaxBrutePolygon)
        throw UsageError("PTOLEMY_MAX_BRUTE_N exceeds the supported maximum " + std::to_string(kHardMaxBrutePolygon));
    return static_cast<int>(n);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Ptolemy diagrams of convex polygons: recognition, decomposition, enumeration, counting"};
    app.name("ptolemy");
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> diagram_formats{"text", "json"};
    const std::vector<std::string> sequence_formats{"text", "json", "oeis"};
    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("diagram", o.inputs.positional, "Diagram as 'N; a-b a-b ...'");
        sub->add_option("--in", o.inputs.in_file, "Newline-delimited catalog of diagrams ('-' for stdin)");
    };

    auto* check = app.add_subcommand("check", "Decide whether diagrams are Ptolemy diagrams");
    add_inputs(check);
    check->add_option("--recognizer", o.recognizer, "pairwise, ncnc or decompose")
        ->check(CLI::IsMember({"pairwise", "ncnc", "decompose"}));
    check->add_option("--format", o.format)->check(CLI::IsMember(diagram_formats));

    auto* ncmd = app.add_subcommand("nc", "Diagonals crossing no member of the diagram");
    add_inputs(ncmd);
    ncmd->add_option("--format", o.format)->check(CLI::IsMember(diagram_formats));

    auto* dec = app.add_subcommand("decompose", "Empty-cell/clique decomposition tree");
    add_inputs(dec);
    dec->add_option("--recompose", o.recompose_tree, "Rebuild the diagram from a decomposition tree ('-' for stdin)");
    dec->add_option("--format", o.format)->check(CLI::IsMember(diagram_formats));

    auto* tp = app.add_subcommand("torsion-pair", "Torsion pair (X, rotated nc X) of a Ptolemy diagram");
    add_inputs(tp);
    tp->add_option("--format", o.format)->check(CLI::IsMember(diagram_formats));

    auto* en = app.add_subcommand("enumerate", "List all Ptolemy diagrams of the (n+3)-gon");
    en->add_option("--n", o.n, "Dynkin index n (polygon N = n + 3)")->required();
    en->add_option("--method", o.method, "brute or recursive")->check(CLI::IsMember({"brute", "recursive"}));
    en->add_flag("--canonical", o.canonical, "Only rotation-class representatives");
    en->add_option("--out", o.out_file, "Write the catalog to FILE");
    en->add_option("--format", o.format)->check(CLI::IsMember(diagram_formats));

    auto* cnt = app.add_subcommand("count", "Number of Ptolemy diagrams of the (n+3)-gon");
    cnt->add_option("--n", o.n, "Dynkin index n");
    cnt->add_option("--max-n", o.max_n, "Report n = 0..K");
    cnt->add_option("--method", o.method, "formula, series, lagrange, brute or recursive")
        ->check(CLI::IsMember({"formula", "series", "lagrange", "brute", "recursive"}));
    cnt->add_option("--format", o.format)->check(CLI::IsMember(sequence_formats));

    auto* rot = app.add_subcommand("rotation-count", "Ptolemy diagrams of the (n+3)-gon up to rotation");
    rot->add_option("--n", o.n, "Dynkin index n");
    rot->add_option("--max-n", o.max_n, "Report n = 0..K");
    rot->add_option("--method", o.method, "series (default), burnside/brute or recursive")
        ->check(CLI::IsMember({"formula", "series", "lagrange", "burnside", "brute", "recursive"}));
    rot->add_option("--format", o.format)->check(CLI::IsMember(sequence_formats));

    auto* asy = app.add_subcommand("asymptotics", "Growth constants and leading-term estimate");
    asy->add_option("--n", o.n, "Compare the estimate with the exact count at Dynkin index n");
    asy->add_option("--format", o.format)->check(CLI::IsMember(diagram_formats));

    auto* seq = app.add_subcommand("sequence", "Counting sequence from the generating functions");
    seq->add_option("--kind", o.kind, "base (with base edge) or rotation")->check(CLI::IsMember({"base", "rotation"}));
    seq->add_option("--max-n", o.max_n, "Last Dynkin index")->required();
    seq->add_option("--format", o.format)->check(CLI::IsMember(sequence_formats));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ptolemy: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(o, out, in);
        if (ncmd->parsed()) return cmd_nc(o, out, in);
        if (dec->parsed()) return cmd_decompose(o, out, err, in);
        if (tp->parsed()) return cmd_torsion_pair(o, out, err, in);
        if (en->parsed()) return cmd_enumerate(o, out);
        if (cnt->parsed()) return cmd_count(o, out, err, false);
        if (rot->parsed()) return cmd_count(o, out, err, true);
        if (asy->parsed()) return cmd_asymptotics(o, out);
        if (seq->parsed()) return cmd_sequence(o, out);
    } catch (const UsageError& e) {
        err << "ptolemy: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidInput& e) {
        err << "ptolemy: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "ptolemy: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "ptolemy: no subcommand\n";
    return kExitUsage;
}

}  // namespace ptolemy::cli
