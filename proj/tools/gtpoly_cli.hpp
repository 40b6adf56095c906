#pragma once

// Subcommand driver for the gtpoly tool. run() is the whole program; main()
// only forwards argv and the standard streams.

#include "gtpoly/gtpoly.hpp"
#include "gtpoly/instances.hpp"
#include "gtpoly/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gtpoly::cli {

using io::json;

enum exit_status : int { ok = 0, invalid = 2, failed = 3 };

struct Options {
    std::string input;       // path, "-" for stdin
    std::string inline_json; // --json
    std::string output;      // --output
    bool pretty = false;
    int k = 2;
    bool even = false;
    int n = 0;
    std::int64_t mmax = 0;
    int degree = -1;
    std::size_t count = 10;
    std::uint64_t seed = 1;
};

inline int scale_guard_from_env() {
    const char *v = std::getenv("GTPOLY_SCALE_GUARD");
    if (!v || !*v)
        return default_scale_guard;
    try {
        std::size_t used = 0;
        int g = std::stoi(v, &used);
        if (used != std::string(v).size() || g < 1)
            throw std::invalid_argument("bad");
        return g;
    } catch (const std::exception &) {
        throw validation_error(std::string("GTPOLY_SCALE_GUARD must be a positive integer, got \"") + v + "\"");
    }
}

inline json read_input(const Options &o, std::istream &in) {
    std::string text;
    if (!o.inline_json.empty()) {
        text = o.inline_json;
    } else if (!o.input.empty() && o.input != "-") {
        std::ifstream f(o.input);
        if (!f)
            throw validation_error("cannot open input file " + o.input);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }
}

struct PatternInput {
    GTPattern pattern;
    std::optional<PolytopeSpec> spec;

    PolytopeSpec spec_or_derived() const { return spec ? *spec : spec_of(pattern); }
};

/// A bare pattern object, or an object holding "pattern" and optionally "spec".
inline PatternInput pattern_input(const json &j) {
    if (j.is_object() && j.contains("rows"))
        return {io::pattern_from_json(j), std::nullopt};
    if (j.is_object() && j.contains("pattern")) {
        PatternInput p{io::pattern_from_json(j.at("pattern")), std::nullopt};
        if (j.contains("spec") && !j.at("spec").is_null())
            p.spec = io::spec_from_json(j.at("spec"));
        return p;
    }
    throw validation_error("expected a pattern object or {\"pattern\": ..., \"spec\": ...}");
}

inline PolytopeSpec spec_input(const json &j) {
    if (j.is_object() && j.contains("lambda"))
        return io::spec_from_json(j);
    if (j.is_object() && j.contains("spec"))
        return io::spec_from_json(j.at("spec"));
    throw validation_error("expected a spec object {\"lambda\": ..., \"mu\": ...}");
}

inline json violations_to_json(const std::vector<Violation> &vs) {
    json a = json::array();
    for (const auto &v : vs) {
        const char *kind = v.kind == ViolationKind::negative_entry     ? "negative_entry"
                           : v.kind == ViolationKind::above_upper_left ? "above_upper_left"
                                                                       : "below_upper_right";
        a.push_back({{"kind", kind},
                     {"cell", {v.cell.i, v.cell.j}},
                     {"other", {v.other.i, v.other.j}},
                     {"message", to_string(v)}});
    }
    return a;
}

inline json points_to_json(const std::vector<GTPattern> &pts) {
    json a = json::array();
    for (const auto &p : pts)
        a.push_back(io::to_json(p));
    return a;
}

inline void collect_patterns(const json &j, const std::string &path,
                             std::vector<std::pair<std::string, GTPattern>> &out) {
    if (j.is_object()) {
        if (j.contains("rows") && j.contains("n")) {
            try {
                out.emplace_back(path.empty() ? "pattern" : path, io::pattern_from_json(j));
            } catch (const std::exception &) {
            }
            return;
        }
        for (const auto &[key, value] : j.items())
            collect_patterns(value, path.empty() ? key : path + "." + key, out);
    } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); ++k)
            collect_patterns(j[k], path + "[" + std::to_string(k) + "]", out);
    }
}

inline void emit(const json &result, const Options &o, std::ostream &out) {
    std::ostringstream body;
    if (o.pretty) {
        body << result.dump(2) << '\n';
        std::vector<std::pair<std::string, GTPattern>> pats;
        collect_patterns(result, "", pats);
        for (const auto &[name, p] : pats)
            body << '\n' << name << ":\n" << render_triangle(p);
    } else {
        body << result.dump() << '\n';
    }
    if (o.output.empty()) {
        out << body.str();
        return;
    }
    std::ofstream f(o.output);
    if (!f)
        throw validation_error("cannot open output file " + o.output);
    f << body.str();
}

struct ReproRow {
    std::string name;
    bool passed;
};

inline std::vector<ReproRow> reproduce_worked_examples() {
    std::vector<ReproRow> rows;
    auto check = [&](const std::string &name, const std::function<bool()> &f) {
        bool passed = false;
        try {
            passed = f();
        } catch (const std::exception &) {
            passed = false;
        }
        rows.push_back({name, passed});
    };
    const auto x = instances::face_pattern();
    const auto spec = instances::face_spec();
    check("face example: tiling matrix", [&] {
        return tiling_matrix(x) == IntegerMatrix::from_rows(std::vector<std::vector<Integer>>(
                                       {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 1, 0, 0, 1}}));
    });
    check("face example: face dimension 2 (tiling and oracle)",
          [&] { return face_dimension(x, spec) == 2 && face_dimension_oracle(x, spec) == 2; });
    check("face example: kernel span", [&] {
        auto basis = kernel_basis(tiling_matrix(x));
        RationalMatrix both(4, 5);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                both(r, c) = basis.vectors.at(r).at(c);
                both(r + 2, c) = instances::face_kernel()[r][c];
            }
        return basis.dimension == 2 && rank(both) == 2;
    });
    check("tableau example: bijection", [&] {
        const auto p = instances::tableau_pattern();
        const auto t = pattern_to_tableau(p);
        return membership(p, instances::tableau_spec()) && t == instances::tableau_rows() &&
               tableau_to_pattern(t, 5) == p;
    });
    for (int k = 2; k <= 4; ++k)
        check("family k=" + std::to_string(k) + ": vertex with denominator k", [&] {
            const auto f = counterexample(k);
            const auto cert = nonintegrality_certificate(f.pattern, f.spec);
            return is_vertex(f.pattern, f.spec) && face_dimension_oracle(f.pattern, f.spec) == 0 &&
                   abs_of(f.determinant) == k && cert && cert->q == k;
        });
    check("denominator bound n=5 is 262144", [] { return denominator_bound(5) == 262144; });
    return rows;
}

inline int dispatch(const std::string &cmd, const Options &o, std::istream &in, std::ostream &out,
                    std::ostream &err) {
    if (cmd == "family") {
        auto f = o.even ? counterexample_even_n(o.k) : counterexample(o.k);
        auto j = io::to_json(f);
        if (o.even)
            j["q"] = io::to_json(denominator_lcm(f.pattern));
        emit(j, o, out);
        return ok;
    }
    if (cmd == "bound") {
        emit({{"n", o.n}, {"bound", io::to_json(denominator_bound(o.n))}}, o, out);
        return ok;
    }
    if (cmd == "repro-paper") {
        const auto rows = reproduce_worked_examples();
        bool all = true;
        json checks = json::array();
        for (const auto &r : rows) {
            checks.push_back({{"check", r.name}, {"passed", r.passed}});
            all = all && r.passed;
        }
        if (o.pretty) {
            for (const auto &r : rows)
                out << (r.passed ? "PASS  " : "FAIL  ") << r.name << '\n';
            out << (all ? "all checks passed" : "some checks FAILED") << '\n';
        } else {
            emit({{"checks", checks}, {"passed", all}}, o, out);
        }
        return all ? ok : failed;
    }

    const json input = read_input(o, in);

    if (cmd == "validate") {
        GTPattern p;
        try {
            p = pattern_input(input).pattern;
        } catch (const validation_error &e) {
            emit({{"valid", false}, {"violations", json::array({{{"kind", "shape"}, {"message", e.what()}}})}},
                 o, out);
            return invalid;
        }
        const auto report = validate_pattern(p);
        emit({{"valid", report.empty()}, {"violations", violations_to_json(report)}}, o, out);
        return report.empty() ? ok : invalid;
    }
    if (cmd == "tiling") {
        emit(io::to_json(compute_tiling(pattern_input(input).pattern)), o, out);
        return ok;
    }
    if (cmd == "matrix") {
        const auto a = tiling_matrix(pattern_input(input).pattern);
        emit({{"rows", a.rows()}, {"cols", a.cols()}, {"matrix", io::to_json(a)}}, o, out);
        return ok;
    }
    if (cmd == "face-dim" || cmd == "is-vertex" || cmd == "oracle-face-dim") {
        const auto p = pattern_input(input);
        const auto spec = p.spec_or_derived();
        if (cmd == "face-dim")
            emit({{"face_dimension", face_dimension(p.pattern, spec)}}, o, out);
        else if (cmd == "oracle-face-dim")
            emit({{"face_dimension", face_dimension_oracle(p.pattern, spec)}}, o, out);
        else
            emit({{"is_vertex", is_vertex(p.pattern, spec)}}, o, out);
        return ok;
    }
    if (cmd == "face-basis") {
        const auto p = pattern_input(input);
        emit(io::to_json(face_basis(p.pattern, p.spec_or_derived())), o, out);
        return ok;
    }
    if (cmd == "certificate") {
        const auto p = pattern_input(input);
        const auto cert = nonintegrality_certificate(p.pattern, p.spec_or_derived());
        emit({{"integral", !cert.has_value()}, {"certificate", cert ? io::to_json(*cert) : json(nullptr)}}, o,
             out);
        return ok;
    }
    if (cmd == "construct") {
        if (!input.is_object() || !input.contains("pattern") || !input.contains("xi") || !input.contains("q"))
            throw validation_error("construct expects {\"pattern\": ..., \"xi\": [...], \"q\": q}");
        const auto base = io::pattern_from_json(input.at("pattern"));
        const auto xi = io::integer_vector_from_json(input.at("xi"), "xi");
        const auto q = io::integer_from_json(input.at("q"));
        std::optional<Tiling> target;
        if (input.contains("witness"))
            target = compute_tiling(io::pattern_from_json(input.at("witness")));
        emit(io::to_json(construct_nonintegral_vertex(base, xi, q, target ? &*target : nullptr)), o, out);
        return ok;
    }
    if (cmd == "embed") {
        const auto p = pattern_input(input);
        json j = {{"pattern", io::to_json(embed(p.pattern))}};
        std::optional<PolytopeSpec> spec = p.spec;
        if (!spec) {
            try {
                spec = spec_of(p.pattern);
            } catch (const validation_error &) {
            }
        }
        if (spec)
            j["spec"] = io::to_json(embed(*spec));
        emit(j, o, out);
        return ok;
    }
    if (cmd == "to-tableau") {
        const auto p = pattern_input(input).pattern;
        const auto t = pattern_to_tableau(p);
        emit({{"n", p.n()},
              {"tableau", io::to_json(t)},
              {"shape", t.shape()},
              {"content", t.content(p.n())}},
             o, out);
        return ok;
    }
    if (cmd == "from-tableau") {
        int n = o.n;
        Tableau t;
        if (input.is_object()) {
            if (!input.contains("tableau"))
                throw validation_error("expected a tableau array or {\"tableau\": ..., \"n\": n}");
            t = io::tableau_from_json(input.at("tableau"));
            if (n == 0 && input.contains("n"))
                n = static_cast<int>(io::int64_from_json(input.at("n")));
        } else {
            t = io::tableau_from_json(input);
        }
        if (n <= 0)
            throw validation_error("from-tableau needs --n or an \"n\" field");
        const auto p = tableau_to_pattern(t, n);
        emit({{"pattern", io::to_json(p)}, {"spec", io::to_json(spec_of(p))}}, o, out);
        return ok;
    }
    if (cmd == "kostka") {
        emit({{"kostka", io::to_json(kostka(spec_input(input)))}}, o, out);
        return ok;
    }
    if (cmd == "points") {
        const auto pts = enumerate_lattice_points(spec_input(input));
        emit({{"count", pts.size()}, {"points", points_to_json(pts)}}, o, out);
        return ok;
    }
    if (cmd == "vertices") {
        const auto vs = enumerate_vertices(spec_input(input), scale_guard_from_env());
        emit({{"count", vs.size()}, {"vertices", points_to_json(vs)}}, o, out);
        return ok;
    }
    if (cmd == "sample") {
        const auto pts = sample_points(spec_input(input), o.count, o.seed, scale_guard_from_env());
        emit({{"count", pts.size()}, {"points", points_to_json(pts)}}, o, out);
        return ok;
    }
    if (cmd == "ehrhart") {
        const auto spec = spec_input(input);
        std::optional<int> hint;
        if (o.degree >= 0)
            hint = o.degree;
        const auto poly = ehrhart_polynomial(spec, hint, 3, scale_guard_from_env());
        const std::int64_t mmax = o.mmax > 0 ? o.mmax : poly.degree + 4;
        json values = json::array();
        for (const auto &s : ehrhart_values(spec, mmax))
            values.push_back({{"m", s.dilation}, {"f", io::to_json(s.count)}});
        emit({{"values", values}, {"polynomial", io::to_json(poly)}}, o, out);
        if (!poly.verified) {
            err << "error: interpolant disagrees with the lattice-point counts\n";
            return failed;
        }
        return ok;
    }
    throw validation_error("unknown subcommand " + cmd);
}

inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact computations on Gelfand-Tsetlin polytopes"};
    app.require_subcommand(1);
    Options o;

    auto with_io = [&](CLI::App *sub) {
        sub->add_option("input", o.input, "input JSON file ('-' or omitted: stdin)");
        sub->add_option("--json", o.inline_json, "inline input JSON");
        sub->add_option("-o,--output", o.output, "write result to this file");
        sub->add_flag("--pretty", o.pretty, "indent JSON and draw patterns as triangles");
        return sub;
    };
    auto without_input = [&](CLI::App *sub) {
        sub->add_option("-o,--output", o.output, "write result to this file");
        sub->add_flag("--pretty", o.pretty, "human-readable output");
        return sub;
    };

    const std::vector<std::pair<std::string, std::string>> pattern_cmds = {
        {"validate", "check the GT inequalities of a pattern"},
        {"tiling", "tiling of a pattern"},
        {"matrix", "tiling matrix of a pattern"},
        {"face-dim", "dimension of the minimal face through a pattern"},
        {"is-vertex", "whether a pattern is a vertex of its polytope"},
        {"face-basis", "spanning directions of the minimal face"},
        {"certificate", "non-integrality certificate of a vertex"},
        {"construct", "build a vertex from an integral pattern, xi and q"},
        {"embed", "embed a pattern of X_n into X_{n+1}"},
        {"to-tableau", "semistandard tableau of an integral pattern"},
        {"oracle-face-dim", "minimal-face dimension from tight constraints"},
        {"kostka", "number of lattice points of GT(lambda, mu)"},
        {"points", "all lattice points of GT(lambda, mu)"},
        {"vertices", "all vertices of GT(lambda, mu)"},
    };
    for (const auto &[name, help] : pattern_cmds)
        with_io(app.add_subcommand(name, help));

    auto *from_tab = with_io(app.add_subcommand("from-tableau", "pattern of a semistandard tableau"));
    from_tab->add_option("--n", o.n, "number of pattern rows");

    auto *ehr = with_io(app.add_subcommand("ehrhart", "Ehrhart counting function and its interpolant"));
    ehr->add_option("--mmax", o.mmax, "largest dilation to list");
    ehr->add_option("--degree", o.degree, "interpolation degree (default: polytope dimension)");

    auto *sample = with_io(app.add_subcommand("sample", "seeded member points"));
    sample->add_option("--count", o.count, "number of points");
    sample->add_option("--seed", o.seed, "random seed");

    auto *family = without_input(app.add_subcommand("family", "non-integral vertex with denominator k"));
    family->add_option("--k", o.k, "denominator (k >= 2)")->required();
    family->add_flag("--even", o.even, "embed into X_{2k+2}");

    auto *bound = without_input(app.add_subcommand("bound", "denominator bound for fixed n"));
    bound->add_option("--n", o.n, "pattern size (n >= 2)")->required();

    without_input(app.add_subcommand("repro-paper", "reproduce the worked examples and print PASS/FAIL"));

    std::vector<const char *> argv{"gtpoly"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return invalid;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o, in, out, err);
    } catch (const verification_error &e) {
        err << "verification failed: " << e.what() << '\n';
        return failed;
    } catch (const scale_guard_error &e) {
        err << "scale guard: " << e.what() << " (set GTPOLY_SCALE_GUARD to override)\n";
        return invalid;
    } catch (const validation_error &e) {
        err << "invalid input: " << e.what() << '\n';
        return invalid;
    } catch (const json::exception &e) {
        err << "invalid input: " << e.what() << '\n';
        return invalid;
    }
}

} // namespace gtpoly::cli
