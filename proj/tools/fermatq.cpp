// Command-line front end: per-surface analysis, exhaustive classification,
// standalone local resolution, and regeneration of the built-in reference
// table in markdown/CSV/JSON.  Stdout carries data only, stderr diagnostics;
// all output is byte-deterministic.
//
// Exit codes: 0 success; 1 internal error; 2 unusable input (parsing,
// non-prime modulus, singular matrix, local-pairs invariant); 3 canonical map
// unsupported (free action with p_g != 3); 4 inconsistent equivalence class;
// 5 blowup depth cap exceeded; 6 reference-table self-test mismatch.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fermatq/fermatq.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fermatq;

int exit_code_for(errc code) {
    switch (code) {
        case errc::invalid_prime:
        case errc::parse_error:
        case errc::modulus_mismatch:
        case errc::singular_matrix:
        case errc::invalid_local_pairs:
            return 2;
        case errc::class_inconsistent:
            return 4;
        case errc::depth_exceeded:
            return 5;
        default:
            return 1;
    }
}

// ============================================================
// Pretty-printers and JSON builders
// ============================================================

std::string verdict_name(MapKind kind) {
    return kind == MapKind::generically_finite ? "GENERICALLY_FINITE" : "COMPOSED_WITH_PENCIL";
}

std::string power(const std::string& base, int exponent) {
    return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

std::array<int, 6> exponent_sextuple(const InvariantTensor& t) {
    const auto x = homogenize(t.first);
    const auto y = homogenize(t.second);
    return {x[0], x[1], x[2], y[0], y[1], y[2]};
}

std::string monomial_pretty(const std::array<int, 6>& e) {
    static const char* const names[6] = {"x0", "x1", "x2", "y0", "y1", "y2"};
    std::string out;
    for (int i = 0; i < 6; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += power(names[i], e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string tensor_pretty(const InvariantTensor& t) {
    return "w(" + std::to_string(t.first.j) + "," + std::to_string(t.first.k) + ";" +
           std::to_string(t.second.j) + "," + std::to_string(t.second.k) + ")";
}

// "z0*z2 = z1^2" from the exponent vector (1,-2,1)
std::string relation_pretty(const std::array<int, 3>& r) {
    std::string lhs, rhs;
    for (int i = 0; i < 3; ++i) {
        if (r[i] == 0) continue;
        std::string& side = r[i] > 0 ? lhs : rhs;
        if (!side.empty()) side += "*";
        side += power("z" + std::to_string(i), std::abs(r[i]));
    }
    return (lhs.empty() ? "1" : lhs) + " = " + (rhs.empty() ? "1" : rhs);
}

// space-free variant for single-line key=value output
std::string relation_compact(const std::array<int, 3>& r) {
    std::string out = relation_pretty(r);
    std::erase(out, ' ');
    return out;
}

json tensor_quads(const std::vector<InvariantTensor>& tensors) {
    json out = json::array();
    for (const auto& t : tensors)
        out.push_back({t.first.j, t.first.k, t.second.j, t.second.k});
    return out;
}

json monomial_sextuples(const std::vector<InvariantTensor>& tensors) {
    json out = json::array();
    for (const auto& t : tensors) out.push_back(exponent_sextuple(t));
    return out;
}

json monomial_strings(const std::vector<InvariantTensor>& tensors) {
    json out = json::array();
    for (const auto& t : tensors) out.push_back(monomial_pretty(exponent_sextuple(t)));
    return out;
}

json divisor_slots(const GridDivisor& d) {
    return {d.f[0], d.f[1], d.f[2], d.g[0], d.g[1], d.g[2]};
}

json pair_list(const LocalPairs& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs.pairs()) out.push_back({a, b});
    return out;
}

// render_trace output as a JSON string array, one entry per line
json trace_lines(const ResolutionTrace& trace) {
    json out = json::array();
    std::string line;
    for (const char c : render_trace(trace)) {
        if (c == '\n') {
            out.push_back(line);
            line.clear();
        } else {
            line += c;
        }
    }
    return out;
}

json record_shell(const std::string& command) {
    json rec;
    rec["schema_version"] = 1;
    rec["command"] = command;
    rec["input"] = json::object();
    rec["result"] = json::object();
    return rec;
}

void emit(const json& rec) { std::cout << rec.dump(2) << "\n"; }

// Quotes a CSV field when it contains a delimiter, quote or newline.
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (const char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// ============================================================
// analyze
// ============================================================

int cmd_analyze(int p_value, const std::string& matrix_text, bool as_json, bool with_trace,
                std::optional<int> max_depth) {
    const Prime p(p_value);
    const AutoMatrix twist = parse_matrix(matrix_text, p);
    const SurfaceSpec spec(p, twist);
    const SurfaceReport report = surface_report(spec);

    const auto orbit = equivalence_orbit(twist);
    const AutoMatrix representative = *orbit.begin();
    std::optional<int> row;
    if (p_value == 7)
        for (const ReferenceRow& r : reference_rows())
            if (orbit.count(reference_matrix(p, r))) row = r.row;

    std::optional<NetResolution> resolution;
    int code = 0;
    if (report.free && *report.pg == 3)
        resolution = resolve_net(canonical_net(report.tensors), max_depth);
    else if (report.free)
        code = 3;  // invariants are still reported below

    if (as_json) {
        json rec = record_shell("analyze");
        rec["input"]["p"] = p_value;
        rec["input"]["matrix"] = format_matrix(twist);
        json& res = rec["result"];
        res["free"] = report.free;
        res["genus"] = report.genus;
        if (report.free) {
            res["chi"] = *report.chi;
            res["pg"] = *report.pg;
            res["q"] = *report.q;
            res["ksq"] = *report.ksq;
        }
        res["tensors"] = tensor_quads(report.tensors);
        res["monomials"] = monomial_sextuples(report.tensors);
        res["monomials_pretty"] = monomial_strings(report.tensors);
        res["class_representative"] = format_matrix(representative);
        res["reference_row"] = row ? json(*row) : json(nullptr);
        if (resolution) {
            const NetResolution& r = *resolution;
            res["fixed"] = divisor_slots(r.net.fixed);
            res["fixed_pretty"] = r.net.fixed.to_text();
            res["mobile"] = json::array();
            res["mobile_pretty"] = json::array();
            for (const GridDivisor& m : r.net.mobile) {
                res["mobile"].push_back(divisor_slots(m));
                res["mobile_pretty"].push_back(m.to_text());
            }
            res["base_points"] = json::array();
            for (const ResolvedBasePoint& pt : r.points) {
                json bp;
                bp["i"] = pt.point.i;
                bp["j"] = pt.point.j;
                bp["pairs"] = pair_list(pt.point.local);
                bp["correction"] = pt.trace.total_correction;
                if (with_trace) bp["trace"] = trace_lines(pt.trace);
                res["base_points"].push_back(bp);
            }
            res["m2"] = r.m2;
            res["total_correction"] = r.total_correction;
            res["mhat2"] = r.mhat2;
            res["verdict"] = verdict_name(r.kind);
            if (r.degree) res["degree"] = *r.degree;
            if (r.relation) {
                res["relation"] = *r.relation;
                res["relation_pretty"] = relation_pretty(*r.relation);
            }
        } else if (report.free) {
            res["verdict"] = "UNSUPPORTED_PG";
        }
        emit(rec);
        return code;
    }

    std::cout << "p: " << p_value << "\n";
    std::cout << "matrix: " << format_matrix(twist) << "\n";
    std::cout << "free: " << (report.free ? "yes" : "no") << "\n";
    std::cout << "genus: " << report.genus << "\n";
    if (report.free) {
        std::cout << "chi: " << *report.chi << "\n";
        std::cout << "p_g: " << *report.pg << "\n";
        std::cout << "q: " << *report.q << "\n";
        std::cout << "K^2: " << *report.ksq << "\n";
    }
    if (report.tensors.empty()) {
        std::cout << "sections: none\n";
    } else {
        std::cout << "sections:\n";
        for (const auto& t : report.tensors)
            std::cout << "  " << tensor_pretty(t) << " = "
                      << monomial_pretty(exponent_sextuple(t)) << "\n";
    }
    std::cout << "class: " << format_matrix(representative) << "\n";
    std::cout << "reference row: " << (row ? std::to_string(*row) : "none") << "\n";
    if (resolution) {
        const NetResolution& r = *resolution;
        std::cout << "fixed part: " << r.net.fixed.to_text() << "\n";
        std::cout << "mobile part:\n";
        for (const GridDivisor& m : r.net.mobile) std::cout << "  " << m.to_text() << "\n";
        if (r.points.empty()) {
            std::cout << "base points: none\n";
        } else {
            std::cout << "base points:\n";
            for (const ResolvedBasePoint& pt : r.points) {
                std::cout << "  F" << pt.point.i << "^G" << pt.point.j
                          << " pairs=" << pt.point.local.to_text()
                          << " correction=" << pt.trace.total_correction << "\n";
                if (with_trace) std::cout << render_trace(pt.trace);
            }
        }
        std::cout << "M^2: " << r.m2 << "\n";
        std::cout << "total correction: " << r.total_correction << "\n";
        std::cout << "Mhat^2: " << r.mhat2 << "\n";
        std::cout << "verdict: " << verdict_name(r.kind) << "\n";
        if (r.degree) std::cout << "degree: " << *r.degree << "\n";
        if (r.relation) std::cout << "relation: " << relation_pretty(*r.relation) << "\n";
    } else if (report.free) {
        std::cout << "verdict: UNSUPPORTED_PG\n";
    }
    return code;
}

// ============================================================
// classify
// ============================================================

std::string class_verdict(const EquivalenceClass& cls) {
    if (!cls.resolution) return "UNSUPPORTED_PG";
    return verdict_name(cls.resolution->kind);
}

int cmd_classify(int p_value, bool as_json, bool as_csv, int threads) {
    const Prime p(p_value);
    const auto classes = classify_all(p, threads);

    if (as_json) {
        json rec = record_shell("classify");
        rec["input"]["p"] = p_value;
        json& res = rec["result"];
        res["class_count"] = classes.size();
        res["classes"] = json::array();
        for (const EquivalenceClass& cls : classes) {
            json c;
            c["representative"] = format_matrix(cls.representative);
            c["size"] = cls.members.size();
            c["genus"] = cls.report.genus;
            c["chi"] = *cls.report.chi;
            c["pg"] = *cls.report.pg;
            c["q"] = *cls.report.q;
            c["ksq"] = *cls.report.ksq;
            c["tensors"] = tensor_quads(cls.report.tensors);
            c["verdict"] = class_verdict(cls);
            if (cls.resolution && cls.resolution->degree) c["degree"] = *cls.resolution->degree;
            if (cls.resolution && cls.resolution->relation) {
                c["relation"] = *cls.resolution->relation;
                c["relation_pretty"] = relation_pretty(*cls.resolution->relation);
            }
            c["reference_row"] = cls.reference_row ? json(*cls.reference_row) : json(nullptr);
            res["classes"].push_back(c);
        }
        emit(rec);
        return 0;
    }

    if (as_csv) {
        std::cout << "class,representative,size,genus,chi,pg,q,ksq,verdict,degree,relation,"
                     "reference_row\n";
        int index = 0;
        for (const EquivalenceClass& cls : classes) {
            std::string relation;
            if (cls.resolution && cls.resolution->relation) {
                const auto& r = *cls.resolution->relation;
                relation = std::to_string(r[0]) + " " + std::to_string(r[1]) + " " +
                           std::to_string(r[2]);
            }
            std::cout << ++index << "," << csv_field(format_matrix(cls.representative)) << ","
                      << cls.members.size() << "," << cls.report.genus << "," << *cls.report.chi
                      << "," << *cls.report.pg << "," << *cls.report.q << "," << *cls.report.ksq
                      << "," << class_verdict(cls) << ","
                      << (cls.resolution && cls.resolution->degree
                              ? std::to_string(*cls.resolution->degree)
                              : "")
                      << "," << relation << ","
                      << (cls.reference_row ? std::to_string(*cls.reference_row) : "") << "\n";
        }
        return 0;
    }

    std::cout << "p: " << p_value << "\n";
    std::cout << "classes: " << classes.size() << "\n";
    int index = 0;
    for (const EquivalenceClass& cls : classes) {
        std::cout << "class " << ++index << ": rep=" << format_matrix(cls.representative)
                  << " size=" << cls.members.size() << " pg=" << *cls.report.pg
                  << " verdict=" << class_verdict(cls);
        if (cls.resolution && cls.resolution->degree)
            std::cout << " degree=" << *cls.resolution->degree;
        if (cls.resolution && cls.resolution->relation)
            std::cout << " relation=" << relation_compact(*cls.resolution->relation);
        std::cout << " row=" << (cls.reference_row ? std::to_string(*cls.reference_row) : "none")
                  << "\n";
    }
    return 0;
}

// ============================================================
// resolve-local
// ============================================================

json lemma_json(const LocalPairs& pairs) {
    const auto shape = lemma_shape(pairs);
    if (!shape) return nullptr;
    json out;
    out["a"] = shape->a();
    out["b"] = shape->b();
    out["c"] = shape->c();
    out["d"] = shape->d();
    out["hypothesis"] = lemma_hypothesis(*shape);
    out["closed_form"] = shape->a() * shape->b();
    return out;
}

int cmd_resolve_local(const std::string& pairs_text, bool as_json, bool with_lemma,
                      std::optional<int> max_depth) {
    const LocalPairs pairs = parse_pairs(pairs_text);
    const ResolutionTrace trace = resolve_local(pairs, max_depth);

    if (as_json) {
        json rec = record_shell("resolve-local");
        rec["input"]["pairs"] = pairs_text;
        json& res = rec["result"];
        res["pairs"] = pair_list(pairs);
        res["steps"] = json::array();
        for (const ResolutionStep& step : trace.steps) {
            json s;
            s["depth"] = step.depth;
            s["pairs"] = pair_list(step.before);
            s["multiplicity"] = step.multiplicity;
            res["steps"].push_back(s);
        }
        res["total_correction"] = trace.total_correction;
        if (with_lemma) res["lemma"] = lemma_json(pairs);
        emit(rec);
        return 0;
    }

    std::cout << render_trace(trace);
    if (with_lemma) {
        const auto shape = lemma_shape(pairs);
        if (shape) {
            std::cout << "lemma: a=" << shape->a() << " b=" << shape->b() << " c=" << shape->c()
                      << " d=" << shape->d() << "\n";
            std::cout << "hypothesis: " << (lemma_hypothesis(*shape) ? "true" : "false") << "\n";
            std::cout << "closed form: " << shape->a() * shape->b() << "\n";
        } else {
            std::cout << "lemma: not applicable\n";
        }
    }
    return 0;
}

// ============================================================
// tables
// ============================================================

struct ComputedRow {
    std::vector<InvariantTensor> tensors;
    NetResolution resolution;
};

ComputedRow compute_row(Prime p, const ReferenceRow& row) {
    const SurfaceSpec spec(p, reference_matrix(p, row));
    const SurfaceReport report = surface_report(spec);
    if (!report.free || report.pg != 3)
        fail(errc::internal, "reference row " + std::to_string(row.row) +
                                 " does not define a free p_g = 3 quotient");
    return ComputedRow{report.tensors, resolve_net(canonical_net(report.tensors))};
}

int check_tables() {
    const Prime p(7);
    bool all_ok = true;
    for (const ReferenceRow& row : reference_rows()) {
        std::vector<std::string> mismatches;
        const ComputedRow computed = compute_row(p, row);
        for (int i = 0; i < 3; ++i) {
            const InvariantTensor& t = computed.tensors[i];
            const std::array<int, 4> quad{t.first.j, t.first.k, t.second.j, t.second.k};
            if (quad != row.tensors[i]) mismatches.push_back("basis");
            if (exponent_sextuple(t) != row.monomials[i]) mismatches.push_back("monomials");
        }
        const NetResolution& res = computed.resolution;
        if (row.pencil != (res.kind == MapKind::composed_with_pencil))
            mismatches.push_back("verdict");
        else if (row.pencil && res.relation != std::optional(row.relation))
            mismatches.push_back("relation");
        else if (!row.pencil && res.degree != std::optional(row.degree))
            mismatches.push_back("degree");
        if (mismatches.empty()) {
            std::cout << "row " << row.row << ": ok\n";
        } else {
            all_ok = false;
            for (const std::string& what : mismatches)
                std::cerr << "tables check: row " << row.row << " disagrees on " << what << "\n";
        }
    }
    if (!all_ok) return 6;
    std::cout << "all 7 rows match\n";
    return 0;
}

int cmd_tables(bool as_json, bool as_csv, bool check) {
    if (check) return check_tables();
    const Prime p(7);

    if (as_json) {
        json rec = record_shell("tables");
        json& res = rec["result"];
        res["rows"] = json::array();
        for (const ReferenceRow& row : reference_rows()) {
            const ComputedRow computed = compute_row(p, row);
            json r;
            r["row"] = row.row;
            r["matrix"] = format_matrix(reference_matrix(p, row));
            r["tensors"] = tensor_quads(computed.tensors);
            r["monomials"] = monomial_sextuples(computed.tensors);
            r["monomials_pretty"] = monomial_strings(computed.tensors);
            r["verdict"] = verdict_name(computed.resolution.kind);
            if (computed.resolution.degree) r["degree"] = *computed.resolution.degree;
            if (computed.resolution.relation) {
                r["relation"] = *computed.resolution.relation;
                r["relation_pretty"] = relation_pretty(*computed.resolution.relation);
            }
            res["rows"].push_back(r);
        }
        emit(rec);
        return 0;
    }

    std::vector<std::array<std::string, 5>> cells;
    for (const ReferenceRow& row : reference_rows()) {
        const ComputedRow computed = compute_row(p, row);
        std::string basis, monomials;
        for (const auto& t : computed.tensors) {
            if (!basis.empty()) basis += " ";
            basis += tensor_pretty(t);
            if (!monomials.empty()) monomials += " ";
            monomials += monomial_pretty(exponent_sextuple(t));
        }
        const std::string verdict =
            computed.resolution.degree
                ? "degree " + std::to_string(*computed.resolution.degree)
                : "pencil: " + relation_pretty(*computed.resolution.relation);
        cells.push_back({std::to_string(row.row), format_matrix(reference_matrix(p, row)),
                         basis, monomials, verdict});
    }

    if (as_csv) {
        std::cout << "row,matrix,basis,monomials,canonical_map\n";
        for (const auto& row : cells)
            std::cout << row[0] << "," << csv_field(row[1]) << "," << csv_field(row[2]) << ","
                      << csv_field(row[3]) << "," << csv_field(row[4]) << "\n";
        return 0;
    }

    std::cout << "| row | matrix | canonical basis | monomial map | canonical map |\n";
    std::cout << "|-----|--------|-----------------|--------------|---------------|\n";
    for (const auto& row : cells)
        std::cout << "| " << row[0] << " | " << row[1] << " | " << row[2] << " | " << row[3]
                  << " | " << row[4] << " |\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical maps of quotients of products of two Fermat curves"};
    app.require_subcommand(1);

    int p_value = 0;
    std::string matrix_text;
    std::string pairs_text;
    bool flag_json = false, flag_csv = false, flag_trace = false, flag_lemma = false,
         flag_check = false;
    int max_depth = -1;
    int threads = 1;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "invariants and canonical-map degree of one quotient surface");
    analyze->add_option("-p,--prime", p_value, "prime modulus (5 <= p < 100)")->required();
    analyze->add_option("-A,--matrix", matrix_text, "twist matrix \"r00,r01;r10,r11\"")
        ->required();
    analyze->add_flag("--json", flag_json, "machine-readable output");
    analyze->add_flag("--trace", flag_trace, "append the blowup trace per base point");
    analyze->add_option("--max-depth", max_depth, "override the blowup depth cap")
        ->check(CLI::NonNegativeNumber);

    CLI::App* classify =
        app.add_subcommand("classify", "all free twists modulo equivalence, one row per class");
    classify->add_option("-p,--prime", p_value, "prime modulus (5 <= p < 100)")->required();
    CLI::Option* classify_json = classify->add_flag("--json", flag_json, "machine-readable output");
    classify->add_flag("--csv", flag_csv, "CSV output")->excludes(classify_json);
    classify->add_option("--threads", threads, "worker threads (output is identical for any value)")
        ->check(CLI::PositiveNumber);

    CLI::App* resolve = app.add_subcommand(
        "resolve-local", "blow up one base point given as three local pairs \"a1,b1 a2,b2 a3,b3\"");
    resolve->add_option("pairs", pairs_text, "local pairs text")->required();
    resolve->add_flag("--json", flag_json, "machine-readable output");
    resolve->add_flag("--lemma", flag_lemma, "report the closed-form shape and hypothesis");
    resolve->add_option("--max-depth", max_depth, "override the blowup depth cap")
        ->check(CLI::NonNegativeNumber);

    CLI::App* tables =
        app.add_subcommand("tables", "regenerate the built-in reference table (seven rows)");
    CLI::Option* tables_json = tables->add_flag("--json", flag_json, "machine-readable output");
    tables->add_flag("--csv", flag_csv, "CSV output")->excludes(tables_json);
    tables->add_flag("--check", flag_check, "recompute and compare against the stored values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::optional<int> depth =
            max_depth >= 0 ? std::optional<int>(max_depth) : std::nullopt;
        if (analyze->parsed())
            return cmd_analyze(p_value, matrix_text, flag_json, flag_trace, depth);
        if (classify->parsed()) return cmd_classify(p_value, flag_json, flag_csv, threads);
        if (resolve->parsed())
            return cmd_resolve_local(pairs_text, flag_json, flag_lemma, depth);
        return cmd_tables(flag_json, flag_csv, flag_check);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
