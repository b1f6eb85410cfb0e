// Command-line front end: classification counts, cocycle table emission,
// verification, traces, normal-form checks, strictifiability and presentation
// optimization. Exit codes: 0 success / all checks pass, 1 identity failure,
// 2 usage or input error.

#include "quadbraid/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace quadbraid;

namespace {

const TargetGroup kQZ = TargetGroup::qmodz();

Int parse_int(const std::string& tok, const char* what) {
    try {
        return Int(tok);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, std::string(what) + ": not an integer: \"" + tok + "\"");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

Group parse_group(const std::string& spec) {
    IntVec moduli;
    for (const std::string& tok : split(spec, ',')) moduli.push_back(parse_int(tok, "--group"));
    return make_group(moduli);
}

// A diagonal token without '/' is the integer parameter p_k, giving the
// generator value p_k / gcd(n_k^2, 2 n_k); with '/' it is that rational
// verbatim (the only way to hit free factors, whose values are unconstrained).
Coeff parse_value_token(const std::string& tok, const Int& torsion, const char* what) {
    if (tok.find('/') != std::string::npos) return coeff_from_string(kQZ, tok);
    Int p = parse_int(tok, what);
    if (torsion == 0) return Coeff::make(kQZ, p, 1);
    return Coeff::make(kQZ, p, torsion);
}

QuadraticForm form_from_cli(const Group& g, const std::string& p_spec,
                            const std::vector<std::string>& q_specs) {
    std::vector<Coeff> diag(g.rank(), Coeff::zero(kQZ));
    if (!p_spec.empty()) {
        std::vector<std::string> toks = split(p_spec, ',');
        if (toks.size() != g.rank())
            throw Error(ErrorKind::ParseError, "--p lists " + std::to_string(toks.size()) +
                                                   " values for a rank-" + std::to_string(g.rank()) +
                                                   " group");
        for (std::size_t k = 0; k < g.rank(); ++k)
            diag[k] = parse_value_token(toks[k], diag_torsion(g.moduli[k]), "--p");
    }
    std::map<std::pair<std::size_t, std::size_t>, Coeff> off;
    for (const std::string& spec : q_specs) {
        std::size_t eq = spec.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::ParseError, "--q expects k,l=value, got \"" + spec + "\"");
        std::vector<std::string> kl = split(spec.substr(0, eq), ',');
        if (kl.size() != 2)
            throw Error(ErrorKind::ParseError, "--q expects k,l=value, got \"" + spec + "\"");
        std::size_t k = to_size(parse_int(kl[0], "--q"));
        std::size_t l = to_size(parse_int(kl[1], "--q"));
        if (k >= l || l >= g.rank())
            throw Error(ErrorKind::ParseError, "--q indices " + spec.substr(0, eq) +
                                                   " out of range (need k < l < rank)");
        off[{k, l}] = parse_value_token(spec.substr(eq + 1), pair_torsion(g.moduli[k], g.moduli[l]), "--q");
    }
    return form_from_params(g, kQZ, std::move(diag), off);
}

std::string group_label(const Group& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.moduli.size(); ++i) {
        if (i) s += ",";
        s += g.moduli[i].str();
    }
    return s + ")";
}

void print_report_lines(const CheckReport& r) {
    for (const IdentityCheck& c : r.checks) {
        std::cout << c.name << ": " << c.checked << " instances, " << c.failures << " failures\n";
        for (const FailureCase& f : c.sample)
            std::cout << "  at " << f.detail << ": " << f.lhs << " != " << f.rhs << "\n";
    }
}

int run_classify(const std::string& group_spec, bool split_torsion) {
    Group g = parse_group(group_spec);
    Int total = count_forms(g);
    std::cout << total.str() << " quadratic forms on " << group_label(g) << "\n";
    Json j;
    j["group"] = group_to_json(g);
    j["total"] = to_int64(total);
    if (split_torsion) {
        long long small = 0, large = 0;
        for (const QuadraticForm& q : enumerate_forms(g)) {
            Cocycle t = tabulate(quinn_cocycle(q));
            Int max_den = 1;
            for (const Coeff& v : t.h_table) max_den = std::max(max_den, v.den());
            for (const Coeff& v : t.c_table) max_den = std::max(max_den, v.den());
            (max_den <= 2 ? small : large) += 1;
        }
        std::cout << "  all cocycle denominators <= 2: " << small << "\n";
        std::cout << "  some denominator > 2: " << large << "\n";
        Json s;
        s["denominator_le_2"] = small;
        s["denominator_gt_2"] = large;
        j["split"] = s;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

// Exact test for an identically vanishing associator: every closed-form h term
// is a multiple of n_l * (row l value), so h == 0 iff those all die in Q/Z.
bool h_vanishes_identically(const QuadraticForm& q) {
    for (std::size_t l = 0; l < q.group.rank(); ++l) {
        if (q.group.moduli[l] == 0) continue;
        if (!scale(q.group.moduli[l], q.diag[l]).is_zero()) return false;
    }
    return true;
}

int run_cocycle(const std::string& group_spec, const std::string& p_spec,
                const std::vector<std::string>& q_specs, const std::string& method,
                const std::string& format) {
    Group g = parse_group(group_spec);
    QuadraticForm q = form_from_cli(g, p_spec, q_specs);

    Cocycle w;
    if (method == "quinn")
        w = quinn_cocycle(q);
    else if (method == "exp")
        w = exp_cocycle(q);
    else if (method == "presentation")
        w = cocycle_from_presentation(standard_presentation(q), q);
    else
        throw Error(ErrorKind::ParseError, "unknown --method \"" + method + "\"");

    if (!g.finite()) {
        if (format == "csv")
            throw Error(ErrorKind::ParseError, "cannot emit a dense CSV table for an infinite group");
        Json j;
        j["group"] = group_to_json(g);
        j["target"] = kQZ.name();
        j["method"] = method;
        Json cf;
        if (method == "presentation") {
            Json rows = Json::array();
            for (const auto& row : w.pres->C) {
                Json r = Json::array();
                for (const Coeff& v : row) r.push_back(v.str());
                rows.push_back(r);
            }
            cf["C"] = rows;
        } else {
            Json rows = Json::array();
            for (std::size_t i = 0; i < g.rank(); ++i) {
                Json r = Json::array();
                for (std::size_t k = 0; k < g.rank(); ++k) r.push_back(w.sigma[i][k].str());
                rows.push_back(r);
            }
            cf["sigma"] = rows;
        }
        j["closed_form"] = cf;
        bool hzero = h_vanishes_identically(q);
        j["h_identically_zero"] = hzero;
        std::cout << method << " cocycle on the infinite group " << group_label(g)
                  << ": closed-form parameters\n";
        std::cout << (hzero ? "the associator h is identically zero\n"
                            : "the associator h has nonzero finite-factor terms\n");
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (format == "csv") {
        std::cout << cocycle_to_csv(w);
        return 0;
    }
    if (format != "json") throw Error(ErrorKind::ParseError, "unknown --format \"" + format + "\"");
    Cocycle t = tabulate(w);
    std::cout << method << " cocycle on " << group_label(g) << " over " << kQZ.name() << ": "
              << t.h_table.size() << " h entries, " << t.c_table.size() << " c entries\n";
    std::cout << cocycle_to_json(t).dump() << "\n";
    return 0;
}

int run_verify(const std::string& input, long box) {
    Cocycle w = cocycle_from_json(load_json_file(input));
    CheckReport report = verify_cocycle(w, box);
    print_report_lines(report);
    std::cout << (report.passed() ? "all identities hold" : "identity failures found") << "\n";
    std::cout << report_to_json(report).dump() << "\n";
    return report.passed() ? 0 : 1;
}

int run_trace(const std::string& input) {
    Cocycle w = cocycle_from_json(load_json_file(input));
    QuadraticForm q = trace(w);
    std::cout << "trace is a quadratic form on " << group_label(q.group) << "\n";
    std::cout << form_to_json(q).dump() << "\n";
    return 0;
}

int run_normal_form(const std::string& input, long box) {
    Cocycle w = cocycle_from_json(load_json_file(input));
    NormalFormReport report = normal_form_report(make_model(w), box);
    if (!report.applicable)
        std::cout << "note: target " << w.target.name()
                  << " is not divisible; a normal form is not guaranteed to exist\n";
    print_report_lines(report.checks);
    std::cout << (report.passed() ? "the model is in normal form" : "normal-form identities fail")
              << "\n";
    std::cout << normal_form_to_json(report).dump() << "\n";
    return report.passed() ? 0 : 1;
}

int run_strictify(const std::string& group_spec, const std::string& p_spec,
                  const std::vector<std::string>& q_specs, long long ceiling) {
    Group g = parse_group(group_spec);
    QuadraticForm q = form_from_cli(g, p_spec, q_specs);
    StrictifyDecision d = strictifiable(q, Int(ceiling));
    if (d.yes) {
        std::cout << "strictifiable: yes"
                  << (d.symmetric_fast_path ? " (zero polarization, symmetric construction)" : "")
                  << "\n";
    } else {
        std::cout << "strictifiable: no (exhausted a grid of " << d.grid_size.str()
                  << " bilinear candidates)\n";
    }
    std::cout << decision_to_json(d).dump() << "\n";
    return 0;
}

int run_optimize(const std::string& presentation_file) {
    Json j = load_json_file(presentation_file);
    Presentation p = presentation_from_json(j);
    std::optional<QuadraticForm> q = embedded_form_from_json(j);
    if (!q.has_value())
        throw Error(ErrorKind::ParseError,
                    presentation_file + ": needs a \"form\" block with \"diag\" and \"offdiag\"");

    PresentationFlags before = presentation_flags(p, *q);
    Presentation result = optimize(p, *q);
    PresentationFlags after = presentation_flags(result, *q);

    auto flag_line = [](const char* label, const PresentationFlags& f) {
        std::cout << label << ": pre-admissible " << (f.pre_admissible ? "yes" : "no")
                  << ", admissible " << (f.admissible ? "yes" : "no") << ", optimal "
                  << (f.optimal ? "yes" : "no") << "\n";
    };
    flag_line("before", before);
    flag_line("after", after);

    auto flags_json = [](const PresentationFlags& f) {
        Json out;
        out["pre_admissible"] = f.pre_admissible;
        out["admissible"] = f.admissible;
        out["optimal"] = f.optimal;
        return out;
    };
    Json out;
    out["before"] = flags_json(before);
    out["after"] = flags_json(after);
    out["presentation"] = presentation_to_json(result);
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact associator and braiding data for quadratic forms on finitely generated abelian groups"};
    app.require_subcommand(1);

    std::string group_spec, p_spec, method = "quinn", format = "json", input, presentation_file;
    std::vector<std::string> q_specs;
    bool split_torsion = false;
    long box = 3;
    long long ceiling = 1LL << 20;

    CLI::App* classify = app.add_subcommand("classify", "count the quadratic forms on a finite group");
    classify->add_option("--group", group_spec, "comma-separated moduli, e.g. 2,4 (0 = free factor)")
        ->required();
    classify->add_flag("--split-torsion", split_torsion,
                       "partition by the largest denominator in the emitted tables");

    CLI::App* cocycle = app.add_subcommand("cocycle", "emit the associator/braiding table of a form");
    cocycle->add_option("--group", group_spec, "comma-separated moduli")->required();
    cocycle->add_option("--p", p_spec,
                        "diagonal parameters, one per factor: integer p_k or literal rational a/b");
    cocycle->add_option("--q", q_specs, "off-diagonal parameter k,l=value (repeatable)");
    cocycle->add_option("--method", method, "quinn | exp | presentation (default quinn)");
    cocycle->add_option("--format", format, "json | csv (default json)");

    CLI::App* verify = app.add_subcommand("verify", "check the cocycle identities of a table file");
    verify->add_option("--input", input, "cocycle table JSON file")->required();
    verify->add_option("--box", box, "coordinate box for infinite groups (default 3)");

    CLI::App* trace_cmd = app.add_subcommand("trace", "quadratic form x -> c(x,x) of a table file");
    trace_cmd->add_option("--input", input, "cocycle table JSON file")->required();

    CLI::App* normal_form = app.add_subcommand("normal-form", "check the extra symmetry identities");
    normal_form->add_option("--input", input, "cocycle table JSON file")->required();
    normal_form->add_option("--box", box, "coordinate box for infinite groups (default 3)");

    CLI::App* strictify = app.add_subcommand("strictify", "decide strict associativity for a form");
    strictify->add_option("--group", group_spec, "comma-separated moduli")->required();
    strictify->add_option("--p", p_spec, "diagonal parameters");
    strictify->add_option("--q", q_specs, "off-diagonal parameter k,l=value (repeatable)");
    strictify->add_option("--ceiling", ceiling, "witness-grid size limit (default 2^20)");

    CLI::App* optimize_cmd = app.add_subcommand("optimize", "rewrite C so that C(x,x) = q(x)");
    optimize_cmd->add_option("--presentation", presentation_file,
                             "presentation JSON file with an embedded \"form\" block")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(group_spec, split_torsion);
        if (cocycle->parsed()) return run_cocycle(group_spec, p_spec, q_specs, method, format);
        if (verify->parsed()) return run_verify(input, box);
        if (trace_cmd->parsed()) return run_trace(input);
        if (normal_form->parsed()) return run_normal_form(input, box);
        if (strictify->parsed()) return run_strictify(group_spec, p_spec, q_specs, ceiling);
        if (optimize_cmd->parsed()) return run_optimize(presentation_file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
