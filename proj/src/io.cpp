#include "quadbraid/io.hpp"

#include <fstream>
#include <sstream>

namespace quadbraid {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
    return *it;
}

Int int_from_json(const Json& v, const char* what) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            bad(std::string(what) + ": not an integer: " + v.dump());
        }
    }
    bad(std::string(what) + ": expected an integer, got " + v.dump());
}

IntVec int_vec_from_json(const Json& v, const char* what) {
    if (!v.is_array()) bad(std::string(what) + ": expected an array, got " + v.dump());
    IntVec out;
    out.reserve(v.size());
    for (const Json& e : v) out.push_back(int_from_json(e, what));
    return out;
}

IntMatrix int_matrix_from_json(const Json& v, const char* what) {
    if (!v.is_array()) bad(std::string(what) + ": expected an array of rows");
    IntMatrix out;
    out.reserve(v.size());
    for (const Json& row : v) out.push_back(int_vec_from_json(row, what));
    return out;
}

Json int_vec_to_json(const IntVec& v) {
    Json out = Json::array();
    for (const Int& e : v) out.push_back(to_int64(e));
    return out;
}

Json int_matrix_to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const IntVec& row : m) out.push_back(int_vec_to_json(row));
    return out;
}

std::string coeff_string_at(const Json& v, const char* what) {
    if (!v.is_string()) bad(std::string(what) + ": expected a \"num/den\" string, got " + v.dump());
    return v.get<std::string>();
}

std::vector<Coeff> coeff_vec_from_json(const Json& v, const TargetGroup& target, const char* what) {
    if (!v.is_array()) bad(std::string(what) + ": expected an array");
    std::vector<Coeff> out;
    out.reserve(v.size());
    for (const Json& e : v) out.push_back(coeff_from_string(target, coeff_string_at(e, what)));
    return out;
}

Json coeff_vec_to_json(const std::vector<Coeff>& v) {
    Json out = Json::array();
    for (const Coeff& e : v) out.push_back(e.str());
    return out;
}

std::string join_coords(const GroupElement& x) {
    std::string out;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) out += ';';
        out += x.coords[i].str();
    }
    return out;
}

}  // namespace

Json group_to_json(const Group& g) {
    Json j;
    j["moduli"] = int_vec_to_json(g.moduli);
    return j;
}

Group group_from_json(const Json& j) {
    return make_group(int_vec_from_json(need(j, "moduli"), "moduli"));
}

TargetGroup target_from_label(const std::string& label) {
    if (label == "Q/Z") return TargetGroup::qmodz();
    if (label == "Z") return TargetGroup::integers();
    if (label.rfind("Z/", 0) == 0) {
        try {
            Int n(label.substr(2));
            return TargetGroup::zmod(n);
        } catch (const std::exception&) {
        }
    }
    bad("unknown target \"" + label + "\" (expected \"Q/Z\", \"Z\" or \"Z/n\")");
}

Coeff coeff_from_string(const TargetGroup& target, const std::string& s) {
    std::size_t slash = s.find('/');
    std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (num_part.empty() || den_part.empty()) bad("malformed rational \"" + s + "\"");
    Int num, den;
    try {
        num = Int(num_part);
        den = Int(den_part);
    } catch (const std::exception&) {
        bad("malformed rational \"" + s + "\"");
    }
    if (den <= 0) bad("malformed rational \"" + s + "\": denominator must be positive");
    try {
        return Coeff::make(target, num, den);
    } catch (const std::invalid_argument& e) {
        bad("value \"" + s + "\" does not live in " + target.name() + ": " + e.what());
    }
}

Json form_to_json(const QuadraticForm& q) {
    Json j;
    j["group"] = group_to_json(q.group);
    j["target"] = q.target.name();
    j["diag"] = coeff_vec_to_json(q.diag);
    Json off = Json::object();
    for (std::size_t k = 0; k < q.group.rank(); ++k)
        for (std::size_t l = k + 1; l < q.group.rank(); ++l)
            if (!q.off(k, l).is_zero()) off[std::to_string(k) + "," + std::to_string(l)] = q.off(k, l).str();
    j["offdiag"] = off;
    return j;
}

namespace {

QuadraticForm form_from_parts(const Group& g, const TargetGroup& target, const Json& diag_j,
                              const Json& off_j) {
    std::vector<Coeff> diag = coeff_vec_from_json(diag_j, target, "diag");
    if (diag.size() != g.rank())
        bad("diag has " + std::to_string(diag.size()) + " entries for a rank-" +
            std::to_string(g.rank()) + " group");
    std::map<std::pair<std::size_t, std::size_t>, Coeff> off;
    if (!off_j.is_object()) bad("offdiag: expected an object keyed by \"k,l\"");
    for (auto it = off_j.begin(); it != off_j.end(); ++it) {
        const std::string& key = it.key();
        std::size_t comma = key.find(',');
        if (comma == std::string::npos) bad("offdiag key \"" + key + "\" is not of the form \"k,l\"");
        std::size_t k = 0, l = 0;
        try {
            k = std::stoul(key.substr(0, comma));
            l = std::stoul(key.substr(comma + 1));
        } catch (const std::exception&) {
            bad("offdiag key \"" + key + "\" is not of the form \"k,l\"");
        }
        if (k >= l || l >= g.rank()) bad("offdiag key \"" + key + "\" is out of range (need k < l < rank)");
        off.emplace(std::make_pair(k, l), coeff_from_string(target, coeff_string_at(it.value(), "offdiag")));
    }
    return form_from_params(g, target, std::move(diag), std::move(off));
}

}  // namespace

QuadraticForm form_from_json(const Json& j) {
    Group g = group_from_json(need(j, "group"));
    TargetGroup target = target_from_label(coeff_string_at(need(j, "target"), "target"));
    return form_from_parts(g, target, need(j, "diag"), need(j, "offdiag"));
}

Json presentation_to_json(const Presentation& p) {
    Json j;
    j["group"] = group_to_json(p.group);
    j["target"] = p.target.name();
    if (!p.diagonal()) {
        j["rank"] = p.rank;
        j["relation_matrix"] = int_matrix_to_json(*p.relation_matrix);
        j["projection"] = int_matrix_to_json(*p.projection);
    }
    j["relation_moduli"] = int_vec_to_json(p.relation_moduli);
    Json c = Json::array();
    for (const auto& row : p.C) c.push_back(coeff_vec_to_json(row));
    j["C"] = c;
    return j;
}

Presentation presentation_from_json(const Json& j) {
    Group g = group_from_json(need(j, "group"));
    TargetGroup target = target_from_label(coeff_string_at(need(j, "target"), "target"));
    const Json& c_j = need(j, "C");
    if (!c_j.is_array()) bad("C: expected an array of rows");
    std::vector<std::vector<Coeff>> C;
    C.reserve(c_j.size());
    for (const Json& row : c_j) C.push_back(coeff_vec_from_json(row, target, "C"));

    if (j.contains("projection")) {
        Int rank = int_from_json(need(j, "rank"), "rank");
        return make_matrix_presentation(g, target, to_size(rank),
                                        int_matrix_from_json(need(j, "relation_matrix"), "relation_matrix"),
                                        int_matrix_from_json(need(j, "projection"), "projection"),
                                        std::move(C));
    }
    Presentation p = make_diagonal_presentation(g, target, std::move(C));
    if (j.contains("relation_moduli") &&
        int_vec_from_json(j.at("relation_moduli"), "relation_moduli") != p.relation_moduli)
        bad("relation_moduli does not match the diagonal presentation of the group");
    return p;
}

std::optional<QuadraticForm> embedded_form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("form")) return std::nullopt;
    Group g = group_from_json(need(j, "group"));
    TargetGroup target = target_from_label(coeff_string_at(need(j, "target"), "target"));
    const Json& f = j.at("form");
    return form_from_parts(g, target, need(f, "diag"), need(f, "offdiag"));
}

Json cocycle_to_json(const Cocycle& w) {
    Cocycle t = tabulate(w);
    Json j;
    j["group"] = group_to_json(t.group);
    j["target"] = t.target.name();
    j["order"] = "lex";
    j["h"] = coeff_vec_to_json(t.h_table);
    j["c"] = coeff_vec_to_json(t.c_table);
    return j;
}

Cocycle cocycle_from_json(const Json& j) {
    Cocycle w;
    w.group = group_from_json(need(j, "group"));
    w.target = target_from_label(coeff_string_at(need(j, "target"), "target"));
    w.backend = CocycleBackend::Table;
    std::string order = coeff_string_at(need(j, "order"), "order");
    if (order != "lex") bad("unsupported table order \"" + order + "\" (only \"lex\")");
    w.h_table = coeff_vec_from_json(need(j, "h"), w.target, "h");
    w.c_table = coeff_vec_from_json(need(j, "c"), w.target, "c");
    std::size_t n = to_size(w.group.order());
    if (w.h_table.size() != n * n * n)
        bad("h table has " + std::to_string(w.h_table.size()) + " entries, expected " +
            std::to_string(n * n * n));
    if (w.c_table.size() != n * n)
        bad("c table has " + std::to_string(w.c_table.size()) + " entries, expected " +
            std::to_string(n * n));
    return w;
}

std::string cocycle_to_csv(const Cocycle& w) {
    Cocycle t = tabulate(w);
    std::vector<GroupElement> elems = enumerate_elements(t.group);
    const std::size_t n = elems.size();
    std::ostringstream out;
    out << "x,y,z,value\n";
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                out << join_coords(elems[x]) << ',' << join_coords(elems[y]) << ','
                    << join_coords(elems[z]) << ',' << t.h_table[(x * n + y) * n + z].str() << '\n';
    out << "x,y,value\n";
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            out << join_coords(elems[x]) << ',' << join_coords(elems[y]) << ','
                << t.c_table[x * n + y].str() << '\n';
    return out.str();
}

Json report_to_json(const CheckReport& r) {
    Json j;
    j["passed"] = r.passed();
    j["total_checked"] = r.total_checked();
    j["total_failures"] = r.total_failures();
    Json checks = Json::array();
    for (const IdentityCheck& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["checked"] = c.checked;
        cj["failures"] = c.failures;
        Json sample = Json::array();
        for (const FailureCase& f : c.sample) {
            Json fj;
            fj["detail"] = f.detail;
            fj["lhs"] = f.lhs;
            fj["rhs"] = f.rhs;
            sample.push_back(fj);
        }
        cj["sample"] = sample;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

Json normal_form_to_json(const NormalFormReport& r) {
    Json j;
    j["applicable"] = r.applicable;
    Json rest = report_to_json(r.checks);
    for (auto it = rest.begin(); it != rest.end(); ++it) j[it.key()] = it.value();
    return j;
}

Json decision_to_json(const StrictifyDecision& d) {
    Json j;
    j["strictifiable"] = d.yes;
    j["grid_size"] = d.grid_size.str();
    j["exhausted"] = d.exhausted;
    j["symmetric_fast_path"] = d.symmetric_fast_path;
    if (d.witness.has_value()) {
        Json rows = Json::array();
        std::size_t r = d.witness->group.rank();
        for (std::size_t k = 0; k < r; ++k) {
            Json row = Json::array();
            for (std::size_t l = 0; l < r; ++l) row.push_back(d.witness->at(k, l).str());
            rows.push_back(row);
        }
        j["witness"] = rows;
    } else {
        j["witness"] = nullptr;
    }
    j["cocycle"] = d.strict_cocycle.has_value() ? cocycle_to_json(*d.strict_cocycle) : Json(nullptr);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace quadbraid
