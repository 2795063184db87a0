#include "lgk/json_io.hpp"

#include <climits>

namespace lgk::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw SchemaError("field '" + field + "': " + what);
}

const json& member(const json& j, const std::string& key, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing");
    return *it;
}

std::string sub(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string idx(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

std::size_t count_from_json(const json& j, const std::string& field) {
    const Int v = int_from_json(j, field);
    if (v < 0 || !v.fits_ulong_p()) fail(field, "expected a non-negative count");
    return v.get_ui();
}

const json& array(const json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "expected an array");
    return j;
}

void check_schema(const json& j, const char* key) {
    const json& v = member(j, key, "");
    if (!v.is_number_integer() || v.get<long long>() != 1) fail(key, "unsupported schema version (expected 1)");
}

bool is_scalar(const json& j) { return !j.is_array() && !j.is_object(); }

void dump_to(const json& j, std::string& out, std::size_t indent) {
    const std::string pad(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + json(it.key()).dump() + ": ";
            dump_to(it.value(), out, indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "}";
        return;
    }
    if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool flat = true;
        for (const auto& e : j) flat = flat && is_scalar(e);
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            dump_to(j[i], out, indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "]";
        return;
    }
    out += j.dump();
}

}  // namespace

json parse(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        auto pos = msg.find("parse error");
        if (pos != std::string::npos) msg = msg.substr(pos);
        throw SchemaError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" + msg + ")");
    }
}

std::string dump(const json& j) {
    std::string out;
    dump_to(j, out, 0);
    return out + "\n";
}

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(static_cast<long long>(x.get_si()));
    return json(x.get_str());
}

Int int_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
        return Int(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0) fail(field, "expected an integer");
        return v;
    }
    fail(field, "expected an integer");
}

json rat_to_json(const Rat& x) { return json(x.get_str()); }

Rat rat_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rat(int_from_json(j, field));
    if (!j.is_string()) fail(field, "expected a rational \"p/q\"");
    Rat q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) fail(field, "expected a rational \"p/q\"");
    q.canonicalize();
    return q;
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

json rat_vec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

IntVec vec_from_json(const json& j, const std::string& field) {
    IntVec v;
    for (std::size_t i = 0; i < array(j, field).size(); ++i) v.push_back(int_from_json(j[i], idx(field, i)));
    return v;
}

RatVec rat_vec_from_json(const json& j, const std::string& field) {
    RatVec v;
    for (std::size_t i = 0; i < array(j, field).size(); ++i) v.push_back(rat_from_json(j[i], idx(field, i)));
    return v;
}

json matrix_to_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
    return a;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& field) {
    if (array(j, field).size() != rows) fail(field, "expected " + std::to_string(rows) + " rows");
    std::vector<IntVec> r;
    for (std::size_t i = 0; i < rows; ++i) {
        r.push_back(vec_from_json(j[i], idx(field, i)));
        if (r.back().size() != cols) fail(idx(field, i), "expected " + std::to_string(cols) + " entries");
    }
    return IntMatrix::from_rows(r, cols);
}

json group_to_json(const FiniteGroup& g) {
    json t = json::array();
    for (const auto& row : g.table()) t.push_back(row);
    return json{{"order", g.order()}, {"mult_table", t}};
}

FiniteGroup group_from_json(const json& j, const std::string& field) {
    const std::size_t order = count_from_json(member(j, "order", field), sub(field, "order"));
    const json& t = array(member(j, "mult_table", field), sub(field, "mult_table"));
    if (t.size() != order) fail(sub(field, "mult_table"), "expected " + std::to_string(order) + " rows");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t i = 0; i < order; ++i) {
        const std::string f = idx(sub(field, "mult_table"), i);
        if (array(t[i], f).size() != order) fail(f, "expected " + std::to_string(order) + " entries");
        std::vector<std::size_t> row;
        for (std::size_t k = 0; k < order; ++k) row.push_back(count_from_json(t[i][k], idx(f, k)));
        table.push_back(std::move(row));
    }
    return FiniteGroup(std::move(table));
}

json datum_to_json(const BasedRootDatum& b) {
    json roots = json::array(), coroots = json::array(), action = json::array();
    for (const auto& r : b.roots) roots.push_back(vec_to_json(r));
    for (const auto& c : b.coroots) coroots.push_back(vec_to_json(c));
    for (const auto& a : b.lattice.actions()) action.push_back(matrix_to_json(a));
    json galois = group_to_json(b.galois());
    galois["action"] = action;
    return json{{"brd_schema", 1}, {"rank", b.rank()}, {"roots", roots}, {"coroots", coroots},
                {"simple", b.simple}, {"galois", galois}};
}

BasedRootDatum datum_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("expected a based root datum object");
    check_schema(j, "brd_schema");
    const std::size_t n = count_from_json(member(j, "rank", ""), "rank");
    auto vectors = [&](const char* key) {
        std::vector<IntVec> out;
        const json& a = array(member(j, key, ""), key);
        for (std::size_t i = 0; i < a.size(); ++i) {
            out.push_back(vec_from_json(a[i], idx(key, i)));
            if (out.back().size() != n) fail(idx(key, i), "expected " + std::to_string(n) + " entries");
        }
        return out;
    };
    auto roots = vectors("roots");
    auto coroots = vectors("coroots");
    std::vector<std::size_t> simple;
    const json& s = array(member(j, "simple", ""), "simple");
    for (std::size_t i = 0; i < s.size(); ++i) simple.push_back(count_from_json(s[i], idx("simple", i)));

    GammaModule lattice = GammaModule::trivial(n);
    if (j.contains("galois")) {
        const json& g = j["galois"];
        FiniteGroup group = group_from_json(g, "galois");
        const json& act = array(member(g, "action", "galois"), "galois.action");
        if (act.size() != group.order()) fail("galois.action", "expected one matrix per group element");
        std::vector<IntMatrix> mats;
        for (std::size_t i = 0; i < act.size(); ++i) mats.push_back(matrix_from_json(act[i], n, n, idx("galois.action", i)));
        lattice = GammaModule(n, std::move(group), std::move(mats));
    }
    return BasedRootDatum{std::move(lattice), std::move(roots), std::move(coroots), std::move(simple)};
}

json torus_element_to_json(const TorusElement& t) {
    return json{{"circle", rat_vec_to_json(t.circle)}, {"radial", rat_vec_to_json(t.radial)}};
}

json param_to_json(const ParamDatum& p) {
    json gens = json::array();
    for (const auto& g : p.generators)
        gens.push_back(json{{"element", g.element},
                            {"frobenius", g.frobenius},
                            {"circle", rat_vec_to_json(g.t.circle)},
                            {"radial", rat_vec_to_json(g.t.radial)},
                            {"weyl", g.weyl_word},
                            {"galois", g.galois}});
    return json{{"param_schema", 1}, {"source", group_to_json(p.source)}, {"generators", gens}, {"sl2", rat_vec_to_json(p.sl2)}};
}

ParamDatum param_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("expected a parameter object");
    check_schema(j, "param_schema");
    ParamDatum p;
    p.source = group_from_json(member(j, "source", ""), "source");
    const json& gens = array(member(j, "generators", ""), "generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string f = idx("generators", i);
        const json& g = gens[i];
        ParamGenerator gen;
        gen.element = count_from_json(member(g, "element", f), sub(f, "element"));
        if (g.contains("frobenius")) {
            if (!g["frobenius"].is_boolean()) fail(sub(f, "frobenius"), "expected a boolean");
            gen.frobenius = g["frobenius"].get<bool>();
        }
        RatVec circle = rat_vec_from_json(member(g, "circle", f), sub(f, "circle"));
        RatVec radial = g.contains("radial") ? rat_vec_from_json(g["radial"], sub(f, "radial")) : zero_rat_vector(circle.size());
        if (radial.size() != circle.size()) fail(sub(f, "radial"), "length differs from circle");
        gen.t = TorusElement(std::move(circle), std::move(radial));
        if (g.contains("weyl")) {
            const json& w = array(g["weyl"], sub(f, "weyl"));
            for (std::size_t k = 0; k < w.size(); ++k) gen.weyl_word.push_back(count_from_json(w[k], idx(sub(f, "weyl"), k)));
        }
        if (g.contains("galois")) gen.galois = count_from_json(g["galois"], sub(f, "galois"));
        p.generators.push_back(std::move(gen));
    }
    if (j.contains("sl2")) p.sl2 = rat_vec_from_json(j["sl2"], "sl2");
    return p;
}

SublatticeSpec sublattice_from_json(const json& j, std::size_t rank) {
    const json& basis = array(member(j, "basis", ""), "basis");
    return SublatticeSpec{matrix_from_json(basis, basis.size(), rank, "basis")};
}

Twist twist_from_json(const json& j, const BasedRootDatum& b) {
    Twist t{group_from_json(member(j, "group", ""), "group"), {}};
    const json& images = array(member(j, "images", ""), "images");
    if (images.size() != t.group.order()) fail("images", "expected one image per group element");
    for (std::size_t i = 0; i < images.size(); ++i) {
        const std::string f = idx("images", i);
        std::vector<std::size_t> word;
        if (images[i].contains("weyl")) {
            const json& w = array(images[i]["weyl"], sub(f, "weyl"));
            for (std::size_t k = 0; k < w.size(); ++k) word.push_back(count_from_json(w[k], idx(sub(f, "weyl"), k)));
        }
        const std::size_t q = images[i].contains("galois") ? count_from_json(images[i]["galois"], sub(f, "galois")) : 0;
        t.images.push_back({weyl_matrix(b, word), q});
    }
    return t;
}

json target_to_json(const CohomologyTarget& t, const std::string& normalization) {
    return json{{"free_rank", t.group.free_rank()},
                {"invariant_factors", vec_to_json(t.group.invariant_factors())},
                {"kind", to_string(t.kind)},
                {"caveats", t.caveats},
                {"normalization", normalization}};
}

}  // namespace lgk::io
