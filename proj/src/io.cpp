#include "zsr/io.hpp"

#include <fstream>
#include <map>

#include "zsr/error.hpp"

namespace zsr::io {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
    return *it;
}

std::string at(const std::string& path, const char* key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

std::size_t uint_value(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

// Re-throws construction errors with the path prefixed.
template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const GroupAxiomError&) {
        throw;
    } catch (const InputError& e) {
        const std::string what = e.what();
        if (what.rfind("$", 0) == 0) throw;
        if (dynamic_cast<const StructureError*>(&e)) throw StructureError(path + ": " + what);
        throw InputError(path + ": " + what);
    }
}

std::vector<std::string> parse_labels(const Json& j, const std::string& path) {
    std::vector<std::string> labels;
    if (j.is_number_integer()) {
        for (std::size_t i = 0; i < uint_value(j, path); ++i) labels.push_back(std::to_string(i));
        return labels;
    }
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].is_string()) labels.push_back(j[i].get<std::string>());
        else if (j[i].is_number_integer()) labels.push_back(std::to_string(j[i].get<long long>()));
        else fail(at(path, i), "vertex label must be a string or integer");
    }
    return labels;
}

std::vector<std::size_t> parse_vertex_refs(const Json& j, const std::map<std::string, std::size_t>& by_label,
                                           std::size_t count, const std::string& path) {
    std::vector<std::size_t> out;
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& x = j[i];
        if (x.is_string()) {
            auto it = by_label.find(x.get<std::string>());
            if (it == by_label.end()) fail(at(path, i), "unknown vertex \"" + x.get<std::string>() + "\"");
            out.push_back(it->second);
        } else {
            std::size_t v = uint_value(x, at(path, i));
            if (v >= count) fail(at(path, i), "vertex index " + std::to_string(v) + " out of range");
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

FiniteGroup parse_group_name(const std::string& name) {
    auto x = name.find('x');
    if (x != std::string::npos)
        return FiniteGroup::direct_product(parse_group_name(name.substr(0, x)), parse_group_name(name.substr(x + 1)));
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
            throw InputError("unknown group \"" + name + "\"");
        return static_cast<std::size_t>(std::stoul(s));
    };
    if (name.rfind("Z/", 0) == 0) return FiniteGroup::cyclic(number(name.substr(2)));
    if (name.rfind("S_", 0) == 0) return FiniteGroup::symmetric(number(name.substr(2)));
    if (name.rfind("S", 0) == 0) return FiniteGroup::symmetric(number(name.substr(1)));
    throw InputError("unknown group \"" + name + "\"");
}

FiniteGroup parse_group(const Json& j, const std::string& path) {
    if (j.is_string()) return with_path(path, [&] { return parse_group_name(j.get<std::string>()); });
    const std::size_t order = uint_value(field(j, "order", path), at(path, "order"));
    const auto& t = array(field(j, "table", path), at(path, "table"));
    if (t.size() != order) fail(at(path, "table"), "expected " + std::to_string(order) + " rows");
    std::vector<std::vector<int>> table;
    for (std::size_t r = 0; r < t.size(); ++r) {
        const auto rp = at(at(path, "table"), r);
        array(t[r], rp);
        std::vector<int> row;
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (!t[r][c].is_number_integer()) fail(at(rp, c), "expected an integer");
            row.push_back(t[r][c].get<int>());
        }
        table.push_back(std::move(row));
    }
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    try {
        return FiniteGroup::from_cayley_table(table, name);
    } catch (const GroupAxiomError& e) {
        throw GroupAxiomError(at(path, "table") + ": " + e.what(), e.a(), e.b(), e.c());
    }
}

Json emit_group(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order();
    if (!g.name().empty()) j["name"] = g.name();
    j["table"] = g.table();
    return j;
}

SimplicialComplex parse_complex(const Json& j, const std::string& path) {
    auto labels = parse_labels(field(j, "vertices", path), at(path, "vertices"));
    std::map<std::string, std::size_t> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) by_label.emplace(labels[i], i);
    const auto& fs = array(field(j, "facets", path), at(path, "facets"));
    std::vector<Face> facets;
    for (std::size_t i = 0; i < fs.size(); ++i)
        facets.push_back(parse_vertex_refs(fs[i], by_label, labels.size(), at(at(path, "facets"), i)));
    return with_path(at(path, "facets"),
                     [&] { return SimplicialComplex::from_facets(std::move(labels), std::move(facets)); });
}

Json emit_complex(const SimplicialComplex& k) {
    Json j;
    j["vertices"] = k.labels();
    j["facets"] = k.facets();
    return j;
}

SetFamily parse_set_family(const Json& j, const std::string& path) {
    const std::size_t m = uint_value(field(j, "ground", path), at(path, "ground"));
    const auto& ss = array(field(j, "sets", path), at(path, "sets"));
    std::vector<std::vector<int>> sets;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const auto sp = at(at(path, "sets"), i);
        array(ss[i], sp);
        std::vector<int> s;
        for (std::size_t k = 0; k < ss[i].size(); ++k) {
            if (!ss[i][k].is_number_integer()) fail(at(sp, k), "expected an integer");
            s.push_back(ss[i][k].get<int>());
        }
        sets.push_back(std::move(s));
    }
    return with_path(at(path, "sets"), [&] { return SetFamily::from_lists(m, sets); });
}

Json emit_set_family(const SetFamily& f) {
    Json j;
    j["ground"] = f.ground_size();
    Json sets = Json::array();
    for (std::size_t i = 0; i < f.size(); ++i) sets.push_back(f.member_elements(i));
    j["sets"] = std::move(sets);
    return j;
}

UniformHypergraph parse_hypergraph(const Json& j, const std::string& path) {
    auto labels = parse_labels(field(j, "vertices", path), at(path, "vertices"));
    const std::size_t n = uint_value(field(j, "uniformity", path), at(path, "uniformity"));
    std::map<std::string, std::size_t> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) by_label.emplace(labels[i], i);
    const auto& es = array(field(j, "edges", path), at(path, "edges"));
    std::vector<std::vector<std::size_t>> edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        edges.push_back(parse_vertex_refs(es[i], by_label, labels.size(), at(at(path, "edges"), i)));
    const std::size_t count = labels.size();
    return with_path(at(path, "edges"),
                     [&] { return UniformHypergraph(count, n, std::move(edges), std::move(labels)); });
}

Json emit_hypergraph(const UniformHypergraph& h) {
    Json j;
    j["vertices"] = h.labels();
    j["uniformity"] = h.uniformity();
    j["edges"] = h.edges();
    return j;
}

Rational parse_rational_value(const Json& j, const std::string& path, bool normalize) {
    if (j.is_number_integer()) return Rational(mpz_class(j.get<long>()));
    if (!j.is_string()) fail(path, "expected a rational string \"a/b\"");
    return with_path(path, [&] { return parse_rational(j.get<std::string>(), normalize); });
}

RationalMeasure parse_measure(const Json& j, const std::string& path, bool normalize) {
    const std::size_t p = uint_value(field(j, "p", path), at(path, "p"));
    const auto& ws = array(field(j, "weights", path), at(path, "weights"));
    std::vector<Rational> w;
    for (std::size_t i = 0; i < ws.size(); ++i)
        w.push_back(parse_rational_value(ws[i], at(at(path, "weights"), i), normalize));
    return with_path(path, [&] { return RationalMeasure(p, std::move(w)); });
}

Json emit_measure(const RationalMeasure& m) {
    Json j;
    j["p"] = m.modulus();
    Json ws = Json::array();
    for (const auto& w : m.weights()) ws.push_back(format_rational(w));
    j["weights"] = std::move(ws);
    return j;
}

std::vector<RationalMeasure> parse_measures(const Json& j, const std::string& path, bool normalize) {
    std::vector<RationalMeasure> out;
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_measure(j[i], at(path, i), normalize));
        return out;
    }
    const std::size_t p = uint_value(field(j, "p", path), at(path, "p"));
    const auto& ms = array(field(j, "measures", path), at(path, "measures"));
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto mp = at(at(path, "measures"), i);
        array(ms[i], mp);
        std::vector<Rational> w;
        for (std::size_t k = 0; k < ms[i].size(); ++k) w.push_back(parse_rational_value(ms[i][k], at(mp, k), normalize));
        out.push_back(with_path(mp, [&] { return RationalMeasure(p, std::move(w)); }));
    }
    return out;
}

std::pair<std::size_t, std::vector<std::vector<Element>>> parse_residue_sets(const Json& j, const std::string& path) {
    const std::size_t p = uint_value(field(j, "p", path), at(path, "p"));
    const auto& ss = array(field(j, "sets", path), at(path, "sets"));
    std::vector<std::vector<Element>> sets;
    for (std::size_t i = 0; i < ss.size(); ++i) sets.push_back(parse_elements(ss[i], p, at(at(path, "sets"), i)));
    return {p, std::move(sets)};
}

std::vector<std::vector<Rational>> parse_matrix(const Json& j, const std::string& path, bool normalize) {
    if (j.is_object()) return parse_matrix(field(j, "matrix", path), at(path, "matrix"), normalize);
    array(j, path);
    std::vector<std::vector<Rational>> m;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const auto rp = at(path, r);
        array(j[r], rp);
        if (j[r].size() != j.size()) fail(rp, "matrix is not square");
        std::vector<Rational> row;
        for (std::size_t c = 0; c < j[r].size(); ++c) row.push_back(parse_rational_value(j[r][c], at(rp, c), normalize));
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<Element> parse_elements(const Json& j, std::size_t modulus, const std::string& path) {
    array(j, path);
    std::vector<Element> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::size_t v = uint_value(j[i], at(path, i));
        if (v >= modulus) fail(at(path, i), std::to_string(v) + " is not an element of a group of order " +
                                                std::to_string(modulus));
        out.push_back(static_cast<Element>(v));
    }
    return out;
}

SimplicialMap parse_map(const Json& j, const std::string& path) {
    auto src = std::make_shared<const SimplicialComplex>(parse_complex(field(j, "source", path), at(path, "source")));
    auto tgt = std::make_shared<const SimplicialComplex>(parse_complex(field(j, "target", path), at(path, "target")));
    std::map<std::string, std::size_t> by_label;
    for (std::size_t i = 0; i < tgt->vertex_count(); ++i) by_label.emplace(tgt->label(i), i);
    auto vm = parse_vertex_refs(field(j, "vertex_map", path), by_label, tgt->vertex_count(), at(path, "vertex_map"));
    return with_path(at(path, "vertex_map"), [&] { return SimplicialMap::create(src, tgt, std::move(vm)); });
}

Json emit_map(const SimplicialMap& m) {
    Json j;
    j["source"] = emit_complex(m.source());
    j["target"] = emit_complex(m.target());
    j["vertex_map"] = m.vertex_map();
    return j;
}

ComplexAction parse_action(const Json& j, const std::string& path) {
    auto k = std::make_shared<const SimplicialComplex>(parse_complex(field(j, "complex", path), at(path, "complex")));
    auto g = parse_group(field(j, "group", path), at(path, "group"));
    const auto& ps = array(field(j, "perms", path), at(path, "perms"));
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto pp = at(at(path, "perms"), i);
        array(ps[i], pp);
        std::vector<std::size_t> perm;
        for (std::size_t v = 0; v < ps[i].size(); ++v) perm.push_back(uint_value(ps[i][v], at(pp, v)));
        perms.push_back(std::move(perm));
    }
    return with_path(at(path, "perms"), [&] { return ComplexAction::create(k, g, std::move(perms)); });
}

Json emit_action(const ComplexAction& a) {
    Json j;
    j["complex"] = emit_complex(a.complex());
    j["group"] = emit_group(a.group());
    j["perms"] = a.vertex_perms();
    return j;
}

Json emit_homology(const HomologyProfile& h) {
    Json j;
    j["f_vector"] = h.f_vector;
    Json dims = Json::array();
    for (std::size_t d = 0; d < h.betti.size(); ++d) {
        Json t = Json::array();
        for (const auto& x : h.torsion[d]) t.push_back(x.get_str());
        dims.push_back(Json{{"dim", d}, {"betti", h.betti[d]}, {"torsion", std::move(t)}});
    }
    j["reduced_homology"] = std::move(dims);
    const int c = homological_connectivity(h);
    j["homological_connectivity"] = c == kAcyclic ? Json("acyclic") : Json(c);
    return j;
}

Json emit_witness(const ZeroSumWitness& w) {
    Json j;
    std::vector<std::size_t> idx, ord;
    for (auto i : w.indices) idx.push_back(i + 1);
    for (auto i : w.ordering) ord.push_back(i + 1);
    j["indices"] = idx;
    j["ordering"] = ord;
    j["increasing_order_works"] = w.increasing_order_works;
    return j;
}

Json emit_fractional(const FractionalWitness& w) {
    Json j;
    std::vector<std::size_t> inj;
    for (auto i : w.injection) inj.push_back(i + 1);
    j["injection"] = inj;
    Json l = Json::array();
    for (const auto& x : w.lambdas) l.push_back(format_rational(x));
    j["lambdas"] = std::move(l);
    return j;
}

Json emit_balanced(const BalancedWitness& w) {
    Json j;
    std::vector<std::size_t> inj;
    for (auto i : w.injection) inj.push_back(i + 1);
    j["injection"] = inj;
    j["shifted_sets"] = w.shifted_sets;
    Json l = Json::array();
    for (const auto& x : w.weights) l.push_back(format_rational(x));
    j["weights"] = std::move(l);
    return j;
}

}  // namespace zsr::io
