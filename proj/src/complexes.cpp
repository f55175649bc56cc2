#include "zsr/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "zsr/error.hpp"

namespace zsr {
namespace {

std::string face_text(const std::vector<std::string>& labels, const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += f[i] < labels.size() ? labels[f[i]] : std::to_string(f[i]);
    }
    return s + "}";
}

std::string pair_label(const std::string& a, std::size_t b) {
    return "(" + a + "," + std::to_string(b) + ")";
}

std::vector<std::string> index_labels(std::size_t n) {
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
    return out;
}

void normalize_face(Face& f, std::size_t vertex_count, const char* what) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw StructureError(std::string(what) + " repeats a vertex");
    if (!f.empty() && f.back() >= vertex_count)
        throw StructureError(std::string(what) + " uses vertex " + std::to_string(f.back()) +
                             " but there are only " + std::to_string(vertex_count));
}

bool subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Maximal assignments of vertices to `parts` pairwise-disjoint parts (a
// vertex may also stay unused) under a monotone admissibility test
// can_add(parts, v, i). Each is reported as the face {i * V + v}.
template <class CanAdd>
std::vector<Face> maximal_partitions(std::size_t vcount, std::size_t parts, CanAdd can_add,
                                     bool all_nonempty) {
    std::vector<std::vector<std::size_t>> state(parts);
    std::vector<char> used(vcount, 0);
    std::vector<Face> out;

    auto emit = [&] {
        if (all_nonempty)
            for (auto& p : state)
                if (p.empty()) return;
        for (std::size_t v = 0; v < vcount; ++v) {
            if (used[v]) continue;
            for (std::size_t i = 0; i < parts; ++i)
                if (can_add(state, v, i)) return;
        }
        Face f;
        for (std::size_t i = 0; i < parts; ++i)
            for (std::size_t v : state[i]) f.push_back(i * vcount + v);
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
    };

    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == vcount) {
            emit();
            return;
        }
        for (std::size_t i = 0; i < parts; ++i) {
            if (!can_add(state, v, i)) continue;
            state[i].push_back(v);
            used[v] = 1;
            self(self, v + 1);
            used[v] = 0;
            state[i].pop_back();
        }
        self(self, v + 1);
    };
    rec(rec, 0);
    return out;
}

FiniteGroup require_cyclic_prime(const FiniteGroup& g) {
    if (!is_prime(g.order()) || !(g == FiniteGroup::cyclic(g.order())))
        throw InputError("target-sum form requires the group Z/p with p prime");
    return g;
}

}  // namespace

// -- SimplicialComplex -------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Face> facets)
    : labels_(std::move(labels)), facets_(std::move(facets)) {
    std::sort(facets_.begin(), facets_.end());
    index_facets();
}

void SimplicialComplex::index_facets() {
    words_ = (labels_.size() + 63) / 64;
    facet_bits_.assign(facets_.size() * words_, 0);
    for (std::size_t f = 0; f < facets_.size(); ++f)
        for (std::size_t v : facets_[f]) facet_bits_[f * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 std::vector<Face> facets) {
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) throw StructureError("duplicate vertex label " + *dup);
    }
    for (auto& f : facets) normalize_face(f, labels.size(), "facet");
    std::sort(facets.begin(), facets.end(),
              [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    for (std::size_t a = 0; a + 1 < facets.size(); ++a)
        if (facets[a] == facets[a + 1])
            throw StructureError("facet " + face_text(labels, facets[a]) + " is listed twice");
    for (std::size_t a = 0; a < facets.size(); ++a)
        for (std::size_t b = facets.size(); b-- > a + 1;) {
            if (facets[b].size() == facets[a].size()) break;
            if (subset(facets[a], facets[b]))
                throw StructureError("facet " + face_text(labels, facets[a]) + " is contained in facet " +
                                     face_text(labels, facets[b]));
        }
    std::vector<char> seen(labels.size(), 0);
    for (auto& f : facets)
        for (std::size_t v : f) seen[v] = 1;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (!seen[v]) throw StructureError("vertex " + labels[v] + " lies in no facet");
    return SimplicialComplex(std::move(labels), std::move(facets));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> labels,
                                                std::vector<Face> faces) {
    for (auto& f : faces) normalize_face(f, labels.size(), "face");
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (auto& f : faces) {
        bool covered = std::any_of(kept.begin(), kept.end(), [&](const Face& k) { return subset(f, k); });
        if (!covered) kept.push_back(std::move(f));
    }
    return from_facets(std::move(labels), std::move(kept));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t vertex_count) {
    Face f(vertex_count);
    std::iota(f.begin(), f.end(), std::size_t{0});
    return SimplicialComplex(index_labels(vertex_count), {f});
}

SimplicialComplex SimplicialComplex::simplex_boundary(std::size_t vertex_count) {
    if (vertex_count == 0) throw InputError("boundary of the empty simplex is void");
    std::vector<Face> facets;
    for (std::size_t skip = 0; skip < vertex_count; ++skip) {
        Face f;
        for (std::size_t v = 0; v < vertex_count; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    if (vertex_count == 1) return SimplicialComplex({}, {Face{}});
    return SimplicialComplex(index_labels(vertex_count), std::move(facets));
}

SimplicialComplex SimplicialComplex::points(std::size_t vertex_count) {
    std::vector<Face> facets;
    for (std::size_t v = 0; v < vertex_count; ++v) facets.push_back({v});
    return SimplicialComplex(index_labels(vertex_count), std::move(facets));
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(std::span<const std::size_t> face) const {
    for (std::size_t v : face)
        if (v >= labels_.size()) return false;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
        const std::uint64_t* bits = facet_bits_.data() + f * words_;
        bool all = true;
        for (std::size_t v : face)
            if (!(bits[v / 64] >> (v % 64) & 1U)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dimension() const {
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(dimension() + 1));
    for (auto& f : facets_) {
        if (f.size() > 30) throw InputError("facet too large to enumerate its faces");
        const std::uint64_t count = std::uint64_t{1} << f.size();
        for (std::uint64_t s = 1; s < count; ++s) {
            Face face;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (s >> i & 1U) face.push_back(f[i]);
            out[face.size() - 1].push_back(std::move(face));
        }
    }
    for (auto& level : out) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    for (auto& level : faces_by_dimension()) out.push_back(level.size());
    return out;
}

std::size_t SimplicialComplex::face_count_with_empty() const {
    if (facets_.empty()) return 0;
    auto f = f_vector();
    return std::accumulate(f.begin(), f.end(), std::size_t{1});
}

std::optional<std::size_t> SimplicialComplex::find_label(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

// -- maps and actions ------------------------------------------------------------

SimplicialMap SimplicialMap::create(ComplexPtr source, ComplexPtr target,
                                    std::vector<std::size_t> vertex_map) {
    if (!source || !target) throw InputError("simplicial map needs a source and a target");
    if (vertex_map.size() != source->vertex_count())
        throw StructureError("vertex map has " + std::to_string(vertex_map.size()) +
                             " entries for " + std::to_string(source->vertex_count()) + " vertices");
    for (std::size_t v = 0; v < vertex_map.size(); ++v)
        if (vertex_map[v] >= target->vertex_count())
            throw StructureError("vertex " + source->label(v) + " maps outside the target");
    for (auto& f : source->facets()) {
        Face image;
        for (std::size_t v : f) image.push_back(vertex_map[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!target->contains(image))
            throw StructureError("facet " + face_text(source->labels(), f) + " maps to " +
                                 face_text(target->labels(), image) + ", which is not a face");
    }
    return SimplicialMap(std::move(source), std::move(target), std::move(vertex_map));
}

SimplicialMap SimplicialMap::then(const SimplicialMap& g) const {
    if (target_ != g.source_ && !(*target_ == *g.source_))
        throw InputError("maps do not compose: target and source differ");
    std::vector<std::size_t> m(map_.size());
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = g.map_[map_[v]];
    return SimplicialMap(source_, g.target_, std::move(m));
}

ComplexAction ComplexAction::create(ComplexPtr complex, FiniteGroup group,
                                    std::vector<std::vector<std::size_t>> perms) {
    if (!complex) throw InputError("action needs a complex");
    const std::size_t n = group.order();
    const std::size_t vc = complex->vertex_count();
    if (perms.size() != n)
        throw StructureError("action lists " + std::to_string(perms.size()) + " permutations for a group of order " +
                             std::to_string(n));
    for (std::size_t g = 0; g < n; ++g) {
        if (perms[g].size() != vc) throw StructureError("permutation " + std::to_string(g) + " has the wrong length");
        std::vector<char> hit(vc, 0);
        for (std::size_t v : perms[g]) {
            if (v >= vc || hit[v]) throw StructureError("entry " + std::to_string(g) + " is not a vertex permutation");
            hit[v] = 1;
        }
    }
    for (std::size_t v = 0; v < vc; ++v)
        if (perms[group.identity()][v] != v) throw StructureError("identity does not act trivially");
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h) {
            const auto& gh = perms[group.mul(g, h)];
            for (std::size_t v = 0; v < vc; ++v)
                if (perms[g][perms[h][v]] != gh[v])
                    throw StructureError("permutations disagree with the Cayley table at (" + std::to_string(g) +
                                         "," + std::to_string(h) + ")");
        }
    const auto& facets = complex->facets();
    for (std::size_t g = 0; g < n; ++g)
        for (auto& f : facets) {
            Face image;
            for (std::size_t v : f) image.push_back(perms[g][v]);
            std::sort(image.begin(), image.end());
            if (!std::binary_search(facets.begin(), facets.end(), image))
                throw StructureError("element " + std::to_string(g) + " maps facet " +
                                     face_text(complex->labels(), f) + " to a non-facet");
        }
    return ComplexAction(std::move(complex), std::move(group), std::move(perms));
}

bool action_is_free(const ComplexAction& action) {
    const auto& g = action.group();
    const auto& k = action.complex();
    for (Element x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        for (std::size_t v = 0; v < k.vertex_count(); ++v) {
            Face orbit{v};
            for (std::size_t w = action.apply(x, v); w != v; w = action.apply(x, w)) orbit.push_back(w);
            std::sort(orbit.begin(), orbit.end());
            if (k.contains(orbit)) return false;
        }
    }
    return true;
}

bool is_equivariant(const SimplicialMap& map, const ComplexAction& source_action,
                    const ComplexAction& target_action) {
    if (!(source_action.group() == target_action.group())) return false;
    if (source_action.complex().vertex_count() != map.source().vertex_count() ||
        target_action.complex().vertex_count() != map.target().vertex_count())
        return false;
    for (Element g = 0; g < source_action.group().order(); ++g)
        for (std::size_t v = 0; v < map.source().vertex_count(); ++v)
            if (map(source_action.apply(g, v)) != target_action.apply(g, map(v))) return false;
    return true;
}

bool is_surjective_onto_facets(const SimplicialMap& map) {
    std::vector<Face> images;
    for (auto& f : map.source().facets()) {
        Face image;
        for (std::size_t v : f) image.push_back(map(v));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        images.push_back(std::move(image));
    }
    for (auto& t : map.target().facets())
        if (std::none_of(images.begin(), images.end(), [&](const Face& im) { return subset(t, im); }))
            return false;
    return true;
}

// -- constructions -----------------------------------------------------------------

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::vector<std::string> labels;
    for (auto& s : k.labels()) labels.push_back(pair_label(s, 0));
    for (auto& s : l.labels()) labels.push_back(pair_label(s, 1));
    std::vector<Face> facets;
    for (auto& a : k.facets())
        for (auto& b : l.facets()) {
            Face f = a;
            for (std::size_t v : b) f.push_back(v + k.vertex_count());
            facets.push_back(std::move(f));
        }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex n_fold_join(const SimplicialComplex& k, std::size_t n) {
    if (n == 0) throw InputError("n-fold join needs n >= 1");
    const std::size_t vc = k.vertex_count();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (auto& s : k.labels()) labels.push_back(pair_label(s, i));
    std::vector<Face> facets{Face{}};
    if (k.facets().empty()) facets.clear();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Face> next;
        for (auto& partial : facets)
            for (auto& f : k.facets()) {
                Face g = partial;
                for (std::size_t v : f) g.push_back(i * vc + v);
                next.push_back(std::move(g));
            }
        facets = std::move(next);
    }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex deleted_join(const SimplicialComplex& k, std::size_t n) {
    if (n == 0) throw InputError("deleted join needs n >= 1");
    const std::size_t vc = k.vertex_count();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (auto& s : k.labels()) labels.push_back(pair_label(s, i));
    if (k.facets().empty()) return SimplicialComplex::from_facets(std::move(labels), {});
    auto can_add = [&](const std::vector<std::vector<std::size_t>>& parts, std::size_t v, std::size_t i) {
        Face f = parts[i];
        f.insert(std::upper_bound(f.begin(), f.end(), v), v);
        return k.contains(f);
    };
    auto facets = maximal_partitions(vc, n, can_add, false);
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex chessboard(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw InputError("chessboard complex needs m, n >= 1");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    // place one rook in every line of the shorter side
    const bool by_rows = m <= n;
    const std::size_t lines = by_rows ? m : n, cross = by_rows ? n : m;
    std::vector<Face> facets;
    std::vector<std::size_t> pick(lines);
    std::vector<char> taken(cross, 0);
    auto rec = [&](auto&& self, std::size_t line) -> void {
        if (line == lines) {
            Face f;
            for (std::size_t a = 0; a < lines; ++a)
                f.push_back(by_rows ? a * n + pick[a] : pick[a] * n + a);
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
            return;
        }
        for (std::size_t c = 0; c < cross; ++c) {
            if (taken[c]) continue;
            taken[c] = 1;
            pick[line] = c;
            self(self, line + 1);
            taken[c] = 0;
        }
    };
    rec(rec, 0);
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

ComplexAction chessboard_row_action(std::size_t m, std::size_t n) {
    auto board = std::make_shared<const SimplicialComplex>(chessboard(m, n));
    std::vector<std::vector<std::size_t>> perms(m, std::vector<std::size_t>(m * n));
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) perms[g][i * n + j] = ((i + g) % m) * n + j;
    return ComplexAction::create(std::move(board), FiniteGroup::cyclic(m), std::move(perms));
}

ComplexAction chessboard_column_action(std::size_t m, std::size_t n) {
    auto board = std::make_shared<const SimplicialComplex>(chessboard(m, n));
    std::vector<std::vector<std::size_t>> perms(n, std::vector<std::size_t>(m * n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) perms[g][i * n + j] = i * n + (j + g) % n;
    return ComplexAction::create(std::move(board), FiniteGroup::cyclic(n), std::move(perms));
}

ComplexAction simplex_translation_action(std::size_t n) {
    auto s = std::make_shared<const SimplicialComplex>(SimplicialComplex::simplex(n));
    std::vector<std::vector<std::size_t>> perms(n, std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t v = 0; v < n; ++v) perms[g][v] = (v + g) % n;
    return ComplexAction::create(std::move(s), FiniteGroup::cyclic(n), std::move(perms));
}

BoxComplex box_complex(const UniformHypergraph& h, const FiniteGroup& group, BoxFaces faces) {
    const std::size_t n = group.order();
    if (h.uniformity() != n)
        throw InputError("box complex: hypergraph is " + std::to_string(h.uniformity()) +
                         "-uniform but the group has order " + std::to_string(n));
    const std::size_t vc = h.vertex_count();
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t v = 0; v < vc; ++v) labels.push_back(pair_label(h.label(v), g));

    // every new transversal passes through v, so only those are checked
    auto can_add = [&](const std::vector<std::vector<std::size_t>>& parts, std::size_t v, std::size_t i) {
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && parts[j].empty()) return true;
        std::vector<std::size_t> choice(n, 0);
        std::vector<std::size_t> edge(n);
        while (true) {
            for (std::size_t j = 0; j < n; ++j) edge[j] = j == i ? v : parts[j][choice[j]];
            std::sort(edge.begin(), edge.end());
            if (!h.has_edge(edge)) return false;
            std::size_t j = 0;
            for (; j < n; ++j) {
                if (j == i) continue;
                if (++choice[j] < parts[j].size()) break;
                choice[j] = 0;
            }
            if (j == n) return true;
        }
    };
    auto facets = maximal_partitions(vc, n, can_add, faces == BoxFaces::kNonemptyPartsOnly);
    std::vector<std::vector<std::size_t>> perms(n, std::vector<std::size_t>(vc * n));
    for (Element g = 0; g < n; ++g)
        for (Element x = 0; x < n; ++x)
            for (std::size_t v = 0; v < vc; ++v) perms[g][x * vc + v] = group.mul(g, x) * vc + v;

    // vertices in no all-nonempty face are dropped; that set is G-invariant
    std::vector<char> used(vc * n, 0);
    for (auto& f : facets)
        for (std::size_t x : f) used[x] = 1;
    if (faces == BoxFaces::kIncludeEmptyParts) std::fill(used.begin(), used.end(), 1);
    std::vector<std::size_t> remap(vc * n, 0);
    std::vector<std::string> kept;
    for (std::size_t x = 0; x < vc * n; ++x)
        if (used[x]) {
            remap[x] = kept.size();
            kept.push_back(labels[x]);
        }
    for (auto& f : facets)
        for (auto& x : f) x = remap[x];
    std::vector<std::vector<std::size_t>> kept_perms(n);
    for (Element g = 0; g < n; ++g)
        for (std::size_t x = 0; x < vc * n; ++x)
            if (used[x]) kept_perms[g].push_back(remap[perms[g][x]]);

    auto complex = std::make_shared<const SimplicialComplex>(
        SimplicialComplex::from_facets(std::move(kept), std::move(facets)));
    auto action = ComplexAction::create(complex, group, std::move(kept_perms));
    return BoxComplex{complex, std::move(action)};
}

Element sum_of_residues(std::size_t p) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < p; ++i) s = (s + i) % p;
    return static_cast<Element>(s);
}

SimplicialComplex permutation_avoidance_complex(const FiniteGroup& group) {
    const std::size_t n = group.order();
    if (n > 16) throw InputError("permutation-avoidance complex limited to groups of order <= 16");
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) labels.push_back("(" + std::to_string(g) + "," + std::to_string(h) + ")");
    // a cell set misses every permutation graph iff it misses some S x C with
    // |S| + |C| = n + 1; the complements of those rectangles are the facets
    std::vector<Face> facets;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        const std::size_t ssize = static_cast<std::size_t>(std::popcount(s));
        const std::size_t csize = n + 1 - ssize;
        if (csize == 0 || csize > n) continue;
        for (std::uint32_t c = 1; c < (1U << n); ++c) {
            if (static_cast<std::size_t>(std::popcount(c)) != csize) continue;
            Face f;
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t h = 0; h < n; ++h)
                    if (!((s >> g & 1U) && (c >> h & 1U))) f.push_back(g * n + h);
            facets.push_back(std::move(f));
        }
    }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex permutation_avoidance_complex(const FiniteGroup& group, Element target_sum) {
    require_cyclic_prime(group);
    const std::size_t p = group.order();
    if (target_sum >= p) throw InputError("target sum is not an element of Z/p");
    if (p > 7) throw InputError("target-sum complex limited to p <= 7");
    const std::uint32_t full = (1U << p) - 1;
    auto sumset = [&](std::uint32_t a, std::uint32_t b) {
        std::uint32_t out = 0;
        for (std::size_t x = 0; x < p; ++x)
            if (a >> x & 1U) out |= ((b << x) | (b >> (p - x))) & full;
        return out;
    };
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t l = 0; l < p; ++l) labels.push_back("(" + std::to_string(i) + "," + std::to_string(l) + ")");

    std::vector<Face> faces;
    // an empty row avoids every graph
    for (std::size_t skip = 0; skip < p; ++skip) {
        Face f;
        for (std::size_t i = 0; i < p; ++i)
            if (i != skip)
                for (std::size_t l = 0; l < p; ++l) f.push_back(i * p + l);
        faces.push_back(std::move(f));
    }
    // all rows nonempty: row sets R_i whose sumset misses the target
    std::vector<std::uint32_t> rows(p);
    auto total_without = [&](std::size_t skip) {
        std::uint32_t acc = 1;
        for (std::size_t i = 0; i < p; ++i)
            if (i != skip) acc = sumset(acc, rows[i]);
        return acc;
    };
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t acc) -> void {
        if (acc == full) return;
        if (i == p) {
            if (acc >> target_sum & 1U) return;
            for (std::size_t r = 0; r < p; ++r) {
                const std::uint32_t others = total_without(r);
                for (std::size_t l = 0; l < p; ++l)
                    if (!(rows[r] >> l & 1U) && !(sumset(others, rows[r] | 1U << l) >> target_sum & 1U)) return;
            }
            Face f;
            for (std::size_t r = 0; r < p; ++r)
                for (std::size_t l = 0; l < p; ++l)
                    if (rows[r] >> l & 1U) f.push_back(r * p + l);
            faces.push_back(std::move(f));
            return;
        }
        for (std::uint32_t r = 1; r <= full; ++r) {
            rows[i] = r;
            self(self, i + 1, sumset(acc, r));
        }
    };
    rec(rec, 0, 1U);
    const auto board = chessboard(p, p);
    faces.insert(faces.end(), board.facets().begin(), board.facets().end());
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

std::vector<std::size_t> box_to_avoidance_vertex_map(const UniformHypergraph& h, const FiniteGroup& group,
                                                     std::span<const Element> coloring) {
    const std::size_t n = group.order();
    const std::size_t vc = h.vertex_count();
    if (coloring.size() != vc) throw InputError("coloring length differs from the vertex count");
    for (Element c : coloring)
        if (!group.contains(c)) throw InputError("coloring uses a non-element");
    std::vector<std::size_t> m(n * vc);
    for (Element g = 0; g < n; ++g)
        for (std::size_t v = 0; v < vc; ++v) m[g * vc + v] = g * n + group.mul(g, coloring[v]);
    return m;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    std::vector<Face> vertices;
    for (auto& level : k.faces_by_dimension())
        for (auto& f : level) vertices.push_back(f);
    std::map<Face, std::size_t> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        index.emplace(vertices[i], i);
        labels.push_back(face_text(k.labels(), vertices[i]));
    }
    std::vector<Face> facets;
    for (auto f : k.facets()) {
        if (f.empty()) continue;
        std::sort(f.begin(), f.end());
        do {
            Face chain;
            Face prefix;
            for (std::size_t v : f) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(index.at(prefix));
            }
            std::sort(chain.begin(), chain.end());
            facets.push_back(std::move(chain));
        } while (std::next_permutation(f.begin(), f.end()));
    }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

// -- equivariant maps ---------------------------------------------------------------

EquivariantMapEnumerator::EquivariantMapEnumerator(std::size_t n)
    : n_(n),
      source_action_(chessboard_row_action(n, 2 * n - 1)),
      target_action_(simplex_translation_action(n)),
      reps_(2 * n - 1, 0) {
    if (n == 0) throw InputError("equivariant maps need n >= 1");
}

std::size_t EquivariantMapEnumerator::total() const {
    std::size_t t = 1;
    for (std::size_t j = 0; j < 2 * n_ - 1; ++j) t *= n_;
    return t;
}

std::optional<SimplicialMap> EquivariantMapEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_) {
        std::size_t j = reps_.size();
        while (j > 0 && reps_[j - 1] + 1 == n_) reps_[--j] = 0;
        if (j == 0) {
            done_ = true;
            return std::nullopt;
        }
        ++reps_[j - 1];
    }
    started_ = true;
    const std::size_t cols = 2 * n_ - 1;
    std::vector<std::size_t> m(n_ * cols);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = (reps_[j] + i) % n_;
    return SimplicialMap::create(source_action_.complex_ptr(), target_action_.complex_ptr(), std::move(m));
}

}  // namespace zsr
