#include "zsr/topology.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "zsr/error.hpp"

namespace zsr {
namespace {

std::size_t face_index(const std::vector<Face>& level, const Face& f) {
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f) throw std::logic_error("boundary face missing from its level");
    return static_cast<std::size_t>(it - level.begin());
}

Face drop(const Face& f, std::size_t i) {
    Face out;
    out.reserve(f.size() - 1);
    for (std::size_t j = 0; j < f.size(); ++j)
        if (j != i) out.push_back(f[j]);
    return out;
}

int parity(const std::vector<std::size_t>& seq) {
    int inversions = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

void require_vertices(const SimplicialComplex& k) {
    if (k.vertex_count() == 0 || k.facets().empty())
        throw InputError("homology of a complex without vertices is not defined here");
}

// ridge -> (facet, position of the dropped vertex)
std::map<Face, std::vector<std::pair<std::size_t, std::size_t>>> ridges(const SimplicialComplex& k) {
    std::map<Face, std::vector<std::pair<std::size_t, std::size_t>>> out;
    const auto& facets = k.facets();
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (std::size_t i = 0; i < facets[f].size(); ++i) out[drop(facets[f], i)].emplace_back(f, i);
    return out;
}

}  // namespace

IntMatrix BoundaryMatrix::dense() const {
    IntMatrix m(rows, std::vector<std::int64_t>(columns.size(), 0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (auto [r, s] : columns[c]) m[r][c] = s;
    return m;
}

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& k) {
    const auto levels = k.faces_by_dimension();
    std::vector<BoundaryMatrix> out;
    for (std::size_t d = 0; d < levels.size(); ++d) {
        BoundaryMatrix b;
        b.dimension = static_cast<int>(d);
        b.rows = d == 0 ? 1 : levels[d - 1].size();
        for (const auto& f : levels[d]) {
            std::vector<std::pair<std::size_t, int>> col;
            if (d == 0) {
                col.emplace_back(0, 1);
            } else {
                for (std::size_t i = 0; i < f.size(); ++i)
                    col.emplace_back(face_index(levels[d - 1], drop(f, i)), i % 2 ? -1 : 1);
            }
            b.columns.push_back(std::move(col));
        }
        if (d > 0) {
            const auto& lower = out.back();
            for (const auto& col : b.columns) {
                std::map<std::size_t, long> acc;
                for (auto [r, s] : col)
                    for (auto [r2, s2] : lower.columns[r]) acc[r2] += static_cast<long>(s) * s2;
                for (auto [r, v] : acc)
                    if (v != 0) throw std::logic_error("boundary of a boundary is nonzero");
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

long HomologyProfile::euler_from_faces() const {
    long chi = -1;
    for (std::size_t d = 0; d < f_vector.size(); ++d)
        chi += (d % 2 ? -1 : 1) * static_cast<long>(f_vector[d]);
    return chi;
}

long HomologyProfile::euler_from_betti() const {
    long chi = 0;
    for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long>(betti[d]);
    return chi;
}

bool HomologyProfile::vanishes(std::size_t d) const {
    return d >= betti.size() || (betti[d] == 0 && torsion[d].empty());
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
    require_vertices(k);
    const auto bds = boundary_matrices(k);
    const std::size_t top = bds.size();
    HomologyProfile h;
    for (const auto& b : bds) h.f_vector.push_back(b.columns.size());

    std::vector<std::size_t> rank(top + 1, 0);
    std::vector<std::vector<mpz_class>> divisors(top + 1);
    rank[0] = 1;
    for (std::size_t d = 1; d < top; ++d) {
        if (bds[d].rows * bds[d].columns.size() > 60'000'000)
            throw InputError("boundary matrix in dimension " + std::to_string(d) + " is too large");
        auto snf = smith_normal_form(bds[d].dense());
        rank[d] = snf.rank;
        divisors[d] = std::move(snf.divisors);
    }
    h.betti.resize(top);
    h.torsion.resize(top);
    for (std::size_t d = 0; d < top; ++d) {
        h.betti[d] = h.f_vector[d] - rank[d] - rank[d + 1];
        for (const auto& x : divisors[d + 1])
            if (x > 1) h.torsion[d].push_back(x);
    }
    if (h.euler_from_faces() != h.euler_from_betti())
        throw std::logic_error("Euler characteristic mismatch");
    return h;
}

int homological_connectivity(const HomologyProfile& h) {
    for (std::size_t d = 0; d < h.betti.size(); ++d)
        if (!h.vanishes(d)) return static_cast<int>(d) - 1;
    return kAcyclic;
}

int homological_connectivity(const SimplicialComplex& k) { return homological_connectivity(reduced_homology(k)); }

bool is_pseudomanifold(const SimplicialComplex& k, int d) {
    if (k.facets().empty() || !k.is_pure() || k.dimension() != d) return false;
    const auto rs = ridges(k);
    for (const auto& [r, owners] : rs)
        if (owners.size() != 2) return false;
    std::vector<std::vector<std::size_t>> adj(k.facets().size());
    for (const auto& [r, owners] : rs) {
        adj[owners[0].first].push_back(owners[1].first);
        adj[owners[1].first].push_back(owners[0].first);
    }
    std::vector<char> seen(adj.size(), 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        auto f = q.front();
        q.pop();
        for (auto g : adj[f])
            if (!seen[g]) {
                seen[g] = 1;
                ++reached;
                q.push(g);
            }
    }
    return reached == adj.size();
}

Orientation orient(const SimplicialComplex& k) {
    if (!is_pseudomanifold(k, k.dimension()))
        throw StructureError("orient: complex is not a pseudomanifold");
    const auto rs = ridges(k);
    // neighbours with the sign relation s_g = rel * s_f
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(k.facets().size());
    for (const auto& [r, owners] : rs) {
        auto [f, i] = owners[0];
        auto [g, j] = owners[1];
        const int rel = (i + j) % 2 ? 1 : -1;
        adj[f].emplace_back(g, rel);
        adj[g].emplace_back(f, rel);
    }
    Orientation o;
    o.signs.assign(adj.size(), 0);
    o.signs[0] = 1;
    std::queue<std::size_t> q;
    q.push(0);
    while (!q.empty()) {
        auto f = q.front();
        q.pop();
        for (auto [g, rel] : adj[f]) {
            const int want = rel * o.signs[f];
            if (o.signs[g] == 0) {
                o.signs[g] = want;
                q.push(g);
            } else if (o.signs[g] != want) {
                throw NonOrientableError("orient: sign propagation is inconsistent");
            }
        }
    }
    return o;
}

DegreeReport degree(const SimplicialMap& map) {
    return degree(map, orient(map.source()), orient(map.target()));
}

DegreeReport degree(const SimplicialMap& map, const Orientation& so, const Orientation& to) {
    const auto& src = map.source();
    const auto& tgt = map.target();
    if (src.dimension() != tgt.dimension())
        throw StructureError("degree: source and target dimensions differ");
    if (so.signs.size() != src.facets().size() || to.signs.size() != tgt.facets().size())
        throw InputError("degree: orientation does not match the facet list");
    std::vector<long> count(tgt.facets().size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < src.facets().size(); ++f) {
        std::vector<std::size_t> image;
        for (auto v : src.facets()[f]) image.push_back(map(v));
        Face sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        const auto& tf = tgt.facets();
        auto it = std::lower_bound(tf.begin(), tf.end(), sorted);
        if (it == tf.end() || *it != sorted) continue;
        any = true;
        const auto t = static_cast<std::size_t>(it - tf.begin());
        count[t] += so.signs[f] * to.signs[t] * parity(image);
    }
    if (!any) throw DegenerateMapError("degree: every source facet collapses");
    for (auto c : count)
        if (c != count[0]) throw StructureError("degree: preimage counts differ between target facets");
    DegreeReport r;
    r.degree = count[0];
    r.magnitude = count[0] < 0 ? -count[0] : count[0];
    r.source = so;
    r.target = to;
    return r;
}

SimplicialMap chessboard_column_projection(std::size_t m, std::size_t n) {
    if (m == 0 || m >= n) throw InputError("column projection needs 1 <= m < n");
    auto src = std::make_shared<const SimplicialComplex>(chessboard(m, n));
    auto tgt = std::make_shared<const SimplicialComplex>(SimplicialComplex::simplex_boundary(n));
    std::vector<std::size_t> vm(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) vm[i * n + j] = j;
    return SimplicialMap::create(std::move(src), std::move(tgt), std::move(vm));
}

DoldCertificate dold_certificate(const ComplexAction& action, int sphere_dim) {
    const auto& g = action.group();
    std::size_t p = 0;
    for (std::size_t q = 2; q <= g.order(); ++q)
        if (g.order() % q == 0) {
            p = q;
            break;
        }
    std::size_t rest = g.order();
    while (p && rest % p == 0) rest /= p;
    bool elementary = g.is_abelian();
    for (Element x = 0; x < g.order() && elementary; ++x)
        if (x != g.identity() && g.element_order(x) != p) elementary = false;
    if (p == 0 || rest != 1 || !g.is_abelian() || !(g.is_cyclic() || elementary))
        throw InputError("certificate needs a cyclic or elementary abelian group of prime-power order");
    if (sphere_dim < 0) throw InputError("sphere dimension must be nonnegative");

    DoldCertificate c;
    c.sphere_dim = sphere_dim;
    c.free = action_is_free(action);
    c.connectivity = homological_connectivity(action.complex());
    c.note = "connectivity is homological: reduced integer homology vanishes through the stated "
             "dimension; topological connectivity is not claimed";
    if (!c.free) {
        c.verdict = "not free";
    } else if (c.connectivity >= sphere_dim) {
        c.certified = true;
        c.verdict = "certified (homology-level)";
    } else {
        c.verdict = "connectivity too low";
    }
    return c;
}

}  // namespace zsr
