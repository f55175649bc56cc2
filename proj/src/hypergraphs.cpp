#include "zsr/hypergraphs.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "zsr/error.hpp"

namespace zsr {
namespace {

SetMask ground_mask(std::size_t m) {
    return m >= 64 ? ~SetMask{0} : (SetMask{1} << m) - 1;
}

}  // namespace

SetFamily::SetFamily(std::size_t ground_size, std::vector<SetMask> members)
    : ground_size_(ground_size), members_(std::move(members)) {
    if (ground_size_ > 64) throw InputError("ground set larger than 64 elements");
    const SetMask ground = ground_mask(ground_size_);
    std::vector<SetMask> sorted;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] & ~ground)
            throw InputError("member " + std::to_string(i) + " is not a subset of [" +
                             std::to_string(ground_size_) + "]");
        sorted.push_back(members_[i]);
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("set family has a duplicate member");
}

SetFamily SetFamily::from_lists(std::size_t ground_size, const std::vector<std::vector<int>>& sets) {
    std::vector<SetMask> members;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        SetMask mask = 0;
        for (int x : sets[i]) {
            if (x < 1 || static_cast<std::size_t>(x) > ground_size)
                throw InputError("set " + std::to_string(i) + " has element " + std::to_string(x) +
                                 " outside [" + std::to_string(ground_size) + "]");
            SetMask bit = SetMask{1} << (x - 1);
            if (mask & bit)
                throw InputError("set " + std::to_string(i) + " repeats element " + std::to_string(x));
            mask |= bit;
        }
        members.push_back(mask);
    }
    return SetFamily(ground_size, std::move(members));
}

SetFamily SetFamily::k_subsets(std::size_t m, std::size_t k) {
    std::vector<SetMask> members;
    if (k <= m) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = i;
        while (true) {
            SetMask mask = 0;
            for (std::size_t x : c) mask |= SetMask{1} << x;
            members.push_back(mask);
            std::size_t i = k;
            while (i > 0 && c[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return SetFamily(m, std::move(members));
}

std::vector<int> SetFamily::member_elements(std::size_t i) const {
    std::vector<int> out;
    for (std::size_t x = 0; x < ground_size_; ++x)
        if (members_[i] >> x & 1U) out.push_back(static_cast<int>(x + 1));
    return out;
}

SetFamily SetFamily::upward_closure() const {
    if (ground_size_ > 24) throw InputError("upward_closure: ground set too large to enumerate");
    std::vector<SetMask> out;
    const SetMask limit = SetMask{1} << ground_size_;
    for (SetMask s = 0; s < limit; ++s)
        for (SetMask f : members_)
            if ((f & ~s) == 0) {
                out.push_back(s);
                break;
            }
    return SetFamily(ground_size_, std::move(out));
}

UniformHypergraph::UniformHypergraph(std::size_t vertex_count, std::size_t uniformity,
                                     std::vector<std::vector<std::size_t>> edges,
                                     std::vector<std::string> labels)
    : vertex_count_(vertex_count), uniformity_(uniformity), edges_(std::move(edges)),
      labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != vertex_count_)
        throw InputError("hypergraph has " + std::to_string(labels_.size()) + " labels for " +
                         std::to_string(vertex_count_) + " vertices");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto& edge = edges_[e];
        if (edge.size() != uniformity_)
            throw InputError("edge " + std::to_string(e) + " has " + std::to_string(edge.size()) +
                             " vertices, expected " + std::to_string(uniformity_));
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw InputError("edge " + std::to_string(e) + " repeats a vertex");
        if (!edge.empty() && edge.back() >= vertex_count_)
            throw InputError("edge " + std::to_string(e) + " has a vertex out of range");
    }
    sorted_edges_ = edges_;
    std::sort(sorted_edges_.begin(), sorted_edges_.end());
}

UniformHypergraph UniformHypergraph::complete(std::size_t vertex_count, std::size_t uniformity) {
    SetFamily subsets = SetFamily::k_subsets(vertex_count, uniformity);
    std::vector<std::vector<std::size_t>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::vector<std::size_t> edge;
        for (int x : subsets.member_elements(i)) edge.push_back(static_cast<std::size_t>(x - 1));
        edges.push_back(std::move(edge));
    }
    return UniformHypergraph(vertex_count, uniformity, std::move(edges));
}

std::string UniformHypergraph::label(std::size_t v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool UniformHypergraph::has_edge(const std::vector<std::size_t>& sorted_vertices) const {
    return std::binary_search(sorted_edges_.begin(), sorted_edges_.end(), sorted_vertices);
}

UniformHypergraph kneser_hypergraph(const SetFamily& family, std::size_t n) {
    if (n < 1) throw InputError("kneser_hypergraph: n must be positive");
    const auto& members = family.members();
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> chosen;
    auto dfs = [&](auto&& self, std::size_t start, SetMask used) -> void {
        if (chosen.size() == n) {
            edges.push_back(chosen);
            return;
        }
        for (std::size_t i = start; i < members.size(); ++i) {
            if (members[i] & used) continue;
            chosen.push_back(i);
            self(self, i + 1, used | members[i]);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, 0);

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::string s = "{";
        for (int x : family.member_elements(i)) s += (s.size() > 1 ? "," : "") + std::to_string(x);
        labels.push_back(s + "}");
    }
    return UniformHypergraph(members.size(), n, std::move(edges), std::move(labels));
}

namespace {

class DefectSearch {
public:
    DefectSearch(const SetFamily& family, std::size_t n)
        : m_(family.ground_size()), n_(n), containing_(family.ground_size()), parts_(n, 0) {
        for (SetMask f : family.members()) {
            if (f == 0) throw InputError("colorability_defect: family contains the empty set");
            // Only the largest element of f needs checking: it is the last to be placed.
            containing_[static_cast<std::size_t>(63 - std::countl_zero(f))].push_back(f);
        }
    }

    DefectWitness run() {
        best_parts_ = parts_;
        best_size_ = 0;
        dfs(0, 0, 0);
        return DefectWitness{m_ - best_size_, best_parts_};
    }

private:
    bool admissible(std::size_t element, SetMask part) const {
        for (SetMask f : containing_[element])
            if ((f & ~part) == 0) return false;
        return true;
    }

    void dfs(std::size_t element, std::size_t opened, std::size_t size) {
        if (size + (m_ - element) <= best_size_) return;
        if (element == m_) {
            best_size_ = size;
            best_parts_ = parts_;
            return;
        }
        const SetMask bit = SetMask{1} << element;
        const std::size_t limit = std::min(opened + 1, n_);
        for (std::size_t k = 0; k < limit; ++k) {
            SetMask grown = parts_[k] | bit;
            if (!admissible(element, grown)) continue;
            SetMask saved = parts_[k];
            parts_[k] = grown;
            dfs(element + 1, std::max(opened, k + 1), size + 1);
            parts_[k] = saved;
        }
        dfs(element + 1, opened, size);
    }

    std::size_t m_, n_;
    std::vector<std::vector<SetMask>> containing_;
    std::vector<SetMask> parts_;
    std::vector<SetMask> best_parts_;
    std::size_t best_size_ = 0;
};

}  // namespace

DefectWitness colorability_defect(const SetFamily& family, std::size_t n) {
    if (n < 1) throw InputError("colorability_defect: n must be positive");
    return DefectSearch(family, n).run();
}

std::size_t colorability_defect_exhaustive(const SetFamily& family, std::size_t n) {
    if (n < 1) throw InputError("colorability_defect: n must be positive");
    const std::size_t m = family.ground_size();
    for (SetMask f : family.members())
        if (f == 0) throw InputError("colorability_defect: family contains the empty set");
    std::vector<std::size_t> assign(m, 0);  // value n means unused
    std::vector<SetMask> parts(n);
    std::size_t best = 0;
    while (true) {
        std::fill(parts.begin(), parts.end(), 0);
        std::size_t size = 0;
        for (std::size_t e = 0; e < m; ++e)
            if (assign[e] < n) {
                parts[assign[e]] |= SetMask{1} << e;
                ++size;
            }
        bool ok = size > best;
        for (std::size_t k = 0; k < n && ok; ++k)
            for (SetMask f : family.members())
                if ((f & ~parts[k]) == 0) {
                    ok = false;
                    break;
                }
        if (ok) best = size;

        std::size_t e = 0;
        while (e < m && assign[e] == n) assign[e++] = 0;
        if (e == m) break;
        ++assign[e];
    }
    return m - best;
}

CdZeroSumReport verify_cd_zero_sum(const SetFamily& family, std::size_t n,
                                   std::span<const Element> coloring) {
    if (coloring.size() != family.size())
        throw InputError("verify_cd_zero_sum: coloring has " + std::to_string(coloring.size()) +
                         " entries for " + std::to_string(family.size()) + " members");
    CdZeroSumReport report;
    report.defect = colorability_defect(family, n).defect;
    report.guarantee_applies = report.defect + 1 >= 2 * n;
    UniformHypergraph kg = kneser_hypergraph(family, n);
    report.hyperedge = zero_sum_hyperedge(kg, coloring, FiniteGroup::cyclic(n));
    if (report.guarantee_applies && !report.hyperedge)
        throw TheoremViolation("verify_cd_zero_sum: cd = " + std::to_string(report.defect) +
                               " >= 2n-1 but no zero-sum hyperedge exists");
    return report;
}

namespace {

class ColoringSearch {
public:
    explicit ColoringSearch(const UniformHypergraph& h)
        : h_(h), closing_(h.vertex_count()), color_(h.vertex_count()) {
        for (const auto& edge : h.edges()) closing_[edge.back()].push_back(&edge);
    }

    bool try_colors(std::size_t colors) {
        colors_ = colors;
        return dfs(0, 0);
    }

    const std::vector<std::size_t>& coloring() const { return color_; }

private:
    bool monochromatic(const std::vector<std::size_t>& edge) const {
        for (std::size_t v : edge)
            if (color_[v] != color_[edge[0]]) return false;
        return true;
    }

    bool dfs(std::size_t v, std::size_t used) {
        if (v == h_.vertex_count()) return true;
        const std::size_t limit = std::min(used + 1, colors_);
        for (std::size_t c = 0; c < limit; ++c) {
            color_[v] = c;
            bool ok = true;
            for (const auto* edge : closing_[v])
                if (monochromatic(*edge)) {
                    ok = false;
                    break;
                }
            if (ok && dfs(v + 1, std::max(used, c + 1))) return true;
        }
        return false;
    }

    const UniformHypergraph& h_;
    std::vector<std::vector<const std::vector<std::size_t>*>> closing_;
    std::vector<std::size_t> color_;
    std::size_t colors_ = 0;
};

}  // namespace

std::vector<std::size_t> optimal_coloring(const UniformHypergraph& h) {
    if (h.vertex_count() == 0) return {};
    if (h.uniformity() <= 1 && h.edge_count() > 0)
        throw InputError("chromatic_number: an edge with fewer than two vertices is always monochromatic");
    ColoringSearch search(h);
    for (std::size_t c = 1;; ++c)
        if (search.try_colors(c)) return search.coloring();
}

std::size_t chromatic_number(const UniformHypergraph& h) {
    auto coloring = optimal_coloring(h);
    std::size_t colors = 0;
    for (std::size_t c : coloring) colors = std::max(colors, c + 1);
    return colors;
}

}  // namespace zsr
