#include "anyonwalk/bracket.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace anyonwalk {

int writhe(const BraidWord& word) {
    int w = 0;
    for (const auto& g : word.gens) w += g.inverse ? -1 : 1;
    return w;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx != ry) parent[rx] = ry;
    }
    int grow() {
        int id = static_cast<int>(parent.size());
        parent.push_back(id);
        return id;
    }
};

}  // namespace

cplx kauffman_bracket(const BraidWord& word, int strands, cplx A, int crossing_cap) {
    const int c = static_cast<int>(word.size());
    if (c > crossing_cap) throw std::length_error("bracket crossing cap exceeded");
    for (const auto& g : word.gens)
        if (g.index < 1 || g.index >= strands)
            throw std::out_of_range("generator outside strand range");
    const cplx d = -A * A - 1.0 / (A * A);
    cplx total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        UnionFind uf(strands);
        std::vector<int> cur(strands);
        std::iota(cur.begin(), cur.end(), 0);
        int expo = 0;
        for (int ci = 0; ci < c; ++ci) {
            const auto& g = word.gens[ci];
            bool cupcap = (mask >> ci) & 1;
            if (!g.inverse)
                expo += cupcap ? 1 : -1;
            else
                expo += cupcap ? -1 : 1;
            if (cupcap) {
                int i = g.index - 1;
                uf.unite(cur[i], cur[i + 1]);
                int z = uf.grow();
                cur[i] = z;
                cur[i + 1] = z;
            }
        }
        for (int j = 0; j < strands; ++j) uf.unite(cur[j], j);  // trace closure
        int loops = 0;
        for (int x = 0; x < static_cast<int>(uf.parent.size()); ++x)
            if (uf.find(x) == x) ++loops;
        total += std::pow(A, expo) * std::pow(d, loops - 1);
    }
    return total;
}

LinkEvaluation evaluate_link(const BraidWord& word, int strands, cplx A,
                             int crossing_cap) {
    LinkEvaluation e;
    e.word = word;
    e.strands = strands;
    e.bracket = kauffman_bracket(word, strands, A, crossing_cap);
    e.writhe = writhe(word);
    e.jones = e.bracket * std::pow(-A * A * A, -e.writhe);
    return e;
}

TraceIdentityReport verify_trace_identity(const BraidWord& word, int strands,
                                          const AnyonModel& model,
                                          int crossing_cap) {
    if (model.is_abelian())
        throw std::invalid_argument("trace identity needs a non-Abelian model");
    if (strands < 2 || strands > 8) throw std::out_of_range("strands must be in 2..8");
    FusionSpace space(2 * strands, model);
    FusionVector phi0 = space.rainbow_state();
    FusionVector v = phi0;
    space.apply_word(v, word);
    cplx fusion = 0.0;
    for (std::size_t f = 0; f < space.dim(); ++f) fusion += std::conj(phi0[f]) * v[f];

    cplx A = model.tl_param();
    double d = model.quantum_dimension();
    cplx br = kauffman_bracket(word, strands, A, crossing_cap) / std::pow(d, strands - 1);

    TraceIdentityReport r;
    r.fusion_side = fusion;
    r.bracket_side = br;
    r.difference = std::abs(fusion - br);
    return r;
}

}  // namespace anyonwalk
