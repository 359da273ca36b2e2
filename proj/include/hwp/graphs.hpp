#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hwp/modular.hpp"

namespace hwp {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored as (min, max)

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Vertex (level, residue) of C_m[S]-style graphs; flat id = level * n + residue.
struct LabeledVertex {
    int level = 0;
    int residue = 0;

    static LabeledVertex from_flat(Vertex id, int n) { return {id / n, id % n}; }
    Vertex flat(int n) const { return level * n + residue; }
    bool operator==(const LabeledVertex&) const = default;
};

// Declarative description of every graph family used by the constructions.
//
//   CompleteStar(v)            K_v for odd v, K_v - I for even v with the fixed
//                              1-factor I = {{i, i+v/2} : 0 <= i < v/2}.
//   CompleteMultipartite(t,w)  K_t[w]; vertex x belongs to part x mod t.
//   CycleLex(m,n,S)            edges (i,x)(i+1,x+d) over i in Z_m, x in Z_n, d in S.
//                              C_m[n] is CycleLex(m, n, Z_n).
//   DisjointUnion(parts)       component g's vertices offset by the preceding orders.
//   LexExpand(inner,n)         G[n]; vertex (u, j) has flat id u + j * |V(G)|.
class GraphSpec {
public:
    enum class Kind { CompleteStar, CompleteMultipartite, CycleLex, DisjointUnion, LexExpand };

    static GraphSpec complete_star(int v);
    static GraphSpec complete_multipartite(int t, int w);
    static GraphSpec cycle_lex(int m, int n, std::vector<int> diffs);
    static GraphSpec cycle_lex_full(int m, int n);  // S = Z_n
    static GraphSpec disjoint_union(std::vector<GraphSpec> parts);
    static GraphSpec lex_expand(GraphSpec inner, int n);

    Kind kind() const { return kind_; }
    int star_v() const { return v_; }
    int parts_t() const { return t_; }
    int part_size_w() const { return w_; }
    int lex_m() const { return m_; }
    int lex_n() const { return n_; }
    const std::vector<int>& diff_set() const { return s_; }
    const std::vector<GraphSpec>& children() const { return children_; }
    int expand_n() const { return n_; }

    long long vertex_count() const;
    long long edge_count() const;  // closed form, cross-checked by enumerate_edges
    int regular_degree() const;

    // Exact edge set, each undirected edge exactly once, sorted.
    std::vector<Edge> enumerate_edges() const;

    // Structural validation; throws std::invalid_argument on malformed specs.
    void validate() const;

    std::string describe() const;
    bool operator==(const GraphSpec&) const = default;

private:
    Kind kind_ = Kind::CompleteStar;
    int v_ = 0;          // CompleteStar
    int t_ = 0, w_ = 0;  // CompleteMultipartite
    int m_ = 0, n_ = 0;  // CycleLex / LexExpand
    std::vector<int> s_;
    std::vector<GraphSpec> children_;
};

// The fixed 1-factor removed from K_v for even v.
std::vector<Edge> fixed_one_factor(int v);

// cay(Z_M x Z_n, S) with arbitrary connection elements (a, b).
struct CayleySpec {
    int m = 0;
    int n = 0;
    std::vector<std::pair<int, int>> connection;

    // True iff the connection set generates the whole group.
    bool is_connected() const;
    // Index [Z_m x Z_n : <e>] of the cyclic subgroup generated by one element.
    long long subgroup_index(std::pair<int, int> e) const;
};

bool is_connected_cayley(const CayleySpec& spec);

}  // namespace hwp
