#include "hwp/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hwp {

GraphSpec GraphSpec::complete_star(int v) {
    GraphSpec g;
    g.kind_ = Kind::CompleteStar;
    g.v_ = v;
    g.validate();
    return g;
}

GraphSpec GraphSpec::complete_multipartite(int t, int w) {
    GraphSpec g;
    g.kind_ = Kind::CompleteMultipartite;
    g.t_ = t;
    g.w_ = w;
    g.validate();
    return g;
}

GraphSpec GraphSpec::cycle_lex(int m, int n, std::vector<int> diffs) {
    GraphSpec g;
    g.kind_ = Kind::CycleLex;
    g.m_ = m;
    g.n_ = n;
    std::sort(diffs.begin(), diffs.end());
    g.s_ = std::move(diffs);
    g.validate();
    return g;
}

GraphSpec GraphSpec::cycle_lex_full(int m, int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return cycle_lex(m, n, std::move(all));
}

GraphSpec GraphSpec::disjoint_union(std::vector<GraphSpec> parts) {
    GraphSpec g;
    g.kind_ = Kind::DisjointUnion;
    g.children_ = std::move(parts);
    g.validate();
    return g;
}

GraphSpec GraphSpec::lex_expand(GraphSpec inner, int n) {
    GraphSpec g;
    g.kind_ = Kind::LexExpand;
    g.n_ = n;
    g.children_.push_back(std::move(inner));
    g.validate();
    return g;
}

void GraphSpec::validate() const {
    switch (kind_) {
        case Kind::CompleteStar:
            if (v_ < 1) throw std::invalid_argument("CompleteStar: v must be positive");
            break;
        case Kind::CompleteMultipartite:
            if (t_ < 2 || w_ < 1) throw std::invalid_argument("CompleteMultipartite: need t >= 2, w >= 1");
            break;
        case Kind::CycleLex: {
            if (m_ < 3) throw std::invalid_argument("CycleLex: m >= 3 required");
            if (n_ < 1) throw std::invalid_argument("CycleLex: n >= 1 required");
            if (s_.empty()) throw std::invalid_argument("CycleLex: difference set empty");
            std::set<int> seen;
            for (int d : s_) {
                if (d < 0 || d >= n_) throw std::invalid_argument("CycleLex: difference out of range");
                if (!seen.insert(d).second) throw std::invalid_argument("CycleLex: repeated difference");
            }
            break;
        }
        case Kind::DisjointUnion:
            if (children_.empty()) throw std::invalid_argument("DisjointUnion: no components");
            for (const auto& c : children_) c.validate();
            break;
        case Kind::LexExpand:
            if (n_ < 1) throw std::invalid_argument("LexExpand: n >= 1 required");
            if (children_.size() != 1) throw std::invalid_argument("LexExpand: exactly one inner spec");
            children_[0].validate();
            break;
    }
}

long long GraphSpec::vertex_count() const {
    switch (kind_) {
        case Kind::CompleteStar: return v_;
        case Kind::CompleteMultipartite: return (long long)t_ * w_;
        case Kind::CycleLex: return (long long)m_ * n_;
        case Kind::DisjointUnion: {
            long long total = 0;
            for (const auto& c : children_) total += c.vertex_count();
            return total;
        }
        case Kind::LexExpand: return children_[0].vertex_count() * n_;
    }
    return 0;
}

long long GraphSpec::edge_count() const {
    switch (kind_) {
        case Kind::CompleteStar: {
            long long all = (long long)v_ * (v_ - 1) / 2;
            return v_ % 2 == 0 ? all - v_ / 2 : all;
        }
        case Kind::CompleteMultipartite:
            return (long long)t_ * (t_ - 1) / 2 * w_ * w_;
        case Kind::CycleLex:
            return (long long)m_ * n_ * (long long)s_.size();
        case Kind::DisjointUnion: {
            long long total = 0;
            for (const auto& c : children_) total += c.edge_count();
            return total;
        }
        case Kind::LexExpand:
            return children_[0].edge_count() * (long long)n_ * n_;
    }
    return 0;
}

int GraphSpec::regular_degree() const {
    switch (kind_) {
        case Kind::CompleteStar: return v_ % 2 == 0 ? v_ - 2 : v_ - 1;
        case Kind::CompleteMultipartite: return (t_ - 1) * w_;
        case Kind::CycleLex: return 2 * (int)s_.size();
        case Kind::DisjointUnion: {
            int d = children_[0].regular_degree();
            for (const auto& c : children_)
                if (c.regular_degree() != d) return -1;
            return d;
        }
        case Kind::LexExpand: return children_[0].regular_degree() * n_;
    }
    return -1;
}

std::vector<Edge> fixed_one_factor(int v) {
    std::vector<Edge> out;
    if (v % 2 == 0)
        for (int i = 0; i < v / 2; ++i) out.push_back({i, i + v / 2});
    return out;
}

std::vector<Edge> GraphSpec::enumerate_edges() const {
    validate();
    std::vector<Edge> out;
    switch (kind_) {
        case Kind::CompleteStar: {
            std::set<Edge> removed;
            for (const Edge& e : fixed_one_factor(v_)) removed.insert(e);
            for (int a = 0; a < v_; ++a)
                for (int b = a + 1; b < v_; ++b)
                    if (!removed.count({a, b})) out.push_back({a, b});
            break;
        }
        case Kind::CompleteMultipartite: {
            int v = t_ * w_;
            for (int a = 0; a < v; ++a)
                for (int b = a + 1; b < v; ++b)
                    if (a % t_ != b % t_) out.push_back({a, b});
            break;
        }
        case Kind::CycleLex: {
            // m >= 3 makes every (i, x, d) triple a distinct undirected edge.
            for (int i = 0; i < m_; ++i)
                for (int x = 0; x < n_; ++x)
                    for (int d : s_) {
                        Vertex a = LabeledVertex{i, x}.flat(n_);
                        Vertex b = LabeledVertex{(i + 1) % m_, mod_norm(x + d, n_)}.flat(n_);
                        out.push_back(make_edge(a, b));
                    }
            break;
        }
        case Kind::DisjointUnion: {
            int offset = 0;
            for (const auto& c : children_) {
                for (Edge e : c.enumerate_edges()) out.push_back({e.first + offset, e.second + offset});
                offset += (int)c.vertex_count();
            }
            break;
        }
        case Kind::LexExpand: {
            int inner_v = (int)children_[0].vertex_count();
            auto inner_edges = children_[0].enumerate_edges();
            for (const Edge& e : inner_edges)
                for (int j = 0; j < n_; ++j)
                    for (int k = 0; k < n_; ++k)
                        out.push_back(make_edge(e.first + j * inner_v, e.second + k * inner_v));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("GraphSpec: duplicate edge in enumeration");
    if ((long long)out.size() != edge_count())
        throw std::logic_error("GraphSpec: edge count mismatch with closed form");
    return out;
}

std::string GraphSpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::CompleteStar: os << "K_" << v_ << "*"; break;
        case Kind::CompleteMultipartite: os << "K_" << t_ << "[" << w_ << "]"; break;
        case Kind::CycleLex: {
            if ((int)s_.size() == n_) {
                os << "C_" << m_ << "[" << n_ << "]";
            } else {
                os << "C_" << m_ << "[{";
                for (size_t i = 0; i < s_.size(); ++i) os << (i ? "," : "") << s_[i];
                os << "} mod " << n_ << "]";
            }
            break;
        }
        case Kind::DisjointUnion: {
            for (size_t i = 0; i < children_.size(); ++i) os << (i ? " + " : "") << children_[i].describe();
            break;
        }
        case Kind::LexExpand: os << "(" << children_[0].describe() << ")[" << n_ << "]"; break;
    }
    return os.str();
}

bool CayleySpec::is_connected() const {
    if (m < 1 || n < 1) throw std::invalid_argument("CayleySpec: bad group order");
    // Closure of the generated subgroup; the graph is connected iff it is everything.
    std::vector<char> in(m * n, 0);
    std::vector<std::pair<int, int>> frontier{{0, 0}};
    in[0] = 1;
    size_t count = 1;
    while (!frontier.empty()) {
        auto [a, b] = frontier.back();
        frontier.pop_back();
        for (const auto& [da, db] : connection) {
            for (int sign : {1, -1}) {
                int na = mod_norm(a + sign * da, m);
                int nb = mod_norm(b + sign * db, n);
                if (!in[na * n + nb]) {
                    in[na * n + nb] = 1;
                    ++count;
                    frontier.push_back({na, nb});
                }
            }
        }
    }
    return count == (size_t)m * n;
}

long long CayleySpec::subgroup_index(std::pair<int, int> e) const {
    long long order = 1;
    int a = mod_norm(e.first, m), b = mod_norm(e.second, n);
    int x = a, y = b;
    while (x != 0 || y != 0) {
        x = mod_norm(x + a, m);
        y = mod_norm(y + b, n);
        ++order;
    }
    return (long long)m * n / order;
}

bool is_connected_cayley(const CayleySpec& spec) { return spec.is_connected(); }

}  // namespace hwp
