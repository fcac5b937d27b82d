#include "liefield/roots.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace liefield {

SimpleType parse_simple_type(const std::string& s) {
    if (s.size() < 2) throw TypeError("bad simple type '" + s + "'");
    char letter = s[0];
    for (size_t k = 1; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw TypeError("bad simple type '" + s + "'");
    int rank = std::stoi(s.substr(1));
    bool ok = false;
    switch (letter) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: ok = false;
    }
    if (!ok) throw TypeError("illegal simple type '" + s + "'");
    if (rank > 12) throw TypeError("rank of '" + s + "' exceeds the supported range");
    return SimpleType{letter, rank};
}

bool is_a_type(const SimpleType& t) { return t.letter == 'A'; }

namespace {

IntMatrix diagonal_two(int n) {
    IntMatrix m(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int k = 0; k < n; ++k) m[static_cast<size_t>(k)][static_cast<size_t>(k)] = 2;
    return m;
}

void single_bond(IntMatrix& m, int a, int b) {
    m[static_cast<size_t>(a)][static_cast<size_t>(b)] = -1;
    m[static_cast<size_t>(b)][static_cast<size_t>(a)] = -1;
}

/// Double/triple bond with `long_node` the long root: its row carries the
/// entry -mult, the short root's row carries -1.
void multi_bond(IntMatrix& m, int long_node, int short_node, long mult) {
    m[static_cast<size_t>(long_node)][static_cast<size_t>(short_node)] = -mult;
    m[static_cast<size_t>(short_node)][static_cast<size_t>(long_node)] = -1;
}

} // namespace

IntMatrix cartan_matrix(SimpleType t) {
    const int n = t.rank;
    IntMatrix m = diagonal_two(n);
    switch (t.letter) {
        case 'A':
            for (int k = 0; k + 1 < n; ++k) single_bond(m, k, k + 1);
            break;
        case 'B': // last root short
            for (int k = 0; k + 2 < n; ++k) single_bond(m, k, k + 1);
            multi_bond(m, n - 2, n - 1, 2);
            break;
        case 'C': // last root long
            for (int k = 0; k + 2 < n; ++k) single_bond(m, k, k + 1);
            multi_bond(m, n - 1, n - 2, 2);
            break;
        case 'D': // fork at node rank-2 (0-based rank-3)
            for (int k = 0; k + 2 < n; ++k) single_bond(m, k, k + 1);
            single_bond(m, n - 3, n - 1);
            break;
        case 'E': // row 1-3-4-5-..., branch node 2 on node 4
            single_bond(m, 0, 2);
            single_bond(m, 1, 3);
            for (int k = 2; k + 1 < n; ++k) single_bond(m, k, k + 1);
            break;
        case 'F': // nodes 1,2 long; 3,4 short
            single_bond(m, 0, 1);
            multi_bond(m, 1, 2, 2);
            single_bond(m, 2, 3);
            break;
        case 'G': // node 1 long, node 2 short
            multi_bond(m, 0, 1, 3);
            break;
        default:
            throw TypeError("unknown family");
    }
    return m;
}

namespace {

std::vector<long> half_norms_of(SimpleType t) {
    const size_t n = static_cast<size_t>(t.rank);
    std::vector<long> d(n, 1);
    switch (t.letter) {
        case 'B':
            for (size_t k = 0; k + 1 < n; ++k) d[k] = 2;
            break;
        case 'C':
            d[n - 1] = 2;
            break;
        case 'F':
            d[0] = d[1] = 2;
            break;
        case 'G':
            d[0] = 3;
            break;
        default:
            break; // simply laced
    }
    return d;
}

long height(const RootVec& v) {
    long h = 0;
    for (long c : v) h += c;
    return h;
}

/// Canonical order on positive roots: height ascending, then coefficient
/// vector lexicographically descending.
bool canonical_root_less(const RootVec& a, const RootVec& b) {
    long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return b < a; // reverse lex
}

} // namespace

long RootSystem::bilinear(const RootVec& u, const RootVec& v) const {
    long acc = 0;
    for (int i = 0; i < rank; ++i) {
        if (u[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < rank; ++j)
            acc += u[static_cast<size_t>(i)] * cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                   half_norms[static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
    }
    return acc;
}

bool RootSystem::is_positive_root(const RootVec& v) const {
    return std::find(positive.begin(), positive.end(), v) != positive.end();
}

bool RootSystem::is_root(const RootVec& v) const {
    if (is_positive_root(v)) return true;
    RootVec neg(v.size());
    for (size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
    return is_positive_root(neg);
}

bool RootSystem::strongly_orthogonal(const RootVec& u, const RootVec& v) const {
    if (bilinear(u, v) != 0) return false;
    RootVec sum(u.size()), diff(u.size());
    for (size_t k = 0; k < u.size(); ++k) {
        sum[k] = u[k] + v[k];
        diff[k] = u[k] - v[k];
    }
    return !is_root(sum) && !is_root(diff);
}

RootSystem build_root_system(SimpleType t) {
    RootSystem rs;
    rs.type = t;
    rs.rank = t.rank;
    rs.cartan = cartan_matrix(t);
    rs.half_norms = half_norms_of(t);

    const int n = t.rank;
    std::set<RootVec> seen;
    std::vector<RootVec> frontier;
    for (int i = 0; i < n; ++i) {
        RootVec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }

    // Grow by root strings: beta + alpha_i is a root iff the string length
    // below beta exceeds the pairing: q = p - <beta, alpha_i^vee> >= 1.
    int guard = 0;
    while (!frontier.empty()) {
        if (++guard > 64) throw Error("root generation did not terminate; matrix is not of finite type");
        std::set<RootVec> next;
        for (const RootVec& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                long pairing = 0;
                for (int j = 0; j < n; ++j)
                    pairing += beta[static_cast<size_t>(j)] * rs.cartan[static_cast<size_t>(j)][static_cast<size_t>(i)];
                long p = 0;
                RootVec down = beta;
                for (;;) {
                    down[static_cast<size_t>(i)] -= 1;
                    if (seen.count(down) == 0) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    RootVec up = beta;
                    up[static_cast<size_t>(i)] += 1;
                    if (seen.insert(up).second) next.insert(std::move(up));
                }
            }
        }
        frontier.assign(next.begin(), next.end());
    }

    rs.positive.assign(seen.begin(), seen.end());
    std::sort(rs.positive.begin(), rs.positive.end(), canonical_root_less);
    return rs;
}

RootVec highest_root(const RootSystem& rs) {
    if (rs.positive.empty()) throw Error("empty root system");
    const RootVec& top = rs.positive.back();
    long top_height = height(top);
    for (size_t k = rs.positive.size() - 1; k-- > 0;)
        if (height(rs.positive[k]) == top_height)
            throw Error("highest root is not unique; system is reducible");
    return top;
}

std::optional<std::vector<RootVec>> orthogonal_a1_subset(const RootSystem& rs, int m) {
    if (m <= 0) throw IndexError("orthogonal_a1_subset: m must be positive");
    const int total = static_cast<int>(rs.positive.size());
    std::vector<int> chosen;
    // Depth-first over ascending indices returns the subset-lex first hit.
    auto dfs = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(chosen.size()) == m) return true;
        for (int k = start; k < total; ++k) {
            if (total - k < m - static_cast<int>(chosen.size())) return false;
            bool ok = true;
            for (int c : chosen)
                if (!rs.strongly_orthogonal(rs.positive[static_cast<size_t>(c)], rs.positive[static_cast<size_t>(k)])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(k);
            if (self(self, k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    std::vector<RootVec> out;
    out.reserve(chosen.size());
    for (int c : chosen) out.push_back(rs.positive[static_cast<size_t>(c)]);
    return out;
}

ObstructionWitness obstruction_witness(SimpleType t) {
    ObstructionWitness w;
    w.parent = t;
    switch (t.letter) {
        case 'A':
            w.a_type = true;
            return w;
        case 'B':
        case 'C':
            w.target = SimpleType{'B', 2};
            w.nodes = {t.rank - 1, t.rank}; // the double bond
            return w;
        case 'F':
            w.target = SimpleType{'B', 2};
            w.nodes = {2, 3};
            return w;
        case 'G':
            w.target = SimpleType{'G', 2};
            w.nodes = {1, 2};
            return w;
        case 'D':
            w.target = SimpleType{'D', 4};
            // trivalent node rank-2 with its three neighbours
            w.nodes = {t.rank - 3, t.rank - 2, t.rank - 1, t.rank};
            return w;
        case 'E':
            // The first six nodes induce an E6; dropping the two extreme
            // row vertices (1 and 6) leaves the D4 around the branch.
            w.target = SimpleType{'D', 4};
            w.e6_nodes = {1, 2, 3, 4, 5, 6};
            w.nodes = {2, 3, 4, 5};
            return w;
        default:
            throw TypeError("unknown family");
    }
}

IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<int>& nodes) {
    IntMatrix out(nodes.size(), std::vector<long>(nodes.size(), 0));
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j)
            out[i][j] = m[static_cast<size_t>(nodes[i])][static_cast<size_t>(nodes[j])];
    return out;
}

namespace {

struct Component {
    std::vector<int> nodes; // input indices
};

void validate_cartan(const IntMatrix& m) {
    const size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error("cartan matrix is not square");
        if (m[i][i] != 2) throw Error("cartan matrix diagonal must be 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0 || m[i][j] < -3) throw Error("cartan matrix off-diagonal out of range");
            if ((m[i][j] == 0) != (m[j][i] == 0)) throw Error("cartan matrix zero pattern is not symmetric");
        }
    }
}

std::vector<Component> components_of(const IntMatrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::vector<Component> comps;
    for (int s = 0; s < n; ++s) {
        if (used[static_cast<size_t>(s)]) continue;
        Component c;
        std::vector<int> stack{s};
        used[static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.nodes.push_back(v);
            for (int w = 0; w < n; ++w)
                if (!used[static_cast<size_t>(w)] && m[static_cast<size_t>(v)][static_cast<size_t>(w)] != 0) {
                    used[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        std::sort(c.nodes.begin(), c.nodes.end());
        comps.push_back(std::move(c));
    }
    return comps;
}

/// Walk a path component from `start` (a leaf), returning nodes in order.
std::vector<int> walk_path(const IntMatrix& m, const std::vector<int>& nodes, int start) {
    std::vector<int> order{start};
    int prev = -1, cur = start;
    for (;;) {
        int next = -1;
        for (int w : nodes) {
            if (w == prev || w == cur) continue;
            if (m[static_cast<size_t>(cur)][static_cast<size_t>(w)] != 0) {
                next = w;
                break;
            }
        }
        if (next < 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

int degree_in(const IntMatrix& m, const std::vector<int>& nodes, int v) {
    int d = 0;
    for (int w : nodes)
        if (w != v && m[static_cast<size_t>(v)][static_cast<size_t>(w)] != 0) ++d;
    return d;
}

/// Arm from trivalent node t through neighbour nb to the leaf, t excluded.
std::vector<int> arm_of(const IntMatrix& m, const std::vector<int>& nodes, int t, int nb) {
    std::vector<int> arm{nb};
    int prev = t, cur = nb;
    for (;;) {
        int next = -1;
        for (int w : nodes) {
            if (w == prev || w == cur) continue;
            if (m[static_cast<size_t>(cur)][static_cast<size_t>(w)] != 0) {
                next = w;
                break;
            }
        }
        if (next < 0) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
    }
    return arm;
}

std::pair<SimpleType, std::vector<int>> identify_component(const IntMatrix& m, const Component& comp) {
    const int rank = static_cast<int>(comp.nodes.size());
    if (rank == 1) return {SimpleType{'A', 1}, comp.nodes};

    // Edge survey.
    int doubles = 0, triples = 0;
    std::pair<int, int> multi_edge{-1, -1}; // (long node, short node)
    std::vector<int> leaves, trivalent;
    for (int v : comp.nodes) {
        int d = degree_in(m, comp.nodes, v);
        if (d == 1) leaves.push_back(v);
        if (d == 3) trivalent.push_back(v);
        if (d > 3) throw Error("diagram node of degree > 3");
        for (int w : comp.nodes) {
            if (w <= v || m[static_cast<size_t>(v)][static_cast<size_t>(w)] == 0) continue;
            long mult = m[static_cast<size_t>(v)][static_cast<size_t>(w)] * m[static_cast<size_t>(w)][static_cast<size_t>(v)];
            if (mult == 1) continue;
            int long_node = (m[static_cast<size_t>(v)][static_cast<size_t>(w)] < -1) ? v : w;
            int short_node = (long_node == v) ? w : v;
            if (mult == 2) {
                ++doubles;
                multi_edge = {long_node, short_node};
            } else if (mult == 3) {
                ++triples;
                multi_edge = {long_node, short_node};
            } else {
                throw Error("bond multiplicity exceeds 3");
            }
        }
    }

    if (triples > 0) {
        if (rank != 2 || triples != 1 || doubles != 0) throw Error("triple bond outside G2");
        return {SimpleType{'G', 2}, {multi_edge.first, multi_edge.second}};
    }

    if (doubles > 0) {
        if (doubles > 1 || !trivalent.empty()) throw Error("invalid multiply-laced diagram");
        auto [long_node, short_node] = multi_edge;
        if (rank == 2) return {SimpleType{'B', 2}, {long_node, short_node}};
        // A path; orient it so the double bond sits at the table position.
        if (leaves.size() != 2) throw Error("multiply-laced diagram is not a path");
        bool short_leaf = degree_in(m, comp.nodes, short_node) == 1;
        bool long_leaf = degree_in(m, comp.nodes, long_node) == 1;
        if (short_leaf) {
            // B_n: short root at the end of the path.
            std::vector<int> order = walk_path(m, comp.nodes, short_node);
            std::reverse(order.begin(), order.end());
            return {SimpleType{'B', rank}, order};
        }
        if (long_leaf) {
            // C_n: long root at the end of the path.
            std::vector<int> order = walk_path(m, comp.nodes, long_node);
            std::reverse(order.begin(), order.end());
            return {SimpleType{'C', rank}, order};
        }
        if (rank != 4) throw Error("interior double bond requires rank 4");
        // F4: orient the path so the second node is the long end of the bond.
        std::vector<int> order = walk_path(m, comp.nodes, leaves[0]);
        if (order[1] != long_node) std::reverse(order.begin(), order.end());
        if (order[1] != long_node || order[2] != short_node) throw Error("double bond not centered; not F4");
        return {SimpleType{'F', 4}, order};
    }

    // Simply laced.
    if (trivalent.empty()) {
        if (leaves.size() != 2) throw Error("simply-laced diagram is neither path nor admissible fork");
        std::vector<int> order = walk_path(m, comp.nodes, std::min(leaves[0], leaves[1]));
        return {SimpleType{'A', rank}, order};
    }
    if (trivalent.size() > 1) throw Error("more than one branch node");
    int t = trivalent[0];
    std::vector<std::vector<int>> arms;
    for (int w : comp.nodes)
        if (w != t && m[static_cast<size_t>(t)][static_cast<size_t>(w)] != 0) arms.push_back(arm_of(m, comp.nodes, t, w));
    if (arms.size() != 3) throw Error("branch node is not trivalent");
    std::sort(arms.begin(), arms.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
    if (static_cast<int>(a + b + c) + 1 != rank) throw Error("diagram is not a tree");

    if (a == 1 && b == 1) {
        // D_{c+3}: tail from its far end, then the branch node, then the leaves.
        std::vector<int> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(t);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        return {SimpleType{'D', rank}, order};
    }
    if (a == 1 && b == 2 && (c >= 2 && c <= 4)) {
        // E6/E7/E8: table row is far(b-arm), 3 = near(b-arm), 4 = branch,
        // then the long tail; node 2 is the short arm's leaf.
        std::vector<int> order;
        order.push_back(arms[1][1]);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        order.push_back(t);
        for (int v : arms[2]) order.push_back(v);
        return {SimpleType{'E', rank}, order};
    }
    throw Error("fork lengths do not match any finite type");
}

} // namespace

std::vector<std::pair<SimpleType, std::vector<int>>> identify_cartan_matrix(const IntMatrix& cartan) {
    validate_cartan(cartan);
    std::vector<std::pair<SimpleType, std::vector<int>>> out;
    for (const Component& comp : components_of(cartan)) {
        auto [type, order] = identify_component(cartan, comp);
        // Verify the relabeling reproduces the table matrix exactly.
        IntMatrix table = cartan_matrix(type);
        IntMatrix got = principal_submatrix(cartan, order);
        if (got != table)
            throw Error("component does not match the " + type.str() + " table under the derived relabeling");
        out.emplace_back(type, order);
    }
    return out;
}

std::string ascii_diagram(SimpleType t) {
    const int n = t.rank;
    // Row nodes in drawing order with the edge glyph after each node.
    std::vector<int> row;        // table numbers (1-based)
    std::vector<std::string> glue;
    int branch_over = -1, branch_label = -1; // row position, table number

    auto path_labels = [&](int count, int first = 1) {
        for (int k = 0; k < count; ++k) row.push_back(first + k);
    };
    switch (t.letter) {
        case 'A':
            path_labels(n);
            for (int k = 0; k + 1 < n; ++k) glue.push_back("---");
            break;
        case 'B':
            path_labels(n);
            for (int k = 0; k + 2 < n; ++k) glue.push_back("---");
            glue.push_back("=>=");
            break;
        case 'C':
            path_labels(n);
            for (int k = 0; k + 2 < n; ++k) glue.push_back("---");
            glue.push_back("=<=");
            break;
        case 'F':
            path_labels(4);
            glue = {"---", "=>=", "---"};
            break;
        case 'G':
            path_labels(2);
            glue = {"=>="};
            break;
        case 'D':
            path_labels(n - 1);
            for (int k = 0; k + 2 < n; ++k) glue.push_back("---");
            branch_over = n - 3; // row position of node rank-2
            branch_label = n;
            break;
        case 'E': {
            row = {1, 3, 4, 5, 6};
            for (int k = 7; k <= n; ++k) row.push_back(k);
            for (size_t k = 0; k + 1 < row.size(); ++k) glue.push_back("---");
            branch_over = 2; // above node 4
            branch_label = 2;
            break;
        }
        default:
            throw TypeError("unknown family");
    }

    std::string nodes_line, labels_line;
    std::vector<size_t> node_cols;
    for (size_t k = 0; k < row.size(); ++k) {
        node_cols.push_back(nodes_line.size());
        nodes_line += "o";
        std::string label = std::to_string(row[k]);
        while (labels_line.size() < node_cols.back()) labels_line += ' ';
        labels_line += label;
        if (k + 1 < row.size()) {
            nodes_line += glue[k];
            while (labels_line.size() < nodes_line.size()) labels_line += ' ';
        }
    }

    std::string out;
    if (branch_over >= 0) {
        size_t col = node_cols[static_cast<size_t>(branch_over)];
        std::string top(col, ' '), bar(col, ' ');
        top += std::to_string(branch_label);
        bar += "|";
        std::string mid(col, ' ');
        mid += "o";
        out = top + "\n" + mid + "\n" + bar + "\n";
    } else if (t.letter == 'G') {
        out = "  3\n"; // bond multiplicity marker over the edge
    }
    out += nodes_line + "\n" + labels_line + "\n";
    return out;
}

} // namespace liefield
