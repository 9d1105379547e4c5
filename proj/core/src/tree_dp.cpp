#include "semistrong/tree_dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace semistrong {

std::string to_string(const Quadruple& x) {
    return "(" + std::to_string(x.p) + "," + std::to_string(x.q) + ";" + std::to_string(x.s) + "," +
           std::to_string(x.t) + ")";
}

// ---- FeasibleSet ----------------------------------------------------------------

namespace {

std::size_t triangle(std::size_t r) { return (r + 1) * (r + 2) / 2; }

// Position of (s, t) among pairs with s + t <= r, s-major.
std::size_t tri_index(std::size_t s, std::size_t t, std::size_t r) { return s * (r + 1) - s * (s - 1) / 2 + t; }

}  // namespace

FeasibleSet FeasibleSet::subtree(std::size_t first_sum, std::size_t K) {
    FeasibleSet f;
    f.fixed_ = first_sum;
    f.K_ = K;
    if (first_sum <= K) {
        f.block_ = triangle(K - first_sum);
        f.capacity_ = (first_sum + 1) * f.block_;
    }
    return f;
}

FeasibleSet FeasibleSet::branch(std::size_t second_sum, std::size_t K) {
    FeasibleSet f;
    f.branch_ = true;
    f.fixed_ = second_sum;
    f.K_ = K;
    if (second_sum + 1 <= K) {
        f.block_ = second_sum + 1;
        f.capacity_ = 2 * f.block_;
    }
    return f;
}

std::optional<std::size_t> FeasibleSet::index(const Quadruple& x) const {
    if (capacity_ == 0) return std::nullopt;
    if (branch_) {
        if (x.p + x.q != 1 || x.s + x.t != fixed_) return std::nullopt;
        return x.p * block_ + x.t;
    }
    if (x.p + x.q != fixed_ || x.s + x.t > K_ - fixed_) return std::nullopt;
    return x.p * block_ + tri_index(x.s, x.t, K_ - fixed_);
}

Quadruple FeasibleSet::at(std::size_t i) const {
    Quadruple x;
    x.p = i / block_;
    std::size_t r = i % block_;
    if (branch_) {
        x.q = 1 - x.p;
        x.t = r;
        x.s = fixed_ - r;
        return x;
    }
    x.q = fixed_ - x.p;
    const std::size_t width = K_ - fixed_ + 1;
    while (r >= width - x.s) {
        r -= width - x.s;
        ++x.s;
    }
    x.t = r;
    return x;
}

bool FeasibleSet::contains(const Quadruple& x) const { return witness(x) != nullptr; }

const EntryWitness* FeasibleSet::witness(const Quadruple& x) const {
    const auto i = index(x);
    if (!i) return nullptr;
    const auto it = std::lower_bound(items_.begin(), items_.end(), *i,
                                     [](const Item& a, std::size_t k) { return a.index < k; });
    if (it == items_.end() || it->index != *i) return nullptr;
    return &it->w;
}

bool FeasibleSet::insert(const Quadruple& x, EntryWitness w) {
    const auto i = index(x);
    if (!i) throw std::invalid_argument("quadruple " + to_string(x) + " outside the set's layout");
    if (w.tag == 0) throw std::invalid_argument("witness tag must be nonzero");
    const auto it = std::lower_bound(items_.begin(), items_.end(), *i,
                                     [](const Item& a, std::size_t k) { return a.index < k; });
    if (it != items_.end() && it->index == *i) return false;
    items_.insert(it, Item{std::uint32_t(*i), w});
    return true;
}

void FeasibleSet::entries_into(std::vector<Quadruple>& out) const {
    out.clear();
    for (const Item& it : items_) out.push_back(at(it.index));
    if (branch_) std::sort(out.begin(), out.end());
}

std::vector<Quadruple> FeasibleSet::entries() const {
    std::vector<Quadruple> out;
    out.reserve(items_.size());
    entries_into(out);
    return out;
}

std::vector<Quadruple> FeasibleSet::restricted(std::size_t p, std::size_t q) const {
    std::vector<Quadruple> out;
    for (const Quadruple& x : entries())
        if (x.p == p && x.q == q) out.push_back(x);
    return out;
}

// ---- merge arithmetic ---------------------------------------------------------

namespace {

using I = long long;

struct Primed {
    I p, s_L;
};

std::optional<Primed> primed(int merge_case, std::size_t p, std::size_t s_L) {
    switch (merge_case) {
        case 1: return Primed{I(p), I(s_L)};
        case 2:
            if (p == 0) return std::nullopt;
            return Primed{I(p) - 1, I(s_L)};
        case 3:
            if (p == 0 || s_L == 0) return std::nullopt;
            return Primed{I(p) - 1, I(s_L) - 1};
        default: return std::nullopt;
    }
}

}  // namespace

bool merge_conditions(int merge_case, std::size_t p, std::size_t s, std::size_t t, std::size_t s_L,
                      std::size_t t_L, std::size_t s_R, std::size_t t_R) {
    const auto pr = primed(merge_case, p, s_L);
    if (!pr) return false;
    const I S = I(s), T = I(t), tL = I(t_L), sR = I(s_R), tR = I(t_R);
    if (!(tR <= T && T <= tL + tR)) return false;
    if (!(std::max<I>(0, pr->s_L - S) <= std::min<I>(pr->s_L, T - tL))) return false;
    const I mid = pr->s_L + sR - S;
    return 0 <= mid && mid <= pr->s_L + pr->p + T - tR;
}

Transfer witness_assignment(int merge_case, std::size_t p, std::size_t s, std::size_t t, std::size_t s_L,
                            std::size_t t_L, std::size_t s_R, std::size_t t_R) {
    if (!merge_conditions(merge_case, p, s, t, s_L, t_L, s_R, t_R))
        throw std::invalid_argument("witness_assignment: merge conditions do not hold");
    const auto pr = *primed(merge_case, p, s_L);
    const I S = I(s), T = I(t), tL = I(t_L), sR = I(s_R), tR = I(t_R), sL = pr.s_L;
    const I y_T = tL + tR - T;
    const I y_S = std::min({sL, T - tL, sL + sR - S});
    const I x_A = S - sL + y_S;
    const I y_A = T - tL - y_S;
    const I x_T = std::min(T - tR, sL + sR - S - y_S);
    const I x_P = std::min(pr.p, sR - x_A - x_T);
    const I x_S = sR - x_A - x_T - x_P;
    for (I v : {y_T, y_S, x_A, y_A, x_T, x_P, x_S})
        if (v < 0) throw std::logic_error("witness_assignment produced a negative count");
    return {std::size_t(x_P), std::size_t(x_S), std::size_t(x_T), std::size_t(x_A),
            std::size_t(y_S), std::size_t(y_T), std::size_t(y_A)};
}

bool satisfies_transfer_system(int merge_case, std::size_t p, std::size_t s, std::size_t t, std::size_t s_L,
                               std::size_t t_L, std::size_t s_R, std::size_t t_R, std::size_t a_L,
                               const Transfer& x) {
    const auto pr = primed(merge_case, p, s_L);
    if (!pr) return false;
    // The new edge's color leaves left A in cases 1 and 2, left S in case 3.
    const I taken_from_a = merge_case == 3 ? 0 : 1;
    return I(s_R) == I(x.x_P + x.x_S + x.x_T + x.x_A) &&
           I(t_R) == I(x.y_S + x.y_T + x.y_A) &&
           I(s) == pr->s_L - I(x.y_S) + I(x.x_A) &&
           I(t) == I(t_R) + I(t_L) - I(x.y_T) &&
           I(x.x_P) <= pr->p &&
           I(x.x_S + x.y_S) <= pr->s_L &&
           x.x_T + x.y_T <= t_L &&
           taken_from_a + I(x.x_A + x.y_A) <= I(a_L);
}

// ---- transitions ------------------------------------------------------------------

FeasibleSet vertical_expand(const FeasibleSet& child_set, std::size_t chd_i, std::size_t K) {
    FeasibleSet out = FeasibleSet::branch(chd_i, K);
    for (const Quadruple& c : child_set.entries()) {
        if (c.p + c.q != chd_i) throw std::invalid_argument("vertical_expand: child tuple does not match chd");
        const EntryWitness w{1, std::uint8_t(c.s), std::uint8_t(c.t), 0};
        // Edge v v_i takes a color of type A in the child's coloring...
        if (c.sum() + 1 <= K) out.insert({1, 0, c.p, c.q}, w);
        // ...or one of type S: v_i then stays the 1-vertex of those deeper
        // edges' far ends. A type T color would lose one.
        if (c.sum() <= K && c.s >= 1) out.insert({0, 1, c.p, c.q}, w);
    }
    return out;
}

namespace {

// Dense staging area for one merge; all tags are zero between merges.
struct MergeScratch {
    std::vector<EntryWitness> dense;
    std::vector<std::uint32_t> touched;
    std::vector<Quadruple> lefts, rights;

    void fill(std::size_t i, EntryWitness w) {
        if (dense[i].tag != 0) return;
        dense[i] = w;
        touched.push_back(std::uint32_t(i));
    }
};

}  // namespace

FeasibleSet horizontal_merge(const FeasibleSet& left, const FeasibleSet& right, std::size_t i, std::size_t chd_next,
                             std::size_t K) {
    FeasibleSet out = FeasibleSet::subtree(i + 1, K);
    if (i + 1 > K) return out;
    const I room = I(K) - I(i + 1);
    const std::size_t width = std::size_t(room) + 1;
    thread_local MergeScratch scratch;
    if (scratch.dense.size() < out.capacity_) scratch.dense.resize(out.capacity_);
    left.entries_into(scratch.lefts);
    right.entries_into(scratch.rights);
    const std::vector<Quadruple>& lefts = scratch.lefts;
    const std::vector<Quadruple>& rights = scratch.rights;
    for (const Quadruple& r : rights)
        if (r.s + r.t != chd_next) throw std::invalid_argument("horizontal_merge: right tuple does not match chd");
    for (const Quadruple& l : lefts)
        if (l.p + l.q != i) throw std::invalid_argument("horizontal_merge: left tuple does not match i");

    for (int merge_case = 1; merge_case <= 3; ++merge_case) {
        for (const Quadruple& l : lefts) {
            if (merge_case == 3 && l.s == 0) continue;
            const std::size_t p = merge_case == 1 ? l.p : l.p + 1;
            const std::size_t base = p * out.block_;
            const I p1 = I(l.p);
            const I sL1 = merge_case == 3 ? I(l.s) - 1 : I(l.s);
            const I tL = I(l.t);
            const EntryWitness w{std::uint8_t(merge_case), std::uint8_t(l.s), std::uint8_t(l.t), 0};
            for (const Quadruple& r : rights) {
                if ((merge_case == 1) != (r.q == 1)) continue;
                const I sR = I(r.s), tR = I(r.t);
                EntryWitness wr = w;
                wr.c = std::uint8_t(r.t);
                // The three conditions solved for s at each t.
                for (I t = std::max(tR, tL); t <= tL + tR && t <= room; ++t) {
                    const I lo = std::max({I(0), sL1 - (t - tL), sR - p1 - t + tR});
                    const I hi = std::min(sL1 + sR, room - t);
                    for (I s = lo; s <= hi; ++s)
                        scratch.fill(base + tri_index(std::size_t(s), std::size_t(t), width - 1), wr);
                }
            }
        }
    }
    std::sort(scratch.touched.begin(), scratch.touched.end());
    out.items_.reserve(scratch.touched.size());
    for (std::uint32_t at : scratch.touched) {
        out.items_.push_back({at, scratch.dense[at]});
        scratch.dense[at] = {};
    }
    scratch.touched.clear();
    return out;
}

// ---- driver ---------------------------------------------------------------------------

const FeasibleSet& TreeSolution::root_set() const {
    static const FeasibleSet kEmpty;
    if (!feasible_) return kEmpty;
    return subtree_set(tree_->root());
}

const FeasibleSet& TreeSolution::subtree_set(Vertex v) const {
    const auto cs = tree_->children(v);
    if (cs.empty()) return leaf_;
    if (cs.size() == 1) return branch_set(cs[0]);
    return merged_set(cs.back());
}

TreeSolution solve_tree(const RootedTree& tree, std::size_t K) {
    const std::size_t delta = tree.graph().max_degree();
    if (K < delta)
        throw std::invalid_argument("budget " + std::to_string(K) + " is below the maximum degree " +
                                    std::to_string(delta));
    if (K > 255) throw std::invalid_argument("budget above 255 is not supported");

    TreeSolution sol;
    sol.tree_ = std::make_shared<const RootedTree>(tree);
    sol.K_ = K;
    sol.leaf_ = FeasibleSet::subtree(0, K);
    sol.leaf_.insert({0, 0, 0, 0}, {1, 0, 0, 0});
    const std::size_t n = tree.size();
    const auto& order = tree.bfs_order();
    sol.slot_.resize(n);
    for (std::size_t i = 0; i < n; ++i) sol.slot_[order[i]] = i;
    sol.branch_.resize(n);
    sol.merged_.resize(n);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        const auto cs = tree.children(v);
        for (std::size_t j = 0; j < cs.size(); ++j) {
            const Vertex c = cs[j];
            const std::size_t at = sol.slot_[c];
            const std::size_t chd = tree.child_count(c);
            sol.branch_[at] = vertical_expand(sol.subtree_set(c), chd, K);
            if (sol.branch_[at].empty()) {
                sol.failed_at_ = v;
                return sol;
            }
            if (j == 0) continue;
            const FeasibleSet& prev = j == 1 ? sol.branch_set(cs[0]) : sol.merged_set(cs[j - 1]);
            sol.merged_[at] = horizontal_merge(prev, sol.branch_[at], j, chd, K);
            if (sol.merged_[at].empty()) {
                sol.failed_at_ = v;
                return sol;
            }
        }
    }
    sol.feasible_ = true;
    return sol;
}

// ---- classification ---------------------------------------------------------------------

ColorTypePartition classify_colors(const RootedTree& tree, Vertex v, const EdgeColoring& phi, std::size_t K) {
    const Graph& g = tree.graph();
    if (phi.size() != g.edge_count()) throw ColoringError("coloring length does not match the tree");

    // Subtree as its own graph with v as vertex 0, in breadth-first order.
    std::vector<Vertex> local(g.vertex_count(), kUnreachable);
    std::vector<Vertex> members{v};
    local[v] = 0;
    std::vector<Edge> edges;
    std::vector<Color> colors;
    for (std::size_t head = 0; head < members.size(); ++head) {
        const Vertex x = members[head];
        for (Vertex c : tree.children(x)) {
            local[c] = members.size();
            members.push_back(c);
            edges.push_back({local[x], local[c]});
            colors.push_back(phi[tree.parent_edge(c)]);
        }
    }
    for (Color c : colors)
        if (c < 1 || c > K) throw ColoringError("color " + std::to_string(c) + " outside 1.." + std::to_string(K));
    const Graph sub(members.size(), edges);
    const EdgeColoring sub_phi(colors, K);
    if (const VerifyResult r = verify_coloring(sub, sub_phi, ColoringKind::semistrong); !r)
        throw ColoringError("not a semistrong coloring of the subtree: " + r.violation->message);

    auto covered = [&](Vertex y, Color c) {
        for (EdgeId e : sub.incident(y))
            if (sub_phi[e] == c) return true;
        return false;
    };
    auto far_is_one_vertex = [&](EdgeId e, Vertex far) {
        std::size_t count = 0;
        for (EdgeId h : sub.incident(far))
            if (covered(sub.edge(h).other(far), sub_phi[e])) ++count;
        return count == 1;
    };

    std::vector<ColorType> type(K + 1, ColorType::A);
    std::vector<char> on_first(K + 1, 0);
    for (EdgeId e : sub.incident(0)) {
        const Vertex w = sub.edge(e).other(0);
        on_first[sub_phi[e]] = 1;
        type[sub_phi[e]] = far_is_one_vertex(e, w) ? ColorType::P : ColorType::Q;
    }
    for (EdgeId e0 : sub.incident(0)) {
        const Vertex w = sub.edge(e0).other(0);
        for (EdgeId e : sub.incident(w)) {
            if (e == e0) continue;
            const Color c = sub_phi[e];
            if (on_first[c]) continue;
            const bool one = far_is_one_vertex(e, sub.edge(e).other(w));
            if (type[c] == ColorType::A) type[c] = one ? ColorType::S : ColorType::T;
            else if (!one) type[c] = ColorType::T;
        }
    }
    ColorTypePartition out;
    for (Color c = 1; c <= K; ++c) {
        switch (type[c]) {
            case ColorType::P: out.P.push_back(c); break;
            case ColorType::Q: out.Q.push_back(c); break;
            case ColorType::S: out.S.push_back(c); break;
            case ColorType::T: out.T.push_back(c); break;
            case ColorType::A: out.A.push_back(c); break;
        }
    }
    return out;
}

TreeIndex semistrong_index_tree(const Graph& g) {
    if (g.vertex_count() == 0) throw NotATreeError("not a tree: empty graph");
    const RootedTree tree = root_tree(g, 0);
    if (g.vertex_count() == 1) return {0, EdgeColoring({}, 0), {}};
    const std::size_t delta = g.max_degree();
    for (std::size_t K : {delta, delta + 1}) {
        const TreeSolution sol = solve_tree(tree, K);
        if (!sol.feasible()) continue;
        const Quadruple tuple = sol.root_set().entries().front();
        Reconstruction rec = reconstruct_coloring(sol, tuple);
        return {K, std::move(rec.coloring), tuple};
    }
    throw std::logic_error("tree program rejected budget max degree + 1");
}

}  // namespace semistrong
