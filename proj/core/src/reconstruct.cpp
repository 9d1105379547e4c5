#include <stdexcept>

#include "semistrong/tree_dp.hpp"

namespace semistrong {

namespace {

// Color types of one subtree, indexed by color - 1.
using Labels = std::vector<ColorType>;

[[noreturn]] void fail(const std::string& what) { throw std::logic_error("reconstruction: " + what); }

Quadruple counts(const Labels& lab) {
    Quadruple x;
    for (ColorType c : lab) {
        switch (c) {
            case ColorType::P: ++x.p; break;
            case ColorType::Q: ++x.q; break;
            case ColorType::S: ++x.s; break;
            case ColorType::T: ++x.t; break;
            case ColorType::A: break;
        }
    }
    return x;
}

std::vector<Color> of_type(const Labels& lab, ColorType type) {
    std::vector<Color> out;
    for (std::size_t i = 0; i < lab.size(); ++i)
        if (lab[i] == type) out.push_back(Color(i + 1));
    return out;
}

// Removes and returns the first k colors of pool.
std::vector<Color> take(std::vector<Color>& pool, std::size_t k, const char* what) {
    if (pool.size() < k) fail(std::string("not enough colors for ") + what);
    std::vector<Color> out(pool.begin(), pool.begin() + std::ptrdiff_t(k));
    pool.erase(pool.begin(), pool.begin() + std::ptrdiff_t(k));
    return out;
}

void set(Labels& lab, const std::vector<Color>& colors, ColorType type) {
    for (Color c : colors) lab[c - 1] = type;
}

class Builder {
public:
    explicit Builder(const TreeSolution& sol)
        : sol_(sol), tree_(sol.tree()), K_(sol.budget()), labels_(tree_.size()), colors_(tree_.graph().edge_count(), 0) {}

    EdgeColoring run(const Quadruple& tuple) {
        if (!sol_.feasible()) fail("program reported infeasible");
        if (!sol_.root_set().contains(tuple)) fail("tuple " + to_string(tuple) + " is not in the root set");
        Labels root(K_, ColorType::A);
        std::size_t next = 0;
        for (auto [type, k] : {std::pair{ColorType::P, tuple.p}, {ColorType::Q, tuple.q}, {ColorType::S, tuple.s},
                               {ColorType::T, tuple.t}})
            for (std::size_t j = 0; j < k; ++j) root[next++] = type;
        labels_[tree_.root()] = std::move(root);

        for (Vertex v : tree_.bfs_order()) {
            split(v);
            labels_[v] = Labels();
        }
        return EdgeColoring(colors_, K_);
    }

private:
    // Unfolds the merges at v from the last child back to the first.
    void split(Vertex v) {
        const auto cs = tree_.children(v);
        if (cs.empty()) return;
        Labels cur = std::move(labels_[v]);
        for (std::size_t j = cs.size() - 1; j >= 1; --j) {
            const Vertex c = cs[j];
            const Quadruple x = counts(cur);
            const EntryWitness* w = sol_.merged_set(c).witness(x);
            if (!w) fail("tuple " + to_string(x) + " missing from a merged set");
            const int merge_case = w->tag;
            const std::size_t s_L = w->a, t_L = w->b, t_R = w->c;
            const std::size_t s_R = tree_.child_count(c) - t_R;
            const Transfer tr = witness_assignment(merge_case, x.p, x.s, x.t, s_L, t_L, s_R, t_R);

            std::vector<Color> P = of_type(cur, ColorType::P), Q = of_type(cur, ColorType::Q);
            std::vector<Color> S = of_type(cur, ColorType::S), T = of_type(cur, ColorType::T);
            std::vector<Color>& source = merge_case == 1 ? Q : P;
            if (source.empty()) fail("no color for the new edge");
            const Color alpha = source.back();
            source.pop_back();

            const std::vector<Color> XA = take(S, tr.x_A, "x_A");
            const std::vector<Color> YS = take(T, tr.y_S, "y_S");
            const std::vector<Color> YA = take(T, tr.y_A, "y_A");

            Labels left(K_, ColorType::A);
            set(left, P, ColorType::P);
            set(left, Q, ColorType::Q);
            set(left, S, ColorType::S);
            set(left, YS, ColorType::S);
            if (merge_case == 3) left[alpha - 1] = ColorType::S;
            set(left, T, ColorType::T);
            const Quadruple lx = counts(left);
            if (lx.s != s_L || lx.t != t_L) fail("left side counts disagree with the witness");

            std::vector<Color> TL = T, PL = P, SL = S;
            const std::vector<Color> YT = take(TL, tr.y_T, "y_T");
            const std::vector<Color> XT = take(TL, tr.x_T, "x_T");
            const std::vector<Color> XP = take(PL, tr.x_P, "x_P");
            const std::vector<Color> XS = take(SL, tr.x_S, "x_S");

            Labels right(K_, ColorType::A);
            right[alpha - 1] = merge_case == 1 ? ColorType::Q : ColorType::P;
            for (const auto* group : {&XP, &XS, &XT, &XA}) set(right, *group, ColorType::S);
            for (const auto* group : {&YS, &YT, &YA}) set(right, *group, ColorType::T);

            descend(c, right);
            cur = std::move(left);
        }
        descend(cs[0], cur);
    }

    // Colors the edge above c and derives the types for T_c.
    void descend(Vertex c, const Labels& branch) {
        const Quadruple x = counts(branch);
        if (x.p + x.q != 1) fail("branch does not carry exactly one child edge color");
        const EntryWitness* w = sol_.branch_set(c).witness(x);
        if (!w) fail("tuple " + to_string(x) + " missing from an expanded set");
        const std::size_t s_c = w->a, t_c = w->b;
        const Color alpha = of_type(branch, x.p == 1 ? ColorType::P : ColorType::Q).front();
        colors_[tree_.parent_edge(c)] = alpha;

        Labels child(K_, ColorType::A);
        std::vector<Color> pool;
        for (Color col = 1; col <= K_; ++col) {
            switch (branch[col - 1]) {
                case ColorType::S: child[col - 1] = ColorType::P; break;
                case ColorType::T: child[col - 1] = ColorType::Q; break;
                default:
                    if (col != alpha) pool.push_back(col);
            }
        }
        std::size_t need_s = s_c;
        if (x.q == 1) {
            child[alpha - 1] = ColorType::S;
            --need_s;
        }
        set(child, take(pool, need_s, "child S"), ColorType::S);
        set(child, take(pool, t_c, "child T"), ColorType::T);
        if (!sol_.subtree_set(c).contains(counts(child))) fail("child tuple missing from its subtree set");
        labels_[c] = std::move(child);
    }

    const TreeSolution& sol_;
    const RootedTree& tree_;
    std::size_t K_;
    std::vector<Labels> labels_;
    std::vector<Color> colors_;
};

}  // namespace

Reconstruction reconstruct_coloring(const TreeSolution& solution, const Quadruple& tuple) {
    Builder builder(solution);
    EdgeColoring phi = builder.run(tuple);
    const RootedTree& tree = solution.tree();
    if (const VerifyResult r = verify_coloring(tree.graph(), phi, ColoringKind::semistrong); !r)
        fail("result is not semistrong: " + r.violation->message);
    ColorTypePartition part = classify_colors(tree, tree.root(), phi, solution.budget());
    if (part.counts() != tuple) fail("root classification " + to_string(part.counts()) + " differs from " + to_string(tuple));
    return {std::move(phi), std::move(part)};
}

}  // namespace semistrong
