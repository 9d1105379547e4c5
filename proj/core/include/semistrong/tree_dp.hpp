#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "semistrong/coloring.hpp"
#include "semistrong/graph.hpp"

namespace semistrong {

/// Dynamic program for semistrong edge coloring of trees with a color budget K.
///
/// For a subtree rooted at v, every color falls in one of five types:
///   P  on an edge vw whose far end w is a 1-vertex,
///   Q  on an edge vw whose far end w is not a 1-vertex,
///   S  only on edges one level further down, each with its far end a 1-vertex,
///   T  only on those edges, at least one far end not a 1-vertex,
///   A  everything else, unused colors included.
/// A quadruple (p,q;s,t) counts the first four; a = K - p - q - s - t.
///
/// Subtree names: T_v is v with all its descendants. T_v^i is T_{v_i} plus
/// the edge v v_i (v_i the i-th child). The partial subtree ~T_v^i is the
/// union of T_v^1..T_v^i, so ~T_v^1 = T_v^1 and T_v = ~T_v^chd(v).

struct Quadruple {
    std::size_t p = 0, q = 0, s = 0, t = 0;

    [[nodiscard]] std::size_t sum() const { return p + q + s + t; }
    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

std::string to_string(const Quadruple& x);

enum class ColorType : std::uint8_t { P = 0, Q = 1, S = 2, T = 3, A = 4 };

/// Disjoint ascending color sets covering 1..K.
struct ColorTypePartition {
    std::vector<Color> P, Q, S, T, A;

    [[nodiscard]] Quadruple counts() const { return {P.size(), Q.size(), S.size(), T.size()}; }
    friend bool operator==(const ColorTypePartition&, const ColorTypePartition&) = default;
};

/// Types of all colors 1..K for the subtree of `tree` rooted at v. Only edges
/// inside that subtree are considered. Throws ColoringError unless phi
/// restricted to the subtree is a semistrong coloring within 1..K.
ColorTypePartition classify_colors(const RootedTree& tree, Vertex v, const EdgeColoring& phi, std::size_t K);

/// Per-entry witness. For merged sets: case 1..3 with the left (s_L, t_L)
/// and right t_R. For expanded sets: the child tuple's (s, t) in (a, b).
/// `tag == 0` marks an absent entry.
struct EntryWitness {
    std::uint8_t tag = 0;
    std::uint8_t a = 0, b = 0, c = 0;
};

/// Set of achievable quadruples for one subtree. Two layouts:
///   subtree: p + q fixed (T_v and ~T_v^i);
///   branch:  (p,q) in {(1,0),(0,1)} and s + t fixed (T_v^i).
/// Only present entries are stored, as (layout position, witness) pairs.
class FeasibleSet {
public:
    FeasibleSet() = default;
    static FeasibleSet subtree(std::size_t first_sum, std::size_t K);
    static FeasibleSet branch(std::size_t second_sum, std::size_t K);

    [[nodiscard]] bool is_branch() const { return branch_; }
    [[nodiscard]] std::size_t budget() const { return K_; }
    /// p + q for subtree layout; 1 for branch layout.
    [[nodiscard]] std::size_t first_sum() const { return branch_ ? 1 : fixed_; }

    [[nodiscard]] bool contains(const Quadruple& x) const;
    /// Witness of a present entry, nullptr if absent.
    [[nodiscard]] const EntryWitness* witness(const Quadruple& x) const;
    /// Inserts with the given witness unless already present; returns true if new.
    bool insert(const Quadruple& x, EntryWitness w);

    [[nodiscard]] bool empty() const { return items_.empty(); }
    [[nodiscard]] std::size_t size() const { return items_.size(); }
    /// Present entries in ascending lexicographic order.
    [[nodiscard]] std::vector<Quadruple> entries() const;
    /// Present entries with the given (p, q), ascending.
    [[nodiscard]] std::vector<Quadruple> restricted(std::size_t p, std::size_t q) const;

    template <class F>
    void for_each(F&& f) const {
        for (const Quadruple& x : entries()) f(x, *witness(x));
    }

    friend bool operator==(const FeasibleSet& a, const FeasibleSet& b) { return a.entries() == b.entries(); }

private:
    friend FeasibleSet horizontal_merge(const FeasibleSet&, const FeasibleSet&, std::size_t, std::size_t,
                                        std::size_t);

    std::optional<std::size_t> index(const Quadruple& x) const;
    Quadruple at(std::size_t i) const;
    void entries_into(std::vector<Quadruple>& out) const;

    struct Item {
        std::uint32_t index;
        EntryWitness w;
    };

    bool branch_ = false;
    std::size_t fixed_ = 0;
    std::size_t K_ = 0;
    std::size_t block_ = 0;
    std::size_t capacity_ = 0;
    // Sorted by index.
    std::vector<Item> items_;
};

/// Transfer counts between the two sides of a merge.
struct Transfer {
    std::size_t x_P = 0, x_S = 0, x_T = 0, x_A = 0, y_S = 0, y_T = 0, y_A = 0;
    friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct MergeWitness {
    int merge_case = 0;
    std::size_t s_L = 0, t_L = 0, s_R = 0, t_R = 0;
    Transfer transfer;
};

/// ~T_v^i's set (left) and T_v^{i+1}'s set (right) merged into ~T_v^{i+1}.
/// Case 1: the new edge's color is a Q color taken from left A.
/// Case 2: a P color taken from left A. Case 3: a P color taken from left S.
bool merge_conditions(int merge_case, std::size_t p, std::size_t s, std::size_t t, std::size_t s_L,
                      std::size_t t_L, std::size_t s_R, std::size_t t_R);

/// Closed-form transfer counts. Throws std::invalid_argument unless
/// merge_conditions holds for the same arguments.
Transfer witness_assignment(int merge_case, std::size_t p, std::size_t s, std::size_t t, std::size_t s_L,
                            std::size_t t_L, std::size_t s_R, std::size_t t_R);

/// The eight relations tying a merge's counts together, a_L being the left
/// side's A count.
bool satisfies_transfer_system(int merge_case, std::size_t p, std::size_t s, std::size_t t, std::size_t s_L,
                               std::size_t t_L, std::size_t s_R, std::size_t t_R, std::size_t a_L,
                               const Transfer& x);

/// Set of T_v^i from the set of T_{v_i} (whose root has chd_i children).
FeasibleSet vertical_expand(const FeasibleSet& child_set, std::size_t chd_i, std::size_t K);

/// Set of ~T_v^{i+1}; chd_next is the child count of v_{i+1}.
FeasibleSet horizontal_merge(const FeasibleSet& left, const FeasibleSet& right, std::size_t i, std::size_t chd_next,
                             std::size_t K);

/// Outcome of the dynamic program on one rooted tree and budget.
class TreeSolution {
public:
    [[nodiscard]] bool feasible() const { return feasible_; }
    [[nodiscard]] std::size_t budget() const { return K_; }
    [[nodiscard]] const RootedTree& tree() const { return *tree_; }
    /// Set of T_root; empty when infeasible.
    [[nodiscard]] const FeasibleSet& root_set() const;
    /// Vertex whose set came out empty first, when infeasible.
    [[nodiscard]] std::optional<Vertex> failed_at() const { return failed_at_; }

    /// Set of T_v (the subtree rooted at v); requires feasible().
    [[nodiscard]] const FeasibleSet& subtree_set(Vertex v) const;
    /// Set of T_{parent(c)}^i where c is the i-th child.
    [[nodiscard]] const FeasibleSet& branch_set(Vertex c) const { return branch_[slot_[c]]; }
    /// Set of ~T_{parent(c)}^i where c is the i-th child (i >= 2).
    [[nodiscard]] const FeasibleSet& merged_set(Vertex c) const { return merged_[slot_[c]]; }

private:
    friend TreeSolution solve_tree(const RootedTree& tree, std::size_t K);

    std::shared_ptr<const RootedTree> tree_;
    std::size_t K_ = 0;
    bool feasible_ = false;
    std::optional<Vertex> failed_at_;
    FeasibleSet leaf_;
    // Sets are stored by breadth-first position so the bottom-up sweep walks
    // memory in order.
    std::vector<std::size_t> slot_;
    std::vector<FeasibleSet> branch_;
    std::vector<FeasibleSet> merged_;
};

/// Runs the program bottom-up (iteratively, so deep paths are fine) and
/// stops at the first empty set. Throws std::invalid_argument if K is below
/// the maximum degree or above 255.
TreeSolution solve_tree(const RootedTree& tree, std::size_t K);

struct Reconstruction {
    EdgeColoring coloring;
    ColorTypePartition partition;
};

/// Explicit coloring realizing `tuple` at the root. The result is checked
/// with verify_coloring and classify_colors; a mismatch throws
/// std::logic_error.
Reconstruction reconstruct_coloring(const TreeSolution& solution, const Quadruple& tuple);

struct TreeIndex {
    std::size_t index = 0;
    EdgeColoring coloring;
    /// Root tuple realized by `coloring` at vertex 0.
    Quadruple root_tuple;
};

/// Semistrong chromatic index of a tree: max degree or one more. Throws
/// NotATreeError for other graphs.
TreeIndex semistrong_index_tree(const Graph& tree);

}  // namespace semistrong
