#pragma once

#include "combclass/seqcyc.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace combclass {

/// A planar rooted tree whose every node (root included) carries a label.
/// Children order is significant. Weight counts all nodes.
struct RootedTreeRr {
    Label label = 0;
    std::vector<RootedTreeRr> children;

    bool operator==(const RootedTreeRr &) const = default;
};

inline std::size_t tree_weight(const RootedTreeRr &t)
{
    std::size_t w = 1;
    for (const RootedTreeRr &c : t.children)
        w += tree_weight(c);
    return w;
}

namespace detail {
inline void collect_labels(const RootedTreeRr &t, std::vector<Label> &out)
{
    out.push_back(t.label);
    for (const RootedTreeRr &c : t.children)
        collect_labels(c, out);
}
} // namespace detail

/// All labels of the tree, sorted ascending; throws on duplicates.
inline std::vector<Label> tree_labels(const RootedTreeRr &t)
{
    std::vector<Label> all;
    detail::collect_labels(t, all);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("tree: duplicate label");
    return all;
}

// RootedTreeRr is a labelled atom.
inline std::vector<Label> atom_labels(const RootedTreeRr &t) { return tree_labels(t); }

inline RootedTreeRr atom_relabel(const RootedTreeRr &t, const std::map<Label, Label> &m)
{
    RootedTreeRr out;
    out.label = m.at(t.label);
    out.children.reserve(t.children.size());
    for (const RootedTreeRr &c : t.children)
        out.children.push_back(atom_relabel(c, m));
    return out;
}

/// A plane tree with an unlabelled root; the non-root nodes carry exactly
/// the labels {1..degree}.
class PlaneTreeR {
  public:
    explicit PlaneTreeR(std::vector<RootedTreeRr> children) : children_(std::move(children))
    {
        std::vector<Label> all;
        for (const RootedTreeRr &c : children_)
            detail::collect_labels(c, all);
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("PlaneTreeR: duplicate label");
        detail::require_standard(all);
    }

    std::size_t degree() const
    {
        std::size_t n = 0;
        for (const RootedTreeRr &c : children_)
            n += tree_weight(c);
        return n;
    }
    const std::vector<RootedTreeRr> &children() const { return children_; }

    bool operator==(const PlaneTreeR &) const = default;

  private:
    std::vector<RootedTreeRr> children_;
};

/// A sequence of labelled rooted trees covering {1..n}.
class Forest {
  public:
    explicit Forest(std::vector<RootedTreeRr> trees) : seq_(std::move(trees)) {}
    explicit Forest(AtomSequence<RootedTreeRr> seq) : seq_(std::move(seq)) {}

    const std::vector<RootedTreeRr> &trees() const { return seq_.atoms(); }
    const AtomSequence<RootedTreeRr> &sequence() const { return seq_; }
    std::size_t degree() const { return seq_.degree(); }

    bool operator==(const Forest &) const = default;

  private:
    AtomSequence<RootedTreeRr> seq_;
};

using TreeNecklace = AtomNecklace<RootedTreeRr>;
using JewelleryBox = AtomJewellery<RootedTreeRr>;

/// Remove the root: the child subtrees, in order, form a forest of the same
/// degree.
inline Forest rtof(const PlaneTreeR &t) { return Forest(t.children()); }

/// Connect the trees of a forest to a fresh unlabelled root. Inverse of rtof.
inline PlaneTreeR ftor(const Forest &f) { return PlaneTreeR(f.trees()); }

/// Jewellery box to forest: the sequence/set-of-cycles isomorphism
/// specialized to rooted-tree atoms.
inline Forest jtof(const JewelleryBox &j) { return Forest(jtoseq(j)); }

/// Forest to jewellery box; inverse of jtof.
inline JewelleryBox ftoj(const Forest &f) { return seqtoj(f.sequence()); }

/// Insert a labelled root: labels >= r shift up by one, the root takes r.
/// Over all r in {1..n+1} and all t of degree n this hits every weight-(n+1)
/// rooted tree exactly once.
inline RootedTreeRr relabel_root_insert(const PlaneTreeR &t, Label r)
{
    const int n = static_cast<int>(t.degree());
    if (r < 1 || r > n + 1)
        throw std::invalid_argument("relabel_root_insert: root label out of range");
    std::map<Label, Label> shift;
    for (Label l = 1; l <= n; ++l)
        shift[l] = l < r ? l : l + 1;
    RootedTreeRr out;
    out.label = r;
    out.children.reserve(t.children().size());
    for (const RootedTreeRr &c : t.children())
        out.children.push_back(atom_relabel(c, shift));
    return out;
}

/// A rooted labelled tree whose children hang on a necklace: distinct
/// cyclic orders are distinct trees. Stored with the child containing the
/// minimum label first.
class Windmill {
  public:
    explicit Windmill(Label label, std::vector<Windmill> children = {})
        : label_(label), children_(std::move(children))
    {
        if (!children_.empty()) {
            std::size_t at = 0;
            for (std::size_t i = 1; i < children_.size(); ++i)
                if (children_[i].min_label() < children_[at].min_label())
                    at = i;
            std::rotate(children_.begin(), children_.begin() + at, children_.end());
        }
    }

    Label label() const { return label_; }
    const std::vector<Windmill> &children() const { return children_; }

    Label min_label() const
    {
        Label m = label_;
        for (const Windmill &c : children_)
            m = std::min(m, c.min_label());
        return m;
    }

    std::size_t degree() const
    {
        std::size_t w = 1;
        for (const Windmill &c : children_)
            w += c.degree();
        return w;
    }

    bool operator==(const Windmill &) const = default;

  private:
    Label label_;
    std::vector<Windmill> children_;
};

/// A rooted labelled tree whose children form an unordered set, drawn as
/// discs nested in discs. Children are stored sorted by minimum label.
class NestedDiscs {
  public:
    explicit NestedDiscs(Label label, std::vector<NestedDiscs> children = {})
        : label_(label), children_(std::move(children))
    {
        std::sort(children_.begin(), children_.end(),
                  [](const NestedDiscs &a, const NestedDiscs &b) {
                      return a.min_label() < b.min_label();
                  });
    }

    Label label() const { return label_; }
    const std::vector<NestedDiscs> &children() const { return children_; }

    Label min_label() const
    {
        Label m = label_;
        for (const NestedDiscs &c : children_)
            m = std::min(m, c.min_label());
        return m;
    }

    std::size_t degree() const
    {
        std::size_t w = 1;
        for (const NestedDiscs &c : children_)
            w += c.degree();
        return w;
    }

    bool operator==(const NestedDiscs &) const = default;

  private:
    Label label_;
    std::vector<NestedDiscs> children_;
};

// ---------------------------------------------------------------------------
// Exhaustive enumeration.
//
// Plane tree shapes are generated recursively, ordered by ascending size of
// the first subtree and then recursively within the subtrees; labellings
// follow lexicographic permutations written onto the non-root nodes in
// preorder. Sequence-like structures pick the support of their first
// component by ascending bitmask over the remaining labels; set- and
// cycle-like structures pin the component holding the smallest free label.
// ---------------------------------------------------------------------------

namespace detail {

struct TreeShape {
    std::vector<TreeShape> subtrees; // shape of a forest / of a node's children
};

// All forest shapes with exactly n nodes in total.
inline std::vector<TreeShape> forest_shapes(int n)
{
    std::vector<TreeShape> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (int k = 1; k <= n; ++k) { // nodes in the first tree
        for (const TreeShape &first : forest_shapes(k - 1)) {
            for (const TreeShape &rest : forest_shapes(n - k)) {
                TreeShape s;
                s.subtrees.push_back(first);
                s.subtrees.insert(s.subtrees.end(), rest.subtrees.begin(),
                                  rest.subtrees.end());
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

// Writes `perm` onto the shape's nodes in preorder.
inline std::vector<RootedTreeRr> label_shape(const TreeShape &shape,
                                             const std::vector<Label> &perm,
                                             std::size_t &next)
{
    std::vector<RootedTreeRr> trees;
    trees.reserve(shape.subtrees.size());
    for (const TreeShape &sub : shape.subtrees) {
        RootedTreeRr t;
        t.label = perm[next++];
        t.children = label_shape(sub, perm, next);
        trees.push_back(std::move(t));
    }
    return trees;
}

// Nonempty subsets of `pool`, ascending bitmask order.
template <typename F>
void for_each_nonempty_subset(const std::vector<Label> &pool, F &&fn)
{
    const std::size_t m = pool.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<Label> in, out;
        for (std::size_t i = 0; i < m; ++i)
            (mask >> i & 1u ? in : out).push_back(pool[i]);
        fn(in, out);
    }
}

// The recursive walkers below descend along the structure, so their
// callbacks are type-erased; templated callbacks would nest a fresh closure
// type per structural level and the instantiation would never terminate.
using TreeSink = std::function<void(const RootedTreeRr &)>;
using PlaneTreeSink = std::function<void(const PlaneTreeR &)>;
using TreeSeqSink = std::function<void(const std::vector<RootedTreeRr> &)>;
using NecklaceSink = std::function<void(const TreeNecklace &)>;
using JewellerySink = std::function<void(const JewelleryBox &)>;
using WindmillSink = std::function<void(const Windmill &)>;
using WindmillSeqSink = std::function<void(const std::vector<Windmill> &)>;
using NestedSink = std::function<void(const NestedDiscs &)>;
using NestedSetSink = std::function<void(const std::vector<NestedDiscs> &)>;

inline void for_each_plane_tree(int n, const PlaneTreeSink &fn)
{
    for (const TreeShape &shape : forest_shapes(n)) {
        std::vector<Label> p = iota_labels(n);
        do {
            std::size_t next = 0;
            fn(PlaneTreeR(label_shape(shape, p, next)));
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

inline void for_each_standard_tree(int n, const TreeSink &fn)
{
    if (n < 1)
        return;
    for_each_plane_tree(n - 1, [&](const PlaneTreeR &t) {
        for (Label r = 1; r <= n; ++r)
            fn(relabel_root_insert(t, r));
    });
}

// Standard rooted trees of weight |support| relabelled onto the support.
inline void for_each_tree_on(const std::vector<Label> &support, const TreeSink &fn)
{
    std::map<Label, Label> up;
    for (std::size_t i = 0; i < support.size(); ++i)
        up[static_cast<Label>(i) + 1] = support[i];
    for_each_standard_tree(static_cast<int>(support.size()), [&](const RootedTreeRr &t) {
        fn(atom_relabel(t, up));
    });
}

// Sequences of rooted trees over an arbitrary pool of labels.
inline void for_each_tree_sequence_on(const std::vector<Label> &pool,
                                      std::vector<RootedTreeRr> &acc,
                                      const TreeSeqSink &fn)
{
    if (pool.empty()) {
        fn(acc);
        return;
    }
    for_each_nonempty_subset(pool, [&](const std::vector<Label> &in,
                                       const std::vector<Label> &out) {
        for_each_tree_on(in, [&](const RootedTreeRr &t) {
            acc.push_back(t);
            for_each_tree_sequence_on(out, acc, fn);
            acc.pop_back();
        });
    });
}

// Necklaces of rooted trees over a nonempty pool: the atom holding the pool
// minimum is pinned first, the rest is a plain sequence.
inline void for_each_tree_necklace_on(const std::vector<Label> &pool,
                                      const NecklaceSink &fn)
{
    for_each_subset_with_min(pool, [&](const std::vector<Label> &in,
                                       const std::vector<Label> &out) {
        for_each_tree_on(in, [&](const RootedTreeRr &first) {
            std::vector<RootedTreeRr> acc{first};
            for_each_tree_sequence_on(out, acc, [&](const std::vector<RootedTreeRr> &atoms) {
                fn(TreeNecklace(atoms));
            });
        });
    });
}

inline void for_each_jewellery_on(const std::vector<Label> &pool,
                                  std::vector<TreeNecklace> &acc,
                                  const JewellerySink &fn)
{
    if (pool.empty()) {
        fn(JewelleryBox(acc));
        return;
    }
    for_each_subset_with_min(pool, [&](const std::vector<Label> &in,
                                       const std::vector<Label> &out) {
        for_each_tree_necklace_on(in, [&](const TreeNecklace &nk) {
            acc.push_back(nk);
            for_each_jewellery_on(out, acc, fn);
            acc.pop_back();
        });
    });
}

inline void for_each_windmill_on(const std::vector<Label> &pool, const WindmillSink &fn);

inline void for_each_windmill_sequence_on(const std::vector<Label> &pool,
                                          std::vector<Windmill> &acc,
                                          const WindmillSeqSink &fn)
{
    if (pool.empty()) {
        fn(acc);
        return;
    }
    for_each_nonempty_subset(pool, [&](const std::vector<Label> &in,
                                       const std::vector<Label> &out) {
        for_each_windmill_on(in, [&](const Windmill &w) {
            acc.push_back(w);
            for_each_windmill_sequence_on(out, acc, fn);
            acc.pop_back();
        });
    });
}

inline void for_each_windmill_on(const std::vector<Label> &pool, const WindmillSink &fn)
{
    for (std::size_t ri = 0; ri < pool.size(); ++ri) {
        const Label root = pool[ri];
        std::vector<Label> rest;
        for (Label l : pool)
            if (l != root)
                rest.push_back(l);
        if (rest.empty()) {
            fn(Windmill(root));
            continue;
        }
        // children form a necklace: the child holding min(rest) first
        for_each_subset_with_min(rest, [&](const std::vector<Label> &in,
                                           const std::vector<Label> &out) {
            for_each_windmill_on(in, [&](const Windmill &first) {
                std::vector<Windmill> acc{first};
                for_each_windmill_sequence_on(out, acc, [&](const std::vector<Windmill> &kids) {
                    fn(Windmill(root, kids));
                });
            });
        });
    }
}

inline void for_each_nested_on(const std::vector<Label> &pool, const NestedSink &fn);

inline void for_each_nested_set_on(const std::vector<Label> &pool,
                                   std::vector<NestedDiscs> &acc,
                                   const NestedSetSink &fn)
{
    if (pool.empty()) {
        fn(acc);
        return;
    }
    for_each_subset_with_min(pool, [&](const std::vector<Label> &in,
                                       const std::vector<Label> &out) {
        for_each_nested_on(in, [&](const NestedDiscs &d) {
            acc.push_back(d);
            for_each_nested_set_on(out, acc, fn);
            acc.pop_back();
        });
    });
}

inline void for_each_nested_on(const std::vector<Label> &pool, const NestedSink &fn)
{
    for (std::size_t ri = 0; ri < pool.size(); ++ri) {
        const Label root = pool[ri];
        std::vector<Label> rest;
        for (Label l : pool)
            if (l != root)
                rest.push_back(l);
        std::vector<NestedDiscs> acc;
        for_each_nested_set_on(rest, acc, [&](const std::vector<NestedDiscs> &kids) {
            fn(NestedDiscs(root, kids));
        });
    }
}

} // namespace detail

template <typename F> void for_each_R(int n, F &&fn)
{
    detail::for_each_plane_tree(n, std::forward<F>(fn));
}

template <typename F> void for_each_Rr(int n, F &&fn)
{
    detail::for_each_standard_tree(n, std::forward<F>(fn));
}

template <typename F> void for_each_forest(int n, F &&fn)
{
    std::vector<RootedTreeRr> acc;
    detail::for_each_tree_sequence_on(detail::iota_labels(n), acc,
                                      [&](const std::vector<RootedTreeRr> &atoms) {
                                          fn(Forest(atoms));
                                      });
}

template <typename F> void for_each_necklace(int n, F &&fn)
{
    if (n < 1)
        return;
    detail::for_each_tree_necklace_on(detail::iota_labels(n), std::forward<F>(fn));
}

template <typename F> void for_each_jewellery(int n, F &&fn)
{
    std::vector<TreeNecklace> acc;
    detail::for_each_jewellery_on(detail::iota_labels(n), acc, std::forward<F>(fn));
}

template <typename F> void for_each_windmill(int n, F &&fn)
{
    if (n < 1)
        return;
    detail::for_each_windmill_on(detail::iota_labels(n), std::forward<F>(fn));
}

template <typename F> void for_each_nested(int n, F &&fn)
{
    if (n < 1)
        return;
    detail::for_each_nested_on(detail::iota_labels(n), std::forward<F>(fn));
}

inline std::vector<PlaneTreeR> enumerate_R(int n)
{
    std::vector<PlaneTreeR> out;
    for_each_R(n, [&](PlaneTreeR t) { out.push_back(std::move(t)); });
    return out;
}

inline std::vector<RootedTreeRr> enumerate_Rr(int n)
{
    std::vector<RootedTreeRr> out;
    for_each_Rr(n, [&](RootedTreeRr t) { out.push_back(std::move(t)); });
    return out;
}

inline std::vector<Forest> enumerate_forest(int n)
{
    std::vector<Forest> out;
    for_each_forest(n, [&](Forest f) { out.push_back(std::move(f)); });
    return out;
}

inline std::vector<TreeNecklace> enumerate_necklace(int n)
{
    std::vector<TreeNecklace> out;
    for_each_necklace(n, [&](TreeNecklace x) { out.push_back(std::move(x)); });
    return out;
}

inline std::vector<JewelleryBox> enumerate_jewellery(int n)
{
    std::vector<JewelleryBox> out;
    for_each_jewellery(n, [&](JewelleryBox x) { out.push_back(std::move(x)); });
    return out;
}

inline std::vector<Windmill> enumerate_windmill(int n)
{
    std::vector<Windmill> out;
    for_each_windmill(n, [&](Windmill x) { out.push_back(std::move(x)); });
    return out;
}

inline std::vector<NestedDiscs> enumerate_nested(int n)
{
    std::vector<NestedDiscs> out;
    for_each_nested(n, [&](NestedDiscs x) { out.push_back(std::move(x)); });
    return out;
}

} // namespace combclass
