#pragma once

#include "combclass/partitions.hpp"

#include <algorithm>
#include <concepts>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace combclass {

/// An atom of a labelled class: anything that can report its label set
/// (sorted ascending, nonempty); relabelling support is required only by
/// standardize(). Customization is by free functions found through ADL:
///   std::vector<Label> atom_labels(const Atom&);
///   Atom atom_relabel(const Atom&, const std::map<Label, Label>&);
template <typename Atom>
concept LabelledAtom = requires(const Atom &a) {
    { atom_labels(a) } -> std::convertible_to<std::vector<Label>>;
};

/// The simplest atom: an opaque payload name plus its label set. Used where
/// only the isomorphism on label sets matters.
struct SimpleAtom {
    std::vector<Label> labels;

    bool operator==(const SimpleAtom &) const = default;
};

inline std::vector<Label> atom_labels(const SimpleAtom &a) { return a.labels; }

inline SimpleAtom atom_relabel(const SimpleAtom &a, const std::map<Label, Label> &m)
{
    SimpleAtom out;
    out.labels.reserve(a.labels.size());
    for (Label l : a.labels)
        out.labels.push_back(m.at(l));
    std::sort(out.labels.begin(), out.labels.end());
    return out;
}

namespace detail {

template <LabelledAtom Atom>
std::vector<Label> atoms_support(const std::vector<Atom> &atoms)
{
    std::vector<Label> all;
    for (const Atom &a : atoms) {
        auto ls = atom_labels(a);
        if (ls.empty())
            throw std::invalid_argument("atom without labels");
        all.insert(all.end(), ls.begin(), ls.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("atoms overlap");
    return all;
}

template <LabelledAtom Atom> Label atom_min(const Atom &a)
{
    return atom_labels(a).front();
}

} // namespace detail

/// A standard labelled sequence: disjoint atoms whose labels cover {1..n}.
template <LabelledAtom Atom> class AtomSequence {
  public:
    explicit AtomSequence(std::vector<Atom> atoms) : atoms_(std::move(atoms))
    {
        detail::require_standard(detail::atoms_support(atoms_));
    }

    const std::vector<Atom> &atoms() const { return atoms_; }
    std::size_t degree() const
    {
        std::size_t n = 0;
        for (const Atom &a : atoms_)
            n += atom_labels(a).size();
        return n;
    }

    bool operator==(const AtomSequence &) const = default;

  private:
    std::vector<Atom> atoms_;
};

/// A necklace of disjoint atoms, stored in canonical rotation (the atom
/// holding the global minimum label first).
template <LabelledAtom Atom> class AtomNecklace {
  public:
    explicit AtomNecklace(std::vector<Atom> atoms) : atoms_(std::move(atoms))
    {
        if (atoms_.empty())
            throw std::invalid_argument("AtomNecklace: empty");
        detail::atoms_support(atoms_);
        std::size_t at = 0;
        for (std::size_t i = 1; i < atoms_.size(); ++i)
            if (detail::atom_min(atoms_[i]) < detail::atom_min(atoms_[at]))
                at = i;
        std::rotate(atoms_.begin(), atoms_.begin() + at, atoms_.end());
    }

    Label min() const { return detail::atom_min(atoms_.front()); }
    const std::vector<Atom> &atoms() const { return atoms_; }

    bool operator==(const AtomNecklace &) const = default;

  private:
    std::vector<Atom> atoms_;
};

/// A set of necklaces with disjoint supports covering {1..n}, sorted by
/// ascending minimum label.
template <LabelledAtom Atom> class AtomJewellery {
  public:
    explicit AtomJewellery(std::vector<AtomNecklace<Atom>> necklaces)
        : necklaces_(std::move(necklaces))
    {
        std::vector<Atom> flat;
        for (const auto &nk : necklaces_)
            flat.insert(flat.end(), nk.atoms().begin(), nk.atoms().end());
        detail::require_standard(detail::atoms_support(flat));
        std::sort(necklaces_.begin(), necklaces_.end(),
                  [](const AtomNecklace<Atom> &a, const AtomNecklace<Atom> &b) {
                      return a.min() < b.min();
                  });
    }

    const std::vector<AtomNecklace<Atom>> &necklaces() const { return necklaces_; }

    bool operator==(const AtomJewellery &) const = default;

  private:
    std::vector<AtomNecklace<Atom>> necklaces_;
};

/// Apply the unique order-preserving bijection from the labels in use onto
/// {1..n}. The atoms keep their relative structure.
template <LabelledAtom Atom>
std::vector<Atom> standardize(const std::vector<Atom> &atoms)
{
    const std::vector<Label> support = detail::atoms_support(atoms);
    std::map<Label, Label> to_standard;
    for (std::size_t i = 0; i < support.size(); ++i)
        to_standard[support[i]] = static_cast<Label>(i) + 1;
    std::vector<Atom> out;
    out.reserve(atoms.size());
    for (const Atom &a : atoms)
        out.push_back(atom_relabel(a, to_standard));
    return out;
}

/// Forget the atoms' structure, keeping only their label sets.
template <LabelledAtom Atom>
SetOfCycles jtoset(const AtomJewellery<Atom> &j)
{
    std::vector<CyclicPartition> cycles;
    for (const AtomNecklace<Atom> &nk : j.necklaces()) {
        std::vector<Block> blocks;
        blocks.reserve(nk.atoms().size());
        for (const Atom &a : nk.atoms())
            blocks.emplace_back(atom_labels(a));
        cycles.emplace_back(std::move(blocks));
    }
    return SetOfCycles(std::move(cycles));
}

/// Unroll a jewellery into the unique sequence whose induced ordered
/// partition equals stol(jtoset(j)): each necklace is read from its
/// canonical rotation and the necklaces are concatenated in strictly
/// decreasing order of their minima.
template <LabelledAtom Atom>
AtomSequence<Atom> jtoseq(const AtomJewellery<Atom> &j)
{
    std::vector<Atom> atoms;
    const auto &necklaces = j.necklaces();
    for (auto it = necklaces.rbegin(); it != necklaces.rend(); ++it)
        atoms.insert(atoms.end(), it->atoms().begin(), it->atoms().end());
    return AtomSequence<Atom>(std::move(atoms));
}

/// The induced ordered partition of a sequence (its atoms' label sets).
template <LabelledAtom Atom>
OrderedPartition induced_partition(const AtomSequence<Atom> &s)
{
    std::vector<Block> blocks;
    blocks.reserve(s.atoms().size());
    for (const Atom &a : s.atoms())
        blocks.emplace_back(atom_labels(a));
    return OrderedPartition(std::move(blocks));
}

/// Fold a sequence back into a jewellery: cut at the factor indices of the
/// induced ordered partition and close each segment into a necklace.
/// Inverse of jtoseq.
template <LabelledAtom Atom>
AtomJewellery<Atom> seqtoj(const AtomSequence<Atom> &s)
{
    const std::vector<int> cuts = factor_indices(induced_partition(s));
    std::vector<AtomNecklace<Atom>> necklaces;
    const auto &atoms = s.atoms();
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        std::vector<Atom> seg(atoms.begin() + (cuts[j] - 1),
                              atoms.begin() + (cuts[j + 1] - 1));
        necklaces.emplace_back(std::move(seg));
    }
    return AtomJewellery<Atom>(std::move(necklaces));
}

} // namespace combclass
