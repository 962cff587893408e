#pragma once

#include "combclass/egf.hpp"
#include "combclass/lyndon.hpp"
#include "combclass/partitions.hpp"
#include "combclass/seqcyc.hpp"
#include "combclass/trees.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace combclass {

using Json = nlohmann::json;

// Count sequences travel as arrays of decimal strings so that no consumer
// ever parses them through a float.
inline Json json_of(const CountSeq &s)
{
    Json arr = Json::array();
    for (const Bigint &c : s.counts())
        arr.push_back(to_decimal(c));
    return arr;
}

inline CountSeq parse_count_seq(const Json &j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("count sequence: expected nonempty array");
    std::vector<Bigint> counts;
    counts.reserve(j.size());
    for (const Json &e : j)
        counts.push_back(bigint_from_decimal(e.get<std::string>()));
    return CountSeq(std::move(counts));
}

inline Json json_of(const Block &b) { return Json(b.labels()); }

inline Block parse_block(const Json &j)
{
    if (!j.is_array())
        throw std::invalid_argument("block: expected array of labels");
    return Block(j.get<std::vector<Label>>());
}

inline Json json_of(const OrderedPartition &p)
{
    Json arr = Json::array();
    for (const Block &b : p.blocks())
        arr.push_back(json_of(b));
    return arr;
}

inline OrderedPartition parse_ordered_partition(const Json &j)
{
    if (!j.is_array())
        throw std::invalid_argument("ordered partition: expected array");
    std::vector<Block> blocks;
    for (const Json &e : j)
        blocks.push_back(parse_block(e));
    return OrderedPartition(std::move(blocks));
}

inline Json json_of(const SetPartition &p)
{
    Json arr = Json::array();
    for (const Block &b : p)
        arr.push_back(json_of(b));
    return arr;
}

inline Json json_of(const CyclicPartition &c)
{
    Json blocks = Json::array();
    for (const Block &b : c.blocks())
        blocks.push_back(json_of(b));
    return Json{{"cyc", blocks}};
}

inline CyclicPartition parse_cyclic_partition(const Json &j)
{
    if (!j.is_object() || !j.contains("cyc"))
        throw std::invalid_argument("cyclic partition: expected {\"cyc\": [...]}");
    std::vector<Block> blocks;
    for (const Json &e : j.at("cyc"))
        blocks.push_back(parse_block(e));
    return CyclicPartition(std::move(blocks));
}

inline Json json_of(const SetOfCycles &s)
{
    Json arr = Json::array();
    for (const CyclicPartition &c : s.cycles())
        arr.push_back(json_of(c));
    return arr;
}

inline SetOfCycles parse_set_of_cycles(const Json &j)
{
    if (!j.is_array())
        throw std::invalid_argument("set of cycles: expected array");
    std::vector<CyclicPartition> cycles;
    for (const Json &e : j)
        cycles.push_back(parse_cyclic_partition(e));
    return SetOfCycles(std::move(cycles));
}

// --- trees -----------------------------------------------------------------

inline Json json_of(const RootedTreeRr &t)
{
    Json kids = Json::array();
    for (const RootedTreeRr &c : t.children)
        kids.push_back(json_of(c));
    return Json{{"label", t.label}, {"children", kids}};
}

inline RootedTreeRr parse_tree(const Json &j)
{
    if (!j.is_object() || !j.contains("label") || j.at("label").is_null())
        throw std::invalid_argument("tree: expected {\"label\": int, \"children\": [...]}");
    RootedTreeRr t;
    t.label = j.at("label").get<Label>();
    if (j.contains("children"))
        for (const Json &e : j.at("children"))
            t.children.push_back(parse_tree(e));
    return t;
}

inline Json json_of(const PlaneTreeR &t)
{
    Json kids = Json::array();
    for (const RootedTreeRr &c : t.children())
        kids.push_back(json_of(c));
    return Json{{"label", nullptr}, {"children", kids}};
}

inline PlaneTreeR parse_plane_tree(const Json &j)
{
    if (!j.is_object() || !j.contains("label") || !j.at("label").is_null())
        throw std::invalid_argument("plane tree: root label must be null");
    std::vector<RootedTreeRr> kids;
    if (j.contains("children"))
        for (const Json &e : j.at("children"))
            kids.push_back(parse_tree(e));
    return PlaneTreeR(std::move(kids));
}

inline Json json_of(const Forest &f)
{
    Json arr = Json::array();
    for (const RootedTreeRr &t : f.trees())
        arr.push_back(json_of(t));
    return arr;
}

inline Forest parse_forest(const Json &j)
{
    if (!j.is_array())
        throw std::invalid_argument("forest: expected array of trees");
    std::vector<RootedTreeRr> trees;
    for (const Json &e : j)
        trees.push_back(parse_tree(e));
    return Forest(std::move(trees));
}

inline Json json_of(const TreeNecklace &nk)
{
    Json atoms = Json::array();
    for (const RootedTreeRr &t : nk.atoms())
        atoms.push_back(json_of(t));
    return Json{{"cyc", atoms}};
}

inline TreeNecklace parse_tree_necklace(const Json &j)
{
    if (!j.is_object() || !j.contains("cyc"))
        throw std::invalid_argument("necklace: expected {\"cyc\": [...]}");
    std::vector<RootedTreeRr> atoms;
    for (const Json &e : j.at("cyc"))
        atoms.push_back(parse_tree(e));
    return TreeNecklace(std::move(atoms));
}

inline Json json_of(const JewelleryBox &jb)
{
    Json arr = Json::array();
    for (const TreeNecklace &nk : jb.necklaces())
        arr.push_back(json_of(nk));
    return arr;
}

inline JewelleryBox parse_jewellery(const Json &j)
{
    if (!j.is_array())
        throw std::invalid_argument("jewellery: expected array of necklaces");
    std::vector<TreeNecklace> necklaces;
    for (const Json &e : j)
        necklaces.push_back(parse_tree_necklace(e));
    return JewelleryBox(std::move(necklaces));
}

inline Json json_of(const Windmill &w)
{
    Json kids = Json::array();
    for (const Windmill &c : w.children())
        kids.push_back(json_of(c));
    return Json{{"label", w.label()}, {"children", kids}, {"cyclic", true}};
}

inline Windmill parse_windmill(const Json &j)
{
    if (!j.is_object() || !j.contains("label"))
        throw std::invalid_argument("windmill: expected {\"label\": int, ...}");
    std::vector<Windmill> kids;
    if (j.contains("children"))
        for (const Json &e : j.at("children"))
            kids.push_back(parse_windmill(e));
    return Windmill(j.at("label").get<Label>(), std::move(kids));
}

inline Json json_of(const NestedDiscs &d)
{
    Json kids = Json::array();
    for (const NestedDiscs &c : d.children())
        kids.push_back(json_of(c));
    return Json{{"label", d.label()}, {"children", kids}};
}

inline NestedDiscs parse_nested(const Json &j)
{
    if (!j.is_object() || !j.contains("label"))
        throw std::invalid_argument("nested discs: expected {\"label\": int, ...}");
    std::vector<NestedDiscs> kids;
    if (j.contains("children"))
        for (const Json &e : j.at("children"))
            kids.push_back(parse_nested(e));
    return NestedDiscs(j.at("label").get<Label>(), std::move(kids));
}

// --- generic atoms ----------------------------------------------------------

/// An atom with an arbitrary JSON payload: the sequence/cycle isomorphisms
/// only look at the label set, the payload travels untouched.
struct GenericAtom {
    Json payload;
    std::vector<Label> labels;

    bool operator==(const GenericAtom &) const = default;
};

inline std::vector<Label> atom_labels(const GenericAtom &a) { return a.labels; }

inline GenericAtom atom_relabel(const GenericAtom &a, const std::map<Label, Label> &m)
{
    GenericAtom out{a.payload, {}};
    out.labels.reserve(a.labels.size());
    for (Label l : a.labels)
        out.labels.push_back(m.at(l));
    std::sort(out.labels.begin(), out.labels.end());
    return out;
}

inline Json json_of(const GenericAtom &a)
{
    return Json{{"atom", a.payload}, {"labels", a.labels}};
}

inline GenericAtom parse_generic_atom(const Json &j)
{
    if (!j.is_object() || !j.contains("labels"))
        throw std::invalid_argument("atom: expected {\"atom\": ..., \"labels\": [...]}");
    GenericAtom a;
    a.payload = j.contains("atom") ? j.at("atom") : Json(nullptr);
    a.labels = j.at("labels").get<std::vector<Label>>();
    std::sort(a.labels.begin(), a.labels.end());
    return a;
}

inline Json json_of(const AtomSequence<GenericAtom> &s)
{
    Json arr = Json::array();
    for (const GenericAtom &a : s.atoms())
        arr.push_back(json_of(a));
    return arr;
}

inline AtomSequence<GenericAtom> parse_generic_sequence(const Json &j)
{
    if (!j.is_array())
        throw std::invalid_argument("sequence: expected array of atoms");
    std::vector<GenericAtom> atoms;
    for (const Json &e : j)
        atoms.push_back(parse_generic_atom(e));
    return AtomSequence<GenericAtom>(std::move(atoms));
}

inline Json json_of(const AtomNecklace<GenericAtom> &nk)
{
    Json atoms = Json::array();
    for (const GenericAtom &a : nk.atoms())
        atoms.push_back(json_of(a));
    return Json{{"cyc", atoms}};
}

inline Json json_of(const AtomJewellery<GenericAtom> &jb)
{
    Json arr = Json::array();
    for (const AtomNecklace<GenericAtom> &nk : jb.necklaces())
        arr.push_back(json_of(nk));
    return arr;
}

inline AtomJewellery<GenericAtom> parse_generic_jewellery(const Json &j)
{
    if (!j.is_array())
        throw std::invalid_argument("jewellery: expected array of necklaces");
    std::vector<AtomNecklace<GenericAtom>> necklaces;
    for (const Json &e : j) {
        if (!e.is_object() || !e.contains("cyc"))
            throw std::invalid_argument("necklace: expected {\"cyc\": [...]}");
        std::vector<GenericAtom> atoms;
        for (const Json &a : e.at("cyc"))
            atoms.push_back(parse_generic_atom(a));
        necklaces.emplace_back(std::move(atoms));
    }
    return AtomJewellery<GenericAtom>(std::move(necklaces));
}

// --- words -------------------------------------------------------------------

inline Json json_of(const Word<Label> &w) { return Json(w); }

inline Json json_of(const std::vector<Word<Label>> &factors)
{
    Json arr = Json::array();
    for (const auto &f : factors)
        arr.push_back(Json(f));
    return arr;
}

} // namespace combclass
