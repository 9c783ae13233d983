#pragma once
// Predicate-as-node scene graphs: entities and predicates are both nodes, and
// each predicate links to exactly one subject entity and one object entity.
// The joint node index space puts entities first, then predicates, so a single
// attention can run over all nodes.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "glat/error.hpp"

namespace glat {

struct Vocabulary {
    std::vector<std::string> entity_classes;
    std::vector<std::string> predicate_classes;

    int num_entities() const { return static_cast<int>(entity_classes.size()); }
    int num_predicates() const { return static_cast<int>(predicate_classes.size()); }

    // Single shared MASK slot at the end of the joint one-hot space.
    int mask_token() const { return num_entities() + num_predicates(); }
    int one_hot_dim() const { return num_entities() + num_predicates() + 1; }

    int entity_id(const std::string& name) const {
        for (int i = 0; i < num_entities(); ++i)
            if (entity_classes[i] == name) return i;
        return -1;
    }
    int predicate_id(const std::string& name) const {
        for (int i = 0; i < num_predicates(); ++i)
            if (predicate_classes[i] == name) return i;
        return -1;
    }

    // Joint class ids: entities come first, predicates after.
    int joint_entity(int class_id) const { return class_id; }
    int joint_predicate(int class_id) const { return num_entities() + class_id; }

    void validate() const {
        auto check_unique = [](const std::vector<std::string>& names, const char* kind) {
            std::vector<std::string> sorted = names;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw ConfigError(std::string("duplicate ") + kind + " class name");
        };
        check_unique(entity_classes, "entity");
        check_unique(predicate_classes, "predicate");
    }
};

using Box = std::array<double, 4>;

struct EntityNode {
    int class_id = 0;
    std::optional<Box> box;  // normalized, stored opaquely, never interpreted
};

struct PredicateNode {
    int class_id = 0;
    int subject = -1;
    int object = -1;
};

struct SceneGraph {
    std::vector<EntityNode> entities;
    std::vector<PredicateNode> predicates;

    int num_entities() const { return static_cast<int>(entities.size()); }
    int num_predicates() const { return static_cast<int>(predicates.size()); }
    int num_nodes() const { return num_entities() + num_predicates(); }

    bool is_predicate_node(int joint_index) const { return joint_index >= num_entities(); }

    // Joint class id of a node in the shared one-hot space (requires a
    // vocabulary to offset predicate classes).
    int joint_class(int joint_index, const Vocabulary& vocab) const {
        if (is_predicate_node(joint_index))
            return vocab.joint_predicate(predicates[joint_index - num_entities()].class_id);
        return vocab.joint_entity(entities[joint_index].class_id);
    }

    void validate() const {
        for (const auto& p : predicates) {
            if (p.subject < 0 || p.subject >= num_entities() || p.object < 0 ||
                p.object >= num_entities())
                throw StructuralError("predicate links to a nonexistent entity");
            if (p.subject == p.object)
                throw StructuralError("predicate subject and object must differ");
        }
        for (const auto& e : entities) {
            if (e.box) {
                for (double v : *e.box)
                    if (v < 0.0 || v > 1.0)
                        throw StructuralError("entity box component outside [0,1]");
            }
        }
    }

    void validate(const Vocabulary& vocab) const {
        validate();
        for (const auto& e : entities)
            if (e.class_id < 0 || e.class_id >= vocab.num_entities())
                throw StructuralError("entity class id out of range");
        for (const auto& p : predicates)
            if (p.class_id < 0 || p.class_id >= vocab.num_predicates())
                throw StructuralError("predicate class id out of range");
    }

    bool same_structure(const SceneGraph& other) const {
        if (num_entities() != other.num_entities() || num_predicates() != other.num_predicates())
            return false;
        for (int j = 0; j < num_predicates(); ++j)
            if (predicates[j].subject != other.predicates[j].subject ||
                predicates[j].object != other.predicates[j].object)
                return false;
        return true;
    }
};

// Symmetric binary masks over the joint node space: a_s connects each
// predicate with its subject, a_o with its object.
struct AdjacencyMasks {
    int n = 0;
    std::vector<uint8_t> a_s;
    std::vector<uint8_t> a_o;

    uint8_t s_at(int i, int j) const { return a_s[static_cast<size_t>(i) * n + j]; }
    uint8_t o_at(int i, int j) const { return a_o[static_cast<size_t>(i) * n + j]; }
};

inline AdjacencyMasks adjacency_masks(const SceneGraph& g) {
    g.validate();
    AdjacencyMasks m;
    m.n = g.num_nodes();
    m.a_s.assign(static_cast<size_t>(m.n) * m.n, 0);
    m.a_o.assign(static_cast<size_t>(m.n) * m.n, 0);
    const int ne = g.num_entities();
    for (int j = 0; j < g.num_predicates(); ++j) {
        const int p = ne + j;
        const int s = g.predicates[j].subject;
        const int o = g.predicates[j].object;
        m.a_s[static_cast<size_t>(p) * m.n + s] = 1;
        m.a_s[static_cast<size_t>(s) * m.n + p] = 1;
        m.a_o[static_cast<size_t>(p) * m.n + o] = 1;
        m.a_o[static_cast<size_t>(o) * m.n + p] = 1;
    }
    return m;
}

// Triplet as (subject entity index, predicate class id, object entity index).
using IndexTriplet = std::tuple<int, int, int>;

inline SceneGraph from_triplets(const std::vector<IndexTriplet>& triplets,
                                std::vector<EntityNode> entities) {
    SceneGraph g;
    g.entities = std::move(entities);
    g.predicates.reserve(triplets.size());
    for (const auto& [s, p, o] : triplets) {
        if (s < 0 || s >= g.num_entities() || o < 0 || o >= g.num_entities())
            throw StructuralError("triplet references entity index out of range");
        if (s == o) throw StructuralError("triplet subject and object must differ");
        g.predicates.push_back({p, s, o});
    }
    return g;
}

// One (subject class, predicate class, object class) triplet per predicate
// node, predicate order preserved.
inline std::vector<IndexTriplet> to_triplets(const SceneGraph& g) {
    std::vector<IndexTriplet> out;
    out.reserve(g.predicates.size());
    for (const auto& p : g.predicates)
        out.emplace_back(g.entities[p.subject].class_id, p.class_id,
                         g.entities[p.object].class_id);
    return out;
}

// Per-node class logits and the Eq.-style max-softmax confidence. Entity
// scores use |C_e|-wide logits, predicate scores |C_p|-wide.
struct NodeScores {
    std::vector<double> logits;
    double confidence = 0.0;
};

struct ScoredGraph {
    SceneGraph graph;
    std::vector<NodeScores> entity_scores;
    std::vector<NodeScores> predicate_scores;
};

struct PrunedGraph {
    ScoredGraph scored;
    std::vector<int> kept_entities;    // original entity index per new entity
    std::vector<int> kept_predicates;  // original predicate index per new predicate
};

// Keeps the k most confident predicates (ties broken toward the lower node
// index) and exactly the entities they reference, re-indexed with relative
// order preserved.
inline PrunedGraph prune_top_k_scored(const ScoredGraph& sg, int k) {
    const auto& g = sg.graph;
    if (static_cast<int>(sg.predicate_scores.size()) != g.num_predicates())
        throw StructuralError("prune_top_k: every predicate needs a confidence");

    std::vector<int> order(g.num_predicates());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sg.predicate_scores[a].confidence > sg.predicate_scores[b].confidence;
    });
    if (k < 0) k = 0;
    if (static_cast<int>(order.size()) > k) order.resize(k);
    std::sort(order.begin(), order.end());  // relative predicate order preserved

    std::vector<int> entity_map(g.num_entities(), -1);
    PrunedGraph out;
    for (int idx : order) {
        for (int e : {g.predicates[idx].subject, g.predicates[idx].object}) {
            if (entity_map[e] < 0) entity_map[e] = 0;  // mark
        }
    }
    for (int e = 0; e < g.num_entities(); ++e) {
        if (entity_map[e] == 0) {
            entity_map[e] = static_cast<int>(out.kept_entities.size());
            out.kept_entities.push_back(e);
            out.scored.graph.entities.push_back(g.entities[e]);
            if (!sg.entity_scores.empty()) out.scored.entity_scores.push_back(sg.entity_scores[e]);
        }
    }
    for (int idx : order) {
        const auto& p = g.predicates[idx];
        out.kept_predicates.push_back(idx);
        out.scored.graph.predicates.push_back(
            {p.class_id, entity_map[p.subject], entity_map[p.object]});
        out.scored.predicate_scores.push_back(sg.predicate_scores[idx]);
    }
    return out;
}

inline SceneGraph prune_top_k(const ScoredGraph& sg, int k) {
    return prune_top_k_scored(sg, k).scored.graph;
}

}  // namespace glat
