// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zddmap/numbers.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace zddmap::zdd {

/// Handle into an engine's node arena. Handles are only meaningful
/// together with the engine that produced them.
using NodeRef = std::uint32_t;

/// Terminal for the empty family {}.
inline constexpr NodeRef kBot = 0;
/// Terminal for the unit family {{}}.
inline constexpr NodeRef kTop = 1;

/// Variable slot reported for the two terminals; compares above every
/// real variable so top-variable recursions need no special cases.
inline constexpr std::uint32_t kTerminalVar = 0xffffffffu;

/// Store of canonical reduced ZDD nodes over a fixed variable universe
/// 1..num_vars(), with hash-consing and operation memoization.
///
/// Canonical form means two handles are equal exactly when they denote
/// the same family of sets. Nodes are never garbage collected; the
/// operation cache lives as long as the engine.
///
/// All operations on one engine must be externally serialized. Distinct
/// engines are fully independent.
class Engine {
public:
  explicit Engine(std::uint32_t num_vars);

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;
  Engine(Engine&&) = delete;
  Engine& operator=(Engine&&) = delete;

  std::uint32_t num_vars() const { return num_vars_; }

  static bool is_terminal(NodeRef f) { return f <= kTop; }

  /// Variable of a node; kTerminalVar for the two terminals.
  std::uint32_t var(NodeRef f) const;
  NodeRef hi(NodeRef f) const;
  NodeRef lo(NodeRef f) const;

  /// Canonical node for (var, hi, lo). Returns lo when hi is the empty
  /// family (zero-suppression). Children must respect the variable
  /// order; violations throw std::invalid_argument.
  NodeRef make_node(std::uint32_t var, NodeRef hi, NodeRef lo);

  /// The elementary family {{x}}.
  NodeRef elementary(std::uint32_t x);

  /// The family of all 2^num_vars() subsets of the universe.
  NodeRef universal();

  NodeRef union_(NodeRef f, NodeRef g);
  NodeRef intersection(NodeRef f, NodeRef g);
  NodeRef difference(NodeRef f, NodeRef g);

  /// {a ∪ b | a in f, b in g}
  NodeRef join(NodeRef f, NodeRef g);
  /// {a ∩ b | a in f, b in g}
  NodeRef meet(NodeRef f, NodeRef g);
  /// Members of f that contain no member of g as a subset.
  NodeRef nonsupersets(NodeRef f, NodeRef g);

  /// All k-element unions of the singletons of f. f must be a union of
  /// elementary families; anything else throws std::invalid_argument.
  NodeRef choose(NodeRef f, std::uint32_t k);

  /// Exchanges x and y in every member set, for each pair (x, y).
  /// Pairs must be pairwise disjoint.
  NodeRef rename_by_pairs(NodeRef f,
                          std::span<const std::pair<std::uint32_t, std::uint32_t>> swaps);

  /// Number of sets in the family, exact.
  const BigCount& count_sets(NodeRef f) const;

  /// Number of distinct reachable nodes, terminals included.
  std::size_t node_count(NodeRef f) const;

  /// Calls fn once per member set, variables ascending within a set.
  /// Sets are visited in a fixed depth-first order (HI before LO), so
  /// same-size sets appear in lexicographic variable order.
  void for_each_set(NodeRef f,
                    const std::function<void(const std::vector<std::uint32_t>&)>& fn) const;

  /// Materialized for_each_set.
  std::vector<std::vector<std::uint32_t>> sets(NodeRef f) const;

  /// Variables occurring in at least one member set, ascending.
  std::vector<std::uint32_t> support(NodeRef f) const;

  /// Graphviz dump: solid HI edges, dashed LO edges, boxed terminals.
  void write_dot(std::ostream& os, NodeRef f,
                 const std::function<std::string(std::uint32_t)>& var_name = {}) const;

  /// Total nodes in the arena, terminals included.
  std::size_t arena_size() const { return nodes_.size(); }

  /// Scans the arena for zero-suppression or uniqueness violations and
  /// throws std::logic_error on the first one found.
  void validate() const;

private:
  struct Node {
    std::uint32_t var;
    NodeRef hi;
    NodeRef lo;
  };

  struct NodeKey {
    std::uint32_t var;
    NodeRef hi;
    NodeRef lo;
    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const;
  };

  enum class Op : std::uint8_t {
    Union,
    Intersection,
    Difference,
    Join,
    Meet,
    Nonsupersets,
    Choose,
  };

  struct CacheKey {
    Op op;
    NodeRef a;
    NodeRef b;
    std::uint32_t arg;
    bool operator==(const CacheKey&) const = default;
  };
  struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const;
  };

  NodeRef union_rec(NodeRef f, NodeRef g);
  NodeRef intersection_rec(NodeRef f, NodeRef g);
  NodeRef difference_rec(NodeRef f, NodeRef g);
  NodeRef join_rec(NodeRef f, NodeRef g);
  NodeRef meet_rec(NodeRef f, NodeRef g);
  NodeRef nonsupersets_rec(NodeRef f, NodeRef g);
  NodeRef choose_rec(NodeRef f, std::uint32_t k);

  bool is_singleton_union(NodeRef f) const;
  void check_ref(NodeRef f) const;

  std::uint32_t num_vars_;
  std::vector<Node> nodes_;
  std::unordered_map<NodeKey, NodeRef, NodeKeyHash> unique_;
  std::unordered_map<CacheKey, NodeRef, CacheKeyHash> cache_;
  mutable std::unordered_map<NodeRef, BigCount> count_cache_;
};

} // namespace zddmap::zdd
