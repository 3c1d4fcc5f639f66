// SPDX-License-Identifier: Apache-2.0

#include "zddmap/zdd/engine.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace zddmap::zdd {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

} // namespace

std::size_t Engine::NodeKeyHash::operator()(const NodeKey& k) const {
  std::size_t h = std::hash<std::uint32_t>{}(k.var);
  h = hash_combine(h, k.hi);
  return hash_combine(h, k.lo);
}

std::size_t Engine::CacheKeyHash::operator()(const CacheKey& k) const {
  std::size_t h = std::hash<std::uint32_t>{}(static_cast<std::uint32_t>(k.op));
  h = hash_combine(h, k.a);
  h = hash_combine(h, k.b);
  return hash_combine(h, k.arg);
}

Engine::Engine(std::uint32_t num_vars) : num_vars_(num_vars) {
  if (num_vars >= kTerminalVar) {
    throw std::invalid_argument("variable universe too large");
  }
  nodes_.push_back({kTerminalVar, kBot, kBot}); // ⊥ at index 0
  nodes_.push_back({kTerminalVar, kTop, kTop}); // ⊤ at index 1
}

std::uint32_t Engine::var(NodeRef f) const {
  check_ref(f);
  return nodes_[f].var;
}

NodeRef Engine::hi(NodeRef f) const {
  check_ref(f);
  if (is_terminal(f)) {
    throw std::invalid_argument("terminal node has no HI child");
  }
  return nodes_[f].hi;
}

NodeRef Engine::lo(NodeRef f) const {
  check_ref(f);
  if (is_terminal(f)) {
    throw std::invalid_argument("terminal node has no LO child");
  }
  return nodes_[f].lo;
}

void Engine::check_ref(NodeRef f) const {
  if (f >= nodes_.size()) {
    throw std::invalid_argument("node handle out of range");
  }
}

NodeRef Engine::make_node(std::uint32_t v, NodeRef h, NodeRef l) {
  if (v == 0 || v > num_vars_) {
    throw std::invalid_argument("variable " + std::to_string(v) +
                                " outside universe 1.." + std::to_string(num_vars_));
  }
  check_ref(h);
  check_ref(l);
  if (nodes_[h].var <= v || nodes_[l].var <= v) {
    throw std::invalid_argument("child variable order violation at variable " +
                                std::to_string(v));
  }
  if (h == kBot) {
    return l; // zero-suppression
  }
  NodeKey key{v, h, l};
  auto it = unique_.find(key);
  if (it != unique_.end()) {
    return it->second;
  }
  NodeRef ref = static_cast<NodeRef>(nodes_.size());
  nodes_.push_back({v, h, l});
  unique_.emplace(key, ref);
  return ref;
}

NodeRef Engine::elementary(std::uint32_t x) {
  return make_node(x, kTop, kBot);
}

NodeRef Engine::universal() {
  NodeRef r = kTop;
  for (std::uint32_t v = num_vars_; v >= 1; --v) {
    r = make_node(v, r, r);
  }
  return r;
}

NodeRef Engine::union_(NodeRef f, NodeRef g) {
  check_ref(f);
  check_ref(g);
  return union_rec(f, g);
}

NodeRef Engine::union_rec(NodeRef f, NodeRef g) {
  if (f == g) return f;
  if (f == kBot) return g;
  if (g == kBot) return f;
  if (f > g) std::swap(f, g);
  CacheKey key{Op::Union, f, g, 0};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Node nf = nodes_[f];
  const Node ng = nodes_[g];
  NodeRef r;
  if (nf.var < ng.var) {
    r = make_node(nf.var, nf.hi, union_rec(nf.lo, g));
  } else if (nf.var > ng.var) {
    r = make_node(ng.var, ng.hi, union_rec(f, ng.lo));
  } else {
    r = make_node(nf.var, union_rec(nf.hi, ng.hi), union_rec(nf.lo, ng.lo));
  }
  cache_.emplace(key, r);
  return r;
}

NodeRef Engine::intersection(NodeRef f, NodeRef g) {
  check_ref(f);
  check_ref(g);
  return intersection_rec(f, g);
}

NodeRef Engine::intersection_rec(NodeRef f, NodeRef g) {
  if (f == g) return f;
  if (f == kBot || g == kBot) return kBot;
  if (f > g) std::swap(f, g);
  CacheKey key{Op::Intersection, f, g, 0};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Node nf = nodes_[f];
  const Node ng = nodes_[g];
  NodeRef r;
  if (nf.var < ng.var) {
    r = intersection_rec(nf.lo, g);
  } else if (nf.var > ng.var) {
    r = intersection_rec(f, ng.lo);
  } else {
    r = make_node(nf.var, intersection_rec(nf.hi, ng.hi),
                  intersection_rec(nf.lo, ng.lo));
  }
  cache_.emplace(key, r);
  return r;
}

NodeRef Engine::difference(NodeRef f, NodeRef g) {
  check_ref(f);
  check_ref(g);
  return difference_rec(f, g);
}

NodeRef Engine::difference_rec(NodeRef f, NodeRef g) {
  if (f == kBot || f == g) return kBot;
  if (g == kBot) return f;
  CacheKey key{Op::Difference, f, g, 0};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Node nf = nodes_[f];
  const Node ng = nodes_[g];
  NodeRef r;
  if (nf.var < ng.var) {
    r = make_node(nf.var, nf.hi, difference_rec(nf.lo, g));
  } else if (nf.var > ng.var) {
    r = difference_rec(f, ng.lo);
  } else {
    r = make_node(nf.var, difference_rec(nf.hi, ng.hi),
                  difference_rec(nf.lo, ng.lo));
  }
  cache_.emplace(key, r);
  return r;
}

NodeRef Engine::join(NodeRef f, NodeRef g) {
  check_ref(f);
  check_ref(g);
  return join_rec(f, g);
}

NodeRef Engine::join_rec(NodeRef f, NodeRef g) {
  if (f == kBot || g == kBot) return kBot;
  if (f == kTop) return g;
  if (g == kTop) return f;
  if (f > g) std::swap(f, g);
  CacheKey key{Op::Join, f, g, 0};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Node nf = nodes_[f];
  const Node ng = nodes_[g];
  NodeRef r;
  if (nf.var < ng.var) {
    r = make_node(nf.var, join_rec(nf.hi, g), join_rec(nf.lo, g));
  } else if (nf.var > ng.var) {
    r = make_node(ng.var, join_rec(f, ng.hi), join_rec(f, ng.lo));
  } else {
    // v in a∪b when v is in a, in b, or in both
    NodeRef hh = join_rec(nf.hi, ng.hi);
    NodeRef hl = join_rec(nf.hi, ng.lo);
    NodeRef lh = join_rec(nf.lo, ng.hi);
    r = make_node(nf.var, union_rec(hh, union_rec(hl, lh)),
                  join_rec(nf.lo, ng.lo));
  }
  cache_.emplace(key, r);
  return r;
}

NodeRef Engine::meet(NodeRef f, NodeRef g) {
  check_ref(f);
  check_ref(g);
  return meet_rec(f, g);
}

NodeRef Engine::meet_rec(NodeRef f, NodeRef g) {
  if (f == kBot || g == kBot) return kBot;
  if (f == kTop || g == kTop) return kTop;
  if (f > g) std::swap(f, g);
  CacheKey key{Op::Meet, f, g, 0};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Node nf = nodes_[f];
  const Node ng = nodes_[g];
  NodeRef r;
  if (nf.var < ng.var) {
    r = union_rec(meet_rec(nf.hi, g), meet_rec(nf.lo, g));
  } else if (nf.var > ng.var) {
    r = union_rec(meet_rec(f, ng.hi), meet_rec(f, ng.lo));
  } else {
    // v in a∩b only when v is in both a and b
    NodeRef lo_side = union_rec(meet_rec(nf.lo, ng.lo),
                                union_rec(meet_rec(nf.hi, ng.lo),
                                          meet_rec(nf.lo, ng.hi)));
    r = make_node(nf.var, meet_rec(nf.hi, ng.hi), lo_side);
  }
  cache_.emplace(key, r);
  return r;
}

NodeRef Engine::nonsupersets(NodeRef f, NodeRef g) {
  check_ref(f);
  check_ref(g);
  return nonsupersets_rec(f, g);
}

NodeRef Engine::nonsupersets_rec(NodeRef f, NodeRef g) {
  if (g == kBot) return f;
  if (f == kBot || g == kTop) return kBot;
  if (f == g) return kBot;
  CacheKey key{Op::Nonsupersets, f, g, 0};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Node nf = nodes_[f];
  const Node ng = nodes_[g];
  NodeRef r;
  if (nf.var < ng.var) {
    r = make_node(nf.var, nonsupersets_rec(nf.hi, g), nonsupersets_rec(nf.lo, g));
  } else if (nf.var > ng.var) {
    // no member of f contains g's top variable
    r = nonsupersets_rec(f, ng.lo);
  } else {
    // a set {v}∪s survives if s contains no member of g1 and no member of g0
    NodeRef hi_side = intersection_rec(nonsupersets_rec(nf.hi, ng.hi),
                                       nonsupersets_rec(nf.hi, ng.lo));
    r = make_node(nf.var, hi_side, nonsupersets_rec(nf.lo, ng.lo));
  }
  cache_.emplace(key, r);
  return r;
}

bool Engine::is_singleton_union(NodeRef f) const {
  // A union of elementary families is a LO-chain whose HI edges all hit ⊤.
  NodeRef p = f;
  while (!is_terminal(p)) {
    if (nodes_[p].hi != kTop) return false;
    p = nodes_[p].lo;
  }
  return p == kBot;
}

NodeRef Engine::choose(NodeRef f, std::uint32_t k) {
  check_ref(f);
  if (!is_singleton_union(f)) {
    throw std::invalid_argument("choose requires a union of elementary families");
  }
  return choose_rec(f, k);
}

NodeRef Engine::choose_rec(NodeRef f, std::uint32_t k) {
  if (k == 1) return f;
  if (f == kBot) return k > 0 ? kBot : kTop;
  CacheKey key{Op::Choose, f, kBot, k};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Node nf = nodes_[f];
  NodeRef r = choose_rec(nf.lo, k);
  if (k > 0) {
    NodeRef q = choose_rec(nf.lo, k - 1);
    r = make_node(nf.var, q, r);
  }
  cache_.emplace(key, r);
  return r;
}

NodeRef Engine::rename_by_pairs(
    NodeRef f, std::span<const std::pair<std::uint32_t, std::uint32_t>> swaps) {
  check_ref(f);
  std::vector<std::uint32_t> perm(num_vars_ + 1);
  for (std::uint32_t v = 0; v <= num_vars_; ++v) perm[v] = v;
  std::set<std::uint32_t> touched;
  for (const auto& [x, y] : swaps) {
    if (x == 0 || x > num_vars_ || y == 0 || y > num_vars_) {
      throw std::invalid_argument("rename pair outside the variable universe");
    }
    if (!touched.insert(x).second || (x != y && !touched.insert(y).second)) {
      throw std::invalid_argument("rename pairs overlap");
    }
    perm[x] = y;
    perm[y] = x;
  }

  // Rebuild bottom-up: the image of a node's variable may land anywhere
  // in the order, so reinsert it with a join against the rebuilt HI part.
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef p) -> NodeRef {
    if (is_terminal(p)) return p;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    const Node n = nodes_[p];
    NodeRef h = self(self, n.hi);
    NodeRef l = self(self, n.lo);
    NodeRef r = union_rec(join_rec(elementary(perm[n.var]), h), l);
    memo.emplace(p, r);
    return r;
  };
  return rec(rec, f);
}

const BigCount& Engine::count_sets(NodeRef f) const {
  check_ref(f);
  auto it = count_cache_.find(f);
  if (it != count_cache_.end()) return it->second;
  if (f == kBot) return count_cache_.emplace(kBot, 0).first->second;
  if (f == kTop) return count_cache_.emplace(kTop, 1).first->second;
  BigCount total = count_sets(nodes_[f].hi) + count_sets(nodes_[f].lo);
  return count_cache_.emplace(f, std::move(total)).first->second;
}

std::size_t Engine::node_count(NodeRef f) const {
  check_ref(f);
  std::set<NodeRef> seen;
  std::vector<NodeRef> stack{f};
  while (!stack.empty()) {
    NodeRef p = stack.back();
    stack.pop_back();
    if (!seen.insert(p).second) continue;
    if (!is_terminal(p)) {
      stack.push_back(nodes_[p].hi);
      stack.push_back(nodes_[p].lo);
    }
  }
  return seen.size();
}

void Engine::for_each_set(
    NodeRef f,
    const std::function<void(const std::vector<std::uint32_t>&)>& fn) const {
  check_ref(f);
  std::vector<std::uint32_t> prefix;
  auto rec = [&](auto&& self, NodeRef p) -> void {
    if (p == kBot) return;
    if (p == kTop) {
      fn(prefix);
      return;
    }
    const Node& n = nodes_[p];
    prefix.push_back(n.var);
    self(self, n.hi);
    prefix.pop_back();
    self(self, n.lo);
  };
  rec(rec, f);
}

std::vector<std::vector<std::uint32_t>> Engine::sets(NodeRef f) const {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_set(f, [&](const std::vector<std::uint32_t>& s) { out.push_back(s); });
  return out;
}

std::vector<std::uint32_t> Engine::support(NodeRef f) const {
  check_ref(f);
  // Every nonterminal lies on some path to ⊤ (HI is never ⊥), so each
  // reachable variable occurs in at least one member set.
  std::set<std::uint32_t> vars;
  std::set<NodeRef> seen;
  std::vector<NodeRef> stack{f};
  while (!stack.empty()) {
    NodeRef p = stack.back();
    stack.pop_back();
    if (is_terminal(p) || !seen.insert(p).second) continue;
    vars.insert(nodes_[p].var);
    stack.push_back(nodes_[p].hi);
    stack.push_back(nodes_[p].lo);
  }
  return {vars.begin(), vars.end()};
}

void Engine::write_dot(std::ostream& os, NodeRef f,
                       const std::function<std::string(std::uint32_t)>& var_name) const {
  check_ref(f);
  std::set<NodeRef> seen;
  std::vector<NodeRef> stack{f};
  while (!stack.empty()) {
    NodeRef p = stack.back();
    stack.pop_back();
    if (!seen.insert(p).second || is_terminal(p)) continue;
    stack.push_back(nodes_[p].hi);
    stack.push_back(nodes_[p].lo);
  }
  os << "digraph zdd {\n";
  os << "  rankdir=TB;\n";
  if (seen.count(kBot)) os << "  n0 [shape=box,label=\"⊥\"];\n";
  if (seen.count(kTop)) os << "  n1 [shape=box,label=\"⊤\"];\n";
  for (NodeRef p : seen) {
    if (is_terminal(p)) continue;
    const Node& n = nodes_[p];
    std::string label = var_name ? var_name(n.var) : "x" + std::to_string(n.var);
    os << "  n" << p << " [shape=circle,label=\"" << label << "\"];\n";
    os << "  n" << p << " -> n" << n.hi << ";\n";
    os << "  n" << p << " -> n" << n.lo << " [style=dashed];\n";
  }
  os << "}\n";
}

void Engine::validate() const {
  std::set<std::tuple<std::uint32_t, NodeRef, NodeRef>> seen;
  for (NodeRef p = kTop + 1; p < nodes_.size(); ++p) {
    const Node& n = nodes_[p];
    if (n.hi == kBot) {
      throw std::logic_error("zero-suppression violated at node " + std::to_string(p));
    }
    if (n.var == 0 || n.var > num_vars_) {
      throw std::logic_error("variable out of range at node " + std::to_string(p));
    }
    if (nodes_[n.hi].var <= n.var || nodes_[n.lo].var <= n.var) {
      throw std::logic_error("variable order violated at node " + std::to_string(p));
    }
    if (!seen.emplace(n.var, n.hi, n.lo).second) {
      throw std::logic_error("duplicate node triple at node " + std::to_string(p));
    }
  }
}

} // namespace zddmap::zdd
