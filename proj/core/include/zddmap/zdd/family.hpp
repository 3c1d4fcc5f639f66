// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zddmap/zdd/engine.hpp"

#include <stdexcept>

namespace zddmap::zdd {

/// A family of sets: a root handle plus the engine that owns it.
/// Copyable value; equality is handle equality, which by canonicity is
/// semantic equality. Binary operations reject operands from different
/// engines.
class Family {
public:
  Family() = default;
  Family(Engine& engine, NodeRef root) : engine_(&engine), root_(root) {}

  Engine& engine() const { return *engine_; }
  NodeRef root() const { return root_; }
  bool valid() const { return engine_ != nullptr; }
  bool empty() const { return root_ == kBot; }

  static Family empty_family(Engine& e) { return {e, kBot}; }
  static Family unit_family(Engine& e) { return {e, kTop}; }
  static Family elementary(Engine& e, std::uint32_t x) { return {e, e.elementary(x)}; }
  static Family universal(Engine& e) { return {e, e.universal()}; }

  Family operator|(const Family& g) const { return apply(g, &Engine::union_); }
  Family operator&(const Family& g) const { return apply(g, &Engine::intersection); }
  Family operator-(const Family& g) const { return apply(g, &Engine::difference); }
  Family join(const Family& g) const { return apply(g, &Engine::join); }
  Family meet(const Family& g) const { return apply(g, &Engine::meet); }
  Family nonsupersets(const Family& g) const { return apply(g, &Engine::nonsupersets); }

  Family choose(std::uint32_t k) const { return {*engine_, engine_->choose(root_, k)}; }

  Family rename_by_pairs(
      std::span<const std::pair<std::uint32_t, std::uint32_t>> swaps) const {
    return {*engine_, engine_->rename_by_pairs(root_, swaps)};
  }

  const BigCount& count_sets() const { return engine_->count_sets(root_); }
  std::size_t node_count() const { return engine_->node_count(root_); }
  std::vector<std::vector<std::uint32_t>> sets() const { return engine_->sets(root_); }
  std::vector<std::uint32_t> support() const { return engine_->support(root_); }

  bool operator==(const Family& g) const {
    return engine_ == g.engine_ && root_ == g.root_;
  }

private:
  Family apply(const Family& g, NodeRef (Engine::*op)(NodeRef, NodeRef)) const {
    if (engine_ != g.engine_) {
      throw std::invalid_argument("family operands belong to different engines");
    }
    return {*engine_, (engine_->*op)(root_, g.root_)};
  }

  Engine* engine_ = nullptr;
  NodeRef root_ = kBot;
};

} // namespace zddmap::zdd
