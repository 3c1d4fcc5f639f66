// SPDX-License-Identifier: Apache-2.0

#include "zddmap/map/mapper.hpp"

#include "zddmap/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace zddmap::map {

Mapper::Mapper(io::Circuit circuit, io::Device device, MapperOptions opts)
    : circuit_(std::move(circuit)), device_(std::move(device)), opts_(std::move(opts)) {
  const auto& w = opts_.weights;
  if (w.alpha < 0 || w.beta < 0 || w.gamma < 0) {
    throw std::invalid_argument("score weights must be nonnegative");
  }
  if (w.alpha == 0 && w.beta == 0 && w.gamma == 0) {
    throw std::invalid_argument("score weights must not all be zero");
  }

  const auto n = static_cast<std::uint32_t>(circuit_.qubits.size());
  const auto m = static_cast<std::uint32_t>(device_.qubits.size());
  if (n > m) {
    throw InfeasibleError("device has " + std::to_string(m) + " qubits for " +
                          std::to_string(n) + " circuit qubits");
  }

  gate_positions_ = circuit_.two_qubit_positions();
  gates_.reserve(gate_positions_.size());
  for (auto pos : gate_positions_) {
    const auto& ops = circuit_.gates[pos].operands;
    gates_.emplace_back(ops[0], ops[1]);
  }

  if (!gates_.empty()) {
    map_eng_ = std::make_unique<zdd::Engine>(n * m);
    base_ = build_base_sets(circuit_, device_, *map_eng_);
  } else {
    map_eng_ = std::make_unique<zdd::Engine>(0);
  }
  edge_vars_.num_edges = static_cast<std::uint32_t>(device_.edges.size());
}

Mapper::~Mapper() = default;

zdd::Engine& Mapper::layer_engine() {
  if (!layer_eng_) {
    layer_eng_ = std::make_unique<zdd::Engine>(edge_vars_.num_edges);
  }
  return *layer_eng_;
}

zdd::NodeRef Mapper::layers_family() {
  if (!layers_built_) {
    layers_ = build_layers(layer_engine(), device_, edge_vars_);
    layers_built_ = true;
  }
  return layers_;
}

std::vector<std::vector<std::uint32_t>> Mapper::candidate_layers(zdd::NodeRef m) {
  auto image = image_physicals(*map_eng_, base_.vars, m);
  std::set<std::uint32_t> img(image.begin(), image.end());
  std::vector<std::vector<std::uint32_t>> out;
  layer_engine().for_each_set(layers_family(), [&](const std::vector<std::uint32_t>& vars) {
    if (vars.empty()) return;
    bool touches = false;
    for (auto var : vars) {
      const auto& [p, q] = device_.edges[edge_vars_.edge_of(var)];
      if (img.count(p) != 0 || img.count(q) != 0) {
        touches = true;
        break;
      }
    }
    if (!touches) return;
    std::vector<std::uint32_t> layer;
    layer.reserve(vars.size());
    for (auto var : vars) layer.push_back(edge_vars_.edge_of(var));
    out.push_back(std::move(layer));
  });
  return out;
}

const std::vector<Partition>& Mapper::find_maximal_partitions() {
  if (partitioned_) return partitions_;
  partitioned_ = true;
  partitions_.clear();
  if (gates_.empty()) return partitions_;

  zdd::Engine& eng = *map_eng_;
  const std::size_t k = gates_.size();
  const auto m = static_cast<std::uint32_t>(device_.qubits.size());

  const auto fresh_gate_map = [&](std::size_t i) {
    zdd::NodeRef r = gate_map(eng, base_, gates_[i - 1].first, gates_[i - 1].second);
    if (r == zdd::kBot) {
      throw InfeasibleError("two-qubit gate " + std::to_string(i) +
                            " cannot be placed: device has no usable coupling");
    }
    return r;
  };

  // sigma[p] = wire where data that started on wire p currently sits.
  std::vector<std::uint32_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);

  Partition cur;
  cur.begin = 1;
  zdd::NodeRef fam = fresh_gate_map(1);

  for (std::size_t i = 2; i <= k; ++i) {
    zdd::NodeRef merged =
        merge_mappings(eng, base_, fam, gates_[i - 1].first, gates_[i - 1].second);
    if (merged != zdd::kBot) {
      fam = merged;
      continue;
    }

    // One SWAP-layer attempt per stuck gate.
    auto candidates = candidate_layers(fam);
    auto scores = score_layers(eng, base_, fam, gates_, i, candidates, device_,
                               opts_.weights, opts_.lookahead);
    if (auto best = select_layer(scores)) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      edges.reserve(scores[*best].edge_indices.size());
      for (auto e : scores[*best].edge_indices) edges.push_back(device_.edges[e]);
      cur.swaps.push_back({i, edges});
      fam = apply_layer(eng, base_.vars, fam, edges);
      for (const auto& [p, q] : edges) {
        for (auto& s : sigma) {
          if (s == p) {
            s = q;
          } else if (s == q) {
            s = p;
          }
        }
      }
      merged = merge_mappings(eng, base_, fam, gates_[i - 1].first, gates_[i - 1].second);
      if (merged == zdd::kBot) {
        throw std::logic_error("positively scored layer failed to extend the partition");
      }
      fam = merged;
      continue;
    }

    cur.end = i - 1;
    cur.phi = fam;
    cur.sigma_end = sigma;
    partitions_.push_back(std::move(cur));
    cur = Partition{};
    cur.begin = i;
    fam = fresh_gate_map(i);
  }

  cur.end = k;
  cur.phi = fam;
  cur.sigma_end = sigma;
  partitions_.push_back(std::move(cur));
  return partitions_;
}

MappingResult Mapper::emit() {
  find_maximal_partitions();

  MappingResult res;
  const auto n = static_cast<std::uint32_t>(circuit_.qubits.size());
  const auto m = static_cast<std::uint32_t>(device_.qubits.size());

  for (const auto& p : partitions_) {
    res.partitions.push_back(
        {p.begin, p.end, map_eng_->count_sets(p.phi), p.swaps});
  }
  res.fully_mapped = partitions_.size() <= 1;

  if (!partitions_.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < partitions_.size(); ++i) {
      const auto len = partitions_[i].end - partitions_[i].begin + 1;
      const auto best_len = partitions_[best].end - partitions_[best].begin + 1;
      if (len > best_len) best = i; // ties keep the earliest start
    }
    res.maximal_index = best;
  }

  // Assignment: first mapping of the maximal partition, pulled back to
  // circuit-start wires, then free pseudo qubits onto free wires in
  // index order.
  res.assignment.assign(n, m); // m = unassigned sentinel
  std::vector<bool> used(m, false);
  if (!partitions_.empty()) {
    const Partition& mp = partitions_[res.maximal_index];
    std::vector<std::uint32_t> first;
    bool got = false;
    map_eng_->for_each_set(mp.phi, [&](const std::vector<std::uint32_t>& s) {
      if (!got) {
        first = s;
        got = true;
      }
    });
    if (!got) {
      throw std::logic_error("partition carries no mapping");
    }
    std::vector<std::uint32_t> sigma_inv(m);
    for (std::uint32_t w = 0; w < m; ++w) sigma_inv[mp.sigma_end[w]] = w;
    for (auto var : first) {
      const std::uint32_t v = base_.vars.pseudo_of(var);
      const std::uint32_t wire = sigma_inv[base_.vars.physical_of(var)];
      res.assignment[v] = wire;
      used[wire] = true;
    }
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (res.assignment[v] != m) continue;
    for (std::uint32_t p = 0; p < m; ++p) {
      if (!used[p]) {
        res.assignment[v] = p;
        used[p] = true;
        break;
      }
    }
  }

  // Rewrite the gate stream, inserting recorded layers and tracking the
  // running wire permutation they induce.
  res.mapped.qubits = device_.qubits;
  std::unordered_map<std::size_t, const std::vector<std::pair<std::uint32_t, std::uint32_t>>*>
      insert_at;
  for (const auto& part : partitions_) {
    for (const auto& si : part.swaps) {
      insert_at[gate_positions_[si.before_gate - 1]] = &si.edges;
    }
  }

  std::vector<std::uint32_t> pi(m);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<std::size_t> out_pos(gates_.size(), 0);
  std::size_t seen_2q = 0;

  for (std::size_t pos = 0; pos < circuit_.gates.size(); ++pos) {
    if (auto it = insert_at.find(pos); it != insert_at.end()) {
      for (const auto& [p, q] : *it->second) {
        res.mapped.gates.push_back({"swap", {p, q}});
        ++res.swaps_inserted;
        for (auto& w : pi) {
          if (w == p) {
            w = q;
          } else if (w == q) {
            w = p;
          }
        }
      }
    }
    const io::Gate& g = circuit_.gates[pos];
    io::Gate out;
    out.kind = g.kind;
    out.operands.reserve(g.operands.size());
    for (auto op : g.operands) out.operands.push_back(pi[res.assignment[op]]);
    if (g.is_two_qubit()) out_pos[seen_2q++] = res.mapped.gates.size();
    res.mapped.gates.push_back(std::move(out));
  }

  if (!partitions_.empty()) {
    const Partition& mp = partitions_[res.maximal_index];
    res.has_checked_range = true;
    res.checked_begin = out_pos[mp.begin - 1];
    res.checked_end = out_pos[mp.end - 1];
  }
  return res;
}

} // namespace zddmap::map
