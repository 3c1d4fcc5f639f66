// SPDX-License-Identifier: Apache-2.0

#include "zddmap/map/base_sets.hpp"

#include "zddmap/errors.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace zddmap::map {

BaseSets build_base_sets(const io::Circuit& c, const io::Device& d, zdd::Engine& eng) {
  const auto n = static_cast<std::uint32_t>(c.qubits.size());
  const auto m = static_cast<std::uint32_t>(d.qubits.size());
  if (n < 1) {
    throw InfeasibleError("circuit declares no qubits");
  }
  if (m < n) {
    throw InfeasibleError("device has " + std::to_string(m) + " qubits for " +
                          std::to_string(n) + " circuit qubits");
  }
  if (eng.num_vars() != n * m) {
    throw std::invalid_argument("engine universe does not match circuit and device");
  }

  BaseSets base;
  base.vars = MapVarTable{n, m};

  base.from_v.resize(n, zdd::kBot);
  for (std::uint32_t v = 0; v < n; ++v) {
    zdd::NodeRef f = zdd::kBot;
    for (std::uint32_t p = 0; p < m; ++p) {
      f = eng.union_(f, eng.elementary(base.vars.var_of(v, p)));
    }
    base.from_v[v] = f;
  }

  base.to_p.resize(m, zdd::kBot);
  for (std::uint32_t p = 0; p < m; ++p) {
    zdd::NodeRef f = zdd::kBot;
    for (std::uint32_t v = 0; v < n; ++v) {
      f = eng.union_(f, eng.elementary(base.vars.var_of(v, p)));
    }
    base.to_p[p] = f;
  }

  base.valid = zdd::kBot;
  for (const auto& [p, q] : d.edges) {
    base.valid = eng.union_(base.valid, eng.join(base.to_p[p], base.to_p[q]));
  }

  base.bad = zdd::kBot;
  for (std::uint32_t v = 0; v < n; ++v) {
    base.bad = eng.union_(base.bad, eng.choose(base.from_v[v], 2));
  }
  for (std::uint32_t p = 0; p < m; ++p) {
    base.bad = eng.union_(base.bad, eng.choose(base.to_p[p], 2));
  }
  return base;
}

zdd::NodeRef gate_map(zdd::Engine& eng, const BaseSets& base,
                      std::uint32_t v, std::uint32_t w) {
  if (v >= base.vars.n || w >= base.vars.n || v == w) {
    throw std::invalid_argument("gate_map needs two distinct pseudo qubits");
  }
  return eng.intersection(eng.join(base.from_v[v], base.from_v[w]), base.valid);
}

zdd::NodeRef merge_mappings(zdd::Engine& eng, const BaseSets& base, zdd::NodeRef m,
                            std::uint32_t v, std::uint32_t w) {
  return eng.nonsupersets(eng.join(m, gate_map(eng, base, v, w)), base.bad);
}

zdd::NodeRef apply_layer(zdd::Engine& eng, const MapVarTable& vars, zdd::NodeRef m,
                         std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::set<std::uint32_t> touched;
  for (const auto& [p, q] : edges) {
    if (p >= vars.m || q >= vars.m || p == q) {
      throw std::invalid_argument("layer edge outside the device");
    }
    if (!touched.insert(p).second || !touched.insert(q).second) {
      throw std::invalid_argument("layer edges share a qubit");
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(static_cast<std::size_t>(vars.n) * edges.size());
  for (std::uint32_t v = 0; v < vars.n; ++v) {
    for (const auto& [p, q] : edges) {
      pairs.emplace_back(vars.var_of(v, p), vars.var_of(v, q));
    }
  }
  return eng.rename_by_pairs(m, pairs);
}

std::vector<std::uint32_t> image_physicals(const zdd::Engine& eng,
                                           const MapVarTable& vars, zdd::NodeRef m) {
  std::set<std::uint32_t> out;
  for (std::uint32_t var : eng.support(m)) {
    out.insert(vars.physical_of(var));
  }
  return {out.begin(), out.end()};
}

} // namespace zddmap::map
