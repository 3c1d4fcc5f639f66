// SPDX-License-Identifier: Apache-2.0

#include "zddmap/errors.hpp"
#include "zddmap/io/circuit.hpp"
#include "zddmap/io/device.hpp"
#include "zddmap/map/mapper.hpp"
#include "zddmap/map/verify.hpp"
#include "zddmap/numbers.hpp"
#include "zddmap/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

namespace {

// Exit codes: 0 success (also when not fully mapped), 1 usage or
// configuration error, 2 input parse error, 3 infeasible instance,
// 4 self-check or internal invariant failure.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kInfeasible = 3;
constexpr int kSelfcheck = 4;

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) return false;
  out << content;
  return bool(out);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ZDD-based quantum circuit mapper"};

  std::string circuit_path;
  std::string device_arg;
  std::string alpha = "0";
  std::string beta = "1";
  std::string gamma = "1";
  std::size_t lookahead = 20;
  std::string out_path;
  std::string report_path;
  std::string dot_path;
  bool selfcheck = false;
  bool verbose = false;

  app.add_option("--circuit", circuit_path, "Circuit file")->required();
  app.add_option("--device", device_arg, "Device file, ring:<n>, or path:<n>")->required();
  app.add_option("--alpha", alpha, "Depth weight (rational), default 0");
  app.add_option("--beta", beta, "Map weight (rational), default 1");
  app.add_option("--gamma", gamma, "SWAP weight (rational), default 1");
  app.add_option("--lookahead", lookahead,
                 "Score lookahead in gates, 0 = unbounded, default 20");
  app.add_option("--out", out_path, "Mapped circuit path (default: stdout)");
  app.add_option("--report", report_path, "JSON report path");
  app.add_option("--dot", dot_path, "Dump the maximal partition's mapping diagram");
  app.add_flag("--selfcheck", selfcheck, "Re-check the output against the couplings");
  app.add_flag("-v,--verbose", verbose, "Progress notes on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  zddmap::map::MapperOptions opts;
  try {
    opts.weights.alpha = zddmap::parse_rational(alpha);
    opts.weights.beta = zddmap::parse_rational(beta);
    opts.weights.gamma = zddmap::parse_rational(gamma);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  opts.lookahead = lookahead;

  std::set<std::string> paths;
  for (const std::string* p : {&circuit_path, &device_arg, &out_path, &report_path, &dot_path}) {
    if (p->empty()) continue;
    if (p == &device_arg &&
        (device_arg.starts_with("ring:") || device_arg.starts_with("path:"))) {
      continue;
    }
    if (!paths.insert(*p).second) {
      std::cerr << "error: path '" << *p << "' used more than once\n";
      return kUsage;
    }
  }

  zddmap::io::Circuit circuit;
  zddmap::io::Device device;
  try {
    circuit = zddmap::io::load_circuit(circuit_path);
    device = zddmap::io::load_device(device_arg);
  } catch (const zddmap::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }

  zddmap::map::MappingResult result;
  double wall_ms = 0;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    zddmap::map::Mapper mapper(circuit, device, opts);
    result = mapper.emit();
    const auto t1 = std::chrono::steady_clock::now();
    wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (!dot_path.empty()) {
      std::ofstream dot(dot_path);
      if (!dot) {
        std::cerr << "error: cannot write '" << dot_path << "'\n";
        return kUsage;
      }
      const auto& parts = mapper.find_maximal_partitions();
      const zddmap::zdd::NodeRef root =
          parts.empty() ? zddmap::zdd::kBot : parts[result.maximal_index].phi;
      const auto& vars = mapper.base().vars;
      mapper.map_engine().write_dot(dot, root, [&](std::uint32_t var) {
        return circuit.qubits[vars.pseudo_of(var)] + device.qubits[vars.physical_of(var)];
      });
    }
  } catch (const zddmap::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (verbose) {
    std::cerr << "partitions: " << result.partitions.size()
              << ", swaps inserted: " << result.swaps_inserted
              << ", fully mapped: " << (result.fully_mapped ? "yes" : "no") << "\n";
    if (!result.fully_mapped) {
      std::cerr << "note: gates outside the maximal partition are emitted "
                   "unrouted; see the report's partitions\n";
    }
  }

  const std::string serialized = zddmap::io::serialize_circuit(result.mapped);
  if (out_path.empty()) {
    std::cout << serialized;
  } else if (!write_file(out_path, serialized)) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kUsage;
  }

  if (!report_path.empty() &&
      !write_file(report_path, zddmap::render_report(circuit, device, result, wall_ms))) {
    std::cerr << "error: cannot write '" << report_path << "'\n";
    return kUsage;
  }

  if (selfcheck && result.has_checked_range) {
    auto violation = zddmap::map::check_coupling(result.mapped, device,
                                                 result.checked_begin, result.checked_end);
    if (violation) {
      std::cerr << "selfcheck failed: gate " << violation->gate_position + 1
                << " violates the couplings\n";
      return kSelfcheck;
    }
    if (verbose) std::cerr << "selfcheck passed\n";
  }

  return kOk;
}
