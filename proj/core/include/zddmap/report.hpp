// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zddmap/io/circuit.hpp"
#include "zddmap/io/device.hpp"
#include "zddmap/map/mapper.hpp"

#include <string>

namespace zddmap {

/// JSON run report (schema_version 1). Key order and formatting are
/// fixed so reports are byte-identical across runs, except for the
/// wall_time_ms value, which is the one field excluded from that
/// guarantee. mapping_count is serialized as a decimal string because
/// counts can exceed any fixed-width integer.
std::string render_report(const io::Circuit& input, const io::Device& device,
                          const map::MappingResult& result, double wall_time_ms);

} // namespace zddmap
