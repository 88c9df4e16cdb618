#pragma once

#include "core/graph.hpp"

#include <string>

namespace graphbench {

enum class FileFormat { Text, Binary };

FileFormat format_from_str(const std::string& s); // "text" | "binary"
const char* format_str(FileFormat f);

// Guess from extension: ".bin" -> Binary, anything else -> Text.
FileFormat sniff_format(const std::string& path);

// Text: `src dst [weight]` per line, `#` comments, LF endings. A leading
// `# n <count>` comment pins the vertex count; otherwise n = max endpoint + 1.
// Binary: 16-byte header (magic "GBGRAPH1", n as little-endian u64) followed
// by little-endian u64 (src, dst) pairs. Binary carries no weights.
EdgeList read_edge_list(const std::string& path, FileFormat format);

// Deterministic for a fixed EdgeList: edges are written sorted by (src, dst).
void write_edge_list(const EdgeList& edges, const std::string& path, FileFormat format);

} // namespace graphbench
