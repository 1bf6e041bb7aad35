#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ncycle/embedding.hpp"

namespace ncycle {

enum class VertexKind { Corner, Crossing };

struct ArrangementVertex {
  Point point;
  VertexKind kind;
};

struct SegmentTally {
  std::size_t vertex_count = 0;  // corners plus interior crossings on the segment
  std::size_t edge_count = 0;
};

/// Plane graph induced by a general-position cycle embedding: corners and
/// crossings as vertices, segment pieces between them as edges.
struct Arrangement {
  std::vector<ArrangementVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<SegmentTally> per_segment;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  /// Bounded faces, F = E - V + 1.
  std::size_t face_count = 0;

  std::size_t crossing_count() const { return vertex_count - per_segment.size(); }
};

/// Throws DegenerateInput unless emb is in general position.
Arrangement build_arrangement(const CycleEmbedding& emb);

/// Euler's relation for a connected plane graph without the outer face.
std::int64_t region_count_euler(std::int64_t vertices, std::int64_t edges);
std::int64_t region_count_euler(const Arrangement& arr);

/// Counts bounded faces by walking the rotation system of the arrangement
/// graph. Faces are traced with the face on the left; bounded ones come out
/// counter-clockwise (positive signed area), the outer face clockwise.
std::int64_t region_count_traversal(const CycleEmbedding& emb);

enum class SegmentClass { Splitter, OneOffSplitter, Other };

struct SegmentSplitInfo {
  std::size_t intersected_count = 0;
  SegmentClass classification = SegmentClass::Other;
};

struct SplitterReport {
  std::vector<SegmentSplitInfo> segments;

  std::size_t splitters() const;
  std::size_t one_off_splitters() const;
};

/// Counts, for every segment, how many other segments it meets (a touch at a
/// corner counts). Works on degenerate embeddings, except that collinear
/// overlaps or zero-length segments throw DegenerateInput.
SplitterReport splitter_analysis(const CycleEmbedding& emb);

}  // namespace ncycle
