#include "ncycle/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ncycle {

namespace {

struct Subdivision {
  std::vector<ArrangementVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<SegmentTally> per_segment;
};

void require_general_position(const CycleEmbedding& emb) {
  auto report = validate_general_position(emb);
  if (!report.empty()) throw DegenerateInput(std::move(report));
}

// Caller guarantees general position.
Subdivision subdivide(const CycleEmbedding& emb) {
  const std::size_t n = emb.size();
  std::vector<Segment> segs;
  segs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) segs.push_back(emb.segment(i));

  Subdivision out;
  std::map<Point, std::size_t> index;
  for (const auto& p : emb.corners()) {
    index.emplace(p, out.vertices.size());
    out.vertices.push_back({p, VertexKind::Corner});
  }

  std::vector<std::vector<Point>> crossings(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto r = segment_intersection(segs[i], segs[j]);
      if (const auto* x = std::get_if<intersection::ProperCrossing>(&r)) {
        crossings[i].push_back(x->point);
        crossings[j].push_back(x->point);
        if (index.emplace(x->point, out.vertices.size()).second) {
          out.vertices.push_back({x->point, VertexKind::Crossing});
        }
      }
    }
  }

  out.per_segment.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto chain = crossings[i];
    chain.push_back(segs[i].a());
    chain.push_back(segs[i].b());
    chain = sort_points_along(segs[i], std::move(chain));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      out.edges.emplace_back(index.at(chain[k]), index.at(chain[k + 1]));
    }
    out.per_segment[i] = {chain.size(), chain.size() - 1};
  }
  return out;
}

bool connected(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = vertex_count;
  for (const auto& [a, b] : edges) {
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

// Counter-clockwise angular order of direction vectors starting from +x.
bool angle_less(const Point& d1, const Point& d2) {
  auto upper = [](const Point& d) { return d.y.sign() > 0 || (d.y.is_zero() && d.x.sign() > 0); };
  const bool u1 = upper(d1);
  const bool u2 = upper(d2);
  if (u1 != u2) return u1;
  return (d1.x * d2.y - d1.y * d2.x).sign() > 0;
}

}  // namespace

Arrangement build_arrangement(const CycleEmbedding& emb) {
  require_general_position(emb);
  Subdivision sub = subdivide(emb);

  Arrangement arr;
  arr.vertex_count = sub.vertices.size();
  arr.edge_count = sub.edges.size();
  if (!connected(arr.vertex_count, sub.edges)) {
    throw DisconnectedArrangement("arrangement graph of a cycle embedding is disconnected");
  }
  arr.vertices = std::move(sub.vertices);
  arr.edges = std::move(sub.edges);
  arr.per_segment = std::move(sub.per_segment);
  arr.face_count = static_cast<std::size_t>(region_count_euler(arr));
  return arr;
}

std::int64_t region_count_euler(std::int64_t vertices, std::int64_t edges) { return edges - vertices + 1; }

std::int64_t region_count_euler(const Arrangement& arr) {
  return region_count_euler(static_cast<std::int64_t>(arr.vertex_count), static_cast<std::int64_t>(arr.edge_count));
}

std::int64_t region_count_traversal(const CycleEmbedding& emb) {
  require_general_position(emb);
  const Subdivision sub = subdivide(emb);
  const auto& pts = sub.vertices;
  const std::size_t v_count = pts.size();

  // Rotation system: neighbours of each vertex in counter-clockwise order.
  std::vector<std::vector<std::size_t>> around(v_count);
  for (const auto& [a, b] : sub.edges) {
    around[a].push_back(b);
    around[b].push_back(a);
  }
  for (std::size_t v = 0; v < v_count; ++v) {
    const Point& origin = pts[v].point;
    auto dir = [&](std::size_t w) { return Point{pts[w].point.x - origin.x, pts[w].point.y - origin.y}; };
    std::sort(around[v].begin(), around[v].end(),
              [&](std::size_t a, std::size_t b) { return angle_less(dir(a), dir(b)); });
  }
  auto slot = [&](std::size_t v, std::size_t w) {
    return static_cast<std::size_t>(std::find(around[v].begin(), around[v].end(), w) - around[v].begin());
  };

  // Half-edge (v, k) leaves v towards around[v][k].
  std::vector<std::vector<bool>> used(v_count);
  for (std::size_t v = 0; v < v_count; ++v) used[v].assign(around[v].size(), false);

  std::int64_t bounded = 0;
  for (std::size_t start = 0; start < v_count; ++start) {
    for (std::size_t k0 = 0; k0 < around[start].size(); ++k0) {
      if (used[start][k0]) continue;
      Rational twice_area;
      std::size_t v = start;
      std::size_t k = k0;
      while (!used[v][k]) {
        used[v][k] = true;
        const std::size_t w = around[v][k];
        const Point& p = pts[v].point;
        const Point& q = pts[w].point;
        twice_area += p.x * q.y - q.x * p.y;
        // Face on the left: at w, turn to the clockwise neighbour of the reverse edge.
        const std::size_t back = slot(w, v);
        const std::size_t deg = around[w].size();
        k = (back + deg - 1) % deg;
        v = w;
      }
      if (twice_area.sign() > 0) ++bounded;
    }
  }
  return bounded;
}

std::size_t SplitterReport::splitters() const {
  return static_cast<std::size_t>(std::count_if(segments.begin(), segments.end(), [](const auto& s) {
    return s.classification == SegmentClass::Splitter;
  }));
}

std::size_t SplitterReport::one_off_splitters() const {
  return static_cast<std::size_t>(std::count_if(segments.begin(), segments.end(), [](const auto& s) {
    return s.classification == SegmentClass::OneOffSplitter;
  }));
}

SplitterReport splitter_analysis(const CycleEmbedding& emb) {
  const std::size_t n = emb.size();
  std::vector<Segment> segs;
  segs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (emb.corner(i) == emb.corner((i + 1) % n)) {
      DegeneracyReport report;
      report.coincident_corners.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
      throw DegenerateInput(std::move(report));
    }
    segs.push_back(emb.segment(i));
  }

  SplitterReport report;
  report.segments.resize(n);
  DegeneracyReport overlaps;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto r = segment_intersection(segs[i], segs[j]);
      if (std::holds_alternative<intersection::Disjoint>(r)) continue;
      if (std::holds_alternative<intersection::CollinearOverlap>(r)) {
        overlaps.collinear_overlaps.emplace_back(i, j);
        continue;
      }
      ++report.segments[i].intersected_count;
      ++report.segments[j].intersected_count;
    }
  }
  if (!overlaps.empty()) throw DegenerateInput(std::move(overlaps));

  for (auto& s : report.segments) {
    if (s.intersected_count == n - 1) {
      s.classification = SegmentClass::Splitter;
    } else if (s.intersected_count == n - 2) {
      s.classification = SegmentClass::OneOffSplitter;
    }
  }
  return report;
}

}  // namespace ncycle
