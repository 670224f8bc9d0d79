#include "clusterdv/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterdv {

PolygonModel polygon_model(CartanFamily family, int rank) {
  PolygonModel m;
  m.family = family;
  m.rank = rank;
  switch (family) {
    case CartanFamily::A:
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      m.vertices = rank + 3;
      break;
    case CartanFamily::B:
    case CartanFamily::C:
      if (rank < 2) throw std::invalid_argument("types B and C need rank >= 2");
      m.vertices = 2 * rank + 2;
      break;
    default:
      throw std::invalid_argument("polygon models exist for types A, B and C only");
  }
  return m;
}

namespace {

bool adjacent(int vertices, int u, int v) {
  int d = std::abs(u - v);
  return d == 1 || d == vertices - 1;
}

std::array<int, 2> norm_pair(int u, int v) {
  return u < v ? std::array<int, 2>{u, v} : std::array<int, 2>{v, u};
}

}  // namespace

std::vector<DiagObj> polygon_objects(const PolygonModel& model) {
  const int v = model.vertices;
  std::vector<DiagObj> out;
  if (model.family == CartanFamily::A) {
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) {
        if (adjacent(v, a, b)) continue;
        out.push_back(DiagObj{{a, b}, {a, b}, false});
      }
    return out;
  }
  const int half = model.rank + 1;  // central symmetry shift
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (adjacent(v, a, b)) continue;
      if ((b - a) == half) {
        out.push_back(DiagObj{{a, b}, {a, b}, true});
        continue;
      }
      std::array<int, 2> mirror = norm_pair((a + half) % v, (b + half) % v);
      std::array<int, 2> rep{a, b};
      if (rep < mirror) out.push_back(DiagObj{rep, mirror, false});
    }
  }
  return out;
}

bool segments_cross(int vertices, const std::array<int, 2>& a, const std::array<int, 2>& b) {
  if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]) return false;
  auto inside = [&](int x) {
    // strictly inside the cyclic arc from a[0] to a[1]
    int rel = ((x - a[0]) % vertices + vertices) % vertices;
    int len = ((a[1] - a[0]) % vertices + vertices) % vertices;
    return rel > 0 && rel < len;
  };
  return inside(b[0]) != inside(b[1]);
}

Int crossing_number(const PolygonModel& model, const DiagObj& theta, const DiagObj& delta) {
  const int v = model.vertices;
  if (theta.rep == delta.rep && theta.mirror == delta.mirror) return -1;
  if (model.family == CartanFamily::A)
    return segments_cross(v, theta.rep, delta.rep) ? 1 : 0;

  auto rep_vs_pair = [&](const std::array<int, 2>& d) {
    Int count = segments_cross(v, d, theta.rep) ? 1 : 0;
    if (theta.is_long) {
      // doubled in B, single in C
      if (model.family == CartanFamily::B) count *= 2;
    } else {
      count += segments_cross(v, d, theta.mirror) ? 1 : 0;
    }
    return count;
  };

  if (delta.is_long) {
    if (model.family == CartanFamily::B) {
      // any member of theta crossing the diameter counts once
      bool crossed = segments_cross(v, delta.rep, theta.rep) ||
                     (!theta.is_long && segments_cross(v, delta.rep, theta.mirror));
      return crossed ? 1 : 0;
    }
    return rep_vs_pair(delta.rep);
  }
  return rep_vs_pair(delta.rep);
}

std::vector<std::vector<int>> enumerate_geometric_clusters(const PolygonModel& model,
                                                           const std::vector<DiagObj>& objects) {
  const int count = static_cast<int>(objects.size());
  const int n = model.rank;
  std::vector<std::vector<bool>> ok(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      ok[i][j] = i == j || crossing_number(model, objects[i], objects[j]) == 0;

  std::vector<std::vector<int>> clusters;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int from) {
    if (static_cast<int>(cur.size()) == n) {
      clusters.push_back(cur);
      return;
    }
    for (int i = from; i < count; ++i) {
      bool fits = true;
      for (int j : cur) {
        if (!ok[j][i] || !ok[i][j]) {
          fits = false;
          break;
        }
      }
      if (fits) {
        cur.push_back(i);
        grow(i + 1);
        cur.pop_back();
      }
    }
  };
  grow(0);
  return clusters;
}

IntVec crossing_vector(const PolygonModel& model, const std::vector<DiagObj>& objects,
                       const std::vector<int>& cluster, int delta) {
  IntVec out(static_cast<int>(cluster.size()));
  for (size_t k = 0; k < cluster.size(); ++k)
    out[static_cast<int>(k)] = crossing_number(model, objects[cluster[k]], objects[delta]);
  return out;
}

}  // namespace clusterdv
