#include "strval/polytope.hpp"

#include "strval/errors.hpp"
#include "strval/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace strval {

namespace {

using Bits = boost::dynamic_bitset<>;

/// Scales v to the primitive integer vector on the same ray.
RationalVector primitive(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v)
    if (x != 0) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
  BigInt g = 0;
  std::vector<BigInt> ints;
  for (const auto& x : v) {
    BigInt n = numerator(x) * (l / denominator(x));
    ints.push_back(n);
    g = boost::multiprecision::gcd(g, n);
  }
  RationalVector out(v.size());
  if (g == 0) return out;
  if (g < 0) g = -g;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

struct Ray {
  RationalVector v;
  Bits tight;
};

}  // namespace

std::vector<RationalVector> extreme_rays(const std::vector<RationalVector>& constraints, int n) {
  const std::size_t m = constraints.size();
  // Pick n independent rows to seed the iteration.
  std::vector<std::size_t> seed;
  {
    std::vector<RationalVector> acc;
    for (std::size_t i = 0; i < m && static_cast<int>(seed.size()) < n; ++i) {
      acc.push_back(constraints[i]);
      if (rank_of(acc) == static_cast<int>(acc.size())) {
        seed.push_back(i);
      } else {
        acc.pop_back();
      }
    }
  }
  if (static_cast<int>(seed.size()) < n) throw DomainError("cone is not pointed (constraint rank < dimension)");

  std::vector<RationalVector> basis;
  for (auto i : seed) basis.push_back(constraints[i]);
  std::vector<Ray> rays;
  for (int j = 0; j < n; ++j) {
    RationalVector rhs(n);
    rhs[j] = -1;
    auto sol = solve(basis, rhs);
    Ray r{primitive(*sol), Bits(m)};
    rays.push_back(std::move(r));
  }
  auto mark = [&](Ray& r, std::size_t idx) {
    if (dot(constraints[idx], r.v) == 0) r.tight.set(idx);
  };
  std::vector<bool> done(m, false);
  for (auto i : seed) {
    done[i] = true;
    for (auto& r : rays) mark(r, i);
  }

  for (std::size_t idx = 0; idx < m; ++idx) {
    if (done[idx]) continue;
    done[idx] = true;
    const auto& a = constraints[idx];
    std::vector<Rational> s;
    s.reserve(rays.size());
    for (const auto& r : rays) s.push_back(dot(a, r.v));
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (s[k] > 0) pos.push_back(k);
      else if (s[k] < 0) neg.push_back(k);
    }
    if (pos.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (s[k] == 0) rays[k].tight.set(idx);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (s[k] > 0) continue;
      Ray r = rays[k];
      if (s[k] == 0) r.tight.set(idx);
      next.push_back(std::move(r));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (static_cast<int>(common.count()) < n - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.is_subset_of(rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        RationalVector v(n);
        for (int c = 0; c < n; ++c) v[c] = s[p] * rays[q].v[c] - s[q] * rays[p].v[c];
        Ray r{primitive(v), common};
        r.tight.set(idx);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }
  std::vector<RationalVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  return out;
}

bool RationalPolytope::contains(const RationalVector& x, const Rational& scale) const {
  if (empty()) return false;
  for (const auto& e : equations)
    if (dot(e.normal, x) != scale * e.rhs) return false;
  for (const auto& f : facets)
    if (dot(f.normal, x) > scale * f.rhs) return false;
  return true;
}

RationalPolytope RationalPolytope::scaled(const Rational& k) const {
  RationalPolytope out = *this;
  for (auto& v : out.vertices)
    for (auto& x : v) x *= k;
  for (auto& f : out.facets) f.rhs *= k;
  for (auto& e : out.equations) e.rhs *= k;
  if (k < 0) std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

RationalPolytope convex_hull(std::vector<RationalVector> points, int ambient_dim) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != ambient_dim) throw DomainError("point dimension mismatch in convex hull");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope out;
  out.ambient_dim = ambient_dim;
  const RationalVector& p0 = points[0];

  // Affine hull: echelon form of the difference vectors.
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) d[c] = points[i][c] - p0[c];
    diffs.push_back(std::move(d));
  }
  std::vector<int> pivots;
  {
    std::vector<RationalVector> m = diffs;
    // Pivot columns of the row space.
    std::size_t r = 0;
    for (int c = 0; c < ambient_dim && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && m[p][c] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Rational f = m[i][c] / m[r][c];
        for (int k = c; k < ambient_dim; ++k) m[i][k] -= f * m[r][k];
      }
      pivots.push_back(c);
      ++r;
    }
  }
  const int d = static_cast<int>(pivots.size());
  out.dim = d;
  for (auto& normal : nullspace(diffs, ambient_dim)) {
    RationalVector prim = primitive(normal);
    out.equations.push_back({prim, dot(prim, p0)});
  }
  std::sort(out.equations.begin(), out.equations.end());
  if (d == 0) {
    out.vertices = {p0};
    return out;
  }

  std::vector<RationalVector> projected;
  std::vector<RationalVector> constraints;
  for (const auto& p : points) {
    RationalVector y(d);
    for (int c = 0; c < d; ++c) y[c] = p[pivots[c]];
    RationalVector row = y;
    row.push_back(-1);
    projected.push_back(std::move(y));
    constraints.push_back(std::move(row));
  }
  std::vector<RationalVector> facet_normals;
  for (const auto& ray : extreme_rays(constraints, d + 1)) {
    RationalVector a(ray.begin(), ray.end() - 1);
    if (is_zero(a)) continue;
    facet_normals.push_back(a);
    RationalVector lifted(ambient_dim);
    for (int c = 0; c < d; ++c) lifted[pivots[c]] = a[c];
    out.facets.push_back({lifted, ray.back()});
  }
  std::sort(out.facets.begin(), out.facets.end());

  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RationalVector> tight;
    for (std::size_t f = 0; f < out.facets.size(); ++f) {
      if (dot(out.facets[f].normal, points[i]) == out.facets[f].rhs) tight.push_back(out.facets[f].normal);
    }
    if (rank_of(tight) == d) out.vertices.push_back(points[i]);
  }
  return out;
}

std::vector<RationalVector> vertices_from_halfspaces(const RationalPolytope& p) {
  if (p.empty()) return {};
  const int n = p.ambient_dim;
  std::vector<RationalVector> rows;
  auto homogenize = [&](const Halfspace& h, int sign) {
    RationalVector row(n + 1);
    for (int c = 0; c < n; ++c) row[c] = sign * h.normal[c];
    row[n] = -sign * h.rhs;
    return row;
  };
  for (const auto& f : p.facets) rows.push_back(homogenize(f, 1));
  for (const auto& e : p.equations) {
    rows.push_back(homogenize(e, 1));
    rows.push_back(homogenize(e, -1));
  }
  RationalVector s(n + 1);
  s[n] = -1;
  rows.push_back(s);
  std::vector<RationalVector> out;
  for (const auto& ray : extreme_rays(rows, n + 1)) {
    if (ray[n] <= 0) throw DomainError("H-description is unbounded");
    RationalVector v(n);
    for (int c = 0; c < n; ++c) v[c] = ray[c] / ray[n];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Visit>
void for_each_lattice_point(const RationalPolytope& p, std::int64_t k, Visit&& visit) {
  if (p.empty()) return;
  const int n = p.ambient_dim;
  if (n == 0) {
    visit(std::vector<std::int64_t>{});
    return;
  }
  std::vector<std::int64_t> lo(n), hi(n);
  for (int c = 0; c < n; ++c) {
    Rational mn = p.vertices[0][c], mx = p.vertices[0][c];
    for (const auto& v : p.vertices) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    lo[c] = ceil_div(mn * k).convert_to<std::int64_t>();
    hi[c] = floor_div(mx * k).convert_to<std::int64_t>();
    if (lo[c] > hi[c]) return;
  }
  // Integer form of the constraints: normals are primitive integers.
  struct IntRow {
    std::vector<std::int64_t> a;
    std::int64_t bound;
    bool equality;
    bool infeasible;
  };
  std::vector<IntRow> rows;
  auto to_int = [](const RationalVector& v) {
    std::vector<std::int64_t> a;
    for (const auto& x : v) a.push_back(numerator(x).convert_to<std::int64_t>());
    return a;
  };
  for (const auto& e : p.equations) {
    Rational b = e.rhs * k;
    rows.push_back({to_int(e.normal), is_integer(b) ? numerator(b).convert_to<std::int64_t>() : 0, true, !is_integer(b)});
  }
  for (const auto& f : p.facets)
    rows.push_back({to_int(f.normal), floor_div(f.rhs * k).convert_to<std::int64_t>(), false, false});
  for (const auto& r : rows)
    if (r.infeasible) return;

  std::vector<std::int64_t> x = lo;
  for (;;) {
    bool inside = true;
    for (const auto& r : rows) {
      std::int64_t s = 0;
      for (int c = 0; c < n; ++c) s += r.a[c] * x[c];
      if (r.equality ? s != r.bound : s > r.bound) {
        inside = false;
        break;
      }
    }
    if (inside) visit(x);
    int c = n - 1;
    while (c >= 0 && x[c] == hi[c]) {
      x[c] = lo[c];
      --c;
    }
    if (c < 0) break;
    ++x[c];
  }
}

}  // namespace

std::uint64_t lattice_count(const RationalPolytope& p, std::int64_t k) {
  if (k < 0) throw DomainError("lattice_count scale must be nonnegative");
  std::uint64_t count = 0;
  for_each_lattice_point(p, k, [&](const std::vector<std::int64_t>&) { ++count; });
  return count;
}

std::vector<std::vector<std::int64_t>> lattice_points(const RationalPolytope& p, std::int64_t k) {
  std::vector<std::vector<std::int64_t>> out;
  for_each_lattice_point(p, k, [&](const std::vector<std::int64_t>& x) { out.push_back(x); });
  return out;
}

namespace {

int affine_dim(const std::vector<RationalVector>& verts, const std::vector<int>& ids) {
  if (ids.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t t = 1; t < ids.size(); ++t) {
    RationalVector d = verts[ids[t]];
    for (std::size_t c = 0; c < d.size(); ++c) d[c] -= verts[ids[0]][c];
    diffs.push_back(std::move(d));
  }
  return rank_of(diffs);
}

class Triangulator {
 public:
  Triangulator(const RationalPolytope& p) : verts_(p.vertices) {
    for (const auto& f : p.facets) {
      std::vector<int> inc;
      for (int v = 0; v < static_cast<int>(verts_.size()); ++v)
        if (dot(f.normal, verts_[v]) == f.rhs) inc.push_back(v);
      incidence_.push_back(std::move(inc));
    }
  }

  // Pulling triangulation of the face spanned by `face` (sorted ids) of dimension fd.
  const std::vector<std::vector<int>>& run(const std::vector<int>& face, int fd) {
    auto it = memo_.find(face);
    if (it != memo_.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (fd == 0) {
      out.push_back({face[0]});
    } else {
      const int apex = face[0];
      std::set<std::vector<int>> subfaces;
      for (const auto& inc : incidence_) {
        std::vector<int> s;
        std::set_intersection(face.begin(), face.end(), inc.begin(), inc.end(), std::back_inserter(s));
        if (static_cast<int>(s.size()) < fd || s.size() == face.size()) continue;
        if (affine_dim(verts_, s) == fd - 1) subfaces.insert(std::move(s));
      }
      for (const auto& s : subfaces) {
        if (std::binary_search(s.begin(), s.end(), apex)) continue;
        for (auto simplex : run(s, fd - 1)) {
          simplex.insert(simplex.begin(), apex);
          out.push_back(std::move(simplex));
        }
      }
    }
    return memo_.emplace(face, std::move(out)).first->second;
  }

 private:
  const std::vector<RationalVector>& verts_;
  std::vector<std::vector<int>> incidence_;
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo_;
};

}  // namespace

VolumeResult volume(const RationalPolytope& p) {
  if (p.empty()) return {0, -1};
  if (p.dim < p.ambient_dim) return {0, p.dim};
  const int d = p.dim;
  if (d == 0) return {1, 0};
  Triangulator tri(p);
  std::vector<int> all(p.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  Rational total = 0;
  for (const auto& simplex : tri.run(all, d)) {
    std::vector<RationalVector> m;
    for (int t = 1; t <= d; ++t) {
      RationalVector row = p.vertices[simplex[t]];
      for (int c = 0; c < d; ++c) row[c] -= p.vertices[simplex[0]][c];
      m.push_back(std::move(row));
    }
    Rational det = determinant(m);
    total += det < 0 ? Rational(-det) : det;
  }
  Rational fact = 1;
  for (int t = 2; t <= d; ++t) fact *= t;
  return {total / fact, d};
}

}  // namespace strval
