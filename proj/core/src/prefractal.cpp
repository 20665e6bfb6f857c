// Copyright 2026 The carpetcurl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carpet/prefractal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "carpet/error.hpp"

namespace carpet {

namespace detail {

struct CacheKey {
  int level;
  PolyRegion region;
  friend bool operator<(const CacheKey& a, const CacheKey& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.region < b.region;
  }
};

struct MomentCache {
  std::mutex mu;
  std::map<CacheKey, Moments<Rational>> exact;
  std::map<CacheKey, Moments<double>> f64;
};

}  // namespace detail

namespace {

template <class T>
T from_rational(const Rational& q) {
  return coefficient<T>(q);
}

template <class T>
long floor_index(const T& v);
template <>
long floor_index<Rational>(const Rational& v) {
  return floor(v).get_si();
}
template <>
long floor_index<double>(const double& v) {
  return static_cast<long>(std::floor(v));
}

template <class T>
long ceil_index(const T& v);
template <>
long ceil_index<Rational>(const Rational& v) {
  return ceil(v).get_si();
}
template <>
long ceil_index<double>(const double& v) {
  return static_cast<long>(std::ceil(v));
}

template <class T>
int sign_of(const T& v) {
  return (v > 0) - (v < 0);
}

template <class T>
struct Pt {
  T x, y;
};

template <class T>
std::vector<Pt<T>> clip(const std::vector<Pt<T>>& pts, const T& a, const T& b, const T& c) {
  std::vector<Pt<T>> out;
  const std::size_t n = pts.size();
  out.reserve(n + 2);
  std::vector<T> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = a * pts[i].x + b * pts[i].y + c;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    int si = sign_of(s[i]);
    int sj = sign_of(s[j]);
    if (si >= 0) out.push_back(pts[i]);
    if (si * sj < 0) {
      T t = s[i] / (s[i] - s[j]);
      out.push_back({pts[i].x + t * (pts[j].x - pts[i].x), pts[i].y + t * (pts[j].y - pts[i].y)});
    }
  }
  return out;
}

template <class T>
Moments<T> moments_of(const std::vector<Pt<T>>& pts) {
  Moments<T> m;
  const std::size_t n = pts.size();
  if (n < 3) return m;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % n];
    T c = p.x * q.y - q.x * p.y;
    m.m00 += c;
    m.m10 += (p.x + q.x) * c;
    m.m01 += (p.y + q.y) * c;
    m.m20 += (p.x * p.x + p.x * q.x + q.x * q.x) * c;
    m.m02 += (p.y * p.y + p.y * q.y + q.y * q.y) * c;
    m.m11 += (p.x * q.y + 2 * p.x * p.y + 2 * q.x * q.y + q.x * p.y) * c;
  }
  m.m00 /= 2;
  m.m10 /= 6;
  m.m01 /= 6;
  m.m20 /= 12;
  m.m02 /= 12;
  m.m11 /= 24;
  return m;
}

template <class T>
struct Sum;

template <>
struct Sum<Rational> {
  Moments<Rational> total;
  void add(const Moments<Rational>& m) { total += m; }
  Moments<Rational> result() const { return total; }
};

template <>
struct Sum<double> {
  std::vector<Moments<double>> parts;
  void add(const Moments<double>& m) { parts.push_back(m); }
  Moments<double> result() const {
    auto reduce = [&](double Moments<double>::*field) {
      std::vector<double> xs;
      xs.reserve(parts.size());
      for (const auto& p : parts) xs.push_back(p.*field);
      return pairwise_sum(xs);
    };
    Moments<double> r;
    r.m00 = reduce(&Moments<double>::m00);
    r.m10 = reduce(&Moments<double>::m10);
    r.m01 = reduce(&Moments<double>::m01);
    r.m20 = reduce(&Moments<double>::m20);
    r.m11 = reduce(&Moments<double>::m11);
    r.m02 = reduce(&Moments<double>::m02);
    return r;
  }
};

// Recursion over the squares below a root square placed at the origin.
template <class T>
class Walker {
 public:
  Walker(const std::vector<T>& side, const std::vector<long>& split, const std::vector<T>& tail,
         const std::vector<T>& spread, int leaf, const PolyRegion& region)
      : side_(side), split_(split), tail_(tail), spread_(spread), leaf_(leaf) {
    for (const auto& p : region.vertices()) poly_.push_back({from_rational<T>(p.x), from_rational<T>(p.y)});
    const std::size_t n = poly_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = poly_[i];
      const auto& q = poly_[(i + 1) % n];
      T a = p.y - q.y;
      T b = q.x - p.x;
      T c = -(a * p.x + b * p.y);
      edges_.push_back({a, b, c});
    }
    bx0_ = from_rational<T>(region.bbox().x0);
    by0_ = from_rational<T>(region.bbox().y0);
    bx1_ = from_rational<T>(region.bbox().x1);
    by1_ = from_rational<T>(region.bbox().y1);
  }

  Moments<T> run(int root) {
    visit(root, T(0), T(0));
    return sum_.result();
  }

 private:
  struct Edge {
    T a, b, c;
  };

  void visit(int level, const T& x0, const T& y0) {
    const T& s = side_[level];
    bool full = true;
    for (const auto& e : edges_) {
      T v = e.a * x0 + e.b * y0 + e.c;
      T da = e.a * s;
      T db = e.b * s;
      T lo = v, hi = v;
      for (const T& w : {T(v + da), T(v + db), T(v + da + db)}) {
        if (w < lo) lo = w;
        if (w > hi) hi = w;
      }
      if (sign_of(hi) <= 0) return;
      if (sign_of(lo) < 0) full = false;
    }
    if (full) {
      sum_.add(full_square(level, x0, y0));
      return;
    }
    if (level == leaf_) {
      std::vector<Pt<T>> pts = poly_;
      pts = clip(pts, T(1), T(0), T(-x0));
      pts = clip(pts, T(-1), T(0), T(x0 + s));
      pts = clip(pts, T(0), T(1), T(-y0));
      pts = clip(pts, T(0), T(-1), T(y0 + s));
      if (pts.size() >= 3) sum_.add(moments_of(pts));
      return;
    }
    const long p = split_[level + 1];
    const T& cs = side_[level + 1];
    const long mid = (p - 1) / 2;
    long u0 = std::max(0L, floor_index<T>(T((bx0_ - x0) / cs)));
    long u1 = std::min(p - 1, ceil_index<T>(T((bx1_ - x0) / cs)) - 1);
    long v0 = std::max(0L, floor_index<T>(T((by0_ - y0) / cs)));
    long v1 = std::min(p - 1, ceil_index<T>(T((by1_ - y0) / cs)) - 1);
    for (long v = v0; v <= v1; ++v) {
      T cy = y0 + T(v) * cs;
      for (long u = u0; u <= u1; ++u) {
        if (u == mid && v == mid) continue;
        visit(level + 1, T(x0 + T(u) * cs), cy);
      }
    }
  }

  Moments<T> full_square(int level, const T& x0, const T& y0) const {
    const T& s = side_[level];
    Moments<T> m;
    m.m00 = s * s * tail_[level];
    T cx = x0 + s / 2;
    T cy = y0 + s / 2;
    T central = s * s * s * s * spread_[level];
    m.m10 = m.m00 * cx;
    m.m01 = m.m00 * cy;
    m.m20 = central + m.m00 * cx * cx;
    m.m02 = central + m.m00 * cy * cy;
    m.m11 = m.m00 * cx * cy;
    return m;
  }

  const std::vector<T>& side_;
  const std::vector<long>& split_;
  const std::vector<T>& tail_;
  const std::vector<T>& spread_;
  int leaf_;
  std::vector<Pt<T>> poly_;
  std::vector<Edge> edges_;
  T bx0_, by0_, bx1_, by1_;
  Sum<T> sum_;
};

template <class T>
std::vector<T> convert(const std::vector<Rational>& xs) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(from_rational<T>(x));
  return out;
}

}  // namespace

Prefractal::Prefractal(CarpetSpec spec, int level, Arithmetic mode)
    : spec_(std::move(spec)), level_(level), mode_(mode), cache_(std::make_shared<detail::MomentCache>()) {
  if (level < 0) throw CarpetError(ErrorCode::InvalidArgument, "negative level", level);
  side_.resize(level + 1);
  split_.assign(level + 1, 1);
  side_[0] = 1;
  for (int k = 1; k <= level; ++k) {
    split_[k] = spec_.reciprocal(k);
    side_[k] = side_[k - 1] / split_[k];
  }
  tail_.resize(level + 1);
  spread_.resize(level + 1);
  tail_[level] = 1;
  spread_[level] = Rational(1, 12);
  for (int k = level - 1; k >= 0; --k) {
    Rational a = Rational(1, split_[k + 1]);
    Rational keep = 1 - a * a;
    tail_[k] = keep * tail_[k + 1];
    spread_[k] = keep * (a * a * spread_[k + 1] + tail_[k + 1] / 12);
  }
}

bool Prefractal::contains(const Point& p) const {
  if (p.x < 0 || p.y < 0 || p.x > 1 || p.y > 1) return false;
  // closed squares: a point on a grid line may belong to either neighbour
  std::vector<std::pair<Rational, Rational>> frontier{{Rational(0), Rational(0)}};
  for (int k = 1; k <= level_; ++k) {
    const long pk = split_[k];
    const long mid = (pk - 1) / 2;
    const Rational& s = side_[k];
    std::vector<std::pair<Rational, Rational>> next;
    for (const auto& [x0, y0] : frontier) {
      Rational fx = (p.x - x0) / s;
      Rational fy = (p.y - y0) / s;
      std::vector<long> us{std::min(pk - 1, floor(fx).get_si())};
      std::vector<long> vs{std::min(pk - 1, floor(fy).get_si())};
      if (is_integer(fx) && fx > 0 && fx < pk) us.push_back(fx.get_num().get_si() - 1);
      if (is_integer(fy) && fy > 0 && fy < pk) vs.push_back(fy.get_num().get_si() - 1);
      for (long v : vs) {
        for (long u : us) {
          if (u == mid && v == mid) continue;
          next.emplace_back(x0 + u * s, y0 + v * s);
        }
      }
    }
    if (next.empty()) return false;
    frontier.swap(next);
  }
  return true;
}

template <class T>
Moments<T> Prefractal::compute(const PolyRegion& convex) const {
  // descend to the deepest surviving square that holds the whole bounding box
  const Box& b = convex.bbox();
  Rational ox = 0, oy = 0;
  int root = 0;
  while (root < level_) {
    const Rational& s = side_[root + 1];
    long u = floor((b.x0 - ox) / s).get_si();
    long v = floor((b.y0 - oy) / s).get_si();
    if (b.x1 > ox + (u + 1) * s || b.y1 > oy + (v + 1) * s) break;
    const long mid = (split_[root + 1] - 1) / 2;
    if (u == mid && v == mid) return {};
    ox += u * s;
    oy += v * s;
    ++root;
  }
  detail::CacheKey key{root, convex.translated(-ox, -oy)};
  Moments<T> local;
  bool hit = false;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if constexpr (std::is_same_v<T, Rational>) {
      if (auto it = cache_->exact.find(key); it != cache_->exact.end()) {
        local = it->second;
        hit = true;
      }
    } else {
      if (auto it = cache_->f64.find(key); it != cache_->f64.end()) {
        local = it->second;
        hit = true;
      }
    }
  }
  if (!hit) {
    auto side = convert<T>(side_);
    auto tail = convert<T>(tail_);
    auto spread = convert<T>(spread_);
    Walker<T> walker(side, split_, tail, spread, level_, key.region);
    local = walker.run(root);
    std::lock_guard<std::mutex> lock(cache_->mu);
    if constexpr (std::is_same_v<T, Rational>) {
      cache_->exact.emplace(key, local);
    } else {
      cache_->f64.emplace(key, local);
    }
  }
  if (ox == 0 && oy == 0) return local;
  return local.translated(from_rational<T>(ox), from_rational<T>(oy));
}

Moments<Rational> Prefractal::moments(const PolyRegion& convex) const {
  return compute<Rational>(convex);
}

Moments<double> Prefractal::moments_f64(const PolyRegion& convex) const {
  return compute<double>(convex);
}

Value Prefractal::region_measure(const PolyRegion& region) const {
  if (!region.inside_unit_square()) {
    throw CarpetError(ErrorCode::OutOfUnitSquare, "region leaves the unit square");
  }
  auto pieces = convex_pieces(region);
  if (mode_ == Arithmetic::exact) {
    Rational total = 0;
    for (const auto& piece : pieces) total += moments(piece).m00;
    return Value(total);
  }
  std::vector<double> parts;
  for (const auto& piece : pieces) parts.push_back(moments_f64(piece).m00);
  return Value(pairwise_sum(parts));
}

Value Prefractal::integrate(const Poly2& integrand, const PolyRegion& convex) const {
  if (integrand.is_zero()) {
    if (mode_ == Arithmetic::exact) return Value(Rational(0));
    return Value(0.0);
  }
  if (mode_ == Arithmetic::exact) return Value(carpet::integrate(integrand, moments(convex)));
  return Value(carpet::integrate(integrand, moments_f64(convex)));
}

std::size_t Prefractal::cached_regions() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->exact.size() + cache_->f64.size();
}

}  // namespace carpet
