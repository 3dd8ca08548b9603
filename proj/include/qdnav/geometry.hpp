#ifndef QDNAV_GEOMETRY_HPP
#define QDNAV_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <limits>

namespace qdnav {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct Segment {
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.x1 == b.x1 && a.y1 == b.y1 && a.x2 == b.x2 && a.y2 == b.y2;
  }
};

// Plain sqrt(dx^2+dy^2); used everywhere so scores match the brute-force
// oracles bit for bit (std::hypot rounds differently).
inline double distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

inline double distance_sq(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Distance from point p to segment s.
inline double point_segment_distance(const Point& p, const Segment& s) {
  const double vx = s.x2 - s.x1;
  const double vy = s.y2 - s.y1;
  const double wx = p.x - s.x1;
  const double wy = p.y - s.y1;
  const double len_sq = vx * vx + vy * vy;
  double t = len_sq > 0.0 ? (wx * vx + wy * vy) / len_sq : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double cx = s.x1 + t * vx;
  const double cy = s.y1 + t * vy;
  const double dx = p.x - cx;
  const double dy = p.y - cy;
  return std::sqrt(dx * dx + dy * dy);
}

// Distance along the ray (origin, unit direction (dx,dy)) to the first
// intersection with segment s, or +inf when the ray misses it.
inline double ray_segment_distance(const Point& origin, double dx, double dy,
                                   const Segment& s) {
  const double ex = s.x2 - s.x1;
  const double ey = s.y2 - s.y1;
  const double denom = dx * ey - dy * ex;
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  const double qx = s.x1 - origin.x;
  const double qy = s.y1 - origin.y;
  const double t = (qx * ey - qy * ex) / denom;   // along the ray
  const double u = (qx * dy - qy * dx) / denom;   // along the segment
  if (t < 0.0 || u < 0.0 || u > 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  return t;
}

}  // namespace qdnav

#endif  // QDNAV_GEOMETRY_HPP
