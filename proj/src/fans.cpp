#include "burniat/fans.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace burniat {

char ray_type_char(RayType t) { return "ABCD"[static_cast<int>(t)]; }

RayType parse_ray_type(char c) {
  switch (c) {
    case 'A': return RayType::A;
    case 'B': return RayType::B;
    case 'C': return RayType::C;
    case 'D': return RayType::D;
    default: throw std::invalid_argument(std::string("unknown ray type ") + c);
  }
}

Cone::Cone(std::vector<std::size_t> r) : rays(std::move(r)) {
  std::sort(rays.begin(), rays.end());
  if (std::adjacent_find(rays.begin(), rays.end()) != rays.end())
    throw FanError(FanError::Kind::InvalidFan, "cone repeats a ray");
}

namespace {

std::string cone_string(const Fan& f, const Cone& c) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    if (i) os << ", ";
    os << f.rays()[c.rays[i]];
  }
  os << '>';
  return os.str();
}

int sign(Int x) { return (x > 0) - (x < 0); }

}  // namespace

Fan::Fan(Sublattice lattice, std::vector<LatticeVector> rays, std::vector<Cone> max_cones,
         std::vector<RayType> ray_types)
    : lattice_(std::move(lattice)),
      rays_(std::move(rays)),
      max_cones_(std::move(max_cones)),
      ray_types_(std::move(ray_types)) {
  if (!ray_types_.empty() && ray_types_.size() != rays_.size())
    throw FanError(FanError::Kind::InvalidFan, "ray_types length differs from ray count");
  std::set<LatticeVector> seen;
  for (const auto& r : rays_) {
    auto c = lattice_.try_coordinates(r);
    if (!c) throw FanError(FanError::Kind::InvalidFan, "ray " + r.to_string() + " is not in the lattice");
    LatticeVector cv(*c);
    if (cv.content() != 1)
      throw FanError(FanError::Kind::InvalidFan, "ray " + r.to_string() + " is not primitive in the lattice");
    if (!seen.insert(r).second) throw FanError(FanError::Kind::InvalidFan, "repeated ray " + r.to_string());
    coords_.push_back(std::move(cv));
  }
  for (const auto& c : max_cones_)
    for (auto i : c.rays)
      if (i >= rays_.size()) throw FanError(FanError::Kind::InvalidFan, "cone index out of range");
}

IntMatrix Fan::cone_matrix(const Cone& c) const {
  IntMatrix m(dim(), c.rays.size());
  for (std::size_t j = 0; j < c.rays.size(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = coords_[c.rays[j]][i];
  return m;
}

std::optional<std::size_t> Fan::find_ray(const LatticeVector& v) const {
  auto it = std::find(rays_.begin(), rays_.end(), v);
  if (it == rays_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

Fan Fan::canonical() const {
  std::vector<std::size_t> order(rays_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rays_[a] < rays_[b]; });
  std::vector<std::size_t> new_index(rays_.size());
  std::vector<LatticeVector> rays;
  std::vector<RayType> types;
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    rays.push_back(rays_[order[k]]);
    if (!ray_types_.empty()) types.push_back(ray_types_[order[k]]);
  }
  std::vector<Cone> cones;
  for (const auto& c : max_cones_) {
    std::vector<std::size_t> idx;
    for (auto i : c.rays) idx.push_back(new_index[i]);
    cones.emplace_back(std::move(idx));
  }
  std::sort(cones.begin(), cones.end());
  return Fan(lattice_, std::move(rays), std::move(cones), std::move(types));
}

bool is_smooth_cone(const Sublattice& lattice, std::span<const LatticeVector> generators) {
  const std::size_t r = lattice.rank();
  if (generators.empty()) return true;
  if (generators.size() > r) return false;
  IntMatrix m(generators.size(), r);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto c = lattice.try_coordinates(generators[i]);
    if (!c) return false;
    for (std::size_t j = 0; j < r; ++j) m(i, j) = (*c)[j];
  }
  if (generators.size() == r) {
    Int d = determinant(m);
    return d == 1 || d == -1;
  }
  auto snf = smith_normal_form(m);
  return snf.rank == generators.size() &&
         std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(), [](Int d) { return d == 1; });
}

bool is_smooth_fan(const Fan& f) {
  for (const auto& c : f.max_cones()) {
    std::vector<LatticeVector> gens;
    for (auto i : c.rays) gens.push_back(f.rays()[i]);
    if (!is_smooth_cone(f.lattice(), gens)) return false;
  }
  return true;
}

namespace {

// Inward facet normals of a full-dimensional simplicial cone (rows), scaled so
// that normal_i . g_j = |det| * delta_ij.
struct SimplicialCone {
  IntMatrix normals;
  Int abs_det = 0;

  explicit SimplicialCone(const IntMatrix& gens) {
    Int d = determinant(gens);
    abs_det = d < 0 ? -d : d;
    normals = adjugate(gens);
    if (d < 0)
      for (std::size_t i = 0; i < normals.rows(); ++i) normals.negate_row(i);
  }

  bool full_dimensional() const { return abs_det != 0; }

  // Scaled barycentric coefficients of x.
  LatticeVector coefficients(const LatticeVector& x) const { return normals * x; }

  bool contains(const LatticeVector& x) const {
    auto c = coefficients(x);
    return std::all_of(c.coords().begin(), c.coords().end(), [](Int v) { return v >= 0; });
  }
};

// Directions of the lines cut out by (dim - 1) of the given hyperplanes.
std::vector<LatticeVector> line_candidates(const std::vector<LatticeVector>& normals, std::size_t dim) {
  std::vector<LatticeVector> out;
  if (dim == 1) {
    out.push_back(LatticeVector{1});
  } else if (dim == 2) {
    for (const auto& n : normals) out.push_back(LatticeVector{checked::neg(n[1]), n[0]});
  } else if (dim == 3) {
    for (std::size_t i = 0; i < normals.size(); ++i)
      for (std::size_t j = i + 1; j < normals.size(); ++j) {
        const auto& a = normals[i];
        const auto& b = normals[j];
        out.push_back(LatticeVector{checked::sub(checked::mul(a[1], b[2]), checked::mul(a[2], b[1])),
                                    checked::sub(checked::mul(a[2], b[0]), checked::mul(a[0], b[2])),
                                    checked::sub(checked::mul(a[0], b[1]), checked::mul(a[1], b[0]))});
      }
  } else {
    throw FanError(FanError::Kind::InvalidFan, "fan checks are implemented up to rank 3");
  }
  std::vector<LatticeVector> both;
  for (auto& v : out) {
    if (v.is_zero()) continue;
    both.push_back(v);
    both.push_back(-v);
  }
  return both;
}

// True iff the two full-dimensional simplicial cones meet in a common face,
// namely the cone over their shared rays.
bool meet_properly(const Fan& f, const Cone& a, const Cone& b) {
  const std::size_t dim = f.dim();
  SimplicialCone sa(f.cone_matrix(a));
  SimplicialCone sb(f.cone_matrix(b));
  std::vector<LatticeVector> normals;
  for (std::size_t i = 0; i < dim; ++i) {
    normals.push_back(sa.normals.row(i));
    normals.push_back(sb.normals.row(i));
  }
  std::set<std::size_t> shared;
  std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                        std::inserter(shared, shared.end()));
  for (const auto& x : line_candidates(normals, dim)) {
    if (!sa.contains(x) || !sb.contains(x)) continue;
    // x must lie in the cone over the shared rays: coefficients vanish elsewhere.
    auto ca = sa.coefficients(x);
    for (std::size_t i = 0; i < dim; ++i)
      if (ca[i] != 0 && !shared.count(a.rays[i])) return false;
  }
  return true;
}

}  // namespace

FanValidation validate_fan(const Fan& f) {
  const std::size_t dim = f.dim();
  if (dim == 0 || dim > 3) return {false, "fan checks are implemented for ranks 1 to 3", std::nullopt};
  const auto& cones = f.max_cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (cones[i].dim() != dim)
      return {false, "maximal cone " + cone_string(f, cones[i]) + " is not full-dimensional simplicial",
              std::make_pair(i, i)};
    if (determinant(f.cone_matrix(cones[i])) == 0)
      return {false, "cone " + cone_string(f, cones[i]) + " has dependent generators", std::make_pair(i, i)};
  }
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (cones[i] == cones[j])
        return {false, "cone " + cone_string(f, cones[i]) + " is listed twice", std::make_pair(i, j)};
      if (!meet_properly(f, cones[i], cones[j]))
        return {false, "cones " + cone_string(f, cones[i]) + " and " + cone_string(f, cones[j]) +
                           " do not meet in a common face",
                std::make_pair(i, j)};
    }
  return {};
}

namespace {

// Angular order of plane vectors starting from the positive x-axis.
bool angle_less(const LatticeVector& u, const LatticeVector& v) {
  auto half = [](const LatticeVector& w) { return (w[1] > 0 || (w[1] == 0 && w[0] > 0)) ? 0 : 1; };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return checked::sub(checked::mul(u[0], v[1]), checked::mul(u[1], v[0])) > 0;
}

Int cross2(const LatticeVector& u, const LatticeVector& v) {
  return checked::sub(checked::mul(u[0], v[1]), checked::mul(u[1], v[0]));
}

std::vector<std::size_t> angular_order(const Fan& f) {
  std::vector<std::size_t> order(f.rays().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return angle_less(f.ray_coordinates(a), f.ray_coordinates(b)); });
  return order;
}

std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> ridge_map(const std::vector<Cone>& cones) {
  std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (std::size_t k = 0; k < cones[c].rays.size(); ++k) {
      std::vector<std::size_t> r;
      for (std::size_t m = 0; m < cones[c].rays.size(); ++m)
        if (m != k) r.push_back(cones[c].rays[m]);
      ridges[Cone(std::move(r))].emplace_back(c, cones[c].rays[k]);
    }
  return ridges;
}

}  // namespace

CompletenessReport completeness_report(const Fan& f) {
  CompletenessReport rep;
  const auto& cones = f.max_cones();
  std::set<std::size_t> used;
  for (const auto& c : cones) used.insert(c.rays.begin(), c.rays.end());
  rep.vertices = used.size();
  rep.facets = cones.size();
  if (!validate_fan(f).valid || cones.empty()) return rep;

  auto ridges = ridge_map(cones);
  rep.ridges = ridges.size();
  rep.ridges_paired = std::all_of(ridges.begin(), ridges.end(), [](const auto& kv) { return kv.second.size() == 2; });

  // Connectivity of the cone adjacency graph through shared ridges.
  std::vector<std::size_t> parent(cones.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, owners] : ridges)
    for (std::size_t k = 1; k < owners.size(); ++k) parent[find(owners[k].first)] = find(owners[0].first);
  std::set<std::size_t> roots;
  for (std::size_t c = 0; c < cones.size(); ++c) roots.insert(find(c));
  rep.connected = roots.size() == 1;

  const std::size_t dim = f.dim();
  if (dim == 1) {
    rep.complete = cones.size() == 2 && f.ray_coordinates(cones[0].rays[0])[0] == -f.ray_coordinates(cones[1].rays[0])[0];
  } else if (dim == 2) {
    auto order = angular_order(f);
    std::set<Cone> expected;
    bool convex = order.size() >= 3;
    for (std::size_t k = 0; k < order.size() && convex; ++k) {
      std::size_t a = order[k], b = order[(k + 1) % order.size()];
      if (cross2(f.ray_coordinates(a), f.ray_coordinates(b)) <= 0) convex = false;
      expected.insert(Cone{a, b});
    }
    std::set<Cone> actual(cones.begin(), cones.end());
    rep.complete = convex && actual == expected && used.size() == f.rays().size();
  } else if (dim == 3) {
    rep.euler = static_cast<long>(rep.vertices) - static_cast<long>(rep.ridges) + static_cast<long>(rep.facets);
    rep.complete = rep.ridges_paired && rep.connected && rep.euler == 2 && used.size() == f.rays().size();
  }
  return rep;
}

LatticeVector basic_ray(RayType t) {
  switch (t) {
    case RayType::A: return {2, 0, 0, 0};
    case RayType::B: return {1, 1, 0, 0};
    case RayType::C: return {1, 1, 1, 1};
    case RayType::D: return {0, 1, 0, 1};
  }
  throw std::invalid_argument("bad ray type");
}

namespace {

const std::map<LatticeVector, RayType>& ray_type_table() {
  static const std::map<LatticeVector, RayType> table = [] {
    std::map<LatticeVector, RayType> t;
    PermGroup g = gamma6();
    for (RayType type : {RayType::A, RayType::B, RayType::C, RayType::D})
      for (const auto& v : orbit_vectors(g, basic_ray(type))) t.emplace(v, type);
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<LatticeVector>& fan6_rays() {
  static const std::vector<LatticeVector> rays = [] {
    std::vector<LatticeVector> r;
    for (const auto& [v, t] : ray_type_table()) r.push_back(v);
    return r;
  }();
  return rays;
}

RayType classify_ray(const LatticeVector& v) {
  const auto& table = ray_type_table();
  auto it = table.find(v);
  if (it == table.end()) throw FanError(FanError::Kind::NotARay, v.to_string() + " is not a ray of the N_6 fan");
  return it->second;
}

std::vector<TypedRay> restrict_rays(std::span<const LatticeVector> rays, const Sublattice& sub) {
  std::vector<TypedRay> out;
  for (const auto& v : rays) {
    auto c = sub.try_coordinates(v);
    if (!c) continue;
    LatticeVector coords(*c);
    LatticeVector primitive = sub.from_coordinates(coords.divided_exactly(coords.content()).coords());
    out.push_back({primitive, classify_ray(v)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fan cyclic_fan_2d(const Sublattice& lattice, std::vector<LatticeVector> rays, std::vector<RayType> types) {
  if (lattice.rank() != 2) throw FanError(FanError::Kind::InvalidFan, "cyclic fans need a rank-2 lattice");
  Fan bare(lattice, rays, {}, types);
  auto order = angular_order(bare);
  std::vector<Cone> cones;
  for (std::size_t k = 0; k < order.size(); ++k) cones.push_back(Cone{order[k], order[(k + 1) % order.size()]});
  std::sort(cones.begin(), cones.end());
  return Fan(lattice, std::move(rays), std::move(cones), std::move(types));
}

namespace {

// Index map of the N_6-action of one group element on the ray list.
std::vector<std::size_t> ray_permutation(const GroupElement& g, std::span<const LatticeVector> rays) {
  std::map<LatticeVector, std::size_t> index;
  for (std::size_t i = 0; i < rays.size(); ++i) index.emplace(rays[i], i);
  std::vector<std::size_t> out;
  for (const auto& r : rays) {
    auto it = index.find(g.matrix_n6() * r);
    if (it == index.end())
      throw FanError(FanError::Kind::DoesNotPreserve,
                     g.perm().cycle_string() + " moves ray " + r.to_string() + " off the ray set");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

std::vector<Cone> equivariant_closure(const Sublattice&, std::span<const LatticeVector> rays,
                                      std::span<const Cone> seeds, const PermGroup& g) {
  std::set<Cone> cones;
  for (const auto& e : g.elements()) {
    auto perm = ray_permutation(e, rays);
    for (const auto& s : seeds) {
      std::vector<std::size_t> img;
      for (auto i : s.rays) img.push_back(perm[i]);
      cones.insert(Cone(std::move(img)));
    }
  }
  return {cones.begin(), cones.end()};
}

Fan complete_from_seed(const Sublattice& lattice, std::vector<LatticeVector> rays, std::vector<RayType> types,
                       std::span<const Cone> seeds, const PermGroup& g) {
  const std::size_t dim = lattice.rank();
  if (dim == 0 || dim > 3) throw FanError(FanError::Kind::CompletionFailed, "completion needs rank 1 to 3");
  std::vector<Cone> closure = equivariant_closure(lattice, rays, seeds, g);
  Fan current(lattice, rays, closure, types);
  for (const auto& c : closure)
    if (c.dim() != dim || std::abs(determinant(current.cone_matrix(c))) != 1)
      throw FanError(FanError::Kind::CompletionFailed, "seed cone " + cone_string(current, c) + " is not smooth");
  if (auto v = validate_fan(current); !v.valid) throw FanError(FanError::Kind::CompletionFailed, v.reason);

  std::set<Cone> cones(closure.begin(), closure.end());
  const std::size_t max_steps = 64 * rays.size() * rays.size();
  for (std::size_t step = 0;; ++step) {
    if (step > max_steps) throw FanError(FanError::Kind::CompletionFailed, "completion did not terminate");
    std::vector<Cone> list(cones.begin(), cones.end());
    auto ridges = ridge_map(list);
    const Cone* open = nullptr;
    std::size_t opposite = 0;
    for (const auto& [ridge, owners] : ridges) {
      if (owners.size() > 2)
        throw FanError(FanError::Kind::CompletionFailed, "a ridge lies in more than two cones");
      if (owners.size() == 1 && !open) {
        open = &ridge;
        opposite = owners[0].second;
      }
    }
    if (!open) {
      Fan done(lattice, rays, list, types);
      if (auto v = validate_fan(done); !v.valid) throw FanError(FanError::Kind::CompletionFailed, v.reason);
      return done;
    }

    auto det_with = [&](std::size_t x) {
      std::vector<std::size_t> cols = open->rays;
      cols.push_back(x);
      IntMatrix m(dim, dim);
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = current.ray_coordinates(cols[j])[i];
      return determinant(m);
    };
    const int inner_side = sign(det_with(opposite));

    std::optional<std::size_t> chosen;
    for (std::size_t x = 0; x < rays.size() && !chosen; ++x) {
      if (x == opposite || std::find(open->rays.begin(), open->rays.end(), x) != open->rays.end()) continue;
      Int d = det_with(x);
      if (sign(d) != -inner_side || (d != 1 && d != -1)) continue;
      std::vector<std::size_t> idx = open->rays;
      idx.push_back(x);
      Cone candidate(idx);
      if (cones.count(candidate)) continue;
      SimplicialCone sc(current.cone_matrix(candidate));
      bool empty_inside = true;
      for (std::size_t y = 0; y < rays.size() && empty_inside; ++y)
        if (!std::binary_search(candidate.rays.begin(), candidate.rays.end(), y) &&
            sc.contains(current.ray_coordinates(y)))
          empty_inside = false;
      if (!empty_inside) continue;
      bool proper = std::all_of(cones.begin(), cones.end(),
                                [&](const Cone& c) { return meet_properly(current, candidate, c); });
      if (proper) chosen = x;
    }
    if (!chosen)
      throw FanError(FanError::Kind::CompletionFailed, "no ray closes the ridge " + cone_string(current, *open));
    std::vector<std::size_t> idx = open->rays;
    idx.push_back(*chosen);
    cones.insert(Cone(std::move(idx)));
  }
}

std::map<std::string, std::size_t> cone_type_census(const Fan& f) {
  if (!f.has_ray_types()) throw FanError(FanError::Kind::InvalidFan, "fan has no ray types");
  std::map<std::string, std::size_t> census;
  for (const auto& c : f.max_cones()) {
    std::string key;
    for (auto i : c.rays) key += ray_type_char(f.ray_types()[i]);
    std::sort(key.begin(), key.end());
    ++census[key];
  }
  return census;
}

std::optional<IntMatrix> fan_isomorphic_2d(const Fan& f1, const Fan& f2) {
  if (f1.dim() != 2 || f2.dim() != 2) throw FanError(FanError::Kind::InvalidFan, "2D isomorphism needs rank-2 fans");
  if (f1.rays().size() != f2.rays().size() || f1.max_cones().size() != f2.max_cones().size() ||
      f1.max_cones().empty())
    return std::nullopt;
  const Cone& base = f1.max_cones().front();
  IntMatrix u = f1.cone_matrix(base);
  Int du = determinant(u);
  if (du == 0) return std::nullopt;
  IntMatrix u_adj = adjugate(u);

  std::map<LatticeVector, std::size_t> index2;
  for (std::size_t i = 0; i < f2.rays().size(); ++i) index2.emplace(f2.ray_coordinates(i), i);
  std::set<Cone> cones2(f2.max_cones().begin(), f2.max_cones().end());

  for (const auto& target : f2.max_cones())
    for (int flip = 0; flip < 2; ++flip) {
      IntMatrix w(2, 2);
      for (std::size_t i = 0; i < 2; ++i) {
        w(i, 0) = f2.ray_coordinates(target.rays[flip])[i];
        w(i, 1) = f2.ray_coordinates(target.rays[1 - flip])[i];
      }
      IntMatrix num = w * u_adj;  // = det(u) * M
      bool integral = true;
      IntMatrix m(2, 2);
      for (std::size_t i = 0; i < 2 && integral; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          if (num(i, j) % du != 0) {
            integral = false;
            break;
          }
          m(i, j) = num(i, j) / du;
        }
      if (!integral) continue;
      Int dm = determinant(m);
      if (dm != 1 && dm != -1) continue;
      std::vector<std::size_t> image(f1.rays().size());
      bool ok = true;
      for (std::size_t i = 0; i < f1.rays().size() && ok; ++i) {
        auto it = index2.find(m * f1.ray_coordinates(i));
        if (it == index2.end()) ok = false;
        else image[i] = it->second;
      }
      if (!ok) continue;
      for (const auto& c : f1.max_cones()) {
        std::vector<std::size_t> img;
        for (auto i : c.rays) img.push_back(image[i]);
        if (!cones2.count(Cone(std::move(img)))) {
          ok = false;
          break;
        }
      }
      if (ok) return m;
    }
  return std::nullopt;
}

std::vector<RayOrbit> orbits_of_rays(const Fan& f, const PermGroup& g) {
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& e : g.elements()) perms.push_back(ray_permutation(e, f.rays()));
  std::vector<bool> seen(f.rays().size(), false);
  std::vector<RayOrbit> orbits;
  for (std::size_t i = 0; i < f.rays().size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> orbit;
    for (const auto& p : perms) orbit.insert(p[i]);
    RayOrbit o;
    o.rays.assign(orbit.begin(), orbit.end());
    for (auto j : o.rays) seen[j] = true;
    if (f.has_ray_types()) o.type = f.ray_types()[i];
    orbits.push_back(std::move(o));
  }
  return orbits;
}

}  // namespace burniat
