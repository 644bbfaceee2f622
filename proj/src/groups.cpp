#include "burniat/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace burniat {

namespace {

constexpr char kColorNames[] = {'R', 'G', 'B'};

int color_index(Color c) { return static_cast<int>(c); }

}  // namespace

std::string CurveLabel::name() const { return std::string(1, kColorNames[color_index(color)]) + std::to_string(index); }

CurveLabel CurveLabel::parse(const std::string& name) {
  if (name.size() != 2 || name[1] < '0' || name[1] > '3') throw std::invalid_argument("bad curve label: " + name);
  std::uint8_t idx = static_cast<std::uint8_t>(name[1] - '0');
  switch (name[0]) {
    case 'R': return {Color::R, idx};
    case 'G': return {Color::G, idx};
    case 'B': return {Color::B, idx};
    default: throw std::invalid_argument("bad curve label: " + name);
  }
}

Permutation::Permutation() { std::iota(images_.begin(), images_.end(), std::uint8_t{0}); }

Permutation::Permutation(std::array<std::uint8_t, kNumLabels> images) : images_(images) {
  std::array<bool, kNumLabels> seen{};
  for (auto i : images_) {
    if (i >= kNumLabels || seen[i]) throw std::invalid_argument("not a permutation of the 12 labels");
    seen[i] = true;
  }
}

Permutation Permutation::from_cycles(const std::vector<std::vector<std::string>>& cycles) {
  Permutation p;
  std::array<bool, kNumLabels> touched{};
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      auto from = CurveLabel::parse(cyc[i]).id();
      auto to = CurveLabel::parse(cyc[(i + 1) % cyc.size()]).id();
      if (touched[from]) throw std::invalid_argument("cycles are not disjoint");
      touched[from] = true;
      p.images_[from] = to;
    }
  }
  return Permutation(p.images_);
}

Permutation Permutation::inverse() const {
  std::array<std::uint8_t, kNumLabels> inv{};
  for (std::uint8_t i = 0; i < kNumLabels; ++i) inv[images_[i]] = i;
  return Permutation(inv);
}

bool Permutation::is_identity() const {
  for (std::uint8_t i = 0; i < kNumLabels; ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::array<bool, kNumLabels> seen{};
  for (std::uint8_t i = 0; i < kNumLabels; ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    std::uint8_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << CurveLabel::from_id(j).name();
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "id" : s;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  std::array<std::uint8_t, kNumLabels> out{};
  for (std::uint8_t i = 0; i < kNumLabels; ++i) out[i] = g.images_[h.images_[i]];
  return Permutation(out);
}

bool is_gamma6_shape(const Permutation& p) {
  std::array<int, 3> color_map{};
  for (int c = 0; c < 3; ++c) {
    int target = -1;
    for (std::uint8_t i = 0; i < 4; ++i) {
      auto img = p(CurveLabel{static_cast<Color>(c), i});
      if (target == -1) target = color_index(img.color);
      if (color_index(img.color) != target) return false;
      // Interior stays interior, boundary stays boundary.
      if (img.is_boundary() != (i == 0 || i == 3)) return false;
    }
    color_map[c] = target;
  }
  // Cyclic rotations only.
  int shift = (color_map[0] + 3) % 3;
  for (int c = 0; c < 3; ++c)
    if (color_map[c] != (c + shift) % 3) return false;
  // The boundary swap is applied uniformly.
  auto r0 = p(CurveLabel{Color::R, 0}).index;
  for (int c = 1; c < 3; ++c)
    if (p(CurveLabel{static_cast<Color>(c), 0}).index != r0) return false;
  return true;
}

namespace {

// Sign of the action on cocharacters: -1 iff the Cremona swap is present.
Int cremona_sign(const Permutation& p) { return p(CurveLabel{Color::R, 0}).index == 3 ? -1 : 1; }

}  // namespace

IntMatrix derived_matrix_ny(const Permutation& p) {
  if (!is_gamma6_shape(p)) throw GroupError(GroupError::Kind::MissingMatrix, p.cycle_string() + " is not in Γ_6");
  const Int eps = cremona_sign(p);
  IntMatrix m(6, 6);
  for (int c = 0; c < 3; ++c)
    for (std::uint8_t i = 1; i <= 2; ++i) {
      auto img = p(CurveLabel{static_cast<Color>(c), i});
      m(2 * color_index(img.color) + (img.index - 1), 2 * c + (i - 1)) = eps;
    }
  return m;
}

IntMatrix derived_matrix_n6(const Permutation& p) {
  if (!is_gamma6_shape(p)) throw GroupError(GroupError::Kind::MissingMatrix, p.cycle_string() + " is not in Γ_6");
  const Int eps = cremona_sign(p);
  IntMatrix m(4, 4);
  m(0, 0) = eps;
  for (int c = 0; c < 3; ++c) {
    auto img = p(CurveLabel{static_cast<Color>(c), 1});
    Int s = img.index == 1 ? 1 : -1;
    m(1 + color_index(img.color), 1 + c) = eps * s;
  }
  return m;
}

GroupElement::GroupElement(Permutation perm) : perm_(perm) {
  if (is_gamma6_shape(perm_)) {
    matrix_ny_ = derived_matrix_ny(perm_);
    matrix_n6_ = derived_matrix_n6(perm_);
  }
}

const IntMatrix& GroupElement::matrix_ny() const {
  if (!matrix_ny_) throw GroupError(GroupError::Kind::MissingMatrix, perm_.cycle_string() + " has no lattice action");
  return *matrix_ny_;
}

const IntMatrix& GroupElement::matrix_n6() const {
  if (!matrix_n6_) throw GroupError(GroupError::Kind::MissingMatrix, perm_.cycle_string() + " has no lattice action");
  return *matrix_n6_;
}

GroupElement GroupElement::inverse() const { return GroupElement(perm_.inverse()); }

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  Permutation p = g.perm_ * h.perm_;
  if (g.has_matrices() && h.has_matrices())
    return GroupElement(p, *g.matrix_ny_ * *h.matrix_ny_, *g.matrix_n6_ * *h.matrix_n6_);
  return GroupElement(p);
}

PermGroup::PermGroup(std::vector<GroupElement> generators) : generators_(std::move(generators)) {
  std::set<GroupElement> seen{GroupElement()};
  std::vector<GroupElement> frontier{GroupElement()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : generators_) {
        GroupElement y = s * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());
}

PermGroup PermGroup::from_elements(std::vector<GroupElement> elements) {
  // A subset closed under products; its elements also generate it.
  return PermGroup(std::move(elements));
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), GroupElement(p));
}

bool PermGroup::is_abelian() const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if ((a * b).perm() != (b * a).perm()) return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const auto& e) { return other.contains(e.perm()); });
}

GroupElement color_cycle() {
  return GroupElement(Permutation::from_cycles(
      {{"R0", "G0", "B0"}, {"R1", "G1", "B1"}, {"R2", "G2", "B2"}, {"R3", "G3", "B3"}}));
}

GroupElement interior_swap(Color color) {
  std::string c(1, kColorNames[color_index(color)]);
  return GroupElement(Permutation::from_cycles({{c + "1", c + "2"}}));
}

GroupElement cremona() { return GroupElement(Permutation::from_cycles({{"R0", "R3"}, {"G0", "G3"}, {"B0", "B3"}})); }

PermGroup gamma6() {
  return PermGroup({color_cycle(), interior_swap(Color::R), interior_swap(Color::G), interior_swap(Color::B),
                    cremona()});
}

std::size_t element_order(const GroupElement& g) {
  std::size_t n = 1;
  Permutation p = g.perm();
  while (!p.is_identity()) {
    p = p * g.perm();
    ++n;
  }
  return n;
}

TripleSet make_triples(const std::vector<std::array<const char*, 3>>& triples) {
  TripleSet out;
  for (const auto& t : triples) {
    std::set<CurveLabel> s;
    for (const char* name : t) s.insert(CurveLabel::parse(name));
    out.insert(std::move(s));
  }
  return out;
}

namespace {

const IntMatrix& action_matrix(const GroupElement& g, std::size_t dim) {
  if (dim == 4) return g.matrix_n6();
  if (dim == 6) return g.matrix_ny();
  throw std::invalid_argument("group acts on vectors of length 4 (N_6) or 6 (N_Y) only");
}

}  // namespace

std::set<LatticeVector> orbit_vectors(const PermGroup& g, const LatticeVector& v) {
  std::set<LatticeVector> orbit;
  for (const auto& e : g.elements()) orbit.insert(action_matrix(e, v.size()) * v);
  return orbit;
}

PermGroup vector_stabilizer(const PermGroup& g, const LatticeVector& v) {
  std::vector<GroupElement> keep;
  for (const auto& e : g.elements())
    if (action_matrix(e, v.size()) * v == v) keep.push_back(e);
  return PermGroup::from_elements(std::move(keep));
}

PermGroup stabilizer_of_triple_set(const PermGroup& g, const TripleSet& triples) {
  for (const auto& t : triples) {
    std::set<Color> colors;
    for (const auto& l : t) colors.insert(l.color);
    if (t.size() != 3 || colors.size() != 3)
      throw std::invalid_argument("each triple must contain one curve of each colour");
  }
  std::vector<GroupElement> keep;
  for (const auto& e : g.elements()) {
    TripleSet moved;
    for (const auto& t : triples) {
      std::set<CurveLabel> m;
      for (const auto& l : t) m.insert(e.perm()(l));
      moved.insert(std::move(m));
    }
    if (moved == triples) keep.push_back(e);
  }
  return PermGroup::from_elements(std::move(keep));
}

PermGroup extend_group(const PermGroup& g, const GroupElement& extra) {
  std::set<int> targets;
  for (int c = 0; c < 3; ++c) {
    std::set<int> img;
    for (std::uint8_t i = 0; i < 4; ++i) img.insert(color_index(extra.perm()(CurveLabel{static_cast<Color>(c), i}).color));
    if (img.size() != 1)
      throw GroupError(GroupError::Kind::NotPartitionPreserving,
                       extra.perm().cycle_string() + " does not preserve the colour classes");
    targets.insert(*img.begin());
  }
  if (targets.size() != 3)
    throw GroupError(GroupError::Kind::NotPartitionPreserving,
                     extra.perm().cycle_string() + " merges colour classes");
  std::vector<GroupElement> gens = g.generators();
  if (gens.empty()) gens = g.elements();
  gens.push_back(extra);
  return PermGroup(std::move(gens));
}

PermGroup center(const PermGroup& g) {
  std::vector<GroupElement> keep;
  for (const auto& z : g.elements()) {
    bool central = std::all_of(g.elements().begin(), g.elements().end(),
                               [&](const auto& x) { return (z * x).perm() == (x * z).perm(); });
    if (central) keep.push_back(z);
  }
  return PermGroup::from_elements(std::move(keep));
}

PermGroup kernel_of_lattice_action(const PermGroup& g, const Sublattice& sub) {
  std::vector<GroupElement> keep;
  for (const auto& e : g.elements()) {
    const IntMatrix& m = action_matrix(e, sub.ambient_rank());
    if (sub.image_under(m) != sub)
      throw GroupError(GroupError::Kind::DoesNotPreserve,
                       e.perm().cycle_string() + " does not preserve " + sub.to_string());
    bool trivial = std::all_of(sub.basis().begin(), sub.basis().end(), [&](const auto& b) { return m * b == b; });
    if (trivial) keep.push_back(e);
  }
  return PermGroup::from_elements(std::move(keep));
}

PermGroup setwise_lattice_stabilizer(const PermGroup& g, const Sublattice& sub) {
  std::vector<GroupElement> keep;
  for (const auto& e : g.elements())
    if (sub.image_under(action_matrix(e, sub.ambient_rank())) == sub) keep.push_back(e);
  return PermGroup::from_elements(std::move(keep));
}

GroupSignature group_signature(const PermGroup& g) {
  GroupSignature s;
  s.order = g.order();
  s.abelian = g.is_abelian();
  for (const auto& e : g.elements()) ++s.element_orders[element_order(e)];
  return s;
}

std::string identify_small_group(const PermGroup& g) {
  struct Known {
    const char* label;
    GroupSignature sig;
  };
  using M = std::map<std::size_t, std::size_t>;
  static const std::vector<Known> known{
      {"trivial", {1, true, M{{1, 1}}}},
      {"C2", {2, true, M{{1, 1}, {2, 1}}}},
      {"C3", {3, true, M{{1, 1}, {3, 2}}}},
      {"C2xC2", {4, true, M{{1, 1}, {2, 3}}}},
      {"C4", {4, true, M{{1, 1}, {2, 1}, {4, 2}}}},
      {"C3xC2", {6, true, M{{1, 1}, {2, 1}, {3, 2}, {6, 2}}}},
      {"S3", {6, false, M{{1, 1}, {2, 3}, {3, 2}}}},
      {"C2xC2xC2", {8, true, M{{1, 1}, {2, 7}}}},
      {"C4xC2", {8, true, M{{1, 1}, {2, 3}, {4, 4}}}},
      {"C8", {8, true, M{{1, 1}, {2, 1}, {4, 2}, {8, 4}}}},
      {"D4", {8, false, M{{1, 1}, {2, 5}, {4, 2}}}},
      {"Q8", {8, false, M{{1, 1}, {2, 1}, {4, 6}}}},
      {"C3xC2xC2", {12, true, M{{1, 1}, {2, 3}, {3, 2}, {6, 6}}}},
      {"C12", {12, true, M{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}}},
      {"A4", {12, false, M{{1, 1}, {2, 3}, {3, 8}}}},
      {"D6", {12, false, M{{1, 1}, {2, 7}, {3, 2}, {6, 2}}}},
      {"Dic3", {12, false, M{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}}},
      {"C2xA4", {24, false, M{{1, 1}, {2, 7}, {3, 8}, {6, 8}}}},
      {"S4", {24, false, M{{1, 1}, {2, 9}, {3, 8}, {4, 6}}}},
      {"SL(2,3)", {24, false, M{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}}},
      {"C2xC2xA4", {48, false, M{{1, 1}, {2, 15}, {3, 8}, {6, 24}}}},
  };
  GroupSignature s = group_signature(g);
  for (const auto& k : known)
    if (k.sig == s) return k.label;
  return "unrecognized(" + std::to_string(s.order) + ")";
}

}  // namespace burniat
