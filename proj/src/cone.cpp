#include "coneindex/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coneindex {

namespace {

void sort_rays(std::vector<RationalVector>& rays) {
  std::sort(rays.begin(), rays.end(), lex_less);
}

std::vector<RationalVector> dedupe_sorted(std::vector<RationalVector> rays) {
  sort_rays(rays);
  rays.erase(std::unique(rays.begin(), rays.end(),
                         [](const RationalVector& a, const RationalVector& b) { return a == b; }),
             rays.end());
  return rays;
}

// Incremental double description state: cone = span(lineality) + cone(rays).
struct DDState {
  Index dim;
  std::vector<RationalVector> lineality;
  std::vector<RationalVector> rays;
  std::vector<RationalVector> processed;  // inequalities inserted so far

  void insert(const RationalVector& a);

 private:
  bool adjacent(const RationalVector& p, const RationalVector& q) const;
};

void DDState::insert(const RationalVector& a) {
  // If the lineality space is not contained in the hyperplane of `a`, one of
  // its directions turns into a ray and everything else is sheared into a_perp.
  Index pivot = -1;
  for (size_t i = 0; i < lineality.size(); ++i) {
    if (a.dot(lineality[i]) != 0) {
      pivot = static_cast<Index>(i);
      break;
    }
  }
  if (pivot >= 0) {
    RationalVector l0 = lineality[static_cast<size_t>(pivot)];
    if (a.dot(l0) < 0) l0 = -l0;
    const Rational al0 = a.dot(l0);
    std::vector<RationalVector> new_lin;
    for (size_t i = 0; i < lineality.size(); ++i) {
      if (static_cast<Index>(i) == pivot) continue;
      RationalVector l = lineality[i] - (a.dot(lineality[i]) / al0) * l0;
      if (!is_zero(l)) new_lin.push_back(primitive_ray(l));
    }
    std::vector<RationalVector> new_rays;
    for (const auto& r : rays) {
      RationalVector v = r - (a.dot(r) / al0) * l0;
      if (!is_zero(v)) new_rays.push_back(primitive_ray(v));
    }
    new_rays.push_back(primitive_ray(l0));
    lineality = std::move(new_lin);
    rays = dedupe_sorted(std::move(new_rays));
    processed.push_back(a);
    return;
  }

  std::vector<const RationalVector*> plus, minus;
  std::vector<RationalVector> kept;
  for (const auto& r : rays) {
    const Rational s = a.dot(r);
    if (s > 0) {
      plus.push_back(&r);
      kept.push_back(r);
    } else if (s == 0) {
      kept.push_back(r);
    } else {
      minus.push_back(&r);
    }
  }
  if (!minus.empty()) {
    for (const auto* p : plus) {
      for (const auto* q : minus) {
        if (!adjacent(*p, *q)) continue;
        RationalVector w = a.dot(*p) * (*q) - a.dot(*q) * (*p);
        if (!is_zero(w)) kept.push_back(primitive_ray(w));
      }
    }
    rays = dedupe_sorted(std::move(kept));
  }
  processed.push_back(a);
}

bool DDState::adjacent(const RationalVector& p, const RationalVector& q) const {
  std::vector<RationalVector> tight;
  for (const auto& b : processed) {
    if (b.dot(p) == 0 && b.dot(q) == 0) tight.push_back(b);
  }
  const Index target = dim - static_cast<Index>(lineality.size()) - 2;
  if (target < 0) return false;
  if (static_cast<Index>(tight.size()) < target) return false;
  return rank(columns(dim, tight)) == target;
}

void check_input_vectors(Index dim, const std::vector<RationalVector>& vs, const char* what) {
  if (dim < 1) throw ConeError("ambient dimension must be >= 1");
  if (vs.empty()) throw ConeError(std::string("at least one ") + what + " required");
  for (const auto& v : vs) {
    if (v.size() != dim) throw ConeError(std::string(what) + " of wrong dimension");
    if (is_zero(v)) throw ConeError(std::string("zero vector rejected among ") + what);
  }
}

std::vector<RationalVector> canonical_rays(const std::vector<RationalVector>& vs) {
  std::vector<RationalVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(primitive_ray(v));
  return dedupe_sorted(std::move(out));
}

// Generators of a cone given as rays plus lineality: the +-pairs make the
// lineality space visible in a plain generator list.
std::vector<RationalVector> generators_from_dd(const DoubleDescription& dd) {
  std::vector<RationalVector> gens = dd.rays;
  for (const auto& l : dd.lineality) {
    gens.push_back(l);
    gens.push_back(RationalVector(-l));
  }
  return dedupe_sorted(std::move(gens));
}

void cross_validate(const Cone& c) {
  for (const auto& g : c.generators)
    for (const auto& a : c.inequalities)
      if (a.dot(g) < 0) throw ConeError("representation cross-validation failed");
}

}  // namespace

DoubleDescription double_description(Index dim, const std::vector<RationalVector>& inequalities) {
  check_input_vectors(dim, inequalities, "inequality");
  DDState st;
  st.dim = dim;
  for (Index i = 0; i < dim; ++i) st.lineality.push_back(unit_vector(dim, i));
  for (const auto& a : canonical_rays(inequalities)) st.insert(a);
  DoubleDescription dd;
  // Extremality prune: a ray is extreme iff its tight constraints have
  // rank dim - lineality - 1.
  const Index target = dim - static_cast<Index>(st.lineality.size()) - 1;
  for (const auto& r : st.rays) {
    std::vector<RationalVector> tight;
    for (const auto& b : st.processed)
      if (b.dot(r) == 0) tight.push_back(b);
    if (rank(columns(dim, tight)) == target) dd.rays.push_back(r);
  }
  dd.rays = dedupe_sorted(std::move(dd.rays));
  dd.lineality = std::move(st.lineality);
  return dd;
}

Cone Cone::from_generators(Index dim, std::vector<RationalVector> gens) {
  check_input_vectors(dim, gens, "generator");
  Cone c;
  c.ambient_dim = dim;
  // The dual cone {y : <g,y> >= 0} yields the facet normals.
  const auto dual_dd = double_description(dim, gens);
  c.inequalities = dual_dd.rays;
  for (const auto& l : dual_dd.lineality) {
    c.inequalities.push_back(l);
    c.inequalities.push_back(RationalVector(-l));
  }
  c.inequalities = dedupe_sorted(std::move(c.inequalities));
  if (c.inequalities.empty()) {
    // The generators span the whole space as a cone: empty H-representation.
    std::vector<RationalVector> axes;
    for (Index i = 0; i < dim; ++i) {
      axes.push_back(unit_vector(dim, i));
      axes.push_back(RationalVector(-unit_vector(dim, i)));
    }
    c.generators = dedupe_sorted(std::move(axes));
    c.pointed = false;
    c.solid = true;
    return c;
  }
  // Re-derive the extreme rays from the facet description: this both prunes
  // redundant input generators and canonicalizes the V-representation.
  const auto primal_dd = double_description(dim, c.inequalities);
  c.generators = generators_from_dd(primal_dd);
  c.pointed = primal_dd.lineality.empty();
  c.solid = rank(columns(dim, gens)) == dim;
  cross_validate(c);
  // Every input generator must lie in the reconstructed cone.
  for (const auto& g : gens)
    if (!c.contains(g)) throw ConeError("double description round-trip failed");
  return c;
}

Cone Cone::from_inequalities(Index dim, std::vector<RationalVector> ineqs) {
  check_input_vectors(dim, ineqs, "inequality");
  Cone c;
  c.ambient_dim = dim;
  const auto dd = double_description(dim, ineqs);
  c.generators = generators_from_dd(dd);
  if (c.generators.empty()) {
    // The cone is {0}; it has no rays, which we reject as degenerate input.
    throw ConeError("cone defined by the inequalities is the zero cone");
  }
  c.pointed = dd.lineality.empty();
  c.solid = rank(columns(dim, c.generators)) == dim;
  // Canonical irredundant H-representation: extreme rays of the dual.
  const auto dual_dd = double_description(dim, c.generators);
  c.inequalities = dual_dd.rays;
  for (const auto& l : dual_dd.lineality) {
    c.inequalities.push_back(l);
    c.inequalities.push_back(RationalVector(-l));
  }
  c.inequalities = dedupe_sorted(std::move(c.inequalities));
  if (c.inequalities.empty()) {
    c.inequalities.push_back(unit_vector(dim, 0));
    c.inequalities.push_back(RationalVector(-unit_vector(dim, 0)));
    sort_rays(c.inequalities);
  }
  cross_validate(c);
  for (const auto& a : ineqs)
    for (const auto& g : c.generators)
      if (primitive_ray(a).dot(g) < 0) throw ConeError("double description round-trip failed");
  return c;
}

bool Cone::contains(const RationalVector& x) const {
  for (const auto& a : inequalities)
    if (a.dot(x) < 0) return false;
  return true;
}

bool Cone::same_set_as(const Cone& other) const {
  if (ambient_dim != other.ambient_dim) return false;
  for (const auto& g : generators)
    if (!other.contains(g)) return false;
  for (const auto& g : other.generators)
    if (!contains(g)) return false;
  return true;
}

Cone dual_cone(const Cone& c) {
  Cone d;
  d.ambient_dim = c.ambient_dim;
  d.generators = c.inequalities;
  d.inequalities = c.generators;
  d.pointed = c.solid;
  d.solid = c.pointed;
  return d;
}

namespace {

std::vector<int> tight_generators(const Cone& c, const RationalVector& functional) {
  std::vector<int> out;
  for (size_t j = 0; j < c.generators.size(); ++j)
    if (functional.dot(c.generators[j]) == 0) out.push_back(static_cast<int>(j));
  return out;
}

Face make_face(const Cone& c, std::vector<int> gen_indices) {
  Face f;
  f.generator_indices = std::move(gen_indices);
  std::vector<RationalVector> gens;
  f.relint_point = RationalVector::Zero(c.ambient_dim);
  for (int j : f.generator_indices) {
    gens.push_back(c.generators[static_cast<size_t>(j)]);
    f.relint_point += c.generators[static_cast<size_t>(j)];
  }
  f.span_basis = column_space_basis(columns(c.ambient_dim, gens));
  f.dim = f.span_basis.cols();
  return f;
}

}  // namespace

FaceLattice face_lattice(const Cone& c) {
  if (!c.pointed) throw ConeError("face_lattice requires a pointed cone");
  const size_t m = c.generators.size();
  const size_t k = c.inequalities.size();

  // tight[i] = generator set of the exposed face cut out by inequality i.
  std::vector<std::vector<bool>> tight(k, std::vector<bool>(m, false));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < m; ++j)
      tight[i][j] = c.inequalities[i].dot(c.generators[j]) == 0;

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> all_gens(m);
  for (size_t j = 0; j < m; ++j) all_gens[j] = static_cast<int>(j);
  seen.insert(all_gens);
  queue.push_back(all_gens);
  seen.insert({});  // the apex {0}
  queue.push_back({});

  // BFS over exposed faces: intersect with one more inequality at a time.
  for (size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> cur = queue[head];
    for (size_t i = 0; i < k; ++i) {
      std::vector<int> cut;
      for (int j : cur)
        if (tight[i][static_cast<size_t>(j)]) cut.push_back(j);
      if (cut == cur) continue;
      if (seen.insert(cut).second) queue.push_back(cut);
    }
  }

  FaceLattice lat;
  for (const auto& s : seen) lat.faces.push_back(make_face(c, s));
  std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.generator_indices < b.generator_indices;
  });
  std::set<Index> dims;
  for (const auto& f : lat.faces) dims.insert(f.dim);
  lat.dims_present.assign(dims.begin(), dims.end());
  for (size_t a = 0; a < lat.faces.size(); ++a) {
    for (size_t b = 0; b < lat.faces.size(); ++b) {
      if (a == b) continue;
      const auto& fa = lat.faces[a].generator_indices;
      const auto& fb = lat.faces[b].generator_indices;
      if (fa.size() < fb.size() &&
          std::includes(fb.begin(), fb.end(), fa.begin(), fa.end()))
        lat.containment.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return lat;
}

int FaceLattice::index_of(const std::vector<int>& generator_indices) const {
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].generator_indices == generator_indices) return static_cast<int>(i);
  return -1;
}

std::vector<int> FaceLattice::faces_of_dim(Index d) const {
  std::vector<int> out;
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == d) out.push_back(static_cast<int>(i));
  return out;
}

bool FaceLattice::contains_face(int child, int parent) const {
  const auto& a = faces[static_cast<size_t>(child)].generator_indices;
  const auto& b = faces[static_cast<size_t>(parent)].generator_indices;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face dual_face(const Face& f, const Cone& c) {
  for (int j : f.generator_indices)
    if (j < 0 || j >= static_cast<int>(c.generators.size()))
      throw ConeError("dual_face: generator index out of range");
  // The face key must be closed: generators vanishing on every inequality
  // that vanishes on the face reproduce exactly the key.
  std::vector<size_t> tight_ineqs;
  for (size_t i = 0; i < c.inequalities.size(); ++i) {
    bool tight = true;
    for (int j : f.generator_indices)
      if (c.inequalities[i].dot(c.generators[static_cast<size_t>(j)]) != 0) {
        tight = false;
        break;
      }
    if (tight) tight_ineqs.push_back(i);
  }
  std::vector<int> closure;
  for (size_t j = 0; j < c.generators.size(); ++j) {
    bool in_all = true;
    for (size_t i : tight_ineqs)
      if (c.inequalities[i].dot(c.generators[j]) != 0) {
        in_all = false;
        break;
      }
    if (in_all) closure.push_back(static_cast<int>(j));
  }
  if (closure != f.generator_indices)
    throw ConeError("dual_face: input is not a face of the cone");
  const Cone d = dual_cone(c);
  return make_face(d, tight_generators(d, f.relint_point));
}

bool is_exposed(const Face& f, const Cone& c) {
  const Face df = dual_face(f, c);
  const RationalVector y = df.relint_point;
  std::vector<int> cut;
  for (size_t j = 0; j < c.generators.size(); ++j)
    if (y.dot(c.generators[j]) == 0) cut.push_back(static_cast<int>(j));
  return cut == f.generator_indices;
}

RationalVector project_onto_cone(const RationalVector& x, const Cone& c) {
  return project_onto_cone(x, c, face_lattice(c));
}

RationalVector project_onto_cone(const RationalVector& x, const Cone& c,
                                 const FaceLattice& lattice) {
  if (!c.pointed) throw ConeError("project_onto_cone requires a pointed cone");
  for (const auto& f : lattice.faces) {
    const RationalVector p =
        f.dim == 0 ? RationalVector(RationalVector::Zero(c.ambient_dim))
                   : project_onto_span(f.span_basis, x);
    if (!c.contains(p)) continue;
    bool in_polar = true;
    const RationalVector residual = x - p;
    for (const auto& g : c.generators) {
      if (g.dot(residual) > 0) {
        in_polar = false;
        break;
      }
    }
    if (!in_polar) continue;
    if (p.dot(residual) != 0) continue;
    return p;
  }
  throw ConeError("projection candidate search failed");  // unreachable for valid cones
}

}  // namespace coneindex
