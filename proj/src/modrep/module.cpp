#include "springerkit/modrep/module.hpp"

#include <mutex>
#include <string>

#include "springerkit/error.hpp"

namespace springerkit {

namespace {

// Above this many field multiplications, relations are checked on a sample.
constexpr double kFullCheckBudget = 2e8;
constexpr std::size_t kSampledElements = 64;

void check_shapes(const FieldPtr& field, std::size_t dim, const std::vector<Matrix>& images) {
  for (const Matrix& m : images) {
    if (!m.field() || !m.field()->same_as(*field)) throw Error(ErrorKind::FieldMismatch, "module matrix over another field");
    if (m.rows() != dim || m.cols() != dim)
      throw Error(ErrorKind::DimensionMismatch, "module matrices must all be " + std::to_string(dim) + "x" +
                                                    std::to_string(dim));
  }
}

std::string word_text(const FiniteGroup& g, Elem x) {
  if (x == 0) return "1";
  std::string out;
  for (auto i : g.word(x)) {
    if (!out.empty()) out += "*";
    out += "g" + std::to_string(i);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Algebra

AlgebraPtr Algebra::make(FieldPtr field, std::size_t dim, std::vector<FieldElem> constants) {
  if (constants.size() != dim * dim * dim)
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(dim * dim * dim) + " structure constants");
  if (dim == 0) throw Error(ErrorKind::NoUnit, "the zero algebra has no unit");
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->field_ = std::move(field);
  a->m_ = dim;
  a->c_ = std::move(constants);
  const Field& f = *a->field_;
  const std::size_t m = dim;

  // (b_i b_j) b_l == b_i (b_j b_l)
  std::vector<FieldElem> lhs(m), rhs(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        std::fill(lhs.begin(), lhs.end(), f.zero());
        std::fill(rhs.begin(), rhs.end(), f.zero());
        for (std::size_t k = 0; k < m; ++k) {
          const FieldElem x = a->constant(i, j, k);
          if (x.code != 0)
            for (std::size_t t = 0; t < m; ++t) lhs[t] = f.add(lhs[t], f.mul(x, a->constant(k, l, t)));
          const FieldElem y = a->constant(j, l, k);
          if (y.code != 0)
            for (std::size_t t = 0; t < m; ++t) rhs[t] = f.add(rhs[t], f.mul(y, a->constant(i, k, t)));
        }
        if (lhs != rhs)
          throw Error(ErrorKind::NotAssociative, "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" +
                                                     std::to_string(l) + " differs from b" + std::to_string(i) +
                                                     " (b" + std::to_string(j) + " b" + std::to_string(l) + ")");
      }

  // sum_k u_k c(k,j,l) = delta_jl and sum_k u_k c(j,k,l) = delta_jl
  Matrix sys(a->field_, 2 * m * m, m);
  std::vector<FieldElem> rhs_unit(2 * m * m, f.zero());
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l) {
      const std::size_t r = j * m + l;
      for (std::size_t k = 0; k < m; ++k) {
        sys(r, k) = a->constant(k, j, l);
        sys(m * m + r, k) = a->constant(j, k, l);
      }
      if (j == l) rhs_unit[r] = rhs_unit[m * m + r] = f.one();
    }
  auto unit = solve(sys, rhs_unit);
  if (!unit) throw Error(ErrorKind::NoUnit, "structure constants admit no two-sided unit");
  a->unit_ = std::move(*unit);
  return a;
}

std::vector<FieldElem> Algebra::multiply(std::span<const FieldElem> a, std::span<const FieldElem> b) const {
  const Field& f = *field_;
  std::vector<FieldElem> out(m_, f.zero());
  for (std::size_t i = 0; i < m_; ++i) {
    if (a[i].code == 0) continue;
    for (std::size_t j = 0; j < m_; ++j) {
      if (b[j].code == 0) continue;
      const FieldElem s = f.mul(a[i], b[j]);
      f.axpy(out, s, std::span<const FieldElem>(c_.data() + (i * m_ + j) * m_, m_));
    }
  }
  return out;
}

Matrix Algebra::left_multiplication(std::size_t i) const {
  Matrix l(field_, m_, m_);
  for (std::size_t j = 0; j < m_; ++j)
    for (std::size_t k = 0; k < m_; ++k) l(k, j) = constant(i, j, k);
  return l;
}

bool Algebra::same_as(const Algebra& other) const noexcept {
  return this == &other || (field_->same_as(*other.field_) && m_ == other.m_ && c_ == other.c_);
}

AlgebraPtr group_algebra(const GroupPtr& group, const FieldPtr& field) {
  const std::size_t n = group->order();
  std::vector<FieldElem> c(n * n * n, field->zero());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) c[(a * n + b) * n + group->mul(a, b)] = field->one();
  return Algebra::make(field, n, std::move(c));
}

// ---------------------------------------------------------------- GModule

struct GModule::ImageCache {
  std::once_flag once;
  std::vector<Matrix> images;
};

namespace {

std::vector<Matrix> tree_images(const FiniteGroup& g, const FieldPtr& field, std::size_t dim,
                                const std::vector<Matrix>& gens) {
  std::vector<Matrix> images(g.order());
  images[0] = Matrix::identity(field, dim);
  for (Elem x : g.tree_order()) {
    if (x == 0) continue;
    images[x] = images[g.parent(x)] * gens[g.parent_generator(x)];
  }
  return images;
}

}  // namespace

GModule GModule::trusted(GroupPtr group, FieldPtr field, std::size_t dim, std::vector<Matrix> generator_images) {
  GModule m;
  m.group_ = std::move(group);
  m.field_ = std::move(field);
  m.dim_ = dim;
  m.gens_ = std::move(generator_images);
  m.cache_ = std::make_shared<ImageCache>();
  return m;
}

GModule GModule::trusted(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> basis_images) {
  GModule m;
  m.field_ = algebra->field();
  m.algebra_ = std::move(algebra);
  m.dim_ = dim;
  m.gens_ = std::move(basis_images);
  m.cache_ = std::make_shared<ImageCache>();
  return m;
}

GModule GModule::make(GroupPtr group, FieldPtr field, std::vector<Matrix> generator_images) {
  const FiniteGroup& g = *group;
  if (generator_images.size() != g.generators().size())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(g.generators().size()) +
                                                  " generator images, got " + std::to_string(generator_images.size()));
  const std::size_t dim = generator_images.empty() ? 1 : generator_images.front().rows();
  check_shapes(field, dim, generator_images);
  for (std::size_t i = 0; i < generator_images.size(); ++i)
    if (rank(generator_images[i]) != dim)
      throw Error(ErrorKind::SingularMatrix, "image of generator g" + std::to_string(i) + " is singular");

  GModule m = trusted(group, field, dim, std::move(generator_images));
  const auto& images = m.element_images();
  const double d = static_cast<double>(dim);
  const double cost = static_cast<double>(g.order()) * static_cast<double>(g.generators().size()) * d * d * d;
  std::vector<Elem> checked;
  if (cost <= kFullCheckBudget) {
    checked = g.tree_order();
  } else {
    Rng rng(0);
    for (std::size_t i = 0; i < kSampledElements; ++i) checked.push_back(static_cast<Elem>(rng() % g.order()));
  }
  for (Elem a : checked)
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      const Elem ag = g.mul(a, g.generators()[i]);
      if (g.parent(ag) == a && g.parent_generator(ag) == i && ag != 0) continue;
      if (!(images[a] * m.gens_[i] == images[ag]))
        throw Error(ErrorKind::NotARepresentation, "relation (" + word_text(g, a) + ")*g" + std::to_string(i) + " = " +
                                                       word_text(g, ag) + " fails for the given generator images");
    }
  return m;
}

GModule GModule::make(AlgebraPtr algebra, std::vector<Matrix> basis_images) {
  const Algebra& a = *algebra;
  if (basis_images.size() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(a.dim()) + " basis images");
  const std::size_t dim = basis_images.front().rows();
  check_shapes(a.field(), dim, basis_images);
  const Field& f = *a.field();
  const std::size_t m = a.dim();
  Matrix unit(a.field(), dim, dim);
  for (std::size_t k = 0; k < m; ++k)
    if (a.unit()[k].code != 0) unit = unit + a.unit()[k] * basis_images[k];
  if (!(unit == Matrix::identity(a.field(), dim)))
    throw Error(ErrorKind::NotARepresentation, "the unit does not act as the identity");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix rhs(a.field(), dim, dim);
      for (std::size_t k = 0; k < m; ++k) {
        const FieldElem c = a.constant(i, j, k);
        if (c.code != 0) rhs = rhs + c * basis_images[k];
      }
      if (!(basis_images[i] * basis_images[j] == rhs))
        throw Error(ErrorKind::NotARepresentation,
                    "relation b" + std::to_string(i) + " b" + std::to_string(j) + " fails for the given basis images");
    }
  (void)f;
  return trusted(std::move(algebra), dim, std::move(basis_images));
}

GModule GModule::trivial(GroupPtr group, FieldPtr field) {
  std::vector<Matrix> gens(group->generators().size(), Matrix::identity(field, 1));
  return trusted(std::move(group), std::move(field), 1, std::move(gens));
}

GModule GModule::regular(GroupPtr group, FieldPtr field) {
  const std::size_t n = group->order();
  std::vector<Matrix> gens;
  for (Elem g : group->generators()) {
    Matrix p(field, n, n);
    for (Elem x = 0; x < n; ++x) p(group->mul(g, x), x) = field->one();
    gens.push_back(std::move(p));
  }
  return trusted(std::move(group), std::move(field), n, std::move(gens));
}

GModule GModule::regular(AlgebraPtr algebra) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < algebra->dim(); ++i) gens.push_back(algebra->left_multiplication(i));
  const std::size_t m = algebra->dim();
  return trusted(std::move(algebra), m, std::move(gens));
}

const std::vector<Matrix>& GModule::element_images() const {
  if (!group_) throw Error(ErrorKind::OwnerMismatch, "element images exist only for group modules");
  std::call_once(cache_->once, [this] { cache_->images = tree_images(*group_, field_, dim_, gens_); });
  return cache_->images;
}

const Matrix& GModule::element(Elem g) const {
  const auto& images = element_images();
  if (g >= images.size()) throw Error(ErrorKind::IndexOutOfRange, "element index out of range");
  return images[g];
}

std::vector<FieldElem> GModule::trace_vector() const {
  std::vector<FieldElem> t;
  if (group_) {
    for (Elem x : group_->class_representatives()) t.push_back(element(x).trace());
  } else {
    for (const Matrix& m : gens_) t.push_back(m.trace());
  }
  return t;
}

bool GModule::same_owner(const GModule& other) const noexcept {
  if (group_ && other.group_) return group_->same_as(*other.group_);
  if (algebra_ && other.algebra_) return algebra_->same_as(*other.algebra_);
  return false;
}

GModule GModule::submodule(const Matrix& basis) const {
  const RowEchelon e = row_reduce(basis);
  const std::size_t s = e.rank();
  std::vector<Matrix> gens;
  for (const Matrix& a : gens_) {
    Matrix sub(field_, s, s);
    for (std::size_t j = 0; j < s; ++j) {
      const auto image = a.apply(e.reduced.row(j));
      for (std::size_t i = 0; i < s; ++i) sub(i, j) = image[e.pivots[i]];
    }
    gens.push_back(std::move(sub));
  }
  GModule m = *this;
  m.dim_ = s;
  m.gens_ = std::move(gens);
  m.cache_ = std::make_shared<ImageCache>();
  return m;
}

GModule GModule::quotient(const Matrix& basis) const {
  EchelonBasis sub(field_, dim_);
  for (std::size_t r = 0; r < basis.rows(); ++r) sub.insert({basis.row(r).begin(), basis.row(r).end()});
  std::vector<bool> is_pivot(dim_, false);
  for (std::size_t p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < dim_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const std::size_t q = free.size();
  std::vector<Matrix> gens;
  for (const Matrix& a : gens_) {
    Matrix quo(field_, q, q);
    for (std::size_t j = 0; j < q; ++j) {
      const auto image = sub.reduce(a.column(free[j]));
      for (std::size_t i = 0; i < q; ++i) quo(i, j) = image[free[i]];
    }
    gens.push_back(std::move(quo));
  }
  GModule m = *this;
  m.dim_ = q;
  m.gens_ = std::move(gens);
  m.cache_ = std::make_shared<ImageCache>();
  return m;
}

void require_compatible(const GModule& a, const GModule& b) {
  if (!a.same_owner(b)) throw Error(ErrorKind::OwnerMismatch, "modules over different groups or algebras");
  if (!a.field()->same_as(*b.field())) throw Error(ErrorKind::FieldMismatch, "modules over different fields");
}

GModule direct_sum(const GModule& a, const GModule& b) {
  require_compatible(a, b);
  const std::size_t d = a.dim() + b.dim();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    Matrix m(a.field(), d, d);
    m.set_block(0, 0, a.generators()[i]);
    m.set_block(a.dim(), a.dim(), b.generators()[i]);
    gens.push_back(std::move(m));
  }
  if (a.over_group()) return GModule::trusted(a.group(), a.field(), d, std::move(gens));
  return GModule::trusted(a.algebra(), d, std::move(gens));
}

// Hom(M, N) through a spinning basis of M. M is spanned by vectors
// m_j = A_{w_j} e_{s(j)} reached from seed vectors along generator edges; a
// homomorphism is fixed by the images u_s of the seeds, with f(m_j) = W_j u_{s(j)}
// where W_j is the matching product of N's matrices. Every non-tree edge
// A_i m_j = sum_k l_k m_k gives the linear condition B_i W_j u_{s(j)} = sum_k l_k W_k u_{s(k)}.
std::vector<Matrix> hom_space(const GModule& m, const GModule& n) {
  require_compatible(m, n);
  const FieldPtr& field = m.field();
  const Field& f = *field;
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  const auto& a = m.generators();
  const auto& b = n.generators();
  const std::size_t r = a.size();

  struct Node {
    std::size_t seed;
    std::size_t parent;  // index into nodes, or npos for seeds
    std::size_t gen;
  };
  constexpr std::size_t npos = ~std::size_t{0};
  std::vector<Node> nodes;
  std::vector<std::vector<FieldElem>> vecs;
  std::vector<std::vector<bool>> tree_edge;  // [node][gen]
  EchelonBasis span(field, dm);
  std::size_t seeds = 0;
  for (std::size_t e = 0; e < dm && span.dim() < dm; ++e) {
    std::vector<FieldElem> v(dm, f.zero());
    v[e] = f.one();
    if (!span.insert(v)) continue;
    const std::size_t start = nodes.size();
    nodes.push_back({seeds++, npos, 0});
    vecs.push_back(std::move(v));
    tree_edge.emplace_back(r, false);
    for (std::size_t j = start; j < nodes.size(); ++j)
      for (std::size_t i = 0; i < r; ++i) {
        auto w = a[i].apply(vecs[j]);
        if (!span.insert(w)) continue;
        tree_edge[j][i] = true;
        nodes.push_back({nodes[j].seed, j, i});
        vecs.push_back(std::move(w));
        tree_edge.emplace_back(r, false);
      }
  }

  Matrix basis_cols(field, dm, dm);
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t i = 0; i < dm; ++i) basis_cols(i, j) = vecs[j][i];
  const Matrix basis_inv = *inverse(basis_cols);

  std::vector<Matrix> w(dm);
  for (std::size_t j = 0; j < dm; ++j)
    w[j] = nodes[j].parent == npos ? Matrix::identity(field, dn) : b[nodes[j].gen] * w[nodes[j].parent];

  const std::size_t unknowns = seeds * dn;
  EchelonBasis conditions(field, unknowns);
  for (std::size_t j = 0; j < dm && conditions.dim() < unknowns; ++j)
    for (std::size_t i = 0; i < r && conditions.dim() < unknowns; ++i) {
      if (tree_edge[j][i]) continue;
      const auto coords = basis_inv.apply(a[i].apply(vecs[j]));
      Matrix block(field, dn, unknowns);
      block.set_block(0, nodes[j].seed * dn, b[i] * w[j]);
      for (std::size_t k = 0; k < dm; ++k) {
        if (coords[k].code == 0) continue;
        const FieldElem c = f.neg(coords[k]);
        const std::size_t off = nodes[k].seed * dn;
        for (std::size_t row = 0; row < dn; ++row)
          f.axpy(block.row(row).subspan(off, dn), c, w[k].row(row));
      }
      for (std::size_t row = 0; row < dn; ++row)
        conditions.insert({block.row(row).begin(), block.row(row).end()});
    }

  const Matrix solutions = nullspace(conditions.dim() == 0 ? Matrix(field, 1, unknowns) : conditions.matrix());
  std::vector<Matrix> out;
  for (std::size_t s = 0; s < solutions.rows(); ++s) {
    const auto u = solutions.row(s);
    Matrix images(field, dn, dm);
    for (std::size_t j = 0; j < dm; ++j) {
      const auto img = w[j].apply(u.subspan(nodes[j].seed * dn, dn));
      for (std::size_t i = 0; i < dn; ++i) images(i, j) = img[i];
    }
    out.push_back(images * basis_inv);
  }
  return out;
}

std::size_t hom_dim(const GModule& m, const GModule& n) { return hom_space(m, n).size(); }

Matrix image_span(const std::vector<Matrix>& maps, const FieldPtr& field, std::size_t target_dim) {
  EchelonBasis span(field, target_dim);
  for (const Matrix& x : maps)
    for (std::size_t c = 0; c < x.cols() && span.dim() < target_dim; ++c) span.insert(x.column(c));
  return span.matrix();
}

}  // namespace springerkit
