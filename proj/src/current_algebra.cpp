#include "klr/current_algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace klr {

namespace {

using Element = CyclotomicAlgebra::Element;
// unknown -> its contribution to the output coordinates
using Expr = std::map<int, SparseVec>;

void add_term(Expr& e, int unknown, const SparseVec& v, const Rational& c) {
  SparseVec& slot = e[unknown];
  slot = sparse_add(slot, v, c);
}

SparseVec shift_columns(const SparseVec& v, int by) {
  SparseVec out;
  out.reserve(v.size());
  for (auto& [k, c] : v) out.emplace_back(k + by, c);
  return out;
}

void append(SparseVec& dst, const SparseVec& v, int by) {
  for (auto& [k, c] : v) dst.emplace_back(k + by, c);
}

void add_equations(LinearSystem& sys, const Expr& e, const SparseVec& rhs) {
  std::map<int, SparseVec> rows;
  for (auto& [u, v] : e)
    for (auto& [t, c] : v) rows[t].emplace_back(u, c);
  for (auto& [t, c] : rhs) rows[t];
  for (auto& [t, row] : rows) sys.add(row, sparse_get(rhs, t));
}

// the unique solution of sum_u x_u cols[u] = rhs
SparseVec solve_unique(const std::vector<SparseVec>& cols, const SparseVec& rhs, const std::string& what) {
  Expr e;
  for (size_t u = 0; u < cols.size(); ++u)
    if (!cols[u].empty()) e[static_cast<int>(u)] = cols[u];
  LinearSystem sys(static_cast<int>(cols.size()));
  add_equations(sys, e, rhs);
  if (!sys.consistent()) throw AdjunctionError(what + ": no solution");
  if (sys.freedom() > 0) throw AdjunctionError(what + ": solution not unique");
  return sys.solution();
}

Element power(const CyclotomicAlgebra& a, const Element& x, int r, Element start) {
  for (int k = 0; k < r; ++k) start = a.mul(start, x);
  return start;
}

int last_letter(const RationalKLR& k, int word) { return k.words()[word].back(); }

Word drop_last(Word w) {
  w.pop_back();
  return w;
}

std::string content_string(const RootVector& nu) { return weight_to_string(nu); }

}  // namespace

RootVector shifted(const RootVector& nu, int i, int by) {
  RootVector r = nu;
  r.at(i) += by;
  return r;
}

// ---------------------------------------------------------------------------

Adjunction::Adjunction(RootVector nu, int vertex, const CyclotomicAlgebra* base, const CyclotomicAlgebra* ext,
                       const CyclotomicAlgebra* minus, const CyclotomicAlgebra* plus2)
    : base_(base), ext_(ext), vertex_(vertex), content_(std::move(nu)) {
  if (base_ && base_->dim() == 0) base_ = nullptr;
  if (ext_ && ext_->dim() == 0) ext_ = nullptr;
  if (base_) pairing_ = base_->weight().at(vertex);
  if (!base_ || !ext_) return;
  emb_ = std::make_unique<Embedding>(*base_, *ext_, vertex);
  const RationalKLR& k = ext_->klr();
  for (const Monomial& m : ext_->basis()) {
    bool bottom = last_letter(k, m.word) == vertex;
    bool top = last_letter(k, k.top_word(m)) == vertex;
    report_.f_dim += bottom;
    report_.e_dim += top;
    report_.ef_dim += bottom && top;
  }
  counit_.assign(ext_->dim(), Element());
  TensorSpace p(*emb_);
  report_.fe_dim = p.dim();
  if (pairing_ > 0) {
    report_.sigma_route_dots = true;
    build_dots_route(minus);
    solve_unit(p);
  } else {
    build_crossing_route(plus2, p);
    solve_counit(p);
  }
  verify(p);
}

bool Adjunction::in_ef(int idx) const {
  const Monomial& m = ext_->basis()[idx];
  const RationalKLR& k = ext_->klr();
  return last_letter(k, m.word) == vertex_ && last_letter(k, k.top_word(m)) == vertex_;
}

Adjunction::Element Adjunction::counit(const Element& z) const {
  Element r;
  if (trivial()) return r;
  for (auto& [m, c] : z.terms()) {
    int idx = ext_->basis_index(m);
    if (!in_ef(idx)) throw std::logic_error("counit applied outside eA'e");
    r.add_scaled(counit_[idx], c);
  }
  return r;
}

int Adjunction::twist(const BetaForm& beta) const {
  RootVector pi(content_.size()), a(content_.size(), 0);
  for (size_t k = 0; k < content_.size(); ++k) pi[k] = -content_[k];
  a.at(vertex_) = 1;
  return beta(pi, a) ? -1 : 1;
}

void Adjunction::build_dots_route(const CyclotomicAlgebra* minus) {
  const CyclotomicAlgebra& A = *base_;
  const CyclotomicAlgebra& B = *ext_;
  const int n = A.strands();
  std::vector<SparseVec> cols;
  int qdim = 0;
  if (minus && minus->dim() > 0) {
    Embedding inner(*minus, A, vertex_);
    TensorSpace q(inner);
    qdim = q.dim();
    Element psi = B.crossing(n - 1);
    for (int idx : q.basis()) {
      auto [x, y] = q.pair(idx);
      cols.push_back(B.to_vector(B.mul(B.mul((*emb_)(A.basis_element(x)), psi), (*emb_)(A.basis_element(y)))));
    }
  }
  std::vector<Element> lifted;
  for (int b = 0; b < A.dim(); ++b) lifted.push_back((*emb_)(A.basis_element(b)));
  Element y = B.dot(n);
  Element yk = idempotent();
  for (int k = 0; k < pairing_; ++k) {
    for (int b = 0; b < A.dim(); ++b) cols.push_back(B.to_vector(B.mul(lifted[b], yk)));
    yk = B.mul(yk, y);
  }
  report_.sigma_domain = static_cast<int>(cols.size());
  report_.sigma_target = report_.ef_dim;
  if (report_.sigma_domain != report_.sigma_target)
    throw AdjunctionError("sigma map has wrong dimensions at " + content_string(content_) + " (" + std::to_string(report_.sigma_domain) + " vs " + std::to_string(report_.sigma_target) + ")");
  PreimageSolver solver(cols, B.dim());
  if (!solver.injective()) throw AdjunctionError("sigma map not invertible at " + content_string(content_));
  const int start = qdim + (pairing_ - 1) * A.dim();
  for (int idx = 0; idx < B.dim(); ++idx) {
    if (!in_ef(idx)) continue;
    auto pre = solver.preimage({{idx, Rational(1)}});
    if (!pre) throw AdjunctionError("sigma map not surjective at " + content_string(content_));
    for (auto& [k, c] : *pre)
      if (k >= start && k < start + A.dim()) counit_[idx].add_scaled(A.basis_element(k - start), c);
  }
}

void Adjunction::solve_unit(const TensorSpace& p) {
  const CyclotomicAlgebra& B = *ext_;
  std::vector<int> unknowns;
  for (int idx : p.basis())
    if (p.degree(idx) == unit_degree()) unknowns.push_back(idx);
  auto gens = B.generators();
  const int block = p.naive_dim();
  const int zig = block * static_cast<int>(gens.size());
  std::vector<SparseVec> cols;
  for (int idx : unknowns) {
    SparseVec t{{idx, Rational(1)}}, col;
    for (size_t g = 0; g < gens.size(); ++g)
      append(col, sparse_add(p.left_mul(gens[g], t), p.right_mul(t, gens[g]), -1), block * static_cast<int>(g));
    auto [x, y] = p.pair(idx);
    Element w = counit(B.mul(symbol(y), idempotent()));
    append(col, B.to_vector(B.mul(symbol(x), (*emb_)(w))), zig);
    cols.push_back(std::move(col));
  }
  SparseVec sol = solve_unique(cols, shift_columns(B.to_vector(idempotent()), zig),
                               "unit of the adjunction at " + content_string(content_));
  for (auto& [u, c] : sol) {
    auto [x, y] = p.pair(unknowns[u]);
    unit_.push_back({c, x, y});
  }
}

void Adjunction::build_crossing_route(const CyclotomicAlgebra* plus2, const TensorSpace& p) {
  const CyclotomicAlgebra& B = *ext_;
  const int n = base_->strands();
  const int m = 2 - pairing_;
  std::unique_ptr<Embedding> outer;
  int head = 0, ef2 = 0;
  Element psi;
  if (plus2 && plus2->dim() > 0) {
    outer = std::make_unique<Embedding>(B, *plus2, vertex_);
    head = plus2->dim();
    psi = plus2->crossing(n);
    const RationalKLR& k = plus2->klr();
    for (const Monomial& mm : plus2->basis())
      ef2 += last_letter(k, mm.word) == vertex_ && last_letter(k, k.top_word(mm)) == vertex_;
  }
  Element y = B.dot(n);
  std::vector<Element> dots{B.unit()};
  for (int k = 1; k < m; ++k) dots.push_back(B.mul(dots.back(), y));
  std::vector<SparseVec> cols;
  for (int idx : p.basis()) {
    auto [x, yy] = p.pair(idx);
    SparseVec col;
    if (outer) col = plus2->to_vector(plus2->mul(plus2->mul((*outer)(symbol(x)), psi), (*outer)(symbol(yy))));
    for (int k = 0; k < m; ++k) append(col, B.to_vector(B.mul(B.mul(symbol(x), dots[k]), symbol(yy))), head + k * B.dim());
    cols.push_back(std::move(col));
  }
  report_.sigma_domain = p.dim();
  report_.sigma_target = ef2 + m * B.dim();
  if (report_.sigma_domain != report_.sigma_target)
    throw AdjunctionError("sigma map has wrong dimensions at " + content_string(content_) + " (" + std::to_string(report_.sigma_domain) + " vs " + std::to_string(report_.sigma_target) + ")");
  PreimageSolver solver(cols, head + m * B.dim());
  if (!solver.injective()) throw AdjunctionError("sigma map not invertible at " + content_string(content_));
  auto pre = solver.preimage(shift_columns(B.to_vector(B.unit()), head + (m - 1) * B.dim()));
  if (!pre) throw AdjunctionError("sigma map not surjective at " + content_string(content_));
  for (auto& [u, c] : *pre) {
    auto [x, yy] = p.pair(p.basis()[u]);
    unit_.push_back({c, x, yy});
  }
}

void Adjunction::solve_counit(const TensorSpace&) {
  const CyclotomicAlgebra& A = *base_;
  const CyclotomicAlgebra& B = *ext_;
  const RationalKLR& ka = A.klr();
  const RationalKLR& kb = B.klr();
  const int shift = 2 - 2 * pairing_;
  // candidate images: same degree shift and compatible idempotents on both sides
  std::vector<std::vector<std::pair<int, int>>> cand(B.dim());
  int nunknowns = 0;
  for (int z = 0; z < B.dim(); ++z) {
    if (!in_ef(z)) continue;
    const Monomial& mz = B.basis()[z];
    Word bottom = drop_last(kb.words()[mz.word]);
    Word top = drop_last(kb.words()[kb.top_word(mz)]);
    for (int b = 0; b < A.dim(); ++b) {
      const Monomial& mb = A.basis()[b];
      if (A.degree(mb) != B.degree(mz) + shift) continue;
      if (ka.words()[mb.word] != bottom || ka.words()[ka.top_word(mb)] != top) continue;
      cand[z].emplace_back(b, nunknowns++);
    }
  }
  std::vector<Element> lifted;
  for (int b = 0; b < A.dim(); ++b) lifted.push_back((*emb_)(A.basis_element(b)));
  LinearSystem sys(nunknowns);
  // symbolic counit of w, each candidate image b replaced by image(b)
  auto symbolic = [&](Expr& ex, const Element& w, const Rational& scale, auto image) {
    for (auto& [m, c] : w.terms()) {
      int z = B.basis_index(m);
      for (auto& [b, u] : cand[z]) add_term(ex, u, image(b), scale * c);
    }
  };
  auto plain = [&](int b) { return SparseVec{{b, Rational(1)}}; };

  auto gens = A.generators();
  for (const Element& g : gens) {
    Element lg = (*emb_)(g);
    std::vector<SparseVec> left(A.dim()), right(A.dim());
    for (int b = 0; b < A.dim(); ++b) {
      left[b] = A.to_vector(A.mul(g, A.basis_element(b)));
      right[b] = A.to_vector(A.mul(A.basis_element(b), g));
    }
    for (int z = 0; z < B.dim(); ++z) {
      if (!in_ef(z)) continue;
      Expr lx, rx;
      symbolic(lx, B.mul(lg, symbol(z)), 1, plain);
      symbolic(rx, B.mul(symbol(z), lg), 1, plain);
      for (auto& [b, u] : cand[z]) {
        add_term(lx, u, left[b], -1);
        add_term(rx, u, right[b], -1);
      }
      add_equations(sys, lx, {});
      add_equations(sys, rx, {});
    }
  }
  Expr fz, ez;
  for (const Term& t : unit_) {
    symbolic(fz, B.mul(symbol(t.right), idempotent()), t.coeff,
             [&](int b) { return B.to_vector(B.mul(symbol(t.left), lifted[b])); });
    symbolic(ez, B.mul(idempotent(), symbol(t.left)), t.coeff,
             [&](int b) { return B.to_vector(B.mul(lifted[b], symbol(t.right))); });
  }
  SparseVec e = B.to_vector(idempotent());
  add_equations(sys, fz, e);
  add_equations(sys, ez, e);
  const std::string where = "counit of the adjunction at " + content_string(content_);
  if (!sys.consistent()) throw AdjunctionError(where + ": no solution");
  if (sys.freedom() > 0) throw AdjunctionError(where + ": solution not unique");
  SparseVec sol = sys.solution();
  for (int z = 0; z < B.dim(); ++z)
    for (auto& [b, u] : cand[z]) {
      Rational c = sparse_get(sol, u);
      if (sgn(c) != 0) counit_[z].add_scaled(A.basis_element(b), c);
    }
}

void Adjunction::verify(const TensorSpace& p) {
  const CyclotomicAlgebra& A = *base_;
  const CyclotomicAlgebra& B = *ext_;
  const RationalKLR& k = B.klr();
  SparseVec c;
  for (const Term& t : unit_) c = sparse_add(c, p.tensor(symbol(t.left), symbol(t.right)), t.coeff);
  for (const Element& g : B.generators())
    if (p.left_mul(g, c) != p.right_mul(c, g)) report_.unit_central = false;
  for (int x = 0; x < B.dim(); ++x) {
    const Monomial& m = B.basis()[x];
    if (last_letter(k, m.word) == vertex_) {
      Element s;
      for (const Term& t : unit_)
        s.add_scaled(B.mul(symbol(t.left), (*emb_)(counit(B.mul(symbol(t.right), symbol(x))))), t.coeff);
      if (!(s == symbol(x))) report_.zigzag_f = false;
    }
    if (last_letter(k, k.top_word(m)) == vertex_) {
      Element s;
      for (const Term& t : unit_)
        s.add_scaled(B.mul((*emb_)(counit(B.mul(symbol(x), symbol(t.left)))), symbol(t.right)), t.coeff);
      if (!(s == symbol(x))) report_.zigzag_e = false;
    }
  }
  for (const Element& g : A.generators()) {
    Element lg = (*emb_)(g);
    for (int z = 0; z < B.dim(); ++z) {
      if (!in_ef(z)) continue;
      Element ez = counit(symbol(z));
      if (!(counit(B.mul(lg, symbol(z))) == A.mul(g, ez)) || !(counit(B.mul(symbol(z), lg)) == A.mul(ez, g)))
        report_.bilinear = false;
    }
  }
  if (!report_.ok()) throw AdjunctionError("adjunction identities fail at " + content_string(content_));
}

// ---------------------------------------------------------------------------

WeightFamily::WeightFamily(const Quiver& q, Weight lambda, const BuildOptions& opt)
    : quiver_(q), lambda_(std::move(lambda)), opt_(opt) {
  ShapovalovOracle oracle(quiver_, lambda_);
  const int r = quiver_.size();
  std::set<RootVector> seen{RootVector(r, 0)};
  std::deque<RootVector> queue{RootVector(r, 0)};
  while (!queue.empty()) {
    RootVector nu = queue.front();
    queue.pop_front();
    if (oracle.hilbert_series(nu).is_zero()) continue;
    if (total_height(nu) > kMaxStrands) throw InvalidInput("weight support exceeds " + std::to_string(kMaxStrands) + " strands");
    support_.push_back(nu);
    for (int i = 0; i < r; ++i) {
      RootVector next = shifted(nu, i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(support_.begin(), support_.end(), [](const RootVector& a, const RootVector& b) {
    int ha = total_height(a), hb = total_height(b);
    return ha != hb ? ha < hb : a < b;
  });
}

bool WeightFamily::in_support(const RootVector& nu) const {
  return std::find(support_.begin(), support_.end(), nu) != support_.end();
}

const CyclotomicAlgebra* WeightFamily::algebra(const RootVector& nu) {
  if (!in_support(nu)) return nullptr;
  auto& slot = algebras_[nu];
  if (!slot) slot = std::make_unique<CyclotomicAlgebra>(quiver_, lambda_, nu, opt_);
  return slot.get();
}

const CyclotomicView& WeightFamily::view(const RootVector& nu) {
  auto& slot = views_[nu];
  if (!slot) {
    const CyclotomicAlgebra* a = algebra(nu);
    if (!a) throw InvalidInput("content " + content_string(nu) + " outside the weight support");
    slot = std::make_unique<CyclotomicView>(*a);
  }
  return *slot;
}

const CenterBasis& WeightFamily::center(const RootVector& nu) {
  auto it = centers_.find(nu);
  if (it == centers_.end()) it = centers_.emplace(nu, center_basis(view(nu))).first;
  return it->second;
}

const Adjunction& WeightFamily::adjunction(const RootVector& nu, int i) {
  auto& slot = adjunctions_[{nu, i}];
  if (!slot) {
    const CyclotomicAlgebra* base = algebra(nu);
    const CyclotomicAlgebra* ext = algebra(shifted(nu, i));
    const CyclotomicAlgebra* minus = nu[i] > 0 ? algebra(shifted(nu, i, -1)) : nullptr;
    const CyclotomicAlgebra* plus2 = nullptr;
    if (base && ext && base->weight()[i] <= 0) plus2 = algebra(shifted(nu, i, 2));
    slot = std::make_unique<Adjunction>(nu, i, base, ext, minus, plus2);
  }
  return *slot;
}

// ---------------------------------------------------------------------------

Operator compose(const Operator& a, const Operator& b) {
  Operator out(b.size());
  for (size_t k = 0; k < b.size(); ++k)
    for (auto& [j, c] : b[k]) out[k] = sparse_add(out[k], a[j], c);
  return out;
}

Operator combine(const Operator& a, const Operator& b, const Rational& c) {
  Operator out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = sparse_add(a[k], b[k], c);
  return out;
}

Operator scalar_operator(int dim, const Rational& c) {
  Operator out(dim);
  if (sgn(c) != 0)
    for (int k = 0; k < dim; ++k) out[k] = {{k, c}};
  return out;
}

bool same_operator(const Operator& a, const Operator& b) { return a == b; }

namespace {

Operator commutator(const Operator& a, const Operator& b) { return combine(compose(a, b), compose(b, a), -1); }

SparseVec apply_op(const Operator& a, const SparseVec& v) {
  SparseVec out;
  for (auto& [j, c] : v) out = sparse_add(out, a[j], c);
  return out;
}

}  // namespace

CurrentAction::CurrentAction(WeightFamily& fam, const BetaForm& beta) : fam_(fam), beta_(beta) {
  for (const RootVector& nu : fam_.support()) {
    offsets_[nu] = dim_;
    dim_ += fam_.center(nu).dim();
  }
}

std::pair<RootVector, int> CurrentAction::locate(int k) const {
  for (auto& [nu, off] : offsets_) {
    int d = fam_.center(nu).dim();
    if (k >= off && k < off + d) return {nu, k - off};
  }
  throw std::out_of_range("center index");
}

int CurrentAction::degree_of(int k) const {
  auto [nu, pos] = locate(k);
  return fam_.center(nu).degrees[pos];
}

Element CurrentAction::apply_minus(const RootVector& nu, int i, int r, const Element& z) {
  const Adjunction& adj = fam_.adjunction(nu, i);
  if (adj.trivial()) return {};
  const CyclotomicAlgebra& B = adj.ext();
  const int n = adj.base().strands();
  Element w = B.mul(power(B, B.dot(n), r, adj.idempotent()), adj.embedding()(z));
  Element out;
  for (const auto& t : adj.unit_terms()) out.add_scaled(B.mul(B.mul(B.basis_element(t.left), w), B.basis_element(t.right)), t.coeff);
  return out.scaled(adj.twist(beta_));
}

Element CurrentAction::apply_plus(const RootVector& nu, int i, int r, const Element& z) {
  if (nu[i] == 0) return {};
  const Adjunction& adj = fam_.adjunction(shifted(nu, i, -1), i);
  if (adj.trivial()) return {};
  const CyclotomicAlgebra& B = adj.ext();
  const int n = adj.base().strands();
  Element w = B.mul(B.mul(adj.idempotent(), z), power(B, B.dot(n), r, adj.idempotent()));
  return adj.counit(w).scaled(adj.twist(beta_));
}

Operator CurrentAction::build(int i, int r, bool plus) {
  Operator op(dim_);
  for (const RootVector& nu : fam_.support()) {
    if (plus && nu[i] == 0) continue;
    RootVector target = shifted(nu, i, plus ? -1 : 1);
    if (!fam_.in_support(target)) continue;
    const CyclotomicAlgebra& A = *fam_.algebra(nu);
    const CyclotomicAlgebra& T = *fam_.algebra(target);
    const CenterBasis& z = fam_.center(nu);
    const CenterBasis& zt = fam_.center(target);
    for (int k = 0; k < z.dim(); ++k) {
      Element x = A.from_vector(z.elements[k]);
      SparseVec v = T.to_vector(plus ? apply_plus(nu, i, r, x) : apply_minus(nu, i, r, x));
      auto coords = zt.coordinates(v);
      if (!coords) {
        noncentral_.push_back(std::string(plus ? "x+" : "x-") + "_{" + quiver_name(i) + "," + std::to_string(r) + "} at " +
                              content_string(nu));
        continue;
      }
      SparseVec col;
      for (int j = 0; j < zt.dim(); ++j)
        if (sgn((*coords)[j]) != 0) col.emplace_back(offsets_.at(target) + j, (*coords)[j]);
      op[offsets_.at(nu) + k] = std::move(col);
    }
  }
  return op;
}

std::string CurrentAction::quiver_name(int i) const { return fam_.quiver().name(i); }

int CurrentAction::weight_pairing(const RootVector& nu, int i) const { return fam_.weight(nu)[i]; }

int CurrentAction::cartan(int i, int j) const { return fam_.quiver().cartan(i, j); }

const Operator& CurrentAction::x_minus(int i, int r) {
  auto it = minus_.find({i, r});
  if (it == minus_.end()) it = minus_.emplace(std::make_pair(i, r), build(i, r, false)).first;
  return it->second;
}

const Operator& CurrentAction::x_plus(int i, int r) {
  auto it = plus_.find({i, r});
  if (it == plus_.end()) it = plus_.emplace(std::make_pair(i, r), build(i, r, true)).first;
  return it->second;
}

Operator CurrentAction::xi(int i, int r) { return commutator(x_plus(i, r), x_minus(i, 0)); }

std::vector<int> CurrentAction::identity_indices() {
  std::vector<int> out;
  for (const RootVector& nu : fam_.support()) {
    const CyclotomicAlgebra& A = *fam_.algebra(nu);
    auto coords = fam_.center(nu).coordinates(A.to_vector(A.unit()));
    for (int j = 0; j < fam_.center(nu).dim(); ++j)
      if (coords && sgn((*coords)[j]) != 0) {
        out.push_back(offsets_.at(nu) + j);
        break;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool CurrentReport::ok() const {
  if (!generated) return false;
  for (auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

struct Checker {
  CurrentAction& act;
  RelationCheck current;

  void expect(const Operator& lhs, const Operator& rhs, const std::string& label) {
    if (!current.ok) return;
    for (size_t k = 0; k < lhs.size(); ++k) {
      if (lhs[k] == rhs[k]) continue;
      auto [nu, pos] = act.locate(static_cast<int>(k));
      std::ostringstream os;
      os << label << " differs on center vector " << pos << " of content " << weight_to_string(nu) << " (degree "
         << act.degree_of(static_cast<int>(k)) << ")";
      current.ok = false;
      current.witness = os.str();
      return;
    }
  }
};

std::string sub(const std::string& x, int i, int r) { return x + "_{" + std::to_string(i) + "," + std::to_string(r) + "}"; }

}  // namespace

int generated_dimension(CurrentAction& act, int max_r) {
  const int r = static_cast<int>(act.weights().empty() ? 0 : act.weights().front().size());
  std::vector<const Operator*> ops;
  for (int i = 0; i < r; ++i)
    for (int s = 0; s <= max_r; ++s) {
      ops.push_back(&act.x_minus(i, s));
      ops.push_back(&act.x_plus(i, s));
    }
  Echelon span(act.dim());
  std::deque<SparseVec> queue;
  for (int k : act.identity_indices()) {
    SparseVec v{{k, Rational(1)}};
    if (span.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    SparseVec v = queue.front();
    queue.pop_front();
    for (const Operator* op : ops) {
      SparseVec w = span.reduce(apply_op(*op, v));
      if (w.empty()) continue;
      span.insert_reduced(w);
      queue.push_back(w);
    }
  }
  return span.rank();
}

CurrentReport verify_current_relations(CurrentAction& act, const RelationOptions& opt) {
  CurrentReport rep;
  const int rank = static_cast<int>(act.weights().empty() ? 0 : act.weights().front().size());
  const int R = opt.max_r;
  auto begin = [&](const std::string& name) { return Checker{act, RelationCheck{name, true, ""}}; };

  // xi_{i,0} acts by mu^i
  {
    Checker c = begin("xi_{i,0} = mu^i");
    for (int i = 0; i < rank; ++i) {
      Operator expected(act.dim());
      for (int k = 0; k < act.dim(); ++k) {
        auto [nu, pos] = act.locate(k);
        int mu = act.weight_pairing(nu, i);
        if (mu != 0) expected[k] = {{k, Rational(mu)}};
      }
      c.expect(act.xi(i, 0), expected, sub("xi", i, 0));
    }
    rep.checks.push_back(c.current);
  }
  {
    Checker c = begin("[x+_{i,r}, x-_{j,s}] = delta_ij xi_{i,r+s}");
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        for (int r = 0; r <= R; ++r)
          for (int s = 0; s <= R; ++s) {
            Operator lhs = commutator(act.x_plus(i, r), act.x_minus(j, s));
            Operator rhs = i == j ? act.xi(i, r + s) : scalar_operator(act.dim(), 0);
            c.expect(lhs, rhs, "[" + sub("x+", i, r) + ", " + sub("x-", j, s) + "]");
          }
    rep.checks.push_back(c.current);
  }
  {
    Checker c = begin("[xi_{i,r}, xi_{j,s}] = 0");
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        for (int r = 0; r <= R; ++r)
          for (int s = 0; s <= R; ++s)
            c.expect(commutator(act.xi(i, r), act.xi(j, s)), scalar_operator(act.dim(), 0),
                     "[" + sub("xi", i, r) + ", " + sub("xi", j, s) + "]");
    rep.checks.push_back(c.current);
  }
  {
    Checker c = begin("[xi_{i,r}, x+-_{j,s}] = +-a_ij x+-_{j,r+s}");
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        for (int r = 0; r <= R; ++r)
          for (int s = 0; s <= R; ++s) {
            Rational a = act.cartan(i, j);
            Operator xi = act.xi(i, r);
            c.expect(commutator(xi, act.x_plus(j, s)), combine(scalar_operator(act.dim(), 0), act.x_plus(j, r + s), a),
                     "[" + sub("xi", i, r) + ", " + sub("x+", j, s) + "]");
            c.expect(commutator(xi, act.x_minus(j, s)), combine(scalar_operator(act.dim(), 0), act.x_minus(j, r + s), -a),
                     "[" + sub("xi", i, r) + ", " + sub("x-", j, s) + "]");
          }
    rep.checks.push_back(c.current);
  }
  {
    Checker c = begin("[x+-_{i,r+1}, x+-_{j,s}] = [x+-_{i,r}, x+-_{j,s+1}]");
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        for (int r = 0; r < R; ++r)
          for (int s = 0; s < R; ++s)
            for (int sign = 0; sign < 2; ++sign) {
              auto x = [&](int v, int t) -> const Operator& { return sign ? act.x_plus(v, t) : act.x_minus(v, t); };
              c.expect(commutator(x(i, r + 1), x(j, s)), commutator(x(i, r), x(j, s + 1)),
                       "[" + sub(sign ? "x+" : "x-", i, r + 1) + ", " + sub(sign ? "x+" : "x-", j, s) + "]");
            }
    rep.checks.push_back(c.current);
  }
  {
    Checker c = begin("[x+-_{i,r}, x+-_{j,s}] = 0 for a_ij != -1");
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (act.cartan(i, j) == -1) continue;
        for (int r = 0; r <= R; ++r)
          for (int s = 0; s <= R; ++s)
            for (int sign = 0; sign < 2; ++sign) {
              auto x = [&](int v, int t) -> const Operator& { return sign ? act.x_plus(v, t) : act.x_minus(v, t); };
              c.expect(commutator(x(i, r), x(j, s)), scalar_operator(act.dim(), 0),
                       "[" + sub(sign ? "x+" : "x-", i, r) + ", " + sub(sign ? "x+" : "x-", j, s) + "]");
            }
      }
    rep.checks.push_back(c.current);
  }
  {
    Checker c = begin("Serre relations");
    const int S = opt.serre_r;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (act.cartan(i, j) != -1) continue;
        for (int r1 = 0; r1 <= S; ++r1)
          for (int r2 = 0; r2 <= S; ++r2)
            for (int s = 0; s <= S; ++s)
              for (int sign = 0; sign < 2; ++sign) {
                auto x = [&](int v, int t) -> const Operator& { return sign ? act.x_plus(v, t) : act.x_minus(v, t); };
                c.expect(commutator(x(i, r1), commutator(x(i, r2), x(j, s))), scalar_operator(act.dim(), 0),
                         "[" + sub(sign ? "x+" : "x-", i, r1) + ", [" + sub(sign ? "x+" : "x-", i, r2) + ", " +
                             sub(sign ? "x+" : "x-", j, s) + "]]");
              }
      }
    rep.checks.push_back(c.current);
  }

  int top = 0;
  for (int k = 0; k < act.dim(); ++k) top = std::max(top, act.degree_of(k));
  const int gen_r = opt.generation_r >= 0 ? opt.generation_r : top / 2 + 1;
  rep.total_dim = act.dim();
  rep.span_dim = generated_dimension(act, gen_r);
  rep.generated = rep.span_dim == rep.total_dim;

  RelationCheck central{"outputs central", act.outputs_central(), ""};
  if (!central.ok) central.witness = act.noncentral().front();
  rep.checks.push_back(central);
  return rep;
}

// ---------------------------------------------------------------------------

bool CyclicityReport::ok() const {
  for (auto& e : entries)
    if (!e.cyclic()) return false;
  return true;
}

namespace {

int sign_between(const Element& got, const Element& want) {
  if (got == want) return 1;
  if (got == want.scaled(-1)) return -1;
  return 0;
}

}  // namespace

CyclicityReport check_cyclicity(WeightFamily& fam, const BetaForm& beta) {
  CyclicityReport rep;
  const int rank = fam.quiver().size();
  for (const RootVector& nu : fam.support()) {
    for (int i = 0; i < rank; ++i) {
      const Adjunction& adj = fam.adjunction(nu, i);
      if (adj.trivial()) continue;
      const CyclotomicAlgebra& B = adj.ext();
      const Element& e = adj.idempotent();
      Element phi = B.mul(B.dot(adj.base().strands()), e);
      if (phi.is_zero()) continue;
      Element dd;
      for (const auto& t : adj.unit_terms()) {
        Element inner = adj.counit(B.mul(B.mul(phi, B.basis_element(t.right)), e));
        dd.add_scaled(B.mul(B.basis_element(t.left), adj.embedding()(inner)), t.coeff);
      }
      DoubleDual d{"y", nu, i, i, sign_between(dd, phi), adj.twist(beta) * adj.twist(beta)};
      rep.entries.push_back(d);
    }
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        RootVector top = shifted(shifted(nu, i), j);
        if (!fam.in_support(top)) continue;
        const Adjunction& i0 = fam.adjunction(nu, i);
        const Adjunction& j1 = fam.adjunction(shifted(nu, i), j);
        const Adjunction& j0 = fam.adjunction(nu, j);
        const Adjunction& i1 = fam.adjunction(shifted(nu, j), i);
        if (i0.trivial() || j1.trivial() || j0.trivial() || i1.trivial()) continue;
        const CyclotomicAlgebra& C = j1.ext();
        const Element e1 = j1.embedding()(i0.idempotent());
        const Element e2 = i1.embedding()(j0.idempotent());
        Element phi = C.mul(C.mul(e1, C.crossing(i0.base().strands())), e2);
        if (phi.is_zero()) continue;
        const CyclotomicAlgebra& Bj = j0.ext();
        Element dd;
        for (const auto& o : i1.unit_terms()) {
          Element ol = C.basis_element(o.left), orr = C.basis_element(o.right);
          for (const auto& in : j0.unit_terms()) {
            Element left = C.mul(ol, i1.embedding()(Bj.basis_element(in.left)));
            Element right = C.mul(i1.embedding()(Bj.basis_element(in.right)), orr);
            Element z = C.mul(C.mul(phi, right), e1);
            Element inner = i0.counit(j1.counit(z));
            dd.add_scaled(C.mul(left, i1.embedding()(j0.embedding()(inner))), o.coeff * in.coeff);
          }
        }
        int tw = i0.twist(beta) * j1.twist(beta) * j0.twist(beta) * i1.twist(beta);
        rep.entries.push_back({"psi", nu, i, j, sign_between(dd, phi), tw});
      }
  }
  return rep;
}

}  // namespace klr
