#include "idealcore/graded.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "idealcore/errors.hpp"
#include "idealcore/ring.hpp"

namespace idealcore {

struct GradedAlgebra::Impl {
  RingCtxPtr ring;
  std::vector<Monomial> heads;  // relation lead monomials
  mutable std::mutex mu;
  mutable std::map<int, std::vector<Monomial>> basis;
  mutable std::map<int, KMat> mult;
};

GradedAlgebra GradedAlgebra::make(const RingCtxPtr& ambient,
                                  const std::vector<Polynomial>& relations) {
  for (const Polynomial& f : relations) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous() || f.total_degree() < 1)
      throw ContextError("graded algebra needs homogeneous relations: " +
                         f.str());
  }
  return from_ring(make_quotient_ring(ambient, relations));
}

GradedAlgebra GradedAlgebra::from_ring(const RingCtxPtr& ring) {
  for (const Polynomial& f : ring->quotient_relations)
    if (!f.is_homogeneous() || f.total_degree() < 1)
      throw ContextError("quotient is not graded: " + f.str());
  GradedAlgebra A;
  A.impl_ = std::make_shared<Impl>();
  A.impl_->ring = ring;
  for (const Polynomial& f : ring->quotient_relations)
    A.impl_->heads.push_back(f.lm());
  return A;
}

const RingCtxPtr& GradedAlgebra::ring() const { return impl_->ring; }
int GradedAlgebra::nvars() const { return impl_->ring->nvars(); }

namespace {

void enumerate_monomials(int nvars, int var, long deg, Monomial& cur,
                         const std::vector<Monomial>& heads,
                         std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.e[var] = (int32_t)deg;
    bool standard = true;
    for (const Monomial& h : heads)
      if (h.divides(cur)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (long k = 0; k <= deg; ++k) {
    cur.e[var] = (int32_t)k;
    enumerate_monomials(nvars, var + 1, deg - k, cur, heads, out);
  }
  cur.e[var] = 0;
}

}  // namespace

const std::vector<Monomial>& GradedAlgebra::basis(int n) const {
  if (n < 0) {
    static const std::vector<Monomial> empty;
    return empty;
  }
  std::lock_guard<std::mutex> lk(impl_->mu);
  auto it = impl_->basis.find(n);
  if (it != impl_->basis.end()) return it->second;
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(nvars());
  enumerate_monomials(nvars(), 0, n, cur, impl_->heads, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) {
              return impl_->ring->order.greater(a, b);
            });
  return impl_->basis.emplace(n, std::move(out)).first->second;
}

int GradedAlgebra::hilbert(int n) const { return (int)basis(n).size(); }

std::vector<int> GradedAlgebra::hilbert_vector(int n_max) const {
  std::vector<int> h;
  for (int n = 0; n <= n_max; ++n) h.push_back(hilbert(n));
  return h;
}

int GradedAlgebra::krull_dimension() const {
  int m = nvars();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& h : impl_->heads) {
      bool inside = true;
      for (int i = 0; i < m; ++i)
        if (h.e[i] && !(mask >> i & 1)) {
          inside = false;
          break;
        }
      if (inside) {  // head supported inside the subset: dependent
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<Coeff> GradedAlgebra::coordinates(const Polynomial& f,
                                              int n) const {
  Polynomial nf = reduce_full(transport_by_name(f, impl_->ring->ambient()),
                              impl_->ring->quotient_relations);
  const std::vector<Monomial>& B = basis(n);
  std::vector<Coeff> v(B.size(), Coeff(0));
  for (const Term& t : nf.terms()) {
    auto it = std::find(B.begin(), B.end(), t.m);
    if (it == B.end())
      throw ContextError("not homogeneous of degree " + std::to_string(n) +
                         ": " + f.str());
    v[it - B.begin()] = t.c;
  }
  return v;
}

Polynomial GradedAlgebra::from_coordinates(const std::vector<Coeff>& v,
                                           int n) const {
  const std::vector<Monomial>& B = basis(n);
  if (v.size() != B.size()) throw ContextError("coordinate length mismatch");
  std::vector<Term> terms;
  for (size_t i = 0; i < B.size(); ++i)
    if (!FieldSpec::is_zero(v[i])) terms.push_back({B[i], v[i]});
  return Polynomial(impl_->ring, std::move(terms));
}

const KMat& GradedAlgebra::multiplication(int n) const {
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    auto it = impl_->mult.find(n);
    if (it != impl_->mult.end()) return it->second;
  }
  const std::vector<Monomial>& Bp = basis(n - 1);
  const std::vector<Monomial>& B = basis(n);
  int m = nvars(), hp = (int)Bp.size();
  KMat T(m * hp, (int)B.size(), impl_->ring->field);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < hp; ++i) {
      Polynomial f = Polynomial::from_monomial(
          impl_->ring, Monomial::var(m, j) * Bp[i], Coeff(1));
      std::vector<Coeff> row = coordinates(f, n);
      for (size_t b = 0; b < row.size(); ++b)
        T.at(j * hp + i, (int)b) = row[b];
    }
  std::lock_guard<std::mutex> lk(impl_->mu);
  return impl_->mult.emplace(n, std::move(T)).first->second;
}

// ---------------------------------------------------------------------------

struct GenericReductionData::Impl {
  GradedAlgebra A;
  int d = 0, m = 0, n_max = 0;
  RingCtxPtr uring;
  std::vector<std::vector<int>> uvar;
  mutable std::mutex mu;
  mutable std::map<int, PolyMat> mats;
  mutable std::map<std::pair<int, int>, Ideal> dets;
  mutable std::map<int, int> ranks;
  int r = -1;
  Ideal J;
};

const GradedAlgebra& GenericReductionData::algebra() const { return impl_->A; }
int GenericReductionData::dim() const { return impl_->d; }
int GenericReductionData::ngens() const { return impl_->m; }
const RingCtxPtr& GenericReductionData::uring() const { return impl_->uring; }
int GenericReductionData::uvar(int i, int j) const {
  return impl_->uvar[i][j];
}
int GenericReductionData::n_max() const { return impl_->n_max; }
int GenericReductionData::r() const { return impl_->r; }

const Ideal& GenericReductionData::J() const {
  if (impl_->r < 0) throw ContextError("stabilization degree not set");
  return impl_->J;
}

void GenericReductionData::set_r(int r) const {
  impl_->r = r;
  impl_->J = det_ideal(r + 1, impl_->A.hilbert(r + 1));
}

const PolyMat& GenericReductionData::matrix(int n) const {
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    auto it = impl_->mats.find(n);
    if (it != impl_->mats.end()) return it->second;
  }
  const GradedAlgebra& A = impl_->A;
  int d = impl_->d, m = impl_->m;
  int hp = A.hilbert(n - 1), h = A.hilbert(n);
  const KMat& T = A.multiplication(n);
  PolyMat M(d * hp, std::vector<Polynomial>(h, Polynomial::zero(impl_->uring)));
  for (int i = 0; i < d; ++i)
    for (int f = 0; f < hp; ++f)
      for (int b = 0; b < h; ++b) {
        Polynomial entry = Polynomial::zero(impl_->uring);
        for (int j = 0; j < m; ++j) {
          const Coeff& c = T.at(j * hp + f, b);
          if (FieldSpec::is_zero(c)) continue;
          entry = entry + Polynomial::from_monomial(
                              impl_->uring,
                              Monomial::var(impl_->uring->nvars(),
                                            impl_->uvar[i][j]),
                              c);
        }
        M[i * hp + f][b] = std::move(entry);
      }
  std::lock_guard<std::mutex> lk(impl_->mu);
  return impl_->mats.emplace(n, std::move(M)).first->second;
}

Ideal GenericReductionData::det_ideal(int n, int t) const {
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    auto it = impl_->dets.find({n, t});
    if (it != impl_->dets.end()) return it->second;
  }
  Ideal I;
  if (n == 0) {
    I = t <= 0 ? Ideal::unit(impl_->uring) : Ideal::zero(impl_->uring);
  } else {
    const PolyMat& M = matrix(n);
    if (M.empty())
      I = t <= 0 ? Ideal::unit(impl_->uring) : Ideal::zero(impl_->uring);
    else
      I = minors_ideal(M, t, impl_->uring);
  }
  std::lock_guard<std::mutex> lk(impl_->mu);
  return impl_->dets.emplace(std::make_pair(n, t), I).first->second;
}

int GenericReductionData::generic_rank(int n) const {
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    auto it = impl_->ranks.find(n);
    if (it != impl_->ranks.end()) return it->second;
  }
  int rk = n == 0 ? 0 : rank_poly(matrix(n));
  std::lock_guard<std::mutex> lk(impl_->mu);
  return impl_->ranks.emplace(n, rk).first->second;
}

GenericReductionData build_generic_data(const GradedAlgebra& A, int n_max) {
  int d = A.krull_dimension();
  int m = A.nvars();
  if (d < 1)
    throw ContextError("zero-dimensional algebra has no parameter forms");
  if (n_max <= 0) {
    long reldeg = 0;
    for (const Polynomial& f : A.ring()->quotient_relations)
      reldeg = std::max(reldeg, f.total_degree());
    n_max = std::max((int)(2 * reldeg) + m, 4);
  }

  std::vector<std::string> names;
  std::vector<std::vector<int>> uvar(d, std::vector<int>(m, -1));
  std::vector<std::string> taken = A.ring()->vars;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < m; ++j) {
      std::string base = d == 1 ? "u" + std::to_string(j + 1)
                                : "u" + std::to_string(i + 1) +
                                      std::to_string(j + 1);
      std::string name = fresh_var_name(taken, base);
      taken.push_back(name);
      uvar[i][j] = (int)names.size();
      names.push_back(name);
    }

  GenericReductionData G;
  G.impl_ = std::make_shared<GenericReductionData::Impl>();
  G.impl_->A = A;
  G.impl_->d = d;
  G.impl_->m = m;
  G.impl_->n_max = n_max;
  G.impl_->uring = RingContext::make(names, A.ring()->field);
  G.impl_->uvar = std::move(uvar);
  return G;
}

std::vector<Polynomial> assemble_graded_ideal(
    const GradedAlgebra& A,
    const std::vector<std::vector<std::vector<Coeff>>>& pieces) {
  if (!pieces.empty() && !pieces[0].empty())
    throw ContextError("a proper graded ideal has no degree zero part");
  FieldSpec f = A.ring()->field;
  std::vector<Polynomial> gens;
  std::vector<std::vector<Coeff>> current;  // basis of the running degree
  for (int n = 1; n < (int)pieces.size(); ++n) {
    int hp = A.hilbert(n - 1), h = A.hilbert(n);
    int m = A.nvars();
    const KMat& T = A.multiplication(n);
    std::vector<std::vector<Coeff>> carried;
    for (const auto& v : current)
      for (int j = 0; j < m; ++j) {
        std::vector<Coeff> w(h, Coeff(0));
        for (int i = 0; i < hp; ++i) {
          if (FieldSpec::is_zero(v[i])) continue;
          for (int b = 0; b < h; ++b)
            w[b] = f.add(w[b], f.mul(v[i], T.at(j * hp + i, b)));
        }
        carried.push_back(std::move(w));
      }
    KMat cm = KMat::from_rows(carried, h, f);
    std::vector<std::vector<Coeff>> span = rowspace_basis(cm);
    for (const auto& v : pieces[n]) {
      if (in_rowspace(v, span, h, f)) continue;
      gens.push_back(A.from_coordinates(v, n));
      span.push_back(v);
      KMat sm = KMat::from_rows(span, h, f);
      span = rowspace_basis(sm);
    }
    // the target must absorb the carried span, else the input was not an ideal
    KMat tm = KMat::from_rows(pieces[n], h, f);
    std::vector<std::vector<Coeff>> target = rowspace_basis(tm);
    for (const auto& v : carried)
      if (!in_rowspace(v, target, h, f))
        throw ContextError("graded pieces are not closed under degree one");
    current = std::move(target);
  }
  return gens;
}

std::vector<std::vector<Coeff>> graded_piece_of_ideal(
    const GradedAlgebra& A, const std::vector<Polynomial>& gens, int n) {
  std::vector<std::vector<Coeff>> rows;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial gr = reduce_full(transport_by_name(g, A.ring()->ambient()),
                                A.ring()->quotient_relations);
    if (gr.is_zero()) continue;
    long dg = gr.total_degree();
    if (!gr.is_homogeneous())
      throw ContextError("inhomogeneous generator: " + g.str());
    if (dg > n) continue;
    for (const Monomial& mb : A.basis(n - (int)dg)) {
      Polynomial p = gr * Polynomial::from_monomial(A.ring()->ambient(), mb,
                                                    Coeff(1));
      rows.push_back(A.coordinates(p, n));
    }
  }
  KMat m = KMat::from_rows(rows, A.hilbert(n), A.ring()->field);
  return rowspace_basis(m);
}

}  // namespace idealcore
