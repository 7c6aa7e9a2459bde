#include "idealcore/modulepres.hpp"

#include <map>

#include "idealcore/errors.hpp"
#include "idealcore/ring.hpp"

namespace idealcore {

Ideal ModulePresentation::fitting(int t) const {
  PolyMat m;
  if (!columns.empty()) {
    m.assign(h, std::vector<Polynomial>(columns.size(), Polynomial::zero(ctx)));
    for (size_t j = 0; j < columns.size(); ++j) {
      if ((int)columns[j].size() != h)
        throw ContextError("presentation column has wrong length");
      for (int i = 0; i < h; ++i) m[i][j] = columns[j][i];
    }
  }
  if (m.empty()) return t <= 0 ? Ideal::unit(ctx) : Ideal::zero(ctx);
  return minors_ideal(m, t, ctx);
}

Polynomial FlatModule::pack(const std::vector<Polynomial>& v) const {
  if ((int)v.size() != h) throw ContextError("vector has wrong length");
  Polynomial s = Polynomial::zero(ext);
  for (int j = 0; j < h; ++j) {
    if (v[j].is_zero()) continue;
    s = s + transport_by_name(v[j], ext) * Polynomial::variable(ext, e0 + j);
  }
  return s;
}

std::vector<Polynomial> FlatModule::unpack(const Polynomial& f) const {
  std::vector<std::vector<Term>> parts(h);
  for (const Term& t : f.terms()) {
    int slot = -1;
    long edeg = 0;
    for (int j = 0; j < h; ++j) {
      edeg += t.m.e[e0 + j];
      if (t.m.e[e0 + j] == 1) slot = j;
    }
    if (edeg != 1) continue;  // tag-free and tag-quadratic terms are dropped
    Term s = t;
    s.m.e[e0 + slot] = 0;
    parts[slot].push_back(std::move(s));
  }
  std::vector<Polynomial> v;
  v.reserve(h);
  for (int j = 0; j < h; ++j)
    v.push_back(transport_by_name(Polynomial(ext, std::move(parts[j])), base));
  return v;
}

FlatModule flatten(const RingCtxPtr& ctx, int h,
                   const std::vector<std::vector<Polynomial>>& gens) {
  if (ctx->has_quotient())
    throw ContextError("module presentations require a plain polynomial ring");
  std::vector<std::string> names = ctx->vars;
  int e0 = (int)names.size();
  for (int j = 0; j < h; ++j)
    names.push_back(fresh_var_name(names, "e" + std::to_string(j + 1)));
  RingCtxPtr ext = RingContext::make(names, ctx->field, ctx->order);

  FlatModule F;
  F.base = ctx;
  F.ext = ext;
  F.h = h;
  F.e0 = e0;
  std::vector<Polynomial> G;
  // products of two tags vanish: elements of the flat ideal split as a tag
  // linear part (the module) plus junk in (e_a e_b)
  for (int a = 0; a < h; ++a)
    for (int b = a; b < h; ++b)
      G.push_back(Polynomial::variable(ext, e0 + a) *
                  Polynomial::variable(ext, e0 + b));
  F.flat = Ideal(ext, G);  // placeholder so pack() works below
  for (const auto& v : gens) G.push_back(F.pack(v));
  F.flat = Ideal(ext, std::move(G));
  return F;
}

bool module_contains(const FlatModule& N, const std::vector<Polynomial>& v) {
  return N.flat.contains(N.pack(v));
}

namespace {

// Tag-linear parts of a generating set of a flat ideal C with
// (e_a e_b) <= C <= (e_1..e_h). Reduction of a tag-linear element only ever
// multiplies generators by tag-free monomials on their tag-linear parts, so
// these parts generate the module {v : pack(v) in C}.
std::vector<std::vector<Polynomial>> extract_module(
    const FlatModule& shape, const std::vector<Polynomial>& gb) {
  std::vector<std::vector<Polynomial>> out;
  for (const Polynomial& g : gb) {
    std::vector<Polynomial> v = shape.unpack(transport_by_name(g, shape.ext));
    bool nonzero = false;
    for (const auto& p : v) nonzero = nonzero || !p.is_zero();
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Polynomial>> module_colon(const FlatModule& N,
                                                  const Ideal& G) {
  if (G.is_zero()) throw ContextError("module colon by the zero ideal");
  std::vector<Polynomial> lifted;
  for (const Polynomial& g : G.gens()) lifted.push_back(transport_by_name(g, N.ext));
  Ideal C = colon(N.flat, Ideal(N.ext, std::move(lifted)));
  return extract_module(N, C.groebner());
}

std::vector<std::vector<Polynomial>> module_intersect(const FlatModule& A,
                                                      const FlatModule& B) {
  if (!A.ext->same_presentation(*B.ext) || A.h != B.h || A.e0 != B.e0)
    throw ContextError("module intersection across different flattenings");
  Ideal C = intersect(A.flat, B.flat);
  return extract_module(A, C.groebner());
}

std::vector<std::vector<Polynomial>> jacobson_intersection(
    const ModulePresentation& P, const Ideal& J) {
  if (J.is_zero()) throw ContextError("jacobson intersection needs a nonzero ideal");
  const RingCtxPtr& ctx = P.ctx;
  int h = P.h;
  int ncols = (int)P.columns.size();

  std::vector<Ideal> fit;  // fit[t] = I_t, t = 0..min(h, ncols)
  fit.push_back(Ideal::unit(ctx));
  int rank = 0;
  for (int t = 1; t <= std::min(h, ncols); ++t) {
    fit.push_back(P.fitting(t));
    if (!fit.back().is_zero()) rank = t;
  }

  std::vector<std::vector<Polynomial>> acc;
  bool have_acc = false;
  auto unit_vec = [&](const Polynomial& scale, int j) {
    std::vector<Polynomial> v(h, Polynomial::zero(ctx));
    v[j] = scale;
    return v;
  };
  for (int t = 1; t <= rank + 1; ++t) {
    Ideal denom = t == 1 ? J : product_ideal(J, fit[t - 1]);
    std::vector<std::vector<Polynomial>> num = P.columns;
    if (t <= rank && !fit[t].is_zero()) {
      Ideal rad = radical_restricted(fit[t]);
      for (const Polynomial& g : rad.gens())
        for (int j = 0; j < h; ++j) num.push_back(unit_vec(g, j));
    }
    FlatModule numf = flatten(ctx, h, num);
    std::vector<std::vector<Polynomial>> term = module_colon(numf, denom);
    if (!have_acc) {
      acc = std::move(term);
      have_acc = true;
      continue;
    }
    acc = module_intersect(flatten(ctx, h, acc), flatten(ctx, h, term));
  }
  return acc;
}

KMat constants_in_submodule(const RingCtxPtr& ctx, int h,
                            const std::vector<std::vector<Polynomial>>& gens) {
  FlatModule N = flatten(ctx, h, gens);
  std::vector<Polynomial> nf(h);
  for (int j = 0; j < h; ++j)
    nf[j] = N.flat.normal_form(Polynomial::variable(N.ext, N.e0 + j));
  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> row_of(
      [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  for (const Polynomial& f : nf)
    for (const Term& t : f.terms())
      row_of.emplace(t.m, (int)row_of.size());
  KMat sys((int)row_of.size(), h, ctx->field);
  for (int j = 0; j < h; ++j)
    for (const Term& t : nf[j].terms()) sys.at(row_of[t.m], j) = t.c;
  auto ker = kernel_basis(sys);
  KMat out((int)ker.size(), h, ctx->field);
  for (size_t i = 0; i < ker.size(); ++i)
    for (int j = 0; j < h; ++j) out.at((int)i, j) = ker[i][j];
  return out;
}

}  // namespace idealcore
