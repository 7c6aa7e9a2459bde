#include "idealcore/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "idealcore/errors.hpp"

namespace idealcore {

namespace {

std::function<void(const std::string&)>& warning_sink() {
  static std::function<void(const std::string&)> h;
  return h;
}

Polynomial to_ctx(const Polynomial& f, const RingCtxPtr& target) {
  if (f.ctx().get() == target.get()) return f;
  return transport_by_name(f, target);
}

// gens of the preimage ideal in the ambient polynomial ring
std::vector<Polynomial> preimage_gens(const RingCtxPtr& ctx,
                                      const std::vector<Polynomial>& gens) {
  RingCtxPtr amb = ctx->ambient();
  std::vector<Polynomial> out;
  out.reserve(gens.size() + ctx->quotient_relations.size());
  for (const auto& g : gens) out.push_back(to_ctx(g, amb));
  for (const auto& r : ctx->quotient_relations) out.push_back(to_ctx(r, amb));
  return out;
}

Polynomial normalize_gen(const Polynomial& f) {
  return f.ctx()->field.is_prime_field() ? f.monic() : f.primitive();
}

Polynomial drop_lead(const Polynomial& f) {
  std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
  return Polynomial(f.ctx(), std::move(rest));
}

}  // namespace

void set_warning_handler(std::function<void(const std::string&)> h) {
  warning_sink() = std::move(h);
}

void warn(const std::string& msg) {
  if (warning_sink()) warning_sink()(msg);
}

Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& G) {
  if (f.is_zero()) return f;
  const RingCtxPtr& ctx = f.ctx();
  const FieldSpec& K = ctx->field;
  std::vector<Term> rem;
  while (!f.is_zero()) {
    bool hit = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (g.lm().divides(f.lm())) {
        Monomial q = g.lm().quotient_of(f.lm());
        Coeff c = K.div(f.lc(), g.lc());
        f = f - g.mul_term(q, c);
        hit = true;
        break;
      }
    }
    if (!hit) {
      rem.push_back(f.lt());
      f = drop_lead(f);
    }
  }
  return Polynomial(ctx, std::move(rem));
}

std::vector<Polynomial> buchberger(const RingCtxPtr& ctx,
                                   std::vector<Polynomial> gens) {
  if (ctx->has_quotient())
    throw ContextError("buchberger requires a plain polynomial ring");

  std::vector<Polynomial> G;
  for (auto& g : gens) {
    Polynomial h = to_ctx(g, ctx);
    if (!h.is_zero()) G.push_back(normalize_gen(h));
  }
  if (G.empty()) return {};

  const MonomialOrder& ord = ctx->order;

  struct Pair {
    long deg;
    Monomial l;
    int i, j;
  };
  auto pair_less = [&ord](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord.cmp(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::multiset<Pair, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<int, int>> in_queue;

  auto push_pair = [&](int i, int j) {
    const Monomial& a = G[i].lm();
    const Monomial& b = G[j].lm();
    if (a.coprime_with(b)) return;  // S-poly reduces to zero
    Monomial l = Monomial::lcm(a, b);
    pending.insert(Pair{l.deg(), l, i, j});
    in_queue.insert({i, j});
  };

  for (int j = 1; j < (int)G.size(); ++j)
    for (int i = 0; i < j; ++i) push_pair(i, j);

  while (!pending.empty()) {
    Pair p = *pending.begin();
    pending.erase(pending.begin());
    in_queue.erase({p.i, p.j});

    // chain criterion: some third lead divides the lcm and both side pairs
    // were already handled
    bool skip = false;
    for (int k = 0; k < (int)G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].lm().divides(p.l)) continue;
      auto key_ik = std::minmax(p.i, k);
      auto key_jk = std::minmax(p.j, k);
      if (!in_queue.count({key_ik.first, key_ik.second}) &&
          !in_queue.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    const Polynomial& gi = G[p.i];
    const Polynomial& gj = G[p.j];
    const FieldSpec& K = ctx->field;
    Polynomial s = gi.mul_term(gi.lm().quotient_of(p.l), K.inv(gi.lc())) -
                   gj.mul_term(gj.lm().quotient_of(p.l), K.inv(gj.lc()));
    Polynomial r = reduce_full(std::move(s), G);
    if (r.is_zero()) continue;
    r = normalize_gen(r);
    G.push_back(r);
    int n = (int)G.size() - 1;
    for (int i = 0; i < n; ++i) push_pair(i, n);
  }

  // minimal: drop elements whose lead is divisible by another surviving lead
  std::vector<char> keep(G.size(), 1);
  for (size_t i = 0; i < G.size(); ++i) {
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (G[j].lm().divides(G[i].lm()) &&
          !(G[j].lm() == G[i].lm() && j > i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i)
    if (keep[i]) minimal.push_back(G[i]);

  // reduced: tails in normal form, monic, sorted by descending lead
  std::vector<Polynomial> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = reduce_full(minimal[i], others);
    if (!r.is_zero()) out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(), [&ord](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.lm(), b.lm());
  });
  return out;
}

RingCtxPtr make_quotient_ring(const RingCtxPtr& ambient,
                              const std::vector<Polynomial>& relations) {
  if (ambient->has_quotient())
    throw ContextError("cannot build a quotient of a quotient ring");
  std::vector<Polynomial> gb = buchberger(ambient, relations);
  if (gb.empty()) return ambient;
  if (gb.size() == 1 && gb[0].is_constant())
    throw ContextError("quotient by the unit ideal");
  return RingContext::make_quotient_raw(ambient, std::move(gb));
}

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Polynomial> gb;
};

Ideal::Ideal(RingCtxPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
  if (!ctx_) throw ContextError("ideal requires a ring context");
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ctx() && !g.ctx()->same_presentation(*ctx_) &&
        !g.ctx()->same_presentation(*ctx_->ambient()))
      throw ContextError("generator from a different ring");
    gens_.push_back(to_ctx(g, ctx_));
  }
}

Ideal Ideal::unit(RingCtxPtr ctx) {
  Polynomial one = Polynomial::constant(ctx, Coeff(1));
  return Ideal(std::move(ctx), {one});
}

const std::vector<Polynomial>& Ideal::groebner() const& { return groebner_ref(); }

const std::vector<Polynomial>& Ideal::groebner_ref() const {
  if (!cache_) throw ContextError("ideal has no ring context");
  std::call_once(cache_->once, [this] {
    cache_->gb = buchberger(ctx_->ambient(), preimage_gens(ctx_, gens_));
  });
  return cache_->gb;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  Polynomial r = reduce_full(to_ctx(f, ctx_->ambient()), groebner());
  return to_ctx(r, ctx_);
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f).is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const {
  const auto& gb = groebner();
  const auto& rel = ctx_->quotient_relations;
  if (gb.size() != rel.size()) return false;
  for (size_t i = 0; i < gb.size(); ++i)
    if (!(gb[i] == to_ctx(rel[i], ctx_->ambient()))) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant();
}

std::vector<Polynomial> Ideal::reduced_generators() const {
  const auto& gb = groebner();
  if (!ctx_->has_quotient()) {
    std::vector<Polynomial> out;
    for (const auto& g : gb) out.push_back(to_ctx(g, ctx_));
    return out;
  }
  Ideal rel_ideal(ctx_->ambient(), ctx_->quotient_relations);
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (!rel_ideal.contains(g)) out.push_back(to_ctx(g, ctx_));
  return out;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!a.ctx()->same_presentation(*b.ctx()))
    throw ContextError("comparing ideals of different rings");
  const auto& ga = a.groebner();
  const auto& gb = b.groebner();
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

namespace {

// Groebner-based elimination in a plain ring: returns generators of
// (gens) ∩ k[vars not in drop_mask], recontexted to `plain`.
std::vector<Polynomial> eliminate_raw(const RingCtxPtr& plain,
                                      const std::vector<Polynomial>& gens,
                                      const std::vector<char>& drop_mask) {
  RingCtxPtr elim_ctx = RingContext::make(plain->vars, plain->field,
                                          MonomialOrder::block_elim(drop_mask));
  std::vector<Polynomial> lifted;
  lifted.reserve(gens.size());
  for (const auto& g : gens) lifted.push_back(to_ctx(g, elim_ctx));
  std::vector<Polynomial> gb = buchberger(elim_ctx, lifted);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool clean = true;
    for (int v = 0; v < plain->nvars() && clean; ++v)
      if (drop_mask[v] && g.uses_var(v)) clean = false;
    if (clean) out.push_back(to_ctx(g, plain));
  }
  return out;
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars) {
  const RingCtxPtr& ctx = I.ctx();
  if (drop_vars.empty()) return I;
  RingCtxPtr amb = ctx->ambient();
  std::vector<char> mask(amb->nvars(), 0);
  for (int v : drop_vars) {
    if (v < 0 || v >= amb->nvars()) throw ContextError("bad variable index");
    mask[v] = 1;
  }
  for (const auto& r : ctx->quotient_relations)
    for (int v : r.support_vars())
      if (mask[v])
        throw ContextError("cannot eliminate a variable used by the quotient");

  std::vector<Polynomial> kept =
      eliminate_raw(amb, preimage_gens(ctx, I.gens()), mask);

  std::vector<std::string> kept_names;
  std::vector<int> var_map(amb->nvars(), -1);
  for (int v = 0; v < amb->nvars(); ++v) {
    if (!mask[v]) {
      var_map[v] = (int)kept_names.size();
      kept_names.push_back(amb->vars[v]);
    }
  }
  RingCtxPtr small = RingContext::make(kept_names, amb->field);
  RingCtxPtr target = small;
  if (ctx->has_quotient()) {
    std::vector<Polynomial> rel;
    for (const auto& r : ctx->quotient_relations)
      rel.push_back(transport(to_ctx(r, amb), small, var_map));
    target = make_quotient_ring(small, rel);
  }
  std::vector<Polynomial> gens_out;
  Ideal rel_ideal(small, target->quotient_relations);
  for (const auto& g : kept) {
    Polynomial h = transport(g, small, var_map);
    if (target->has_quotient() && rel_ideal.contains(h)) continue;
    gens_out.push_back(to_ctx(h, target));
  }
  return Ideal(target, std::move(gens_out));
}

namespace {

// Preimage generators of I ∩ J in the ambient ring, via a tag variable.
std::vector<Polynomial> intersect_pre(const RingCtxPtr& ctx,
                                      const std::vector<Polynomial>& a_pre,
                                      const std::vector<Polynomial>& b_pre) {
  RingCtxPtr amb = ctx->ambient();
  std::vector<std::string> names = amb->vars;
  names.push_back(fresh_var_name(names, "t"));
  RingCtxPtr ext = RingContext::make(names, amb->field);
  int tn = ext->nvars() - 1;
  Polynomial t = Polynomial::variable(ext, tn);
  Polynomial one_minus_t = Polynomial::constant(ext, Coeff(1)) - t;

  std::vector<Polynomial> gens;
  for (const auto& f : a_pre) gens.push_back(t * transport_by_name(f, ext));
  for (const auto& f : b_pre)
    gens.push_back(one_minus_t * transport_by_name(f, ext));

  std::vector<char> mask(ext->nvars(), 0);
  mask[tn] = 1;
  std::vector<Polynomial> kept = eliminate_raw(ext, gens, mask);
  std::vector<Polynomial> out;
  for (const auto& g : kept) out.push_back(transport_by_name(g, amb));
  return out;
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!I.ctx()->same_presentation(*J.ctx()))
    throw ContextError("intersecting ideals of different rings");
  const RingCtxPtr& ctx = I.ctx();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ctx);
  std::vector<Polynomial> pre = intersect_pre(
      ctx, preimage_gens(ctx, I.gens()), preimage_gens(ctx, J.gens()));
  std::vector<Polynomial> gens;
  Ideal rel(ctx->ambient(), ctx->quotient_relations);
  for (auto& g : pre) {
    if (ctx->has_quotient() && rel.contains(g)) continue;
    gens.push_back(to_ctx(g, ctx));
  }
  return Ideal(ctx, std::move(gens));
}

Ideal intersect_all(const std::vector<Ideal>& ideals, RingCtxPtr ctx) {
  if (ideals.empty()) return Ideal::unit(std::move(ctx));
  Ideal acc = ideals[0];
  for (size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal colon(const Ideal& I, const Ideal& J) {
  if (!I.ctx()->same_presentation(*J.ctx()))
    throw ContextError("colon of ideals of different rings");
  const RingCtxPtr& ctx = I.ctx();
  RingCtxPtr amb = ctx->ambient();
  std::vector<Polynomial> i_pre = preimage_gens(ctx, I.gens());

  std::vector<Ideal> parts;
  bool any_divisor = false;
  for (const auto& g : J.gens()) {
    Polynomial gt = to_ctx(g, amb);
    if (gt.is_zero()) continue;
    any_divisor = true;
    if (I.contains(g)) continue;  // (I : g) = (1), neutral for the meet
    std::vector<Polynomial> meet = intersect_pre(ctx, i_pre, {gt});
    std::vector<Polynomial> qgens;
    for (const auto& w : meet) qgens.push_back(exact_divide(w, gt));
    parts.push_back(Ideal(ctx, std::move(qgens)));
  }
  if (!any_divisor) {
    warn("colon by the zero ideal; result is the unit ideal");
    return Ideal::unit(ctx);
  }
  if (parts.empty()) return Ideal::unit(ctx);
  return intersect_all(parts, ctx);
}

Ideal saturate(const Ideal& I, const Ideal& J, int* steps) {
  const int kCap = 200;
  Ideal prev = I;
  for (int n = 0; n < kCap; ++n) {
    Ideal next = colon(prev, J);
    if (ideal_equal(next, prev)) {
      if (steps) *steps = n;
      return prev;
    }
    prev = next;
  }
  throw InconclusiveStabilization("saturation did not stabilize within " +
                                  std::to_string(kCap) + " colon steps");
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  const RingCtxPtr& ctx = I.ctx();
  RingCtxPtr amb = ctx->ambient();
  Polynomial ft = to_ctx(f, amb);
  if (ft.is_zero()) return true;

  std::vector<std::string> names = amb->vars;
  names.push_back(fresh_var_name(names, "y"));
  RingCtxPtr ext = RingContext::make(names, amb->field);
  Polynomial y = Polynomial::variable(ext, ext->nvars() - 1);

  std::vector<Polynomial> gens;
  for (const auto& g : preimage_gens(ctx, I.gens()))
    gens.push_back(transport_by_name(g, ext));
  gens.push_back(Polynomial::constant(ext, Coeff(1)) -
                 y * transport_by_name(ft, ext));
  std::vector<Polynomial> gb = buchberger(ext, gens);
  return gb.size() == 1 && gb[0].is_constant();
}

Ideal radical_restricted(const Ideal& I) {
  const RingCtxPtr& ctx = I.ctx();
  RingCtxPtr amb = ctx->ambient();
  const auto& gb = I.groebner();

  auto wrap = [&](std::vector<Polynomial> gens) {
    std::vector<Polynomial> out;
    Ideal rel(amb, ctx->quotient_relations);
    for (auto& g : gens) {
      if (ctx->has_quotient() && rel.contains(to_ctx(g, amb))) continue;
      out.push_back(to_ctx(g, ctx));
    }
    return Ideal(ctx, std::move(out));
  };

  if (gb.empty()) return Ideal::zero(ctx);
  if (gb.size() == 1 && gb[0].is_constant()) return Ideal::unit(ctx);

  // monomial ideal: radical is generated by the squarefree parts
  bool all_monomial = true;
  for (const auto& g : gb)
    if (!g.is_monomial()) all_monomial = false;
  if (all_monomial) {
    std::vector<Polynomial> rad;
    for (const auto& g : gb)
      rad.push_back(Polynomial::from_monomial(amb, g.lm().squarefree(), Coeff(1)));
    return wrap(trim_generators(std::move(rad)));
  }

  // principal
  if (gb.size() == 1) return wrap({squarefree_part(gb[0])});

  // homogeneous in at most two variables
  bool homog = true;
  std::set<int> support;
  for (const auto& g : gb) {
    if (!g.is_homogeneous()) homog = false;
    for (int v : g.support_vars()) support.insert(v);
  }
  if (homog && support.size() <= 2) {
    if (support.size() == 1) {
      // single-variable homogeneous means a monomial ideal, handled above;
      // reaching here only with a non-monomial single generator set
      return wrap({squarefree_part(gcd_bivariate_homogeneous(gb))});
    }
    Polynomial g = gcd_bivariate_homogeneous(gb);
    std::vector<Polynomial> quotients;
    bool quotient_unit = false;
    for (const auto& f : gb) {
      Polynomial q = exact_divide(f, g);
      if (q.is_constant()) quotient_unit = true;
      quotients.push_back(q);
    }
    if (quotient_unit) {
      // the ideal is principal with generator g
      if (g.is_constant()) return Ideal::unit(ctx);
      return wrap({squarefree_part(g)});
    }
    // common factor g times an ideal with trivial gcd; the cofactor ideal
    // cuts out only the origin, so sqrt(I) = sqrt(g) ∩ (v, w) = (sqrt-free g)
    auto it = support.begin();
    int v = *it++;
    int w = *it;
    if (g.is_constant()) {
      return wrap({Polynomial::variable(amb, v), Polynomial::variable(amb, w)});
    }
    return wrap({squarefree_part(g)});
  }

  throw NotImplementedClass(
      "radical supports zero, unit, monomial, principal, and homogeneous "
      "ideals in at most two variables; generators fall outside these "
      "classes");
}

bool in_radical(const Polynomial& f, const Ideal& I) {
  if (I.contains(f)) return true;
  try {
    Ideal rad = radical_restricted(I);
    return rad.contains(f);
  } catch (const NotImplementedClass&) {
    return radical_membership(f, I);
  }
}

namespace {

// det of the rows selected in `rows` restricted to the columns set in
// `colmask`, by expansion along the first row, memoized on colmask.
Polynomial det_memo(const PolyMat& m, const std::vector<int>& rows, int depth,
                    uint64_t colmask, const RingCtxPtr& ctx,
                    std::unordered_map<uint64_t, Polynomial>& memo) {
  if (colmask == 0) return Polynomial::constant(ctx, Coeff(1));
  // depth is determined by the popcount of colmask for a fixed row list, so
  // colmask alone is a sound memo key
  auto found = memo.find(colmask);
  if (found != memo.end()) return found->second;

  Polynomial acc = Polynomial::zero(ctx);
  int row = rows[depth];
  int sign = 1;
  for (int c = 0; c < 64; ++c) {
    if (!(colmask & (1ull << c))) continue;
    const Polynomial& entry = m[row][c];
    if (!entry.is_zero()) {
      Polynomial sub =
          det_memo(m, rows, depth + 1, colmask & ~(1ull << c), ctx, memo);
      Polynomial contrib = entry * sub;
      acc = (sign > 0) ? acc + contrib : acc - contrib;
    }
    sign = -sign;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

Ideal minors_ideal(const PolyMat& mat, int t, const RingCtxPtr& ctx) {
  if (t <= 0) return Ideal::unit(ctx);
  int rows = (int)mat.size();
  int cols = rows ? (int)mat[0].size() : 0;
  if (t > rows || t > cols) return Ideal::zero(ctx);
  if (cols > 62) throw ContextError("minor extraction limited to 62 columns");

  std::vector<int> rowsel(t);
  std::vector<Polynomial> minors;

  std::function<void(int, int)> choose_rows = [&](int start, int k) {
    if (k == t) {
      std::unordered_map<uint64_t, Polynomial> memo;
      std::vector<int> colsel(t);
      std::function<void(int, int, uint64_t)> choose_cols = [&](int cstart,
                                                                int ck,
                                                                uint64_t mask) {
        if (ck == t) {
          Polynomial d = det_memo(mat, rowsel, 0, mask, ctx, memo);
          if (!d.is_zero()) minors.push_back(normalize_gen(d));
          return;
        }
        for (int c = cstart; c <= cols - (t - ck); ++c) {
          colsel[ck] = c;
          choose_cols(c + 1, ck + 1, mask | (1ull << c));
        }
      };
      choose_cols(0, 0, 0);
      return;
    }
    for (int r = start; r <= rows - (t - k); ++r) {
      rowsel[k] = r;
      choose_rows(r + 1, k + 1);
    }
  };
  choose_rows(0, 0);
  return Ideal(ctx, trim_generators(std::move(minors)));
}

Ideal sum_ideal(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ctx(), trim_generators(std::move(gens)));
}

Ideal product_ideal(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * to_ctx(g, a.ctx()));
  return Ideal(a.ctx(), trim_generators(std::move(gens)));
}

Ideal power_ideal(const Ideal& a, int n) {
  if (n < 0) throw ContextError("negative ideal power");
  if (n == 0) return Ideal::unit(a.ctx());
  Ideal acc = a;
  for (int i = 1; i < n; ++i) acc = product_ideal(acc, a);
  return acc;
}

std::vector<Polynomial> trim_generators(std::vector<Polynomial> gens) {
  std::vector<Polynomial> nz;
  for (auto& g : gens)
    if (!g.is_zero()) nz.push_back(normalize_gen(g));
  nz = sort_generators(std::move(nz));

  std::vector<char> keep(nz.size(), 1);
  for (size_t i = 0; i < nz.size(); ++i) {
    for (size_t j = 0; j < nz.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (!nz[j].lm().divides(nz[i].lm())) continue;
      if (nz[j].total_degree() > nz[i].total_degree()) continue;
      try {
        exact_divide(nz[i], nz[j]);
        keep[i] = 0;  // a multiple of another generator
      } catch (const ContextError&) {
      }
    }
  }
  std::vector<Polynomial> out;
  for (size_t i = 0; i < nz.size(); ++i)
    if (keep[i]) out.push_back(nz[i]);
  return out;
}

int quotient_dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  std::vector<Monomial> heads;
  for (const Polynomial& g : I.groebner()) heads.push_back(g.lm());
  int m = I.ctx()->nvars();
  if (m > 24) throw NotImplementedClass("dimension by subset search", "too many variables");
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& h : heads) {
      bool inside = true;
      for (int i = 0; i < m; ++i)
        if (h.e[i] && !(mask >> i & 1)) {
          inside = false;
          break;
        }
      if (inside) {  // a lead monomial lives inside the subset
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<Polynomial> sort_generators(std::vector<Polynomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return Polynomial::compare(a, b) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Polynomial& a, const Polynomial& b) {
                           return a == b;
                         }),
             gens.end());
  return gens;
}

}  // namespace idealcore
