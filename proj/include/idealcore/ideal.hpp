#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "idealcore/linalg.hpp"
#include "idealcore/polynomial.hpp"
#include "idealcore/ring.hpp"

namespace idealcore {

// Non-fatal diagnostics (e.g. colon by the zero ideal). Default handler drops
// the message; the CLI installs a printer.
void set_warning_handler(std::function<void(const std::string&)> h);
void warn(const std::string& msg);

// Reduced Groebner basis of `gens` in the plain polynomial ring `ctx`
// (ctx must have no quotient). Deterministic for a fixed input ordering.
std::vector<Polynomial> buchberger(const RingCtxPtr& ctx,
                                   std::vector<Polynomial> gens);

// Full multivariate division remainder of f by G (G need not be a GB; the
// result is canonical when it is).
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& G);

// Quotient ring builder: computes the reduced GB of the relations first.
RingCtxPtr make_quotient_ring(const RingCtxPtr& ambient,
                              const std::vector<Polynomial>& relations);

// Finitely generated ideal of its ring context (which may be a quotient
// ring). The Groebner basis of the preimage ideal in the ambient polynomial
// ring is computed lazily, cached, and shared across copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingCtxPtr ctx, std::vector<Polynomial> gens);

  static Ideal zero(RingCtxPtr ctx) { return Ideal(std::move(ctx), {}); }
  static Ideal unit(RingCtxPtr ctx);
  static Ideal principal(const Polynomial& g) {
    return Ideal(g.ctx(), {g});
  }

  const RingCtxPtr& ctx() const { return ctx_; }
  const std::vector<Polynomial>& gens() const& { return gens_; }
  std::vector<Polynomial> gens() const&& { return gens_; }

  // Reduced GB of gens + quotient relations, in the ambient context.
  const std::vector<Polynomial>& groebner() const&;
  std::vector<Polynomial> groebner() const&& { return groebner_ref(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains_ideal(const Ideal& other) const;
  bool is_zero() const;  // zero as an ideal of the (possibly quotient) ring
  bool is_unit() const;

  // Generators re-expressed as the part of the reduced preimage GB that is
  // not already implied by the quotient relations; canonical.
  std::vector<Polynomial> reduced_generators() const;

 private:
  RingCtxPtr ctx_;
  std::vector<Polynomial> gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
  const std::vector<Polynomial>& groebner_ref() const;
};

bool ideal_equal(const Ideal& a, const Ideal& b);

// Generators of I ∩ k[kept vars], returned in the restricted ring context
// (quotient relations, when present, must avoid the dropped variables and are
// carried over).
Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect_all(const std::vector<Ideal>& ideals, RingCtxPtr ctx);

// Ideal quotient (I : J), computed per generator of J.
Ideal colon(const Ideal& I, const Ideal& J);

// (I : J^infinity) via iterated colon; *steps receives the count.
Ideal saturate(const Ideal& I, const Ideal& J, int* steps = nullptr);

// Nullstellensatz membership f in sqrt(I) via one auxiliary variable.
bool radical_membership(const Polynomial& f, const Ideal& I);

// Radical for restricted classes: zero, monomial, principal, and homogeneous
// ideals in at most two variables. Throws NotImplementedClass otherwise.
Ideal radical_restricted(const Ideal& I);

// Membership in sqrt(I): tries direct membership, then radical_restricted,
// then falls back to radical_membership.
bool in_radical(const Polynomial& f, const Ideal& I);

// Ideal generated by all t x t minors; t = 0 gives (1), t beyond the format
// gives (0). `ctx` is the home of the entries.
Ideal minors_ideal(const PolyMat& mat, int t, const RingCtxPtr& ctx);

Ideal sum_ideal(const Ideal& a, const Ideal& b);
Ideal product_ideal(const Ideal& a, const Ideal& b);
Ideal power_ideal(const Ideal& a, int n);

// Krull dimension of R/I (R the ideal's ring, including its own quotient):
// the largest variable subset avoiding the supports of all lead monomials.
int quotient_dimension(const Ideal& I);

// Cheap generator clean-up: drops zeros, scalar duplicates and polynomial
// multiples of other generators (no GB, safe for any input).
std::vector<Polynomial> trim_generators(std::vector<Polynomial> gens);

// Sort canonically (descending) and deduplicate.
std::vector<Polynomial> sort_generators(std::vector<Polynomial> gens);

}  // namespace idealcore
