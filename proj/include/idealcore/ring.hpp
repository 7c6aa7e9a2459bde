#pragma once

#include <memory>
#include <string>
#include <vector>

#include "idealcore/field.hpp"
#include "idealcore/monomial.hpp"
#include "idealcore/polynomial.hpp"

namespace idealcore {

// Immutable ring description: k[vars] with an active monomial order, or a
// quotient k[vars]/D where `quotient_relations` is the reduced Groebner basis
// of D in the ambient polynomial ring. Polynomials in a quotient context are
// coset representatives.
struct RingContext : std::enable_shared_from_this<RingContext> {
  std::vector<std::string> vars;
  FieldSpec field;
  MonomialOrder order;
  std::vector<Polynomial> quotient_relations;  // reduced GB in ambient ctx

  static RingCtxPtr make(std::vector<std::string> vars, FieldSpec field,
                         MonomialOrder order = MonomialOrder::grevlex());

  // `relations_gb` must be a reduced Groebner basis living in `ambient`.
  static RingCtxPtr make_quotient_raw(const RingCtxPtr& ambient,
                                      std::vector<Polynomial> relations_gb);

  int nvars() const { return (int)vars.size(); }
  bool has_quotient() const { return !quotient_relations.empty(); }
  int var_index(const std::string& name) const;  // -1 if absent

  // The same vars/field/order without quotient relations; identity when there
  // are none.
  RingCtxPtr ambient() const;

  bool same_presentation(const RingContext& o) const;

 private:
  mutable RingCtxPtr ambient_;  // set at construction for quotient contexts
  friend struct RingContextAccess;
};

// Returns a variable name based on `base` that does not collide with any name
// in `taken` (appends underscores).
std::string fresh_var_name(const std::vector<std::string>& taken,
                           const std::string& base);

// Polynomial transport between contexts. var_map[i] gives the target index of
// source variable i; every variable actually used must be mapped (>= 0).
Polynomial transport(const Polynomial& f, const RingCtxPtr& target,
                     const std::vector<int>& var_map);

// Identity-by-name transport; every used variable must exist in the target.
Polynomial transport_by_name(const Polynomial& f, const RingCtxPtr& target);

std::vector<int> name_var_map(const RingContext& from, const RingContext& to);

}  // namespace idealcore
