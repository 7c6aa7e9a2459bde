#include "idealcore/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "idealcore/errors.hpp"

namespace idealcore {

struct RingContextAccess {
  static std::shared_ptr<RingContext> create() {
    return std::make_shared<RingContext>();
  }
  static void set_ambient(const std::shared_ptr<RingContext>& c, RingCtxPtr a) {
    c->ambient_ = std::move(a);
  }
};

RingCtxPtr RingContext::make(std::vector<std::string> vars, FieldSpec field,
                             MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !std::isalpha((unsigned char)v[0]))
      throw ContextError("invalid variable name '" + v + "'");
    for (char c : v)
      if (!std::isalnum((unsigned char)c) && c != '_')
        throw ContextError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw ContextError("duplicate variable name '" + v + "'");
  }
  if (order.kind == MonomialOrder::Kind::Block &&
      order.block.size() != vars.size())
    throw ContextError("block order mask size mismatch");
  auto c = RingContextAccess::create();
  c->vars = std::move(vars);
  c->field = field;
  c->order = order;
  return c;
}

RingCtxPtr RingContext::make_quotient_raw(const RingCtxPtr& ambient,
                                          std::vector<Polynomial> relations_gb) {
  if (ambient->has_quotient())
    throw ContextError("quotient of a quotient context");
  if (relations_gb.empty()) return ambient;
  auto c = RingContextAccess::create();
  c->vars = ambient->vars;
  c->field = ambient->field;
  c->order = ambient->order;
  c->quotient_relations = std::move(relations_gb);
  RingContextAccess::set_ambient(c, ambient);
  return c;
}

int RingContext::var_index(const std::string& name) const {
  for (int i = 0; i < (int)vars.size(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

RingCtxPtr RingContext::ambient() const {
  if (!has_quotient()) return shared_from_this();
  return ambient_;
}

bool RingContext::same_presentation(const RingContext& o) const {
  if (vars != o.vars || !(field == o.field) || !(order == o.order)) return false;
  if (quotient_relations.size() != o.quotient_relations.size()) return false;
  for (size_t i = 0; i < quotient_relations.size(); ++i)
    if (quotient_relations[i] != o.quotient_relations[i]) return false;
  return true;
}

std::string fresh_var_name(const std::vector<std::string>& taken,
                           const std::string& base) {
  std::string name = base;
  while (std::find(taken.begin(), taken.end(), name) != taken.end())
    name += "_";
  return name;
}

Polynomial transport(const Polynomial& f, const RingCtxPtr& target,
                     const std::vector<int>& var_map) {
  int tn = target->nvars();
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m = Monomial::one(tn);
    for (int i = 0; i < t.m.nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (i >= (int)var_map.size() || var_map[i] < 0)
        throw ContextError("transport: unmapped variable in use");
      m.e[var_map[i]] += t.m.e[i];
    }
    out.push_back(Term{std::move(m), t.c});
  }
  return Polynomial(target, std::move(out));
}

std::vector<int> name_var_map(const RingContext& from, const RingContext& to) {
  std::vector<int> map(from.vars.size());
  for (size_t i = 0; i < from.vars.size(); ++i)
    map[i] = to.var_index(from.vars[i]);
  return map;
}

Polynomial transport_by_name(const Polynomial& f, const RingCtxPtr& target) {
  return transport(f, target, name_var_map(*f.ctx(), *target));
}

}  // namespace idealcore
