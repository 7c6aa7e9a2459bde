#include "runner.hpp"

#include <sstream>

#include "idealcore/core.hpp"

namespace idealcore {

using nlohmann::ordered_json;

namespace {

// Everything a command handler needs, built once from the merged job.
struct Pipeline {
  JobSpec spec;
  RingCtxPtr ring;  // quotient ring of the job (plain ring when no relations)
  std::vector<Polynomial> relations;
  Semantics sem = Semantics::AlgClosed;
  bool sem_explicit = false;
};

Semantics parse_semantics(const std::string& s) {
  for (Semantics v : {Semantics::AlgClosed, Semantics::RationalPoints,
                      Semantics::PrimeFieldPoints})
    if (s == semantics_name(v)) return v;
  throw ContextError("unknown semantics label '" + s + "'");
}

Pipeline make_pipeline(const JobSpec& spec) {
  Pipeline P;
  P.spec = spec;
  RingCtxPtr ambient = RingContext::make(spec.vars, field_of(spec));
  for (const std::string& s : spec.relations)
    P.relations.push_back(parse_polynomial(ambient, s));
  P.ring = P.relations.empty() ? ambient
                               : make_quotient_ring(ambient, P.relations);
  if (!spec.semantics.empty()) {
    P.sem = parse_semantics(spec.semantics);
    P.sem_explicit = true;
  }
  return P;
}

struct GradedJob {
  GradedAlgebra A;
  GenericReductionData G;
};

GradedJob graded_of(const Pipeline& P) {
  GradedJob g;
  g.A = GradedAlgebra::from_ring(P.ring);
  g.G = build_generic_data(g.A, P.spec.n_max);
  return g;
}

std::vector<Polynomial> parse_list(const Pipeline& P,
                                   const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const std::string& s : texts) out.push_back(parse_polynomial(P.ring, s));
  return out;
}

LocalIdealContext local_of(const Pipeline& P) {
  if (P.spec.ideal.empty())
    throw ContextError("this command needs ideal = [...] (or --ideal)");
  std::optional<std::vector<mpq_class>> w;
  if (!P.spec.weights.empty()) {
    std::vector<mpq_class> v;
    for (long x : P.spec.weights) v.emplace_back(x);
    w = std::move(v);
  }
  return make_local_context(P.ring, Ideal(P.ring, parse_list(P, P.spec.ideal)),
                            w);
}

Ideal reduction_ideal_of(const Pipeline& P) {
  if (P.spec.reduction.empty())
    throw ContextError("this command needs reduction = [...] (or --reduction)");
  return Ideal(P.ring, parse_list(P, P.spec.reduction));
}

Ideal variable_ideal(const RingCtxPtr& ring) {
  std::vector<Polynomial> vars;
  for (const std::string& v : ring->vars)
    vars.push_back(parse_polynomial(ring, v));
  return Ideal(ring, vars);
}

std::string poly_list(const std::vector<Polynomial>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s;
}

std::string ideal_text(const Ideal& I) {
  std::vector<Polynomial> g = I.reduced_generators();
  if (g.empty()) return "(0)";
  return "(" + poly_list(g) + ")";
}

ordered_json gen_strings(const Ideal& I) {
  ordered_json a = ordered_json::array();
  for (const Polynomial& g : I.reduced_generators()) a.push_back(g.str());
  return a;
}

std::string ring_text(const Pipeline& P) {
  std::string s = P.ring->field.describe() + "[";
  for (int i = 0; i < P.ring->nvars(); ++i) {
    if (i) s += ", ";
    s += P.ring->vars[i];
  }
  s += "]";
  if (!P.relations.empty()) s += " / (" + poly_list(P.relations) + ")";
  return s;
}

std::string int_row(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string seq_text(const std::vector<int>& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

// Stable top-level schema; diagnostics starts with the four mandatory keys.
ordered_json base_js(const JobSpec& spec, const std::string& command) {
  ordered_json j;
  j["command"] = command;
  j["input_echo"] = print_job(spec);
  j["result"] = ordered_json{{"generators", ordered_json::array()}};
  ordered_json d;
  d["r"] = nullptr;
  d["hilbert"] = ordered_json::array();
  d["strata"] = ordered_json::array();
  d["oracle_agreement"] = nullptr;
  j["diagnostics"] = std::move(d);
  return j;
}

void fill_core_report(RunOutcome& out, const CoreReport& rep) {
  std::ostringstream t;
  t << "method: " << rep.method << "\n";
  t << "semantics: " << semantics_name(rep.field_semantics) << "\n";
  if (rep.r >= 0) t << "r = " << rep.r << "\n";
  if (!rep.hilbert.empty()) t << "hilbert: " << int_row(rep.hilbert) << "\n";
  if (!rep.strata.empty()) {
    t << "admissible rank sequences (" << rep.strata.size() << "):";
    for (const AdmissibleSequence& s : rep.strata) t << " " << seq_text(s.a);
    t << "\n";
  }
  t << "core = " << ideal_text(rep.result) << "\n";
  t << "verdict: " << rep.verdict << "\n";
  if (!rep.sampling.empty()) {
    t << "sampling: " << rep.sampling;
    if (rep.sampling != "exhaustive") t << ", seed = " << rep.seed;
    t << "\n";
  }
  if (rep.oracle_agreement.has_value())
    t << "oracle agreement: " << (*rep.oracle_agreement ? "yes" : "no")
      << "\n";
  for (const std::string& n : rep.notes) t << "note: " << n << "\n";
  out.text += t.str();

  out.js["result"]["generators"] = gen_strings(rep.result);
  ordered_json& d = out.js["diagnostics"];
  if (rep.r >= 0) d["r"] = rep.r;
  d["hilbert"] = rep.hilbert;
  ordered_json strata = ordered_json::array();
  for (const AdmissibleSequence& s : rep.strata) strata.push_back(s.a);
  d["strata"] = std::move(strata);
  if (rep.oracle_agreement.has_value()) d["oracle_agreement"] = *rep.oracle_agreement;
  d["method"] = rep.method;
  d["semantics"] = semantics_name(rep.field_semantics);
  d["verdict"] = rep.verdict;
  d["notes"] = rep.notes;
  if (!rep.sampling.empty()) {
    d["sampling"] = rep.sampling;
    d["seed"] = rep.seed;
  }
}

void cmd_hilbert(const Pipeline& P, RunOutcome& out) {
  GradedJob g = graded_of(P);
  std::vector<int> h = g.A.hilbert_vector(g.G.n_max());
  std::ostringstream t;
  t << "hilbert function of " << ring_text(P) << "\n";
  t << "n   : ";
  for (size_t n = 0; n < h.size(); ++n) t << (n ? " " : "") << n;
  t << "\nh_n : " << int_row(h) << "\n";
  out.text += t.str();
  out.js["diagnostics"]["hilbert"] = h;
}

void cmd_analyze(const Pipeline& P, RunOutcome& out) {
  GradedJob g = graded_of(P);
  StabilizationReport rep;
  int r = big_reduction_number(g.G, Semantics::AlgClosed, &rep);

  std::ostringstream t;
  t << "algebra: " << ring_text(P) << "\n";
  t << "hilbert: " << int_row(rep.hilbert) << "  (degrees 0.." << rep.n_max
    << ")\n";
  t << "failure loci V_n = V(I_{h_n}(M_n)), stationary above r (checked to "
       "n_max = "
    << rep.n_max << "):\n";
  for (int n = 1; n <= r + 1; ++n) {
    t << "  n = " << n << ": h_" << n << " = " << g.A.hilbert(n)
      << ", minor ideal " << ideal_text(g.G.det_ideal(n, g.A.hilbert(n)))
      << "\n";
  }
  t << "r = " << r << " (" << semantics_name(Semantics::AlgClosed) << ")\n";
  if (P.sem_explicit && P.sem != Semantics::AlgClosed) {
    int rp = big_reduction_number(g.G, P.sem);
    t << "r = " << rp << " (" << semantics_name(P.sem) << ")\n";
  }
  t << "J = " << ideal_text(g.G.J()) << "\n";
  out.text += t.str();

  out.js["result"]["generators"] = gen_strings(g.G.J());
  ordered_json& d = out.js["diagnostics"];
  d["r"] = r;
  d["hilbert"] = rep.hilbert;
  d["n_max"] = rep.n_max;
  d["semantics"] = semantics_name(Semantics::AlgClosed);
}

void cmd_reduction_number(const Pipeline& P, RunOutcome& out) {
  std::ostringstream t;
  int r = -1;
  if (!P.spec.ideal.empty()) {
    LocalIdealContext L = local_of(P);
    Ideal J = reduction_ideal_of(P);
    r = reduction_number_ideal(L, J);
    t << "r_J(I) = " << r << "  for J = " << ideal_text(J)
      << ", I = " << ideal_text(L.I) << "\n";
  } else if (!P.spec.reduction.empty()) {
    GradedAlgebra A = GradedAlgebra::from_ring(P.ring);
    std::vector<Polynomial> forms = parse_list(P, P.spec.reduction);
    r = reduction_number_graded(A, forms, P.spec.n_max);
    t << "r_Q(A) = " << r << "  for Q = (" << poly_list(forms) << ")\n";
  } else {
    GradedJob g = graded_of(P);
    StabilizationReport rep;
    r = big_reduction_number(g.G, P.sem, &rep);
    t << "big reduction number r = " << r << " (" << semantics_name(P.sem)
      << ", window n_max = " << rep.n_max << ")\n";
    out.js["diagnostics"]["hilbert"] = rep.hilbert;
  }
  out.text += t.str();
  out.js["diagnostics"]["r"] = r;
}

void cmd_fiber_ring(const Pipeline& P, RunOutcome& out) {
  LocalIdealContext L = local_of(P);
  FiberRing F = fiber_ring(L);
  std::ostringstream t;
  t << "fiber ring F(I) = " << F.tring->field.describe() << "[";
  for (int i = 0; i < F.tring->nvars(); ++i)
    t << (i ? ", " : "") << F.tring->vars[i];
  t << "]";
  if (!F.relations.empty()) t << " / (" << poly_list(F.relations) << ")";
  t << "\nstandard graded: " << (F.graded ? "yes" : "no") << "\n";
  ordered_json gens = ordered_json::array();
  for (const Polynomial& f : F.relations) gens.push_back(f.str());
  out.js["result"]["generators"] = std::move(gens);
  if (F.graded) {
    GenericReductionData GF = build_generic_data(F.algebra, P.spec.n_max);
    std::vector<int> h = F.algebra.hilbert_vector(GF.n_max());
    t << "hilbert: " << int_row(h) << "\n";
    out.js["diagnostics"]["hilbert"] = h;
  }
  out.text += t.str();
}

void cmd_core(const Pipeline& P, RunOutcome& out) {
  std::string method = P.spec.method.empty() ? "theorem16" : P.spec.method;
  CoreReport rep;
  if (method == "theorem16" || method == "saturation" ||
      method == "generic-contraction" || method == "bruteforce") {
    GradedJob g = graded_of(P);
    if (method == "theorem16") {
      rep = core_theorem16(g.G);
    } else if (method == "saturation") {
      rep = core_saturation(g.G);
    } else if (method == "generic-contraction") {
      rep = core_generic_contraction(g.G);
    } else {
      SamplingPlan plan;
      plan.seed = P.spec.seed;
      if (P.spec.sample.empty()) {
        plan.exhaustive = field_of(P.spec).is_prime_field();
      } else if (P.spec.sample == "exhaustive") {
        plan.exhaustive = true;
      } else if (P.spec.sample.rfind("random:", 0) == 0) {
        plan.exhaustive = false;
        try {
          plan.count = std::stoi(P.spec.sample.substr(7));
        } catch (const std::exception&) {
          throw ContextError("sample must be exhaustive or random:<N>");
        }
        if (plan.count <= 0)
          throw ContextError("random sample count must be positive");
      } else {
        throw ContextError("sample must be exhaustive or random:<N>");
      }
      rep = core_bruteforce(g.G, plan);
    }
  } else if (method == "onedim") {
    LocalIdealContext L = local_of(P);
    if (P.spec.reduction.size() != 1)
      throw ContextError(
          "method onedim needs a single principal reduction = [x]");
    rep = core_onedim_conductor(L,
                                parse_polynomial(P.ring, P.spec.reduction[0]));
  } else if (method == "equimultiple") {
    LocalIdealContext L = local_of(P);
    rep = core_equimultiple(L, reduction_ideal_of(P));
  } else {
    throw ContextError("unknown method '" + method + "'");
  }
  if (P.sem_explicit && P.sem != rep.field_semantics)
    rep.notes.push_back("requested semantics '" + semantics_name(P.sem) +
                        "' does not apply to method " + method +
                        "; reporting " + semantics_name(rep.field_semantics));
  fill_core_report(out, rep);
}

struct CheckList {
  std::ostringstream text;
  ordered_json checks = ordered_json::array();
  bool failed = false;

  void add(const std::string& name, bool ok) {
    text << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    checks.push_back(ordered_json{{"name", name}, {"status", ok ? "pass" : "fail"}});
    if (!ok) failed = true;
  }
  void skip(const std::string& name, const std::string& why) {
    text << "[SKIP] " << name << " (" << why << ")\n";
    checks.push_back(ordered_json{{"name", name}, {"status", "skip"}, {"why", why}});
  }
};

// Prime-field oracle line: exhaustive intersection over P^{dm-1}(F_p) against
// the rational stratified value reduced mod p. Skipped honestly when some
// stratum has no F_p points (the two values legitimately differ then).
void check_oracle_prime(const Pipeline& P, const CoreReport& t16, long p,
                        CheckList& cl) {
  std::string name =
      "exhaustive intersection over F_" + std::to_string(p) +
      " matches the stratified value reduced mod " + std::to_string(p);
  try {
    JobSpec spec_p = P.spec;
    spec_p.field_token = "Fp " + std::to_string(p);
    spec_p.semantics.clear();
    Pipeline Pp = make_pipeline(spec_p);
    GradedJob gp = graded_of(Pp);
    SamplingPlan plan;
    plan.exhaustive = true;
    CoreReport bf = core_bruteforce(gp.G, plan);
    if (bf.oracle_agreement.has_value() && !*bf.oracle_agreement) {
      cl.skip(name, "some stratum has no F_" + std::to_string(p) +
                        " points; the point intersection legitimately "
                        "differs from the geometric formula");
      return;
    }
    Ideal reduced = reduce_ideal_mod_p(t16.result, Pp.ring);
    cl.add(name, ideal_equal(bf.result, reduced));
  } catch (const ContextError& e) {
    cl.skip(name, e.what());
  } catch (const NotImplementedClass& e) {
    cl.skip(name, e.what());
  }
}

void cmd_check(const Pipeline& P, RunOutcome& out) {
  CheckList cl;
  if (P.spec.ideal.empty()) {
    // graded battery
    GradedJob g = graded_of(P);
    CoreReport t16 = core_theorem16(g.G);
    CoreReport sat = core_saturation(g.G);
    CoreReport con = core_generic_contraction(g.G);
    cl.add("the saturation value lies inside the stratified value",
           t16.result.contains_ideal(sat.result));
    cl.add("the stratified value lies inside the generic contraction",
           con.result.contains_ideal(t16.result));
    Ideal mpow = power_ideal(variable_ideal(P.ring), t16.r + 1);
    cl.add("the (r+1)-st power of the variable ideal lies inside the "
           "stratified value",
           t16.result.contains_ideal(mpow));
    bool has_generic = false;
    std::vector<int> generic;
    for (int n = 1; n <= t16.r; ++n) generic.push_back(g.G.generic_rank(n));
    for (const AdmissibleSequence& s : t16.strata)
      if (s.a == generic) has_generic = true;
    cl.add("the generic rank sequence is admissible", has_generic);

    std::vector<long> primes = P.spec.primes;
    if (primes.empty()) primes = {101, 109};
    if (primes.size() > 2) primes.resize(2);
    if (field_of(P.spec).is_prime_field()) {
      cl.skip("prime oracle lines", "the job field is already a prime field");
    } else {
      for (long p : primes) check_oracle_prime(P, t16, p, cl);
    }

    fill_core_report(out, t16);
  } else {
    // local battery
    LocalIdealContext L = local_of(P);
    ColonChain ch = colon_chain(L);
    std::ostringstream t;
    t << "I^{r+1}                      = " << ideal_text(ch.power) << "\n";
    t << "[Q : (Q : I^{r+1})] cap R    = " << ideal_text(ch.inner) << "\n";
    t << "[Q : (I^r Q : I^{r+1})] cap R= " << ideal_text(ch.middle) << "\n";
    t << "(Q : J^inf) cap R            = " << ideal_text(ch.outer) << "\n";
    out.text += t.str();
    cl.add("containment chain from the top power through the saturation "
           "contraction",
           ch.chain_ok);
    for (const std::string& n : ch.notes) cl.text << "note: " << n << "\n";

    // close the chain against whichever core value is reachable
    Ideal corev;
    bool have_core = false;
    if (!P.spec.reduction.empty()) {
      CoreReport rep = core_equimultiple(L, reduction_ideal_of(P));
      corev = rep.result;
      have_core = true;
      cl.text << "core (colon formula) = " << ideal_text(corev) << "\n";
    } else if (P.spec.weights.empty()) {
      if (local_ideal_equal(L.I, variable_ideal(P.ring))) {
        GradedJob g = graded_of(P);
        CoreReport rep = core_theorem16(g.G);
        corev = rep.result;
        have_core = true;
        cl.text << "core (graded transfer) = " << ideal_text(corev) << "\n";
      }
    }
    if (have_core) {
      cl.add("the saturation contraction lies inside the core",
             local_contains_ideal(corev, ch.outer));
      if (!local_contains_ideal(ch.outer, corev))
        cl.text << "note: strict at the last step\n";
      out.js["result"]["generators"] = gen_strings(corev);
      out.js["diagnostics"]["r"] = ch.r;
    } else {
      cl.skip("the saturation contraction lies inside the core",
              "no core value reachable for this job");
      out.js["result"]["generators"] = gen_strings(ch.outer);
      out.js["diagnostics"]["r"] = ch.r;
    }
  }
  out.text += cl.text.str();
  out.js["diagnostics"]["checks"] = std::move(cl.checks);
  out.text += cl.failed ? "verdict: FAIL\n" : "verdict: PASS\n";
  out.js["diagnostics"]["verdict"] = cl.failed ? "FAIL" : "PASS";
  if (cl.failed) out.exit_code = 1;
}

}  // namespace

RunOutcome run_job(const JobSpec& spec) {
  std::string command = spec.command.empty() ? "analyze" : spec.command;
  Pipeline P = make_pipeline(spec);
  RunOutcome out;
  out.js = base_js(spec, command);
  if (command == "analyze") {
    cmd_analyze(P, out);
  } else if (command == "core") {
    cmd_core(P, out);
  } else if (command == "hilbert") {
    cmd_hilbert(P, out);
  } else if (command == "reduction-number") {
    cmd_reduction_number(P, out);
  } else if (command == "fiber-ring") {
    cmd_fiber_ring(P, out);
  } else if (command == "check") {
    cmd_check(P, out);
  } else {
    throw ContextError("unknown command '" + command +
                       "' (expected analyze, core, hilbert, reduction-number, "
                       "fiber-ring or check)");
  }
  return out;
}

}  // namespace idealcore
