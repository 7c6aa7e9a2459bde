#include "jobspec.hpp"

#include <fstream>
#include <sstream>

#include "idealcore/errors.hpp"
#include "idealcore/polynomial.hpp"
#include "idealcore/ring.hpp"

namespace idealcore {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// [a, b, c] -> {"a","b","c"}; the column of each entry is reported relative
// to the whole line for error messages
std::vector<std::string> split_list(const std::string& value, int line,
                                    int col) {
  std::string v = trim(value);
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw ParseError("expected a bracketed list", line, col);
  std::vector<std::string> out;
  std::string body = v.substr(1, v.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ParseError("empty list entry", line, col);
    out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& s, int line, int col) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line, col);
  }
}

bool weighted_homogeneous(const Polynomial& f, const std::vector<long>& w) {
  if (f.is_zero()) return true;
  long d0 = -1;
  for (const Term& t : f.terms()) {
    long d = 0;
    for (int i = 0; i < t.m.nvars(); ++i) d += w[i] * t.m.e[i];
    if (d0 < 0) d0 = d;
    if (d != d0) return false;
  }
  return true;
}

}  // namespace

FieldSpec field_of(const JobSpec& spec) {
  if (spec.field_token == "Q" || spec.field_token == "Qbar")
    return FieldSpec::rational();
  std::stringstream ss(spec.field_token);
  std::string kind;
  long p = 0;
  ss >> kind >> p;
  return FieldSpec::prime_field(p);
}

JobSpec parse_job(const std::string& text) {
  JobSpec spec;
  std::stringstream in(text);
  std::string raw;
  int line = 0;
  bool saw_field = false, saw_vars = false, saw_relations = false;
  int rel_line = 0, rel_col = 1, ideal_line = 0, ideal_col = 1;
  int red_line = 0, red_col = 1;

  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key = value", line, 1);
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    int vcol = (int)raw.find('=') + 2;
    if (value.empty()) throw ParseError("missing value", line, vcol);

    if (key == "field") {
      saw_field = true;
      if (value == "Q" || value == "Qbar") {
        spec.field_token = value;
      } else {
        std::stringstream fs(value);
        std::string kind;
        long p = 0;
        fs >> kind >> p;
        if (kind != "Fp" || p <= 0)
          throw ParseError("field must be Q, Qbar or Fp <p>", line, vcol);
        if (!is_prime(p))
          throw ParseError(std::to_string(p) + " is not prime", line, vcol);
        spec.field_token = "Fp " + std::to_string(p);
      }
    } else if (key == "vars") {
      saw_vars = true;
      spec.vars = split_list(value, line, vcol);
      for (size_t i = 0; i < spec.vars.size(); ++i)
        for (size_t j = i + 1; j < spec.vars.size(); ++j)
          if (spec.vars[i] == spec.vars[j])
            throw ParseError("duplicate variable " + spec.vars[i], line, vcol);
    } else if (key == "relations") {
      saw_relations = true;
      rel_line = line;
      rel_col = vcol;
      spec.relations = split_list(value, line, vcol);
    } else if (key == "ideal") {
      ideal_line = line;
      ideal_col = vcol;
      spec.ideal = split_list(value, line, vcol);
    } else if (key == "reduction") {
      red_line = line;
      red_col = vcol;
      spec.reduction = split_list(value, line, vcol);
    } else if (key == "weights") {
      for (const std::string& w : split_list(value, line, vcol))
        spec.weights.push_back(parse_long(w, line, vcol));
    } else if (key == "command") {
      spec.command = value;
    } else if (key == "method") {
      spec.method = value;
    } else if (key == "n_max") {
      spec.n_max = (int)parse_long(value, line, vcol);
    } else if (key == "sample") {
      spec.sample = value;
    } else if (key == "seed") {
      spec.seed = (unsigned long)parse_long(value, line, vcol);
    } else if (key == "primes") {
      for (const std::string& p : split_list(value, line, vcol))
        spec.primes.push_back(parse_long(p, line, vcol));
    } else {
      throw ParseError("unknown key '" + key + "'", line, 1);
    }
  }

  if (!saw_field) throw ParseError("missing field line", line, 1);
  if (!saw_vars) throw ParseError("missing vars line", line, 1);
  if (!saw_relations) throw ParseError("missing relations line", line, 1);
  if (!spec.weights.empty() && spec.weights.size() != spec.vars.size())
    throw ParseError("weights list must match the variable count", line, 1);

  // every polynomial must parse over the declared field, and relations and
  // ideal entries must be homogeneous for the declared weights
  std::vector<long> w = spec.weights;
  if (w.empty()) w.assign(spec.vars.size(), 1);
  RingCtxPtr probe = RingContext::make(spec.vars, field_of(spec));
  auto check = [&](const std::vector<std::string>& polys, const char* what,
                   bool need_homogeneous, int at_line, int at_col) {
    for (const std::string& s : polys) {
      Polynomial f;
      try {
        f = parse_polynomial(probe, s);
      } catch (const ParseError& e) {
        throw ParseError(std::string(what) + " '" + s + "': " + e.what(),
                         at_line, at_col);
      }
      if (need_homogeneous && !weighted_homogeneous(f, w))
        throw ParseError(std::string(what) + " '" + s +
                             "' is not homogeneous for the declared weights",
                         at_line, at_col);
    }
  };
  check(spec.relations, "relation", true, rel_line, rel_col);
  check(spec.ideal, "ideal entry", true, ideal_line, ideal_col);
  check(spec.reduction, "reduction entry", false, red_line, red_col);
  return spec;
}

std::vector<std::string> parse_bracket_list(const std::string& text) {
  return split_list(text, 0, 1);
}

std::string print_job(const JobSpec& spec) {
  std::ostringstream out;
  out << "field = " << spec.field_token << "\n";
  auto list = [&](const char* key, const std::vector<std::string>& xs,
                  bool always) {
    if (xs.empty() && !always) return;
    out << key << " = [";
    for (size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
    out << "]\n";
  };
  // vars and relations are mandatory on the way back in, so they always
  // print, possibly as empty lists
  list("vars", spec.vars, true);
  list("relations", spec.relations, true);
  list("ideal", spec.ideal, false);
  list("reduction", spec.reduction, false);
  if (!spec.weights.empty()) {
    out << "weights = [";
    for (size_t i = 0; i < spec.weights.size(); ++i)
      out << (i ? ", " : "") << spec.weights[i];
    out << "]\n";
  }
  if (!spec.command.empty()) out << "command = " << spec.command << "\n";
  if (!spec.method.empty()) out << "method = " << spec.method << "\n";
  if (spec.n_max > 0) out << "n_max = " << spec.n_max << "\n";
  if (!spec.sample.empty()) out << "sample = " << spec.sample << "\n";
  if (spec.seed != 1) out << "seed = " << spec.seed << "\n";
  if (!spec.primes.empty()) {
    out << "primes = [";
    for (size_t i = 0; i < spec.primes.size(); ++i)
      out << (i ? ", " : "") << spec.primes[i];
    out << "]\n";
  }
  return out.str();
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContextError("cannot open job file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str());
}

}  // namespace idealcore
