// Copyright 2026 The yhk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "yhk_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <gmpxx.h>

#include "CLI11.hpp"
#include "yhk/crystal.hpp"
#include "yhk/errors.hpp"
#include "yhk/graph_compare.hpp"
#include "yhk/identities.hpp"
#include "yhk/quotient.hpp"
#include "yhk/rep.hpp"
#include "yhk_cli/expr.hpp"
#include "yhk_cli/json_io.hpp"

namespace yhk::cli {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer list: '" + text + "'");
    }
  }
  return out;
}

std::vector<Partition> parse_shapes(const std::string& text) {
  std::vector<Partition> out;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    Partition p = parse_int_list(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
    partition_size(p);
    out.push_back(p);
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::uint64_t resolve_seed(const std::string& flag_value) {
  std::string v = flag_value;
  if (v.empty()) {
    const char* env = std::getenv("YHK_SEED");
    v = env ? env : "1";
  }
  try {
    std::size_t used = 0;
    unsigned long long s = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return s;
  } catch (const std::exception&) {
    throw InvalidArgument("seed must be a nonnegative integer, got '" + v + "'");
  }
}

namespace {

struct Options {
  int r = 1;
  int n = 2;
  int e = kInfinite;
  int n_max = 3;
  std::string charges = "0";
  std::string expr;
  std::string shapes;
  std::string alpha;
  std::string beta;
  std::string seed;
  std::string format = "dot";
  std::string out_path;
  std::size_t max_support = 2'000'000;
  long max_dim = 4000;
  int sums = 10;
  bool json_out = false;
  bool regular = false;
  bool check = false;
};

// One command's result: a JSON report, a text rendering and the exit code.
struct Result {
  json report;
  std::string text;
  int code = kPass;
};

AlgebraSpec spec_of(const Options& o) {
  AlgebraSpec s{o.r, o.n, o.max_support};
  s.validate();
  return s;
}

WeightDatum weight_of(const Options& o) {
  WeightDatum lam = WeightDatum::parse_charges(o.charges);
  lam.validate();
  return lam;
}

void guard_dim(long dim, long max_dim) {
  if (dim > max_dim) {
    throw ResourceLimit("module dimension " + std::to_string(dim) + " exceeds --max-dim " + std::to_string(max_dim));
  }
}

std::string pass_str(bool ok) { return ok ? "PASS" : "FAIL"; }

SimpleLabel label_of_shapes(const std::vector<Partition>& shapes) {
  SimpleLabel label;
  label.shapes = shapes;
  for (const Partition& p : shapes) label.mu.push_back(partition_size(p));
  return label;
}

// The simple labels of rank n - 1 whose invariants match m, as label strings.
std::string identify(const FdModule& m, const std::vector<std::pair<SimpleLabel, TraceInvariants>>& known) {
  TraceInvariants inv = trace_invariants(m);
  for (const auto& [label, k] : known) {
    if (k == inv) return label.str();
  }
  return "";
}

long factorial_power(int r, int n) {
  mpz_class v = 1;
  for (int j = 1; j <= n; ++j) v *= r * j;
  return v.get_si();
}

Result cmd_relations(const Options& o) {
  AlgebraSpec s = spec_of(o);
  std::uint64_t seed = resolve_seed(o.seed);
  CheckReport rep = check_all_identities(s.r, s.n, seed);
  Result res;
  res.report = to_json(rep);
  res.report["r"] = s.r;
  res.report["n"] = s.n;
  res.report["seed"] = seed;
  std::ostringstream os;
  for (const auto& f : res.report["families"]) {
    os << f["family"].get<std::string>() << ": " << f["checks"].get<int>() << " checks "
       << pass_str(f["failed"].get<int>() == 0) << "\n";
    for (const auto& fail : f["failures"]) os << "  failed: " << fail.get<std::string>() << "\n";
  }
  const std::size_t families = rep.families().size();
  if (rep.all_pass()) {
    os << "all " << families << " identity families PASS\n";
  } else {
    os << rep.failures() << " identities FAIL\n";
    res.code = kCheckFailed;
  }
  res.text = os.str();
  return res;
}

Result cmd_mult(const Options& o) {
  if (o.expr.empty()) throw InvalidArgument("mult needs --expr");
  PbwElement a = parse_expression(spec_of(o), o.expr);
  return {to_json(a), a.str() + "\n", kPass};
}

Result cmd_center(const Options& o) {
  AlgebraSpec s = spec_of(o);
  Result res;
  if (!o.expr.empty()) {
    PbwElement z = parse_expression(s, o.expr);
    bool central = is_central(z);
    res.report = {{"element", to_json(z)}, {"central", central}};
    res.text = z.str() + "\ncentral: " + (central ? "yes" : "no") + "\n";
    return res;
  }
  std::vector<int> alpha = parse_int_list(o.alpha), beta = parse_int_list(o.beta);
  if (alpha.empty()) alpha.assign(static_cast<std::size_t>(s.n), 0);
  if (beta.empty()) beta.assign(static_cast<std::size_t>(s.n), 0);
  PbwElement z = orbit_sum(s, alpha, beta);
  bool central = is_central(z);
  res.report = {{"alpha", alpha}, {"beta", beta}, {"orbit_sum", to_json(z)}, {"central", central}};
  res.text = "orbit sum: " + z.str() + "\ncentral: " + pass_str(central) + "\n";
  res.code = central ? kPass : kCheckFailed;
  return res;
}

Result cmd_reduce(const Options& o) {
  AlgebraSpec s = spec_of(o);
  WeightDatum lam = weight_of(o);
  Result res;
  if (o.regular) {
    long expect = factorial_power(s.r, s.n);
    for (int k = 0; k < s.n; ++k) expect *= lam.d();
    FdModule m = regular_representation(lam, s.r, s.n, o.max_dim);
    CheckReport rel = check_module_relations(m);
    bool ok = m.dim == expect && rel.all_pass();
    res.report = {{"dim", m.dim}, {"expected", expect}, {"relations", to_json(rel)}, {"pass", ok}};
    res.text = "regular representation: dim " + std::to_string(m.dim) + " (expected " + std::to_string(expect) +
               "), relations " + pass_str(rel.all_pass()) + "\n";
    res.code = ok ? kPass : kCheckFailed;
    return res;
  }
  if (o.expr.empty()) throw InvalidArgument("reduce needs --expr or --regular");
  CyclotomicQuotient quo(s, lam);
  PbwElement a = quo.reduce(parse_expression(s, o.expr));
  return {to_json(a), a.str() + "\n", kPass};
}

Result cmd_dims(const Options& o) {
  AlgebraSpec s = spec_of(o);
  WeightDatum lam = weight_of(o);
  Result res;
  json rows = json::array();
  std::ostringstream os;
  mpz_class total = 0;
  bool ok = true;
  for (const SimpleLabel& label : simple_labels(s.r, s.n)) {
    FdModule m = simple_module(label, lam);
    guard_dim(m.dim, o.max_dim);
    total += mpz_class(m.dim) * m.dim;
    json row = {{"label", label.str()}, {"dim", m.dim}};
    os << label.str() << "  " << m.dim;
    if (o.check) {
      bool rel = check_module_relations(m).all_pass() && satisfies_f_lambda(m, lam);
      row["relations"] = rel;
      os << "  relations " << pass_str(rel);
      ok = ok && rel;
    }
    os << "\n";
    rows.push_back(row);
  }
  const long expect = factorial_power(s.r, s.n);
  const bool sum_ok = total == expect;
  ok = ok && sum_ok;
  res.report = {{"r", s.r}, {"n", s.n}, {"simples", rows}, {"sum_of_squares", total.get_si()}, {"expected", expect},
                {"pass", ok}};
  os << "sum of squares " << total.get_str() << " (expected " << expect << ") " << pass_str(sum_ok) << "\n";
  res.text = os.str();
  res.code = ok ? kPass : kCheckFailed;
  return res;
}

// (dimension, invariants) equality of G(F(N)) with N and of F(G(F(N))) with F(N).
json morita_check(const FdModule& N, const std::string& name, bool& ok) {
  auto F = functor_F(N);
  FdModule GF = functor_G(N.r, N.n, F);
  bool gf = trace_invariants(GF) == trace_invariants(N);
  auto FGF = functor_F(GF);
  bool fg = true;
  for (const auto& [mu, P] : F) fg = fg && trace_invariants(FGF.at(mu)) == trace_invariants(P);
  ok = ok && gf && fg;
  return {{"module", name}, {"dim", N.dim}, {"GF", gf}, {"FG", fg}};
}

Result cmd_morita(const Options& o) {
  AlgebraSpec s = spec_of(o);
  WeightDatum lam = weight_of(o);
  std::uint64_t seed = resolve_seed(o.seed);
  std::vector<SimpleLabel> labels = simple_labels(s.r, s.n);
  std::vector<FdModule> simples;
  json items = json::array();
  bool ok = true;
  for (const SimpleLabel& label : labels) {
    simples.push_back(simple_module(label, lam));
    guard_dim(simples.back().dim, o.max_dim);
    items.push_back(morita_check(simples.back(), label.str(), ok));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int k = 0; k < o.sums; ++k) {
    std::size_t a = pick(rng), b = pick(rng);
    FdModule sum = direct_sum(simples[a], simples[b]);
    guard_dim(sum.dim, o.max_dim);
    items.push_back(morita_check(sum, labels[a].str() + " + " + labels[b].str(), ok));
  }
  Result res;
  res.report = {{"r", s.r}, {"n", s.n}, {"seed", seed}, {"checks", items}, {"pass", ok}};
  std::ostringstream os;
  for (const auto& item : items) {
    os << item["module"].get<std::string>() << "  dim " << item["dim"].get<int>() << "  GF "
       << pass_str(item["GF"].get<bool>()) << "  FG " << pass_str(item["FG"].get<bool>()) << "\n";
  }
  os << "morita round trip " << pass_str(ok) << "\n";
  res.text = os.str();
  res.code = ok ? kPass : kCheckFailed;
  return res;
}

Result cmd_branch(const Options& o) {
  if (o.shapes.empty()) throw InvalidArgument("branch needs --shapes");
  WeightDatum lam = weight_of(o);
  SimpleLabel label = label_of_shapes(parse_shapes(o.shapes));
  const int r = static_cast<int>(label.mu.size());
  const int n = composition_size(label.mu);
  if (n < 1) throw InvalidArgument("branch needs at least one box");
  FdModule m = simple_module(label, lam);
  guard_dim(m.dim, o.max_dim);
  std::vector<std::pair<SimpleLabel, TraceInvariants>> known;
  for (const SimpleLabel& l : simple_labels(r, n - 1)) known.emplace_back(l, trace_invariants(simple_module(l, lam)));
  auto parts = restrict_branch(m);
  auto predicted = predict_branch(label, lam);
  bool ok = parts.size() == predicted.size();
  json rows = json::array();
  std::ostringstream os;
  os << "restriction of " << label.str() << " (dim " << m.dim << ")\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    std::string found = identify(p.module, known);
    if (i < predicted.size()) {
      ok = ok && predicted[i].k == p.k && predicted[i].a == p.a && predicted[i].dim == p.module.dim &&
           predicted[i].label.str() == found;
    }
    rows.push_back({{"k", p.k}, {"a", p.a}, {"dim", p.module.dim}, {"label", found}});
    os << "  k=" << p.k << " a=" << p.a << " dim " << p.module.dim << "  " << (found.empty() ? "?" : found) << "\n";
  }
  os << "matches predicted branching: " << pass_str(ok) << "\n";
  Result res;
  res.report = {{"label", label.str()}, {"dim", m.dim}, {"summands", rows}, {"pass", ok}};
  res.text = os.str();
  res.code = ok ? kPass : kCheckFailed;
  return res;
}

Result cmd_blocks(const Options& o) {
  WeightDatum lam = weight_of(o);
  FdModule m;
  std::string name;
  if (!o.shapes.empty()) {
    SimpleLabel label = label_of_shapes(parse_shapes(o.shapes));
    m = simple_module(label, lam);
    name = label.str();
  } else {
    AlgebraSpec s = spec_of(o);
    m = regular_representation(lam, s.r, s.n, o.max_dim);
    name = "regular";
  }
  guard_dim(m.dim, o.max_dim);
  json rows = json::array();
  std::ostringstream os;
  os << "blocks of " << name << " (dim " << m.dim << ")\n";
  for (const auto& [label, sub] : blocks(m)) {
    json gamma = json::object();
    for (const auto& [a, c] : label.gamma) gamma[std::to_string(a)] = c;
    rows.push_back({{"mu", label.mu}, {"gamma", gamma}, {"dim", sub.dim()}});
    os << "  " << label.str() << "  dim " << sub.dim() << "\n";
  }
  Result res;
  res.report = {{"module", name}, {"dim", m.dim}, {"blocks", rows}};
  res.text = os.str();
  return res;
}

Result cmd_crystal(const Options& o) {
  WeightDatum lam = weight_of(o);
  CrystalGraph g = tensor_crystal(lam, o.r, o.e, o.n_max);
  if (g.nodes.size() > static_cast<std::size_t>(o.max_dim) * 100) throw ResourceLimit("crystal too large");
  Result res;
  res.report = to_json(g);
  if (o.format == "json") {
    res.text = res.report.dump(2) + "\n";
  } else if (o.format == "dot") {
    res.text = to_dot(g);
  } else {
    throw InvalidArgument("--format must be dot or json");
  }
  return res;
}

Result cmd_compare(const Options& o) {
  WeightDatum lam = weight_of(o);
  CompareReport rep = branch_graph_compare(o.r, o.n_max, lam);
  Result res;
  res.report = to_json(rep);
  std::ostringstream os;
  os << "levels (module / crystal):";
  for (std::size_t n = 0; n < rep.module_levels.size(); ++n) {
    os << " " << rep.module_levels[n] << "/" << rep.crystal_levels[n];
  }
  os << "\n";
  if (rep.isomorphic) {
    os << "branching graph isomorphic to the tensor crystal: PASS\n";
  } else {
    os << "first divergence: " << rep.first_divergence << "\nFAIL\n";
    res.code = kCheckFailed;
  }
  res.text = os.str();
  return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with affine and cyclotomic Yokonuma-Hecke algebras", "yhk"};
  app.require_subcommand(1);
  Options o;
  std::string e_text = "inf";

  auto add_rank = [&](CLI::App* c) {
    c->add_option("--r", o.r, "number of characters r")->check(CLI::Range(1, 8));
    c->add_option("--n", o.n, "number of strands n")->check(CLI::Range(1, kMaxRank));
  };
  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", o.json_out, "print the JSON report");
    c->add_option("--out", o.out_path, "write output to a file");
    c->add_option("--max-support", o.max_support, "largest number of PBW terms allowed");
    c->add_option("--max-dim", o.max_dim, "largest module dimension allowed");
  };
  auto add_charge = [&](CLI::App* c) {
    c->add_option("--charge", o.charges, "charges of lambda, e.g. 0 or 0,1");
  };

  std::vector<std::pair<CLI::App*, Result (*)(const Options&)>> commands;
  auto add = [&](const std::string& name, const std::string& help, Result (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, help);
    add_common(c);
    commands.emplace_back(c, fn);
    return c;
  };

  CLI::App* c = add("relations", "check every defining relation and derived identity", cmd_relations);
  add_rank(c);
  c->add_option("--seed", o.seed, "seed for the random polynomials (default YHK_SEED or 1)");

  c = add("mult", "evaluate an expression in PBW normal form", cmd_mult);
  add_rank(c);
  c->add_option("--expr", o.expr, "expression, e.g. \"g1 X1\"")->required();

  c = add("center", "test an orbit sum or an expression for centrality", cmd_center);
  add_rank(c);
  c->add_option("--alpha", o.alpha, "X exponents of the orbit representative");
  c->add_option("--beta", o.beta, "t exponents of the orbit representative");
  c->add_option("--expr", o.expr, "expression to test instead of an orbit sum");

  c = add("reduce", "reduce modulo f_lambda(X_1), or build the regular representation", cmd_reduce);
  add_rank(c);
  add_charge(c);
  c->add_option("--expr", o.expr, "expression to reduce");
  c->add_flag("--regular", o.regular, "build and check the regular representation");

  c = add("dims", "dimensions of the simple modules and the sum of squares", cmd_dims);
  add_rank(c);
  add_charge(c);
  c->add_flag("--check", o.check, "also run the relation suite on every module");

  c = add("morita", "round trip through the Hecke-side functors", cmd_morita);
  add_rank(c);
  add_charge(c);
  c->add_option("--seed", o.seed, "seed for the direct sums (default YHK_SEED or 1)");
  c->add_option("--sums", o.sums, "number of seeded direct sums")->check(CLI::NonNegativeNumber);

  c = add("branch", "restriction of a simple module to one strand fewer", cmd_branch);
  add_charge(c);
  c->add_option("--shapes", o.shapes, "one partition per character, e.g. \"2,1|1\"")->required();

  c = add("blocks", "block decomposition of a simple module or the regular representation", cmd_blocks);
  add_rank(c);
  add_charge(c);
  c->add_option("--shapes", o.shapes, "simple module label; the regular representation if absent");

  c = add("crystal", "export the tensor crystal as DOT or JSON", cmd_crystal);
  c->add_option("--r", o.r, "number of tensor slots")->check(CLI::Range(1, 8));
  c->add_option("--e", e_text, "quantum characteristic, or inf");
  c->add_option("--n-max", o.n_max, "largest level")->check(CLI::Range(0, 12));
  c->add_option("--format", o.format, "dot or json");
  add_charge(c);

  c = add("compare", "compare the module branching graph with the crystal", cmd_compare);
  c->add_option("--r", o.r, "number of characters")->check(CLI::Range(1, 4));
  c->add_option("--n-max", o.n_max, "largest level")->check(CLI::Range(0, 6));
  add_charge(c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (e_text == "inf" || e_text == "0") {
      o.e = kInfinite;
    } else {
      o.e = parse_int_list(e_text).at(0);
      if (o.e < 2) throw InvalidArgument("--e must be at least 2 or inf");
    }
    for (const auto& [cmd, fn] : commands) {
      if (!cmd->parsed()) continue;
      if (cmd->get_name() == "crystal" && o.json_out) o.format = "json";
      Result res = fn(o);
      if (cmd->get_option_no_throw("--charge") != nullptr && res.report.is_object()) {
        res.report["weight"] = to_json(weight_of(o));
      }
      std::string text = o.json_out ? res.report.dump(2) + "\n" : res.text;
      if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw InvalidArgument("cannot write " + o.out_path);
        f << text;
      } else {
        out << text;
      }
      return res.code;
    }
  } catch (const ResourceLimit& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace yhk::cli
