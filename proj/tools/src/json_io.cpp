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

#include "yhk_cli/json_io.hpp"

#include <numeric>

#include "yhk/errors.hpp"

namespace yhk::cli {

namespace {

int field_order_of(const LaurentPoly& p, int m) {
  for (const CycloNum& c : p.coeffs()) {
    if (!c.is_rational()) m = std::lcm(m, c.field().order());
  }
  return m;
}

std::vector<Rational> coordinates_in(const CycloNum& c, int m) {
  const int degree = CyclotomicField::get(m).degree();
  if (c.is_rational()) {
    std::vector<Rational> v(static_cast<std::size_t>(degree), Rational(0));
    v[0] = c.rational();
    return v;
  }
  return c.embed(m).coeffs();
}

json poly_to_json(const LaurentPoly& p, int m) {
  json out = json::array();
  for (int k = p.low_degree(); !p.is_zero() && k <= p.high_degree(); ++k) {
    CycloNum c = p.coeff(k);
    if (c.is_zero()) continue;
    json coords = json::array();
    for (const Rational& x : coordinates_in(c, m)) coords.push_back(to_string(x));
    out.push_back(json::array({k, coords}));
  }
  return out;
}

LaurentPoly poly_from_json(const json& j, int m) {
  if (!j.is_array()) throw InvalidArgument("scalar polynomial must be a list of [exp, coeffs]");
  const CyclotomicField& field = CyclotomicField::get(m);
  LaurentPoly p;
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 2) throw InvalidArgument("scalar term must be [exp, coeffs]");
    std::vector<Rational> coords;
    for (const json& c : term.at(1)) coords.push_back(parse_rational(c.get<std::string>()));
    if (static_cast<int>(coords.size()) != field.degree()) throw InvalidArgument("coefficient length differs from field degree");
    p += LaurentPoly::monomial(term.at(0).get<int>(), CycloNum(field, coords));
  }
  return p;
}

json int_list(const std::vector<int>& v) { return json(v); }

}  // namespace

json to_json(const Scalar& s) {
  const int m = field_order_of(s.den(), field_order_of(s.num(), 1));
  json out = {{"num", poly_to_json(s.num(), m)}, {"den", poly_to_json(s.den(), m)}};
  if (m > 1) out["order"] = m;
  return out;
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw InvalidArgument("scalar must be an object with num and den");
  }
  const int m = j.value("order", 1);
  if (m < 1) throw InvalidArgument("field order must be positive");
  LaurentPoly den = poly_from_json(j.at("den"), m);
  if (den.is_zero()) throw InvalidArgument("zero denominator");
  return Scalar(poly_from_json(j.at("num"), m), den);
}

json to_json(const PbwElement& a) {
  json out = json::array();
  for (const auto& [m, c] : a.sorted_terms()) {
    out.push_back({{"alpha", int_list(m.alpha_vec(a.n()))},
                   {"beta", int_list(m.beta_vec(a.n()))},
                   {"w", int_list(m.perm(a.n()).one_line())},
                   {"coeff", to_json(c)}});
  }
  return out;
}

PbwElement element_from_json(const AlgebraSpec& spec, const json& j) {
  if (!j.is_array()) throw InvalidArgument("element must be a list of terms");
  PbwElement out(spec);
  for (const json& t : j) {
    auto w = t.at("w").get<std::vector<int>>();
    out += scalar_from_json(t.at("coeff")) *
           monomial_element(spec, t.at("alpha").get<std::vector<int>>(), t.at("beta").get<std::vector<int>>(), Perm(w));
  }
  return out;
}

json to_json(const WeightDatum& lam) {
  json m = json::object();
  for (const auto& [i, c] : lam.lambda) {
    if (c != 0) m[std::to_string(i)] = c;
  }
  return {{"lambda", m}};
}

WeightDatum weight_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.at("lambda").is_object()) {
    throw InvalidArgument("weight datum must be {\"lambda\": {...}}");
  }
  WeightDatum lam;
  for (const auto& [key, value] : j.at("lambda").items()) {
    try {
      lam.lambda[std::stoi(key)] += value.get<int>();
    } catch (const std::exception&) {
      throw InvalidArgument("malformed weight datum entry '" + key + "'");
    }
  }
  lam.validate();
  return lam;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const FdModule& m) {
  json gens = json::object();
  for (int j = 1; j <= m.n; ++j) gens["t" + std::to_string(j)] = to_json(m.gen_t(j));
  for (int j = 1; j <= m.n; ++j) gens["X" + std::to_string(j)] = to_json(m.gen_X(j));
  for (int j = 1; j <= m.n; ++j) gens["Xi" + std::to_string(j)] = to_json(m.gen_Xinv(j));
  for (int i : m.g_indices()) gens["g" + std::to_string(i)] = to_json(m.gen_g(i));
  return {{"dim", m.dim}, {"r", m.r}, {"n", m.n}, {"generators", gens}};
}

json to_json(const CheckReport& rep) {
  json families = json::array();
  for (const std::string& f : rep.families()) {
    int total = 0, failed = 0;
    json failures = json::array();
    for (const auto& item : rep.items) {
      if (item.family != f) continue;
      ++total;
      if (!item.pass) {
        ++failed;
        failures.push_back(item.identity);
      }
    }
    families.push_back({{"family", f}, {"checks", total}, {"failed", failed}, {"failures", failures}});
  }
  return {{"pass", rep.all_pass()}, {"families", families}};
}

json to_json(const CrystalGraph& g) {
  json nodes = json::array();
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    nodes.push_back({{"id", id}, {"level", g.level[id]}, {"label", node_str(g.nodes[id])}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.i}, {"k", e.k},
                     {"label", std::to_string(e.i) + "@" + std::to_string(e.k)}});
  }
  return {{"r", g.r}, {"e", g.e == kInfinite ? json("inf") : json(g.e)}, {"nodes", nodes}, {"edges", edges}};
}

json to_json(const CompareReport& rep) {
  auto arrows = [](const std::vector<std::map<std::pair<int, int>, int>>& levels) {
    json out = json::array();
    for (const auto& level : levels) {
      json l = json::object();
      for (const auto& [label, count] : level) {
        l[std::to_string(label.first) + "@" + std::to_string(label.second)] = count;
      }
      out.push_back(l);
    }
    return out;
  };
  return {{"isomorphic", rep.isomorphic},
          {"module_levels", rep.module_levels},
          {"crystal_levels", rep.crystal_levels},
          {"module_arrows", arrows(rep.module_arrows)},
          {"crystal_arrows", arrows(rep.crystal_arrows)},
          {"first_divergence", rep.first_divergence}};
}

}  // namespace yhk::cli
