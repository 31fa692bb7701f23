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

#ifndef YHK_CLI_JSON_IO_HPP
#define YHK_CLI_JSON_IO_HPP

#include "json.hpp"

#include "yhk/crystal.hpp"
#include "yhk/graph_compare.hpp"
#include "yhk/identities.hpp"
#include "yhk/module.hpp"
#include "yhk/pbw.hpp"
#include "yhk/quotient.hpp"
#include "yhk/rep.hpp"
#include "yhk/scalar.hpp"

namespace yhk::cli {

using nlohmann::json;

/// {num: [[exp, [c_0, ...]], ...], den: [...]} with rational coordinates as
/// "p/q" strings in the basis 1, zeta, zeta^2, ... of Q(zeta_m). The key
/// "order" carries m when m > 1.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// List of {alpha, beta, w, coeff} in deterministic term order.
json to_json(const PbwElement& a);
PbwElement element_from_json(const AlgebraSpec& spec, const json& j);

/// {"lambda": {"0": 1, ...}}.
json to_json(const WeightDatum& lam);
WeightDatum weight_from_json(const json& j);

json to_json(const Matrix& m);
/// {dim, generators: {name: matrix}} with names t<j>, X<j>, Xi<j>, g<i>.
json to_json(const FdModule& m);

json to_json(const CheckReport& rep);
json to_json(const CrystalGraph& g);
json to_json(const CompareReport& rep);

}  // namespace yhk::cli

#endif  // YHK_CLI_JSON_IO_HPP
