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

#ifndef YHK_CLI_EXPR_HPP
#define YHK_CLI_EXPR_HPP

#include <string>

#include "yhk/pbw.hpp"

namespace yhk::cli {

/// Parses an element of the affine algebra.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := atom ['^' int]
///   atom   := int | 'q' | '(' expr ')' | t<j> | X<j> | Xi<j> | g<i> | gi<i> | e<i> | Th<i>
///
/// Juxtaposition is the product. Negative powers are allowed for q, t<j>,
/// X<j> and g<i>.
PbwElement parse_expression(const AlgebraSpec& spec, const std::string& text);

}  // namespace yhk::cli

#endif  // YHK_CLI_EXPR_HPP
