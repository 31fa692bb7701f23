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

#include "yhk_cli/expr.hpp"

#include <cctype>
#include <set>

#include "yhk/errors.hpp"

namespace yhk::cli {

namespace {

class Parser {
 public:
  Parser(const AlgebraSpec& spec, const std::string& text) : spec_(spec), s_(text) {}

  PbwElement parse() {
    PbwElement out = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("expression: " + what + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits = s_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
    if (digits.size() > 12) fail("integer too large");
    return std::stol(digits);
  }

  PbwElement expr() {
    PbwElement out(spec_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (!first) {
        break;
      }
      PbwElement t = term();
      if (sign < 0) t = -t;
      out += t;
      first = false;
    }
    return out;
  }

  PbwElement term() {
    PbwElement out = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
      } else if (!at_atom_start()) {
        break;
      }
      out = mult(out, factor());
    }
    return out;
  }

  PbwElement factor() {
    skip_space();
    std::size_t start = pos_;
    Atom a = atom();
    if (!peek('^')) return a.value;
    ++pos_;
    long k = integer();
    if (k < 0) {
      if (!a.invertible) {
        pos_ = start;
        fail("negative power of a non-invertible factor");
      }
      k = -k;
      a.value = a.inverse;
    }
    if (k > 64) fail("power too large");
    PbwElement out = one(spec_);
    for (long i = 0; i < k; ++i) out = mult(out, a.value);
    return out;
  }

  struct Atom {
    PbwElement value;
    PbwElement inverse;
    bool invertible = false;
  };

  int index() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an index");
    if (pos_ - start > 3) fail("index too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Atom atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PbwElement inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return {inner, inner, false};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return {scalar_element(spec_, Scalar(integer())), PbwElement(spec_), false};
    }
    std::size_t start = pos_;
    if (c == 'q') {
      ++pos_;
      return {scalar_element(spec_, Scalar::q()), scalar_element(spec_, Scalar::q(-1)), true};
    }
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    static const std::set<std::string> known{"t", "X", "Xi", "g", "gi", "e", "Th"};
    if (!known.count(name)) {
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    int i = index();
    if (name == "t") return {gen_t(spec_, i), gen_t(spec_, i, -1), true};
    if (name == "X") return {gen_X(spec_, i), gen_X(spec_, i, -1), true};
    if (name == "Xi") return {gen_X(spec_, i, -1), gen_X(spec_, i), true};
    if (name == "g") return {gen_g(spec_, i), gen_g_inv(spec_, i), true};
    if (name == "gi") return {gen_g_inv(spec_, i), gen_g(spec_, i), true};
    if (name == "e") return {gen_e(spec_, i), PbwElement(spec_), false};
    return {gen_theta(spec_, i), PbwElement(spec_), false};
  }

  const AlgebraSpec& spec_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

PbwElement parse_expression(const AlgebraSpec& spec, const std::string& text) {
  spec.validate();
  return Parser(spec, text).parse();
}

}  // namespace yhk::cli
