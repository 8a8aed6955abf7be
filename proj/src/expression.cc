// Copyright 2026 The Authors.
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

#include "spikelab/expression.h"

#include <cctype>
#include <cstdio>
#include <map>
#include <vector>

#include "spikelab/catalog.h"
#include "spikelab/error.h"
#include "spikelab/transforms.h"

namespace spikelab {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Matroid ParseAll() {
    Matroid m = Expr();
    Skip();
    if (pos_ != text_.size()) Fail("trailing input");
    return m;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw MatroidError(ErrorCode::kParseError,
                       what + " at position " + std::to_string(pos_) + " in '" +
                           std::string(text_) + "'");
  }

  void Skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(char c) {
    Skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }

  // Letters, digits and '_'.
  std::string Word() {
    Skip();
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) Fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // A word with the optional suffixes '-', '=' and '*'.
  std::string Identifier() {
    Skip();
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    while (pos_ < text_.size() &&
           (text_[pos_] == '-' || text_[pos_] == '=' || text_[pos_] == '*')) {
      ++pos_;
    }
    if (start == pos_) Fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  long Integer() {
    Skip();
    const size_t start = pos_;
    int base = 10;
    if (text_.substr(pos_, 2) == "0x") {
      base = 16;
      pos_ += 2;
    }
    while (pos_ < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_])) &&
           (base == 16 || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "0x") Fail("expected an integer");
    return std::stol(digits, nullptr, 0);
  }

  int SmallInt() {
    const long v = Integer();
    if (v < 0 || v > 1000) Fail("integer out of range");
    return static_cast<int>(v);
  }

  // "{0,1,3}" or an integer bit mask.
  ElementSet Set() {
    if (Accept('{')) {
      ElementSet s;
      if (Accept('}')) return s;
      do {
        const int e = SmallInt();
        if (e >= kMaxElements) Fail("element out of range");
        s = s.With(e);
      } while (Accept(','));
      Expect('}');
      return s;
    }
    const long v = Integer();
    if (v < 0 || v >= (1L << kMaxElements)) Fail("mask out of range");
    return ElementSet(static_cast<uint32_t>(v));
  }

  uint32_t Traversal(int rank) {
    const std::string word = Word();
    if (static_cast<int>(word.size()) != rank) Fail("traversal length must equal the rank");
    uint32_t choice = 0;
    for (int i = 0; i < rank; ++i) {
      if (word[i] == 'y') {
        choice |= uint32_t{1} << i;
      } else if (word[i] != 'x') {
        Fail("traversal letters must be x or y");
      }
    }
    return choice;
  }

  Matroid Spike() {
    SpikeSpec spec;
    spec.rank = SmallInt();
    while (Accept(';')) {
      const std::string key = Word();
      Expect('=');
      if (key == "tip") {
        spec.tip_class_size = SmallInt();
      } else if (key == "trav") {
        Expect('[');
        if (!Accept(']')) {
          do {
            spec.traversals.push_back(Traversal(spec.rank));
          } while (Accept(','));
          Expect(']');
        }
      } else {
        Fail("unknown spike option '" + key + "'");
      }
    }
    return spikelab::Spike(spec);
  }

  Matroid Expr() {
    const size_t start = pos_;
    const std::string name = Identifier();
    if (!Accept('(')) {
      static const std::map<std::string, std::string> kShort = {
          {"P7", "P7"},   {"P7-", "P7minus"}, {"P7=", "P7doubleminus"},
          {"P8", "P8"},   {"O7", "O7"},       {"O7-", "O7minus"},
          {"AG23e", "AG23_del_e"}, {"F7", "F7"}, {"F7*", "F7dual"}};
      const auto it = kShort.find(name);
      try {
        return Named(it != kShort.end() ? it->second : name);
      } catch (const MatroidError& e) {
        if (e.code() != ErrorCode::kUnknownName) throw;
        pos_ = start;
        Fail("unknown name '" + name + "'");
      }
    }
    Matroid out;
    if (name == "U" || name == "2U") {
      const int r = SmallInt();
      Expect(',');
      const int n = SmallInt();
      out = name == "U" ? Uniform(r, n) : DoubledUniform(r, n);
    } else if (name == "PU") {
      const int r = SmallInt();
      Expect(',');
      const int n = SmallInt();
      std::vector<int> sizes;
      if (Accept(';')) {
        do {
          sizes.push_back(SmallInt());
        } while (Accept(','));
      }
      out = MultiParallelUniform(r, n, sizes);
    } else if (name == "dsum") {
      out = Expr();
      while (Accept(',')) out = DirectSum(out, Expr());
    } else if (name == "dual") {
      out = Dual(Expr());
    } else if (name == "del" || name == "con") {
      out = Expr();
      ElementSet s;
      while (Accept(',')) {
        const int e = SmallInt();
        if (e >= kMaxElements) Fail("element out of range");
        s = s.With(e);
      }
      out = name == "del" ? Delete(out, s) : Contract(out, s);
    } else if (name == "relax" || name == "pext") {
      out = Expr();
      Expect(',');
      const ElementSet s = Set();
      out = name == "relax" ? Relax(out, s) : PrincipalExtension(out, s);
    } else if (name == "spike") {
      out = Spike();
    } else if (name == "wheel" || name == "whirl") {
      const int r = SmallInt();
      out = name == "wheel" ? Wheel(r) : Whirl(r);
    } else if (name == "bases") {
      const int n = SmallInt();
      std::vector<ElementSet> bases;
      Expect(';');
      do {
        Skip();
        const size_t s = pos_;
        while (pos_ < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        if (s == pos_) Fail("expected a hex basis mask");
        bases.emplace_back(static_cast<uint32_t>(
            std::stoul(std::string(text_.substr(s, pos_ - s)), nullptr, 16)));
      } while (Accept(','));
      out = FromBases(n, bases);
    } else {
      pos_ = start;
      Fail("unknown operator '" + name + "'");
    }
    Expect(')');
    return out;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Matroid ParseExpression(std::string_view text) { return Parser(text).ParseAll(); }

std::string BasesExpression(const Matroid& m) {
  std::string out = "bases(" + std::to_string(m.size()) + ";";
  bool first = true;
  char buf[16];
  for (ElementSet b : Bases(m)) {
    std::snprintf(buf, sizeof(buf), "%x", b.bits());
    if (!first) out += ',';
    out += buf;
    first = false;
  }
  return out + ")";
}

}  // namespace spikelab
