// Copyright 2026 The symspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "symspace/errors.hpp"
#include "symspace/gf.hpp"

namespace symspace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Field adapters used by the generic linear algebra in linalg.hpp. Each
// adapter is a small value type exposing the field operations on its
// element type.

struct RationalField {
  using value_type = Rational;
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(long long n) const { return n; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational inv(const Rational& a) const {
    if (a == 0) throw DomainError("inverse of zero rational");
    return 1 / a;
  }
  bool is_zero(const Rational& a) const { return a == 0; }
  bool eq(const Rational& a, const Rational& b) const { return a == b; }
  std::string format(const Rational& a) const { return a.str(); }
};

class FqField {
 public:
  using value_type = gf::FqElem;
  explicit FqField(const gf::FieldCtx& ctx) : ctx_(&ctx) {}
  const gf::FieldCtx& ctx() const { return *ctx_; }
  gf::FqElem zero() const { return ctx_->zero(); }
  gf::FqElem one() const { return ctx_->one(); }
  gf::FqElem from_int(long long n) const { return ctx_->from_int(n); }
  gf::FqElem add(gf::FqElem a, gf::FqElem b) const { return ctx_->add(a, b); }
  gf::FqElem sub(gf::FqElem a, gf::FqElem b) const { return ctx_->sub(a, b); }
  gf::FqElem mul(gf::FqElem a, gf::FqElem b) const { return ctx_->mul(a, b); }
  gf::FqElem neg(gf::FqElem a) const { return ctx_->neg(a); }
  gf::FqElem inv(gf::FqElem a) const { return ctx_->inv(a); }
  bool is_zero(gf::FqElem a) const { return a.code == 0; }
  bool eq(gf::FqElem a, gf::FqElem b) const { return a == b; }
  std::string format(gf::FqElem a) const { return ctx_->format(a); }

 private:
  const gf::FieldCtx* ctx_;
};

}  // namespace symspace
