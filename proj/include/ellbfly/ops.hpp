// Copyright 2026 The ellbfly Authors.
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


#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ellbfly {

// Counts of base field operations performed by a straight-line program.
// Negation and subtraction count as additions; halving counts as a
// multiplication.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;

  std::uint64_t total() const { return adds + muls; }
  void reset() { adds = muls = 0; }
};

// Field operations routed through an optional counter.
template <class F>
class Ops {
 public:
  using rep = typename F::rep;

  explicit Ops(const F& f, OpCounter* counter = nullptr) : f_(&f), c_(counter) {}

  const F& field() const { return *f_; }
  OpCounter* counter() const { return c_; }

  rep add(const rep& a, const rep& b) const {
    if (c_) ++c_->adds;
    return f_->add(a, b);
  }
  rep sub(const rep& a, const rep& b) const {
    if (c_) ++c_->adds;
    return f_->sub(a, b);
  }
  rep neg(const rep& a) const {
    if (c_) ++c_->adds;
    return f_->neg(a);
  }
  rep mul(const rep& a, const rep& b) const {
    if (c_) ++c_->muls;
    return f_->mul(a, b);
  }
  rep half(const rep& a) const {
    if (c_) ++c_->muls;
    return f_->half(a);
  }

  // sum_l a_l b_l
  rep dot(const std::vector<rep>& a, const std::vector<rep>& b) const {
    rep s = mul(a[0], b[0]);
    for (std::size_t i = 1; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
    return s;
  }

  rep sum(const std::vector<rep>& a) const {
    rep s = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) s = add(s, a[i]);
    return s;
  }

 private:
  const F* f_;
  OpCounter* c_;
};

}  // namespace ellbfly
