// Copyright 2026 The dprepeat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic used by the rational verification mode.
//
// Every finite double is a dyadic rational, so converting inputs with
// ToRational() is lossless: a computation carried out on Rational values is
// the exact value of the formula on the given floating-point inputs.

#ifndef DPREPEAT_RATIONAL_H_
#define DPREPEAT_RATIONAL_H_

#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace dprepeat {

using Rational = boost::multiprecision::cpp_rational;

Rational ToRational(double value);
double ToDouble(const Rational& value);
std::string ToString(const Rational& value);

// Lets scalar-generic kernels lift double inputs into their working type.
template <class Scalar>
Scalar Lift(double value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return ToRational(value);
  } else {
    return static_cast<Scalar>(value);
  }
}

inline double Lower(double value) { return value; }
inline double Lower(const Rational& value) { return ToDouble(value); }

}  // namespace dprepeat

#endif  // DPREPEAT_RATIONAL_H_
