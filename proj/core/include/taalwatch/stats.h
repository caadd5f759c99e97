// Copyright 2026 The Taalwatch Authors.
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

#ifndef TAALWATCH_STATS_H_
#define TAALWATCH_STATS_H_

namespace taalwatch::stats {

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in
// [0, 1], evaluated with a continued fraction.
double incomplete_beta(double a, double b, double x);

// P(T <= t) for Student's t with `df` > 0 degrees of freedom.
double student_t_cdf(double t, double df);

// P(|T| >= |t|). Infinite t gives 0; NaN gives 1.
double student_t_two_sided_p(double t, double df);

}  // namespace taalwatch::stats

#endif  // TAALWATCH_STATS_H_
