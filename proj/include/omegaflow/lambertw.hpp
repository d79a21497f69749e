// Copyright 2026 The Omegaflow Authors
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

namespace omegaflow::lambertw {

// Principal branch W0 of the Lambert W function: the w >= -1 solving
// w * exp(w) = z, defined for z >= -1/e.
//
// Arguments at most 4 ulps below -1/e are treated as -1/e. Throws
// DomainError below that, or for NaN. Returns +inf for z = +inf.
double w0(double z);

// W0(exp(ln_z)) without forming exp(ln_z), so arguments far beyond the double
// range are accepted. Solves w + ln(w) = ln_z.
double w0_from_ln(double ln_z);

// Series for W0 about the branch point in p = sqrt(2 (e z + 1)). Accurate to
// rounding for |e z + 1| <= 0.04; the caller is responsible for the range.
double w0_branch_series(double z);

// 1 + W0(z) for z = (delta - 1) / e, i.e. delta = e z + 1 >= 0.
//
// Callers that know the distance to the branch point exactly (rather than
// through a rounded z) get 1 + W0 to full relative precision, which matters
// wherever the result is divided by.
double w0_branch_offset(double delta);

// e * z + 1 evaluated with the two-term split of 1/e, exact near the branch.
double branch_offset(double z);

}  // namespace omegaflow::lambertw
