// Copyright 2026 The qts Authors
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

#include "qts/fock_basis.hpp"
#include "qts/types.hpp"

namespace qts {

/// Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
/// updates, O(2^n n). The empty matrix has permanent 1.
Complex permanent(const Matrix& a);

/**
 * <out| U |in> for the many-photon lift of the mode matrix U:
 * per(U[out, in]) / sqrt(prod in_i! prod out_j!), where the submatrix repeats
 * row j out_j times and column i in_i times. Throws on a photon-number
 * mismatch.
 */
Complex permanent_amplitude(const Matrix& mode_matrix, const Occupation& in,
                            const Occupation& out);

}  // namespace qts
