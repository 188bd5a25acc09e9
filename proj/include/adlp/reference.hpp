// Copyright 2026 The adlp Authors
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

#ifndef ADLP_REFERENCE_HPP
#define ADLP_REFERENCE_HPP

#include <utility>

#include "adlp/connection.hpp"
#include "adlp/enumerator.hpp"

namespace adlp::reference {

// Serial dense implementations of the enumerator and connection kernels,
// straight from the definitions with explicit 2^n x 2^n matrices. They are
// the ground truth the fast paths are tested against and the baseline the
// benchmark compares with; nothing here is reached from the LP pipeline.

// Dense traces over kraus_dense; n <= 8.
std::pair<EnumeratorVector, EnumeratorVector> ad_enumerators(const Code& code, double gamma);

// Dense traces over dense_matrix; n <= 6.
std::pair<EnumeratorVector, EnumeratorVector> sl_enumerators(const Code& code);
AuxVector aux_vector(const Code& code);

// Entrywise build from tr(E sigma) tr(E^dag tau) and tr(E sigma E^dag tau);
// n <= 3 (every ordered Pauli pair gets dense products).
ConnectionMatrix build_connection(ConnectionKind kind, int n, double gamma);

}  // namespace adlp::reference

#endif  // ADLP_REFERENCE_HPP
