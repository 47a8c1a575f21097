/*
   Copyright 2026 The ore-diamond Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/// @file linalg.hpp
/// @brief Dense Gaussian elimination over a scalar field; used for Padé reconstruction.

#ifndef ORE_LINALG_HPP
#define ORE_LINALG_HPP

#include <vector>

#include "ore/scalar.hpp"

namespace ore {

using Matrix = std::vector<std::vector<Scalar>>;

/// Basis of {x : M·x = 0} for an r × cols matrix; rows may be empty when r = 0.
std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols, const Field& f);

/// Rank of M.
std::size_t rank(Matrix m, std::size_t cols);

}  // namespace ore

#endif  // ORE_LINALG_HPP
