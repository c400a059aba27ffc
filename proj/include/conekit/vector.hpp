//------------------------------------------------------------------------------
//
//   Copyright 2026 The conekit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conekit {

/// Points of the ambient space R^n.
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index  = Eigen::Index;

/// Relative membership tolerance used by every order test.
inline constexpr double kMembershipTolerance = 1e-9;

/// Raised for malformed input: dimension mismatches, non-finite data,
/// points outside a domain, bad construction parameters.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

inline void require_finite(Vector const &v, char const *what)
{
  if (v.size() < 1)
  {
    throw InputError(std::string(what) + ": vector must have dimension >= 1");
  }
  if (!v.allFinite())
  {
    throw InputError(std::string(what) + ": vector has non-finite coordinates");
  }
}

inline void require_dim(Vector const &v, Index dim, char const *what)
{
  if (v.size() != dim)
  {
    throw InputError(std::string(what) + ": dimension mismatch (expected " +
                     std::to_string(dim) + ", got " + std::to_string(v.size()) + ")");
  }
}

}  // namespace conekit
