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

#include "conekit/cone.hpp"
#include "conekit/report.hpp"
#include "conekit/scalarize.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace conekit {

/// A named map R+ -> R+. The callable must be pure and reentrant.
struct ScalarFunction
{
  std::string                    name;
  std::function<double(double)> fn;

  double operator()(double t) const
  {
    return fn(t);
  }
};

namespace functions {

/// t -> c t
ScalarFunction scale(double c);
/// t -> t / (1 + t)
ScalarFunction rational_decay();
/// t -> t^p
ScalarFunction power(double p);
/// t -> t
ScalarFunction identity();

}  // namespace functions

/// A vectorial comparison function phi : K -> K.
///
/// Either linear, phi(k) = lambda k with 0 <= lambda < 1, or componentwise,
/// phi(k) = (phi_1(k_1), ..., phi_n(k_n)), which is only offered on orthant
/// cones. The defining properties are checked by verify_vectorial rather
/// than assumed.
class VectorialComparison
{
public:
  enum class Kind
  {
    linear,
    componentwise
  };

  static VectorialComparison linear(Cone cone, double lambda);
  static VectorialComparison componentwise(Cone cone, std::vector<ScalarFunction> components);

  Kind kind() const
  {
    return kind_;
  }
  Cone const &cone() const
  {
    return cone_;
  }
  double lambda() const
  {
    return lambda_;
  }
  std::vector<ScalarFunction> const &components() const
  {
    return components_;
  }

  /// phi(k). Throws InputError when k is outside K beyond tolerance.
  Vector apply(Vector const &k) const;

  std::string describe() const;

private:
  VectorialComparison(Kind kind, Cone cone, double lambda, std::vector<ScalarFunction> comps);

  Kind                        kind_;
  Cone                        cone_;
  double                      lambda_;
  std::vector<ScalarFunction> components_;
};

/// A scalar comparison function psi : R+ -> R+, with the hypotheses its
/// author declares (increasing, right upper semicontinuous).
class ScalarComparison
{
public:
  enum class Provenance
  {
    builtin,
    transferred
  };

  explicit ScalarComparison(ScalarFunction fn, Provenance provenance = Provenance::builtin,
                            bool increasing = true, bool right_usc = true);

  static ScalarComparison linear(double c);
  static ScalarComparison rational_decay();
  static ScalarComparison identity();

  double operator()(double t) const
  {
    return fn_(t);
  }

  std::string const &name() const
  {
    return fn_.name;
  }
  Provenance provenance() const
  {
    return provenance_;
  }
  bool declared_increasing() const
  {
    return increasing_;
  }
  bool declared_right_usc() const
  {
    return right_usc_;
  }

private:
  ScalarFunction fn_;
  Provenance     provenance_;
  bool           increasing_;
  bool           right_usc_;
};

char const *to_string(ScalarComparison::Provenance provenance);

/// Sampled check of the vectorial comparison axioms:
///
///   monotone            k1 <=_K k2  implies  phi(k1) <=_K phi(k2)
///   fixes_origin        phi(0) = 0
///   nonnegative         0 <=_K phi(k)
///   below_identity      phi(k) <=_K k
///   strictly_below      phi(k) != k for k != 0
///   interior_margin     k in int K  implies  k - phi(k) in int K
///   right_continuous    phi((t0 + d) e) -> phi(t0 e) along d = 1e-1 .. 1e-8
///   strictly_positive   phi(k) != 0 for k != 0   (advisory)
///
/// interior_margin is asserted for k whose slack exceeds 1e-3 (1 + |k|); the
/// right-continuity discrepancy at the finest step must be below 1e-6.
PropertyReport verify_vectorial(VectorialComparison const &vc, std::size_t samples,
                                std::uint64_t seed);

/// psi(t) = xi(phi(t e)) for t >= 0. Throws InputError when vc and s are
/// built over different cones. The returned function keeps copies of both.
ScalarComparison transfer_psi(VectorialComparison const &vc, Scalarizer const &s);

/// Checks psi is increasing on the sorted grid and that for every grid t the
/// orbit psi^n(t) is nonincreasing and drops below 1e-6 t within n_max steps.
PropertyReport verify_scalar(ScalarComparison const &sc, std::span<double const> t_grid,
                             std::size_t n_max);

/// Numerical check that "psi(t) < t on the grid" and "psi^n(t) -> 0 on the
/// grid" agree for an increasing, right upper semicontinuous psi. A
/// one-sided disagreement means a declared hypothesis is wrong. When psi
/// does not declare both hypotheses the items are advisory.
PropertyReport check_decay_equivalence(ScalarComparison const &sc,
                                       std::span<double const> t_grid, std::size_t n_max);

/// n points spaced evenly in log10 between lo and hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace conekit
