#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdg/complex.hpp"

namespace kdg {

// Degree-by-degree linear algebra over the coefficient field. Uses polynomial multiplication and
// sparse rank only, never a Gröbner basis, so it can referee the symbolic path.

/// Graded-piece dimensions of every H^i for internal degrees start..max_degree.
struct OracleTable {
  int start = 0;
  int max_degree = 0;
  std::map<int, std::vector<std::int64_t>> dims;

  std::int64_t dim(int i, int degree) const;
};

/// Throws InputError when max_degree is below start (nothing would be determined). The table
/// carries dimensions only; pole orders are never extrapolated from it.
OracleTable truncation_oracle(const Complex& c, int max_degree, std::optional<int> start = std::nullopt);

/// First disagreement between the oracle and Complex::homology_hilbert, if any.
std::optional<std::string> oracle_mismatch(const Complex& c, const OracleTable& table);

/// dim M_d for d = start..max_degree, M a subquotient module.
std::vector<std::int64_t> oracle_module_dims(const FPModule& m, int start, int max_degree);

/// dim (S/(gens))_d for d = 0..max_degree; gens homogeneous.
std::vector<std::int64_t> oracle_quotient_dims(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                               int max_degree);

/// True when p is certified to lie in (gens) by a combination sum c·m·g with every product of
/// degree at most max_degree. False means "no certificate within the bound".
bool oracle_ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens, int max_degree);

/// Smallest twist among all terms; kPlusInfinity for the zero complex.
int lowest_twist(const Complex& c);

}  // namespace kdg
