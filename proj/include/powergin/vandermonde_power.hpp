// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace powergin {

/// Exact integer coefficients of the p-th power of the Vandermonde
/// determinant in N variables:
///   prod_{i<j} (T_i - T_j)^p = sum_u K(u) prod_i T_i^(u_i).
/// Exponent vectors are stored in canonical lexicographic order. Every
/// stored u has sum u_i = p N(N-1)/2 and max u_i <= p(N-1).
struct LatentWeightTable {
  int N = 0;
  int p = 0;
  std::map<std::vector<int>, mpz_class> coefficients;
  std::vector<std::size_t> intermediate_term_counts;  // after each linear factor
};

/// Expansion by iterated sparse multiplication of the p N(N-1)/2 linear
/// factors. The guard bounds the memory blow-up; pass larger guards
/// explicitly to go beyond the defaults.
LatentWeightTable expand_vandermonde_power(int N, int p, int max_n = 6, int max_p = 4);

/// sum_u K(u) prod_i t_i^(u_i), exact.
mpz_class evaluate_table(const LatentWeightTable& table, const std::vector<long>& t);

/// prod_{i<j} (t_i - t_j)^p, exact.
mpz_class vandermonde_power_direct(const std::vector<long>& t, int p);

/// JSON schema: {"N": int, "p": int,
///               "entries": [{"u": [ints], "K": "decimal string"}]}
/// (coefficients are strings because they outgrow 64 bits quickly).
std::string table_to_json(const LatentWeightTable& table);
LatentWeightTable table_from_json(const std::string& text);

}  // namespace powergin
