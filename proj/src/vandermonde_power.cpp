// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/vandermonde_power.hpp"

#include <json.hpp>

#include <stdexcept>

namespace powergin {

LatentWeightTable expand_vandermonde_power(int N, int p, int max_n, int max_p) {
  if (N < 1 || p < 1)
    throw std::invalid_argument("expand_vandermonde_power: N, p must be >= 1");
  if (N > max_n || p > max_p)
    throw std::invalid_argument("expand_vandermonde_power: (N=" + std::to_string(N) +
                                ", p=" + std::to_string(p) + ") exceeds the guard");
  LatentWeightTable table;
  table.N = N;
  table.p = p;
  auto& poly = table.coefficients;
  poly[std::vector<int>(N, 0)] = 1;

  for (int rep = 0; rep < p; ++rep) {
    for (int i = 0; i < N; ++i) {
      for (int j = i + 1; j < N; ++j) {
        // multiply by (T_i - T_j)
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [u, c] : poly) {
          std::vector<int> ui = u;
          ++ui[i];
          next[std::move(ui)] += c;
          std::vector<int> uj = u;
          ++uj[j];
          next[std::move(uj)] -= c;
        }
        for (auto it = next.begin(); it != next.end();) {
          if (it->second == 0)
            it = next.erase(it);
          else
            ++it;
        }
        poly = std::move(next);
        table.intermediate_term_counts.push_back(poly.size());
      }
    }
  }
  return table;
}

mpz_class evaluate_table(const LatentWeightTable& table, const std::vector<long>& t) {
  if (static_cast<int>(t.size()) != table.N)
    throw std::invalid_argument("evaluate_table: wrong number of variables");
  mpz_class sum = 0;
  for (const auto& [u, c] : table.coefficients) {
    mpz_class term = c;
    for (int i = 0; i < table.N; ++i) {
      mpz_class base(t[i]);
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(u[i]));
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

mpz_class vandermonde_power_direct(const std::vector<long>& t, int p) {
  mpz_class prod = 1;
  const int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) prod *= mpz_class(t[i] - t[j]);
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(p));
  return out;
}

std::string table_to_json(const LatentWeightTable& table) {
  nlohmann::ordered_json j;
  j["N"] = table.N;
  j["p"] = table.p;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [u, c] : table.coefficients) {
    nlohmann::ordered_json e;
    e["u"] = u;
    e["K"] = c.get_str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

LatentWeightTable table_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  LatentWeightTable table;
  table.N = j.at("N").get<int>();
  table.p = j.at("p").get<int>();
  for (const auto& e : j.at("entries")) {
    const auto u = e.at("u").get<std::vector<int>>();
    if (static_cast<int>(u.size()) != table.N)
      throw std::invalid_argument("table_from_json: exponent vector of wrong length");
    table.coefficients[u] = mpz_class(e.at("K").get<std::string>());
  }
  return table;
}

}  // namespace powergin
