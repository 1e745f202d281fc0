// Shared random generators for property-style tests: exact random matrices
// and small random quadratic bound quivers.
#pragma once

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ntrans/linalg.hpp"
#include "ntrans/quiver.hpp"

namespace testgen {

inline ntrans::Matrix random_matrix(std::mt19937& rng, const ntrans::Field& f, std::size_t rows,
                                    std::size_t cols) {
  std::uniform_int_distribution<long> entry(-4, 4);
  std::vector<std::vector<ntrans::Scalar>> data(rows);
  for (auto& r : data) {
    r.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) r.emplace_back(f, entry(rng));
  }
  return ntrans::Matrix::from_rows(f, data, cols);
}

/// Random connected-ish quiver with quadratic relations; nullopt when the
/// draw has no length-2 paths to bind.
inline std::optional<ntrans::BoundQuiver> random_quadratic_quiver(std::mt19937& rng,
                                                                  const ntrans::Field& f) {
  using namespace ntrans;
  std::uniform_int_distribution<int> nv_d(2, 4), na_d(2, 5), coeff(-3, 3);
  BoundQuiver q(f);
  int nv = nv_d(rng);
  for (int i = 0; i < nv; ++i) q.add_vertex("v" + std::to_string(i));
  int na = na_d(rng);
  std::uniform_int_distribution<int> v_d(0, nv - 1);
  for (int a = 0; a < na; ++a) q.add_arrow("a" + std::to_string(a), v_d(rng), v_d(rng));

  // Collect the two-step words per (source, target) block.
  std::map<std::pair<int, int>, std::vector<Path>> words;
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    for (std::size_t b = 0; b < q.num_arrows(); ++b) {
      if (q.arrow(static_cast<int>(a)).target != q.arrow(static_cast<int>(b)).source) continue;
      Path p = q.make_path(q.arrow(static_cast<int>(a)).source,
                           {static_cast<int>(a), static_cast<int>(b)});
      words[{p.source, q.path_target(p)}].push_back(p);
    }
  if (words.empty()) return std::nullopt;

  int want = std::uniform_int_distribution<int>(1, 3)(rng);
  int made = 0;
  for (auto& [key, list] : words) {
    if (made >= want) break;
    std::vector<Term> terms;
    for (const Path& p : list) {
      long c = coeff(rng);
      if (c != 0) terms.push_back(Term{p, Scalar(f, c)});
    }
    if (terms.empty()) continue;
    Element e = q.make_element(std::move(terms));
    if (e.is_zero()) continue;
    q.add_relation(e);
    ++made;
  }
  if (q.relations().empty()) return std::nullopt;
  return q;
}

}  // namespace testgen
