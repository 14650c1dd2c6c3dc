#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "linkage/homological.hpp"
#include "linkage/polyparse.hpp"

namespace testing_support {

using namespace linkage;

inline const Field QQ = Field::rationals();

inline std::vector<std::string> split_vars(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string v;
  while (std::getline(ss, v, ',')) out.push_back(v);
  return out;
}

inline GradedRing ring(const std::string& vars, const std::vector<std::string>& rels = {}, Field f = QQ) {
  auto names = split_vars(vars);
  std::vector<Poly> ps;
  for (const auto& r : rels) ps.push_back(parse_poly(f, names, r));
  return make_ring(f, names, ps);
}

inline Poly P(const GradedRing& r, const std::string& s) { return parse_poly(r.field(), r.variables(), s); }

inline ModulePresentation cyc(const GradedRing& r, const std::vector<std::string>& ideal, int twist = 0) {
  std::vector<Poly> ps;
  for (const auto& s : ideal) ps.push_back(P(r, s));
  return ModulePresentation::cyclic(r, ps, twist);
}

inline ModulePresentation coker(const GradedRing& r, std::vector<int> twists,
                                const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = P(r, rows[i][j]);
  return ModulePresentation::from_matrix(r, std::move(twists), m);
}

inline ModulePresentation free_module(const GradedRing& r, std::vector<int> twists = {0}) {
  return ModulePresentation::free(r, std::move(twists));
}

inline bool iso(const ModulePresentation& a, const ModulePresentation& b) { return is_isomorphic(a, b).isomorphic(); }

inline bool not_iso(const ModulePresentation& a, const ModulePresentation& b) {
  return is_isomorphic(a, b).kind == IsoVerdict::Kind::NotIsomorphic;
}

/// Raises the rank budget for the lifetime of the object.
struct RankBudget {
  Budgets saved = budgets();
  explicit RankBudget(std::size_t rank) { set_budgets({saved.max_degree, rank}); }
  ~RankBudget() { set_budgets(saved); }
};

}  // namespace testing_support
