// Copyright 2026 The qdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIST_CATALOG_HPP
#define QDIST_CATALOG_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdist/errors.hpp"
#include "qdist/extended_real.hpp"
#include "qdist/families.hpp"
#include "qdist/hot.hpp"
#include "qdist/measures.hpp"
#include "qdist/spectral.hpp"
#include "qdist/state.hpp"

namespace qdist {

/// Weighted records use (A, B); normalized records use the stored (rho, sigma)
/// at the uniform prior.
enum class Domain { Weighted, Normalized };

/// The expression vocabulary the catalog is written in.
enum class Expr {
  L,
  T,
  F,
  Q,
  Qs,  // Q_s, evaluated over the s-grid
  Qmin,
  S,
  C,
  SquaredF,
  SquaredT,
  SquaredQ,
  OneMinusT,
  OneMinusF2,
  OneMinusQ,
  OneMinusQs,
  OneMinusQmin,
  VofT,
  VofQ,
  SqrtOneMinusL,
  ExpNegHalfS,
  ExpNegS,
  TwiceSquaredT,
  HotOfT,
  HotInverseOfS,
  SqrtDiffHilbertSchmidt,
  TraceNormDiff,
  NegTwoLogF,
  NegTwoLogQ,
  TwiceC,
};

inline std::string_view expr_id(Expr e) {
  switch (e) {
    case Expr::L: return "L";
    case Expr::T: return "T";
    case Expr::F: return "F";
    case Expr::Q: return "Q";
    case Expr::Qs: return "Q_s";
    case Expr::Qmin: return "Q_min";
    case Expr::S: return "S";
    case Expr::C: return "C";
    case Expr::SquaredF: return "F^2";
    case Expr::SquaredT: return "T^2";
    case Expr::SquaredQ: return "Q^2";
    case Expr::OneMinusT: return "1-T";
    case Expr::OneMinusF2: return "1-F^2";
    case Expr::OneMinusQ: return "1-Q";
    case Expr::OneMinusQs: return "1-Q_s";
    case Expr::OneMinusQmin: return "1-Q_min";
    case Expr::VofT: return "v(T)";
    case Expr::VofQ: return "v(Q)";
    case Expr::SqrtOneMinusL: return "sqrt(1-L)";
    case Expr::ExpNegHalfS: return "exp(-S/2)";
    case Expr::ExpNegS: return "exp(-S)";
    case Expr::TwiceSquaredT: return "2T^2";
    case Expr::HotOfT: return "s(T)";
    case Expr::HotInverseOfS: return "s^-1(S)";
    case Expr::SqrtDiffHilbertSchmidt: return "||A^1/2-B^1/2||_2^2";
    case Expr::TraceNormDiff: return "||A-B||_1";
    case Expr::NegTwoLogF: return "-2log(F)";
    case Expr::NegTwoLogQ: return "-2log(Q)";
    case Expr::TwiceC: return "2C";
  }
  return "?";
}

inline bool uses_s_grid(Expr e) { return e == Expr::Qs || e == Expr::OneMinusQs; }

/// Set of equality families, one bit per family.
class FamilySet {
 public:
  constexpr FamilySet() = default;
  constexpr FamilySet(std::initializer_list<Family> fs) {
    for (Family f : fs) bits_ |= bit(f);
  }
  constexpr bool contains(Family f) const { return (bits_ & bit(f)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr FamilySet& operator|=(FamilySet o) {
    bits_ |= o.bits_;
    return *this;
  }
  std::string letters() const {
    std::string s;
    for (Family f : kAllFamilies) {
      if (contains(f)) s += family_letter(f);
    }
    return s;
  }
  friend constexpr bool operator==(FamilySet, FamilySet) = default;

 private:
  static constexpr unsigned bit(Family f) { return 1u << static_cast<unsigned>(f); }
  unsigned bits_ = 0;
};

/// lhs <= rhs, attained with equality on `equality_families`.
struct Clause {
  Expr lhs;
  Expr rhs;
  FamilySet equality_families;

  bool over_s_grid() const { return uses_s_grid(lhs) || uses_s_grid(rhs); }
  std::string statement() const { return std::string(expr_id(lhs)) + " <= " + std::string(expr_id(rhs)); }
};

struct InequalityRecord {
  std::string id;
  std::string description;
  Domain domain;
  std::vector<Clause> clauses;
  /// Where the inequality comes from in the literature.
  std::string anchor;
  /// Entropy-valued records compare with tolerance eta * max(1, |rhs|).
  bool entropy_scaled = false;

  FamilySet equality_families() const {
    FamilySet fs;
    for (const Clause& c : clauses) fs |= c.equality_families;
    return fs;
  }
  bool sharp() const { return !equality_families().empty(); }
};

inline const std::vector<InequalityRecord>& catalog() {
  using F = Family;
  using E = Expr;
  static const std::vector<InequalityRecord> records = {
      {"E1", "L <= F^2", Domain::Weighted, {{E::L, E::SquaredF, {F::A, F::B, F::C}}},
       "essential inequality; ||X||_1 <= ||X||_{1/2} for X = B^1/2 A B^1/2"},
      {"E2", "1 - Q_s <= T for all s in [0,1], and 1 - Q_min <= T", Domain::Weighted,
       {{E::OneMinusQs, E::T, {F::A, F::C}}, {E::OneMinusQmin, E::T, {F::A, F::C}}},
       "essential inequality; Powers-Stormer at s = 1/2, all s via operator monotonicity of x^s"},
      {"E3", "T^2 <= 1 - F^2", Domain::Weighted, {{E::SquaredT, E::OneMinusF2, {F::B, F::D}}},
       "essential inequality; Fuchs-van de Graaf, general prior"},
      {"E4", "F^2 <= Q_s for all s in [0,1]", Domain::Normalized, {{E::SquaredF, E::Qs, {F::A, F::B}}},
       "essential inequality; Hoelder on rho^{(1-s)/2} (rho^{s/2} sigma^{(1-s)/2}) sigma^{s/2}"},
      {"E5", "Q <= F", Domain::Weighted, {{E::Q, E::F, {F::A, F::C, F::D}}},
       "essential inequality; |tr X| <= ||X||_1 for X = A^1/2 B^1/2"},
      {"T6", "exp(-S/2) <= Q", Domain::Normalized, {{E::ExpNegHalfS, E::Q, {F::A}}},
       "convexity of psi(s) = log tr rho^s sigma^{1-s}, psi'(1) = S"},
      {"T7", "s(T) <= S", Domain::Normalized, {{E::HotOfT, E::S, {}}},
       "Hiai-Ohya-Tsukuda sharp lower bound", true},
      {"PS", "||A^1/2 - B^1/2||_2^2 <= ||A - B||_1", Domain::Weighted,
       {{E::SqrtDiffHilbertSchmidt, E::TraceNormDiff, {}}}, "Powers-Stormer inequality"},
      {"PK", "2 T^2 <= S", Domain::Normalized, {{E::TwiceSquaredT, E::S, {}}}, "Pinsker's bound", true},
      {"CH1", "1 - T <= F <= v(T)", Domain::Weighted,
       {{E::OneMinusT, E::F, {F::C}}, {E::F, E::VofT, {F::B, F::D}}}, "sandwich bound on the fidelity"},
      {"CH2", "T <= v(Q) and 1 - Q <= T", Domain::Weighted,
       {{E::T, E::VofQ, {F::D}}, {E::OneMinusQ, E::T, {F::C}}}, "chain: bounds on T in terms of Q"},
      {"CH3", "T <= sqrt(1 - L)", Domain::Weighted, {{E::T, E::SqrtOneMinusL, {F::B}}},
       "chain: upper bound on T in terms of L"},
      {"CH4", "L <= Q_min <= Q <= F and F^2 <= Q_min", Domain::Normalized,
       {{E::L, E::Qmin, {F::A, F::B}},
        {E::Qmin, E::Q, {F::B, F::C, F::D}},
        {E::Q, E::F, {F::A, F::C, F::D}},
        {E::SquaredF, E::Qmin, {F::A, F::B}}},
       "chain: Q_min between the overlaps"},
      {"CH5", "exp(-S) <= Q^2 <= F^2", Domain::Normalized,
       {{E::ExpNegS, E::SquaredQ, {F::A}}, {E::SquaredQ, E::SquaredF, {F::A, F::C, F::D}}},
       "chain: lower bounds on Q_min"},
      {"CH6", "C <= S and C <= -2 log F <= -2 log Q <= 2C", Domain::Normalized,
       {{E::C, E::S, {}}, {E::C, E::NegTwoLogF, {}}, {E::NegTwoLogF, E::NegTwoLogQ, {}}, {E::NegTwoLogQ, E::TwiceC, {}}},
       "chain: Chernoff distance as -log Q_min", true},
      {"CH7", "T <= s^-1(S)", Domain::Normalized, {{E::T, E::HotInverseOfS, {}}},
       "Hiai-Ohya-Tsukuda bound solved for T"},
  };
  return records;
}

inline const InequalityRecord& find_record(std::string_view id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return r;
  }
  throw Error(Errc::DomainError, "no catalog record " + std::string(id));
}

/// The 21-point grid s in {0, 0.05, ..., 1}.
inline std::vector<double> s_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 20; ++k) g.push_back(k / 20.0);
  return g;
}

/// Every measure value a record can refer to, for one domain.
struct DomainQuantities {
  double overlap = 0.0;
  double trace_distance = 0.0;
  double fidelity = 0.0;
  double hellinger = 0.0;
  RenyiMinimum q_min{0.0, 0.5, false};
  /// (s, Q_s) on the grid plus the argmin of Q_s.
  std::vector<std::pair<double, double>> renyi;
  double sqrt_diff_hs = 0.0;
  ExtendedReal relative_entropy;
  ExtendedReal chernoff;
  bool has_entropies = false;
};

inline DomainQuantities compute_domain_quantities(const WeightedStatePair& pair, bool with_entropies) {
  DomainQuantities q;
  q.overlap = overlap(pair);
  q.trace_distance = trace_distance(pair);
  q.fidelity = fidelity(pair);
  q.hellinger = hellinger_affinity(pair);
  q.q_min = min_renyi_overlap(pair);
  for (double s : s_grid()) q.renyi.emplace_back(s, renyi_overlap(pair, s));
  q.renyi.emplace_back(q.q_min.s_star, renyi_overlap(pair, q.q_min.s_star));

  const auto sqrt_op = [](double x) { return std::sqrt(x); };
  const ComplexMatrix diff = apply_on_support(pair.a_spectrum(), sqrt_op).matrix() -
                             apply_on_support(pair.b_spectrum(), sqrt_op).matrix();
  q.sqrt_diff_hs = diff.squaredNorm();

  if (with_entropies) {
    q.relative_entropy = relative_entropy(pair.rho(), pair.sigma());
    q.chernoff = q.q_min.degenerate ? ExtendedReal::infinity() : neg_log(std::min(q.q_min.value, 1.0));
    q.has_entropies = true;
  }
  return q;
}

struct PairQuantities {
  DomainQuantities weighted;
  std::optional<DomainQuantities> normalized;
};

inline PairQuantities compute_quantities(const WeightedStatePair& pair) {
  PairQuantities pq;
  if (!pair.has_states()) {
    pq.weighted = compute_domain_quantities(pair, false);
    return pq;
  }
  if (pair.prior() == 0.5) {
    pq.weighted = compute_domain_quantities(pair, true);
    pq.normalized = pq.weighted;
  } else {
    pq.weighted = compute_domain_quantities(pair, false);
    pq.normalized = compute_domain_quantities(pair.normalized(), true);
  }
  return pq;
}

namespace detail {

inline double v_function(double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); }

inline const ExtendedReal& need_entropy(const DomainQuantities& q, const ExtendedReal& v) {
  if (!q.has_entropies) throw Error(Errc::DomainMismatch, "expression needs the normalized states");
  return v;
}

/// `s_value` is the Q_s value used for s-dependent expressions.
inline ExtendedReal eval_expr(Expr e, const DomainQuantities& q, double s_value) {
  switch (e) {
    case Expr::L: return q.overlap;
    case Expr::T: return q.trace_distance;
    case Expr::F: return q.fidelity;
    case Expr::Q: return q.hellinger;
    case Expr::Qs: return s_value;
    case Expr::Qmin: return q.q_min.value;
    case Expr::S: return need_entropy(q, q.relative_entropy);
    case Expr::C: return need_entropy(q, q.chernoff);
    case Expr::SquaredF: return q.fidelity * q.fidelity;
    case Expr::SquaredT: return q.trace_distance * q.trace_distance;
    case Expr::SquaredQ: return q.hellinger * q.hellinger;
    case Expr::OneMinusT: return 1.0 - q.trace_distance;
    case Expr::OneMinusF2: return 1.0 - q.fidelity * q.fidelity;
    case Expr::OneMinusQ: return 1.0 - q.hellinger;
    case Expr::OneMinusQs: return 1.0 - s_value;
    case Expr::OneMinusQmin: return 1.0 - q.q_min.value;
    case Expr::VofT: return v_function(q.trace_distance);
    case Expr::VofQ: return v_function(q.hellinger);
    case Expr::SqrtOneMinusL: return std::sqrt(std::max(0.0, 1.0 - q.overlap));
    case Expr::ExpNegHalfS: return exp_extended(scale(need_entropy(q, q.relative_entropy), -0.5));
    case Expr::ExpNegS: return exp_extended(-need_entropy(q, q.relative_entropy));
    case Expr::TwiceSquaredT: return 2.0 * q.trace_distance * q.trace_distance;
    case Expr::HotOfT: {
      // s(x) -> +inf as x -> 1; rounding can push T marginally past 1
      const double x = std::max(0.0, q.trace_distance);
      if (x >= 1.0) return ExtendedReal::infinity();
      return hot_function(x);
    }
    case Expr::HotInverseOfS: {
      const ExtendedReal& s = need_entropy(q, q.relative_entropy);
      if (s.is_pos_inf()) return 1.0;
      return hot_inverse(std::max(0.0, s.value()));
    }
    case Expr::SqrtDiffHilbertSchmidt: return q.sqrt_diff_hs;
    case Expr::TraceNormDiff: return q.trace_distance;
    case Expr::NegTwoLogF: return scale(neg_log(q.fidelity), 2.0);
    case Expr::NegTwoLogQ: return scale(neg_log(q.hellinger), 2.0);
    case Expr::TwiceC: return scale(need_entropy(q, q.chernoff), 2.0);
  }
  return 0.0;
}

}  // namespace detail

struct ClauseResult {
  ExtendedReal lhs;
  ExtendedReal rhs;
  ExtendedReal slack;
  /// The grid point that produced the worst slack, for s-dependent clauses.
  std::optional<double> s;
};

struct EvaluationResult {
  std::string record_id;
  ExtendedReal lhs_value;
  ExtendedReal rhs_value;
  ExtendedReal slack;
  bool holds = false;
  /// Index of the clause with the smallest slack.
  std::size_t worst_clause = 0;
  std::vector<ClauseResult> clauses;
};

inline const DomainQuantities& quantities_for(const InequalityRecord& record, const PairQuantities& pq) {
  if (record.domain == Domain::Weighted) return pq.weighted;
  if (!pq.normalized) {
    throw Error(Errc::DomainMismatch, "record " + record.id + " needs normalized states, pair has none");
  }
  return *pq.normalized;
}

inline ClauseResult evaluate_clause(const Clause& clause, const DomainQuantities& q) {
  if (!clause.over_s_grid()) {
    const ExtendedReal lhs = detail::eval_expr(clause.lhs, q, 0.0);
    const ExtendedReal rhs = detail::eval_expr(clause.rhs, q, 0.0);
    return {lhs, rhs, slack_between(lhs, rhs), std::nullopt};
  }
  std::optional<ClauseResult> worst;
  for (const auto& [s, qs] : q.renyi) {
    const ExtendedReal lhs = detail::eval_expr(clause.lhs, q, qs);
    const ExtendedReal rhs = detail::eval_expr(clause.rhs, q, qs);
    const ExtendedReal slack = slack_between(lhs, rhs);
    if (!worst || slack < worst->slack) worst = ClauseResult{lhs, rhs, slack, s};
  }
  return *worst;
}

/// Tolerance used for a record whose worst clause has right-hand side `rhs`.
inline double effective_tolerance(const InequalityRecord& record, const ExtendedReal& rhs, double eta) {
  if (record.entropy_scaled && rhs.is_finite()) return eta * std::max(1.0, std::abs(rhs.value()));
  return eta;
}

inline bool slack_holds(const ExtendedReal& slack, double tol) {
  if (slack.is_pos_inf()) return true;
  if (slack.is_neg_inf()) return false;
  return slack.value() >= -tol;
}

inline EvaluationResult evaluate(const InequalityRecord& record, const PairQuantities& pq, double eta) {
  if (!(eta >= 0.0)) throw Error(Errc::DomainError, "tolerance must be >= 0");
  const DomainQuantities& q = quantities_for(record, pq);
  EvaluationResult out;
  out.record_id = record.id;
  bool holds = true;
  for (std::size_t k = 0; k < record.clauses.size(); ++k) {
    ClauseResult c = evaluate_clause(record.clauses[k], q);
    holds = holds && slack_holds(c.slack, effective_tolerance(record, c.rhs, eta));
    if (k == 0 || c.slack < out.slack) {
      out.slack = c.slack;
      out.lhs_value = c.lhs;
      out.rhs_value = c.rhs;
      out.worst_clause = k;
    }
    out.clauses.push_back(std::move(c));
  }
  out.holds = holds;
  return out;
}

inline EvaluationResult evaluate(const InequalityRecord& record, const WeightedStatePair& pair, double eta) {
  return evaluate(record, compute_quantities(pair), eta);
}

inline std::vector<EvaluationResult> evaluate_all(const PairQuantities& pq, double eta) {
  std::vector<EvaluationResult> out;
  for (const auto& r : catalog()) {
    if (r.domain == Domain::Normalized && !pq.normalized) continue;
    out.push_back(evaluate(r, pq, eta));
  }
  return out;
}

inline std::vector<EvaluationResult> evaluate_all(const WeightedStatePair& pair, double eta) {
  return evaluate_all(compute_quantities(pair), eta);
}

struct FamilySlack {
  std::string record_id;
  /// Signed slack of the listed clause furthest from equality.
  ExtendedReal slack;
};

/// Slacks of every clause that lists `family`, on the family's pair at t.
inline std::vector<FamilySlack> family_equality_slacks(Family family, double t) {
  const FamilyPoint fp = family_point(family, t);
  const PairQuantities pq = compute_quantities(make_weighted_pair(fp.rho, fp.sigma, 0.5));
  std::vector<FamilySlack> out;
  for (const auto& record : catalog()) {
    if (!record.equality_families().contains(family)) continue;
    const DomainQuantities& q = quantities_for(record, pq);
    std::optional<ExtendedReal> worst;
    for (const Clause& clause : record.clauses) {
      if (!clause.equality_families.contains(family)) continue;
      const ExtendedReal slack = evaluate_clause(clause, q).slack;
      const auto magnitude = [](const ExtendedReal& x) { return x.is_finite() ? std::abs(x.value()) : HUGE_VAL; };
      if (!worst || magnitude(slack) > magnitude(*worst)) worst = slack;
    }
    out.push_back({record.id, *worst});
  }
  return out;
}

/// Throws EqualityViolation unless every clause listing `family` is tight
/// within eta at t.
inline std::vector<FamilySlack> check_family_equalities(Family family, double t, double eta) {
  auto slacks = family_equality_slacks(family, t);
  for (const auto& fs : slacks) {
    if (!fs.slack.is_finite() || std::abs(fs.slack.value()) > eta) {
      throw Error(Errc::EqualityViolation, "record " + fs.record_id + " on family (" +
                                               std::string(1, family_letter(family)) + ") at t = " +
                                               std::to_string(t) + ": slack " + fs.slack.to_string());
    }
  }
  return slacks;
}

}  // namespace qdist

#endif  // QDIST_CATALOG_HPP
