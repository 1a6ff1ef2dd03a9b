#pragma once

#include "concordia/expr.hpp"
#include "concordia/scalar.hpp"

#include <cstddef>
#include <optional>

namespace concordia {

/// A coefficient together with how it was obtained: `exact` means a closed
/// form or exact path integration end to end (even when the arithmetic ran
/// in doubles); estimated values come from the quadrature fallback or from
/// the brute-force oracles.
struct MeasureValue {
  Scalar value;
  bool exact = true;
};

/// The six dependence coefficients of a copula.
struct MeasureVector {
  MeasureValue rho, tau, phi, gamma, beta, xi;
};

/// Concordance function Q(C1,C2) = 4 * int C2 dC1 - 1. Needs the mass of
/// one argument on a graph and the other argument integrable along lines;
/// symmetric whenever both orders qualify.
Scalar concordance_q(const CopulaExpr& c1, const CopulaExpr& c2);

/// Spearman's rho: 12 * double integral of C, minus 3.
Scalar rho(const CopulaExpr& e);
/// Kendall's tau: Q(C, C).
Scalar tau(const CopulaExpr& e);
/// Spearman's footrule: 6 * integral of the diagonal section, minus 2.
Scalar phi(const CopulaExpr& e);
/// Gini's gamma: 4 * (int diagonal + int opposite diagonal) - 2.
Scalar gamma(const CopulaExpr& e);
/// Blomqvist's beta: 4 C(1/2,1/2) - 1. Total: evaluation always works.
Scalar beta(const CopulaExpr& e);
/// Chatterjee's xi. Equals 1 for every graph-supported copula, 0 for
/// independence. The reflection invariance and the mixture fallback are
/// library extensions, not classical facts; mixtures are never exact.
Scalar xi(const CopulaExpr& e);

/// The block of an ordinal sum that straddles 1/2, with the offset
/// c = (1 - a_j - b_j) / (b_j - a_j) in (-1,1) used by the general
/// gamma formula.
struct GammaMiddleCase {
  std::size_t block_index;
  Scalar c;
};

/// Identifies the straddling block of an ordinal expression, if any.
std::optional<GammaMiddleCase> gamma_middle_case(const CopulaExpr& ordinal);

/// All six coefficients. Fields with no closed form are filled from the
/// checkerboard oracle at resolution `fallback_n` and flagged inexact.
MeasureVector all_measures(const CopulaExpr& e, int fallback_n = 1024);

namespace detail {
// Closed-form attempts; nullopt when no exact route exists. The bool is
// false when the value went through the quadrature fallback.
std::optional<MeasureValue> try_rho(const CopulaExpr& e);
std::optional<MeasureValue> try_tau(const CopulaExpr& e);
std::optional<MeasureValue> try_phi(const CopulaExpr& e);
std::optional<MeasureValue> try_gamma(const CopulaExpr& e);
std::optional<MeasureValue> try_xi(const CopulaExpr& e);
std::optional<MeasureValue> try_q(const CopulaExpr& c1, const CopulaExpr& c2);
}  // namespace detail

}  // namespace concordia
