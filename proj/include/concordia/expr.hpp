#pragma once

#include "concordia/scalar.hpp"
#include "concordia/shuffle.hpp"

#include <memory>
#include <vector>

namespace concordia {

class CopulaExpr;
using ExprPtr = std::shared_ptr<const CopulaExpr>;

/// One summand of an ordinal sum, living on the square [a,b]^2.
struct OrdinalBlock {
  Scalar a, b;
  ExprPtr summand;
};

struct ConvexPart {
  Scalar weight;
  ExprPtr part;
};

/// Immutable expression tree over base copulas (M, W, the independence
/// copula Pi), shuffles of M, ordinal sums, the two reflections and convex
/// combinations. Expressions are values: share them freely across threads.
///
/// Every factory validates its node, so a constructed expression always
/// denotes a genuine copula.
class CopulaExpr {
 public:
  enum class Kind { M, W, Pi, Shuffle, Ordinal, Reflect, Convex };

  static ExprPtr m();
  static ExprPtr w();
  static ExprPtr pi();
  static ExprPtr shuffle(ShuffleOfM s);
  /// Blocks are stored sorted by `a`; their open intervals must be disjoint.
  static ExprPtr ordinal(std::vector<OrdinalBlock> blocks);
  static ExprPtr reflect(int axis, ExprPtr of);
  /// Weights must be nonnegative and sum to one (exactly in rational mode,
  /// within 1e-12 otherwise).
  static ExprPtr convex(std::vector<ConvexPart> parts);

  Kind kind() const { return kind_; }
  const ShuffleOfM& shuffle_data() const;
  const std::vector<OrdinalBlock>& blocks() const;
  int reflect_axis() const;
  const ExprPtr& reflect_of() const;
  const std::vector<ConvexPart>& parts() const;

  /// True when every numeric field in the tree is rational.
  bool is_rational() const;

 private:
  explicit CopulaExpr(Kind k) : kind_(k) {}

  Kind kind_;
  std::shared_ptr<ShuffleOfM> shuffle_;
  std::vector<OrdinalBlock> blocks_;
  int axis_ = 0;
  ExprPtr of_;
  std::vector<ConvexPart> parts_;
};

/// C(u,v). Exact in rational mode; honours the Frechet-Hoeffding bounds.
Scalar eval(const CopulaExpr& e, const Scalar& u, const Scalar& v);
/// Double fast path (used by the oracles and dense grids).
double eval(const CopulaExpr& e, double u, double v);

/// Mass the copula assigns to the rectangle [u1,u2] x [v1,v2].
Scalar rect_volume(const CopulaExpr& e, const Scalar& u1, const Scalar& u2,
                   const Scalar& v1, const Scalar& v2);
double rect_volume(const CopulaExpr& e, double u1, double u2, double v1, double v2);

/// Shuffle normal form: zero-width pieces dropped, co-linear runs merged,
/// reflections and ordinal sums of shuffles flattened. Throws NotAShuffle
/// for convex nodes and for leaves whose mass is not carried by a graph.
ShuffleOfM as_shuffle(const CopulaExpr& e);

/// Whether as_shuffle would succeed.
bool shuffle_normalizable(const CopulaExpr& e);

}  // namespace concordia
