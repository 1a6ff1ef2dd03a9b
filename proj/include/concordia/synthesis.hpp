#pragma once

#include "concordia/expr.hpp"
#include "concordia/measures.hpp"
#include "concordia/region.hpp"

#include <string>
#include <vector>

namespace concordia {

/// The parametric families used to reach region boundary points, plus the
/// one-block middle nest that sweeps them across their faces.
enum class FamilyId { Cb, Db, Gb, Lab, Aab, Fab, Hab, Kab, Mab, NestMiddle };

/// Shuffle with mass split around the center; on b in [0, 1/4] it sweeps
/// the upper tau face edge P3P6: tau = 8b^2, phi = 12b^2 - 1/2,
/// gamma = 16b^2 - 1/2.
ExprPtr shuffle_cb(const Scalar& b);
/// Three-piece shuffle with reversed end pieces, b in [0, 1/2]:
/// tau = 1 - 4b^2, phi = 1 - 3b^2, gamma = 1 - 2b^2.
ExprPtr shuffle_db(const Scalar& b);
/// Variant of shuffle_cb with reversed middle pieces, b in [0, 1/4]:
/// phi = 1/4 and gamma = 1/2 for every b, tau = 8b^2.
ExprPtr shuffle_gb(const Scalar& b);
/// Ten-piece shuffle, 0 <= a <= b <= 1/4: tau = 16(b-a)^2 - 8b^2,
/// phi = 12(b-a)^2 - 1/2, gamma = 16(b-a)^2 - 1/2.
ExprPtr shuffle_lab(const Scalar& a, const Scalar& b);
/// Ordinal sum with the single block (a, 1-a) around the given summand;
/// a = 1/2 degenerates to M, a = 0 returns the summand itself.
ExprPtr nest_middle(const Scalar& a, ExprPtr summand);

/// Dispatcher over FamilyId. Cb/Db/Gb take one parameter; Lab and the
/// nested families take two; NestMiddle takes one plus a summand.
ExprPtr make_family(FamilyId id, const std::vector<Scalar>& params,
                    ExprPtr summand = nullptr);

struct SynthesisResult {
  ExprPtr expr;
  /// Recomputed coefficients of expr. Fields with no closed form (xi of a
  /// mixture) are oracle estimates at resolution 256, flagged inexact.
  MeasureVector achieved;
  RegionPoint target;
  /// Construction-level error: the family closed forms evaluated at the
  /// inverted parameters versus the target, in exact arithmetic where the
  /// target is rational. Zero whenever no mixing step was needed.
  Scalar residual;
  std::string recipe;
};

/// Realizes a target lying on the named face (F1..F7) by the face's
/// parametric family, inverting the closed forms in the transformed
/// variables s = (1-2a)^2, q = s b^2. Throws OutOfFace when the target is
/// not on the face.
SynthesisResult attain_face(const std::string& face, const RegionPoint& target);

/// Realizes any point of the region: endpoints of the vertical tau segment
/// come from the faces, interior points from a convex mix of the two
/// endpoint copulas with the weight solving the mixing quadratic.
SynthesisResult attain(const RegionPoint& target);

}  // namespace concordia
