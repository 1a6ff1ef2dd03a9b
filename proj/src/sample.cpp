#include "concordia/sample.hpp"

#include "concordia/errors.hpp"

namespace concordia {

namespace {
constexpr std::uint64_t kDrawStride = 64;
}

double conditional_v(const CopulaExpr& e, double u, CounterRng& rng) {
  switch (e.kind()) {
    case CopulaExpr::Kind::M:
      return u;
    case CopulaExpr::Kind::W:
      return 1.0 - u;
    case CopulaExpr::Kind::Pi:
      return rng.next_double();
    case CopulaExpr::Kind::Shuffle:
      return e.shuffle_data().h(u);
    case CopulaExpr::Kind::Ordinal: {
      for (const OrdinalBlock& b : e.blocks()) {
        double a = b.a.to_double(), bb = b.b.to_double();
        if (u > a && u < bb) {
          double w = bb - a;
          return a + w * conditional_v(*b.summand, (u - a) / w, rng);
        }
      }
      return u;
    }
    case CopulaExpr::Kind::Reflect:
      if (e.reflect_axis() == 1) return conditional_v(*e.reflect_of(), 1.0 - u, rng);
      return 1.0 - conditional_v(*e.reflect_of(), u, rng);
    case CopulaExpr::Kind::Convex: {
      double pick = rng.next_double();
      double acc = 0;
      const auto& parts = e.parts();
      for (const ConvexPart& p : parts) {
        acc += p.weight.to_double();
        if (pick < acc) return conditional_v(*p.part, u, rng);
      }
      return conditional_v(*parts.back().part, u, rng);
    }
  }
  throw ArgumentError("unreachable expression kind");
}

std::vector<std::pair<double, double>> sample(const CopulaExpr& e, std::uint64_t seed,
                                              long long count) {
  if (count < 0) throw ArgumentError("sample count must be nonnegative");
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<size_t>(count));
  for (long long i = 0; i < count; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i) * kDrawStride);
    double u = rng.next_double();
    double v = conditional_v(e, u, rng);
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace concordia
