#include "concordia/json_io.hpp"

#include "concordia/errors.hpp"

#include <sstream>

namespace concordia {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.str();
  return s.to_double();
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
  if (j.is_number_unsigned()) return Scalar(Rational(j.get<unsigned long long>()));
  if (j.is_number_float()) return Scalar::from_double(j.get<double>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw ValidationError("expected a number or a \"p/q\" string");
}

json expr_to_json(const CopulaExpr& e) {
  json j;
  switch (e.kind()) {
    case CopulaExpr::Kind::M:
      j["type"] = "M";
      break;
    case CopulaExpr::Kind::W:
      j["type"] = "W";
      break;
    case CopulaExpr::Kind::Pi:
      j["type"] = "Pi";
      break;
    case CopulaExpr::Kind::Shuffle: {
      const ShuffleOfM& s = e.shuffle_data();
      j["type"] = "shuffle";
      j["splits"] = json::array();
      for (const Scalar& v : s.splits()) j["splits"].push_back(scalar_to_json(v));
      j["perm"] = s.perm();
      j["flips"] = s.flips();
      break;
    }
    case CopulaExpr::Kind::Ordinal: {
      j["type"] = "ordinal";
      j["blocks"] = json::array();
      for (const OrdinalBlock& b : e.blocks())
        j["blocks"].push_back({{"a", scalar_to_json(b.a)},
                               {"b", scalar_to_json(b.b)},
                               {"summand", expr_to_json(*b.summand)}});
      break;
    }
    case CopulaExpr::Kind::Reflect:
      j["type"] = "reflect";
      j["axis"] = e.reflect_axis();
      j["of"] = expr_to_json(*e.reflect_of());
      break;
    case CopulaExpr::Kind::Convex: {
      j["type"] = "convex";
      j["parts"] = json::array();
      for (const ConvexPart& p : e.parts())
        j["parts"].push_back(
            {{"w", scalar_to_json(p.weight)}, {"of", expr_to_json(*p.part)}});
      break;
    }
  }
  return j;
}

ExprPtr expr_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw ValidationError("expression node needs a \"type\" tag");
  const std::string type = j["type"].get<std::string>();
  if (type == "M") return CopulaExpr::m();
  if (type == "W") return CopulaExpr::w();
  if (type == "Pi") return CopulaExpr::pi();
  if (type == "shuffle") {
    std::vector<Scalar> splits;
    for (const json& v : j.at("splits")) splits.push_back(scalar_from_json(v));
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    std::vector<int> flips = j.at("flips").get<std::vector<int>>();
    return CopulaExpr::shuffle(ShuffleOfM(std::move(splits), std::move(perm), std::move(flips)));
  }
  if (type == "ordinal") {
    std::vector<OrdinalBlock> blocks;
    for (const json& b : j.at("blocks"))
      blocks.push_back(OrdinalBlock{scalar_from_json(b.at("a")),
                                    scalar_from_json(b.at("b")),
                                    expr_from_json(b.at("summand"))});
    return CopulaExpr::ordinal(std::move(blocks));
  }
  if (type == "reflect")
    return CopulaExpr::reflect(j.at("axis").get<int>(), expr_from_json(j.at("of")));
  if (type == "convex") {
    std::vector<ConvexPart> parts;
    for (const json& p : j.at("parts"))
      parts.push_back(ConvexPart{scalar_from_json(p.at("w")), expr_from_json(p.at("of"))});
    return CopulaExpr::convex(std::move(parts));
  }
  throw ValidationError("unknown expression type \"" + type + "\"");
}

ExprPtr parse_expr(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    size_t byte = err.byte;
    int line = 1, col = 1;
    for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string("JSON syntax error: ") + err.what(), line, col);
  }
  return expr_from_json(j);
}

namespace {

json measure_json(const MeasureValue& m) { return scalar_to_json(m.value); }

}  // namespace

json measures_to_json(const MeasureVector& m) {
  return json{{"rho", measure_json(m.rho)},     {"tau", measure_json(m.tau)},
              {"phi", measure_json(m.phi)},     {"gamma", measure_json(m.gamma)},
              {"beta", measure_json(m.beta)},   {"xi", measure_json(m.xi)},
              {"exact",
               {{"rho", m.rho.exact},
                {"tau", m.tau.exact},
                {"phi", m.phi.exact},
                {"gamma", m.gamma.exact},
                {"beta", m.beta.exact},
                {"xi", m.xi.exact}}}};
}

namespace {

json mc_estimate_json(const McEstimate& e) {
  return json{{"value", e.value},
              {"stderr", e.stderr_},
              {"samples", e.samples},
              {"seed", e.seed}};
}

}  // namespace

json mc_to_json(const McMeasures& m) {
  return json{{"rho", mc_estimate_json(m.rho)},   {"tau", mc_estimate_json(m.tau)},
              {"phi", mc_estimate_json(m.phi)},   {"gamma", mc_estimate_json(m.gamma)},
              {"beta", mc_estimate_json(m.beta)}, {"xi", mc_estimate_json(m.xi)}};
}

json point_to_json(const RegionPoint& p) {
  return json{{"phi", scalar_to_json(p.phi)},
              {"gamma", scalar_to_json(p.gamma)},
              {"tau", scalar_to_json(p.tau)}};
}

json synthesis_to_json(const SynthesisResult& r) {
  return json{{"target", point_to_json(r.target)},
              {"achieved", measures_to_json(r.achieved)},
              {"residual", r.residual.to_double()},
              {"recipe", r.recipe},
              {"expr", expr_to_json(*r.expr)}};
}

json region_mesh_json() {
  const Polyhedron& p = polyhedron();
  json verts = json::array();
  for (const RegionVertex& v : p.vertices)
    verts.push_back({{"label", v.label},
                     {"phi", Scalar(v.phi).str()},
                     {"gamma", Scalar(v.gamma).str()},
                     {"tau", Scalar(v.tau).str()}});
  json faces = json::array();
  for (const RegionFace& f : p.faces)
    faces.push_back({{"label", f.label}, {"cycle", f.cycle}});
  return json{{"vertices", verts}, {"faces", faces}};
}

std::string region_mesh_obj() {
  const Polyhedron& p = polyhedron();
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "# attainable region of (phi, gamma, tau)\n";
  std::vector<std::string> labels;
  for (const RegionVertex& v : p.vertices) {
    labels.push_back(v.label);
    os << "v " << v.phi.convert_to<double>() << " " << v.gamma.convert_to<double>()
       << " " << v.tau.convert_to<double>() << "\n";
  }
  auto index_of = [&](const std::string& label) {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return static_cast<int>(i) + 1;
    throw ArgumentError("unknown vertex " + label);
  };
  for (const RegionFace& f : p.faces)
    for (size_t i = 1; i + 1 < f.cycle.size(); ++i)
      os << "f " << index_of(f.cycle[0]) << " " << index_of(f.cycle[i]) << " "
         << index_of(f.cycle[i + 1]) << "\n";
  return os.str();
}

std::string checkerboard_csv(const Checkerboard& cb) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "n=" << cb.n << "\n";
  os.precision(17);
  for (int i = 0; i < cb.n; ++i) {
    for (int j = 0; j < cb.n; ++j) {
      if (j) os << ",";
      os << cb.at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace concordia
