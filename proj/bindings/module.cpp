#include <concordia/errors.hpp>
#include <concordia/json_io.hpp>
#include <concordia/measures.hpp>
#include <concordia/oracle.hpp>
#include <concordia/region.hpp>
#include <concordia/sample.hpp>
#include <concordia/section.hpp>
#include <concordia/synthesis.hpp>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace concordia;

namespace {

Scalar to_scalar(py::handle h) {
  if (py::isinstance<py::bool_>(h)) throw ArgumentError("bool is not a scalar");
  if (py::isinstance<py::int_>(h))
    return Scalar(Rational(BigInt(py::str(h).cast<std::string>())));
  if (py::isinstance<py::float_>(h)) return Scalar::from_double(h.cast<double>());
  if (py::isinstance<py::str>(h)) return Scalar::parse(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    BigInt num(py::str(h.attr("numerator")).cast<std::string>());
    BigInt den(py::str(h.attr("denominator")).cast<std::string>());
    return Scalar(std::move(num), std::move(den));
  }
  throw ArgumentError("expected int, float, Fraction or 'p/q' string");
}

py::object from_scalar(const Scalar& s) {
  if (!s.is_rational()) return py::float_(s.to_double());
  auto fraction = py::module_::import("fractions").attr("Fraction");
  const Rational& r = s.rational();
  return fraction(py::int_(py::str(numerator(r).str())),
                  py::int_(py::str(denominator(r).str())));
}

py::object from_rational(const Rational& r) { return from_scalar(Scalar(r)); }

std::vector<Scalar> to_scalars(const py::iterable& it) {
  std::vector<Scalar> out;
  for (py::handle h : it) out.push_back(to_scalar(h));
  return out;
}

struct PyExpr {
  ExprPtr e;
};

py::dict measures_dict(const MeasureVector& m) {
  py::dict exact;
  exact["rho"] = m.rho.exact;
  exact["tau"] = m.tau.exact;
  exact["phi"] = m.phi.exact;
  exact["gamma"] = m.gamma.exact;
  exact["beta"] = m.beta.exact;
  exact["xi"] = m.xi.exact;
  py::dict d;
  d["rho"] = from_scalar(m.rho.value);
  d["tau"] = from_scalar(m.tau.value);
  d["phi"] = from_scalar(m.phi.value);
  d["gamma"] = from_scalar(m.gamma.value);
  d["beta"] = from_scalar(m.beta.value);
  d["xi"] = from_scalar(m.xi.value);
  d["exact"] = exact;
  return d;
}

py::dict mc_dict(const McMeasures& m) {
  auto one = [](const McEstimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["stderr"] = e.stderr_;
    d["samples"] = e.samples;
    d["seed"] = e.seed;
    return d;
  };
  py::dict d;
  d["rho"] = one(m.rho);
  d["tau"] = one(m.tau);
  d["phi"] = one(m.phi);
  d["gamma"] = one(m.gamma);
  d["beta"] = one(m.beta);
  d["xi"] = one(m.xi);
  return d;
}

RegionPoint to_point(py::handle phi, py::handle gamma, py::handle tau) {
  return RegionPoint{to_scalar(phi), to_scalar(gamma), to_scalar(tau)};
}

FamilyId family_from_name(const std::string& name) {
  if (name == "Cb") return FamilyId::Cb;
  if (name == "Db") return FamilyId::Db;
  if (name == "Gb") return FamilyId::Gb;
  if (name == "Lab") return FamilyId::Lab;
  if (name == "Aab") return FamilyId::Aab;
  if (name == "Fab") return FamilyId::Fab;
  if (name == "Hab") return FamilyId::Hab;
  if (name == "Kab") return FamilyId::Kab;
  if (name == "Mab") return FamilyId::Mab;
  if (name == "NestMiddle") return FamilyId::NestMiddle;
  throw ArgumentError("unknown family " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact dependence coefficients of bivariate copulas";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<NotAShuffle>(m, "NotAShuffle", PyExc_ValueError);
  py::register_exception<NotComputableExactly>(m, "NotComputableExactly",
                                               PyExc_ArithmeticError);
  py::register_exception<OutOfRegion>(m, "OutOfRegion", PyExc_ValueError);
  py::register_exception<OutOfFace>(m, "OutOfFace", PyExc_ValueError);

  py::class_<PyExpr> expr_class(m, "Expr");

  auto synthesis_dict = [](const SynthesisResult& r) {
    py::dict d;
    d["expr"] = py::cast(PyExpr{r.expr});
    d["achieved"] = measures_dict(r.achieved);
    d["residual"] = r.residual.to_double();
    d["recipe"] = r.recipe;
    py::dict t;
    t["phi"] = from_scalar(r.target.phi);
    t["gamma"] = from_scalar(r.target.gamma);
    t["tau"] = from_scalar(r.target.tau);
    d["target"] = t;
    return d;
  };

  expr_class
      .def("to_json", [](const PyExpr& e) { return expr_to_json(*e.e).dump(); })
      .def("__repr__",
           [](const PyExpr& e) { return "Expr(" + expr_to_json(*e.e).dump() + ")"; })
      .def("is_rational", [](const PyExpr& e) { return e.e->is_rational(); });

  m.def("m_copula", [] { return PyExpr{CopulaExpr::m()}; });
  m.def("w_copula", [] { return PyExpr{CopulaExpr::w()}; });
  m.def("pi_copula", [] { return PyExpr{CopulaExpr::pi()}; });
  m.def(
      "shuffle",
      [](const py::iterable& splits, const std::vector<int>& perm,
         const std::vector<int>& flips) {
        return PyExpr{CopulaExpr::shuffle(ShuffleOfM(to_scalars(splits), perm, flips))};
      },
      py::arg("splits"), py::arg("perm"), py::arg("flips"));
  m.def(
      "ordinal",
      [](const py::iterable& blocks) {
        std::vector<OrdinalBlock> bs;
        for (py::handle b : blocks) {
          auto t = b.cast<py::tuple>();
          bs.push_back(
              OrdinalBlock{to_scalar(t[0]), to_scalar(t[1]), t[2].cast<PyExpr>().e});
        }
        return PyExpr{CopulaExpr::ordinal(std::move(bs))};
      },
      py::arg("blocks"), "blocks: iterable of (a, b, expr)");
  m.def(
      "reflect",
      [](const PyExpr& e, int axis) { return PyExpr{CopulaExpr::reflect(axis, e.e)}; },
      py::arg("expr"), py::arg("axis") = 2);
  m.def(
      "convex",
      [](const py::iterable& parts) {
        std::vector<ConvexPart> ps;
        for (py::handle p : parts) {
          auto t = p.cast<py::tuple>();
          ps.push_back(ConvexPart{to_scalar(t[0]), t[1].cast<PyExpr>().e});
        }
        return PyExpr{CopulaExpr::convex(std::move(ps))};
      },
      py::arg("parts"), "parts: iterable of (weight, expr)");
  m.def("parse", [](const std::string& text) { return PyExpr{parse_expr(text)}; });

  m.def(
      "eval",
      [](const PyExpr& e, py::handle u, py::handle v) {
        return from_scalar(eval(*e.e, to_scalar(u), to_scalar(v)));
      },
      py::arg("expr"), py::arg("u"), py::arg("v"));
  m.def(
      "rect_volume",
      [](const PyExpr& e, py::handle u1, py::handle u2, py::handle v1, py::handle v2) {
        return from_scalar(
            rect_volume(*e.e, to_scalar(u1), to_scalar(u2), to_scalar(v1), to_scalar(v2)));
      },
      py::arg("expr"), py::arg("u1"), py::arg("u2"), py::arg("v1"), py::arg("v2"));
  m.def(
      "h_map",
      [](const PyExpr& e, py::handle u) {
        return from_scalar(as_shuffle(*e.e).h(to_scalar(u)));
      },
      py::arg("expr"), py::arg("u"));
  m.def(
      "diagonal",
      [](const PyExpr& e) {
        PiecewiseLinear pl = diagonal(*e.e);
        py::list out;
        for (size_t i = 0; i < pl.breakpoints().size(); ++i)
          out.append(py::make_tuple(from_scalar(pl.breakpoints()[i]),
                                    from_scalar(pl.values()[i])));
        return out;
      },
      py::arg("expr"));
  m.def(
      "opposite_diagonal",
      [](const PyExpr& e) {
        PiecewiseLinear pl = opposite_diagonal(*e.e);
        py::list out;
        for (size_t i = 0; i < pl.breakpoints().size(); ++i)
          out.append(py::make_tuple(from_scalar(pl.breakpoints()[i]),
                                    from_scalar(pl.values()[i])));
        return out;
      },
      py::arg("expr"));

  m.def(
      "sample",
      [](const PyExpr& e, std::uint64_t seed, long long count) {
        auto pts = sample(*e.e, seed, count);
        py::array_t<double> arr({static_cast<py::ssize_t>(pts.size()), py::ssize_t(2)});
        auto view = arr.mutable_unchecked<2>();
        for (py::ssize_t i = 0; i < view.shape(0); ++i) {
          view(i, 0) = pts[i].first;
          view(i, 1) = pts[i].second;
        }
        return arr;
      },
      py::arg("expr"), py::arg("seed"), py::arg("count"));

  m.def(
      "all_measures",
      [](const PyExpr& e, int fallback_n) {
        return measures_dict(all_measures(*e.e, fallback_n));
      },
      py::arg("expr"), py::arg("fallback_n") = 1024);
  m.def("rho", [](const PyExpr& e) { return from_scalar(rho(*e.e)); });
  m.def("tau", [](const PyExpr& e) { return from_scalar(tau(*e.e)); });
  m.def("phi", [](const PyExpr& e) { return from_scalar(phi(*e.e)); });
  m.def("gamma", [](const PyExpr& e) { return from_scalar(gamma(*e.e)); });
  m.def("beta", [](const PyExpr& e) { return from_scalar(beta(*e.e)); });
  m.def("xi", [](const PyExpr& e) { return from_scalar(xi(*e.e)); });
  m.def("concordance_q", [](const PyExpr& a, const PyExpr& b) {
    return from_scalar(concordance_q(*a.e, *b.e));
  });

  m.def(
      "checkerboard",
      [](const PyExpr& e, int n) {
        Checkerboard cb = checkerboard_of(*e.e, n);
        py::array_t<double> arr({py::ssize_t(cb.n), py::ssize_t(cb.n)});
        auto view = arr.mutable_unchecked<2>();
        for (int i = 0; i < cb.n; ++i)
          for (int j = 0; j < cb.n; ++j) view(i, j) = cb.at(i, j);
        return arr;
      },
      py::arg("expr"), py::arg("n"));
  m.def(
      "cb_measures",
      [](const PyExpr& e, int n) {
        return measures_dict(cb_measures(checkerboard_of(*e.e, n)));
      },
      py::arg("expr"), py::arg("n"));
  m.def(
      "mc_measures",
      [](const PyExpr& e, long long samples, std::uint64_t seed) {
        return mc_dict(mc_measures(*e.e, samples, seed));
      },
      py::arg("expr"), py::arg("samples"), py::arg("seed"));

  m.def(
      "region_contains",
      [](py::handle phi_, py::handle gamma_, py::handle tau_, py::object tol) {
        RegionPoint p = to_point(phi_, gamma_, tau_);
        ContainsResult c = tol.is_none() ? contains(p) : contains(p, to_scalar(tol));
        py::dict d;
        d["status"] = c.location == Location::Inside     ? "inside"
                      : c.location == Location::Boundary ? "boundary"
                                                         : "outside";
        d["active"] = c.active;
        d["violated"] = c.violated;
        return d;
      },
      py::arg("phi"), py::arg("gamma"), py::arg("tau"), py::arg("tol") = py::none());
  m.def(
      "region_classify",
      [](py::handle phi_, py::handle gamma_, py::handle tau_, py::object tol) {
        RegionPoint p = to_point(phi_, gamma_, tau_);
        Classification c = tol.is_none() ? classify(p) : classify(p, to_scalar(tol));
        py::dict d;
        d["faces"] = c.faces;
        d["edges"] = c.edges;
        d["vertices"] = c.vertices;
        d["most_specific"] = c.most_specific;
        return d;
      },
      py::arg("phi"), py::arg("gamma"), py::arg("tau"), py::arg("tol") = py::none());
  m.def(
      "tau_bounds",
      [](py::handle phi_, py::handle gamma_) {
        auto [lo, hi] = tau_bounds(to_scalar(phi_), to_scalar(gamma_));
        return py::make_tuple(from_scalar(lo), from_scalar(hi));
      },
      py::arg("phi"), py::arg("gamma"));
  m.def(
      "involution_a",
      [](py::handle phi_, py::handle gamma_, py::handle tau_) {
        RegionPoint q = involution_A(to_point(phi_, gamma_, tau_));
        return py::make_tuple(from_scalar(q.phi), from_scalar(q.gamma),
                              from_scalar(q.tau));
      },
      py::arg("phi"), py::arg("gamma"), py::arg("tau"));
  m.def("region_volume", [] { return from_rational(region_volume()); });
  m.def("projection_area", [](const std::string& plane) {
    if (plane == "phi_gamma") return from_rational(projection_area(Plane::PhiGamma));
    if (plane == "phi_tau") return from_rational(projection_area(Plane::PhiTau));
    if (plane == "gamma_tau") return from_rational(projection_area(Plane::GammaTau));
    throw ArgumentError("plane must be phi_gamma, phi_tau or gamma_tau");
  });
  m.def("mean_tau_spread", [] { return from_rational(mean_tau_spread()); });
  m.def("box_volume_fraction", [] { return from_rational(box_volume_fraction()); });
  m.def("region_mesh", [] {
    return py::module_::import("json").attr("loads")(region_mesh_json().dump());
  });

  m.def(
      "make_family",
      [](const std::string& name, const py::iterable& params, py::object summand) {
        ExprPtr s = summand.is_none() ? nullptr : summand.cast<PyExpr>().e;
        return PyExpr{make_family(family_from_name(name), to_scalars(params), s)};
      },
      py::arg("name"), py::arg("params"), py::arg("summand") = py::none());
  m.def(
      "attain",
      [synthesis_dict](py::handle phi_, py::handle gamma_, py::handle tau_) {
        return synthesis_dict(attain(to_point(phi_, gamma_, tau_)));
      },
      py::arg("phi"), py::arg("gamma"), py::arg("tau"));
  m.def(
      "attain_face",
      [synthesis_dict](const std::string& face, py::handle phi_, py::handle gamma_,
                       py::handle tau_) {
        return synthesis_dict(attain_face(face, to_point(phi_, gamma_, tau_)));
      },
      py::arg("face"), py::arg("phi"), py::arg("gamma"), py::arg("tau"));
}
