#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ison/congruence.hpp"
#include "ison/equations.hpp"
#include "ison/errors.hpp"
#include "ison/orders.hpp"
#include "ison/verify.hpp"
#include "ison/wordlang.hpp"
#include "ison/zerotop.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_ison, m) {
  m.doc() = "exact arithmetic in the monoid of cofinite partial isometries";

  auto base = py::register_exception<ison::Error>(m, "IsonError");
  py::register_exception<ison::UnderflowError>(m, "UnderflowError",
                                               base.ptr());
  py::register_exception<ison::InvalidParameters>(m, "InvalidParameters",
                                                  base.ptr());
  py::register_exception<ison::BoundViolation>(m, "BoundViolation",
                                               base.ptr());
  py::register_exception<ison::SyntaxError>(m, "WordSyntaxError", base.ptr());
  py::register_exception<ison::ConstraintError>(m, "ConstraintError",
                                                base.ptr());

  py::class_<ison::CofiniteSet>(m, "CofiniteSet")
      .def(py::init<>())
      .def(py::init<std::vector<int>, int>(), py::arg("finite_part"),
           py::arg("tail_start"))
      .def_static("nat", &ison::CofiniteSet::nat)
      .def("member", &ison::CofiniteSet::member, py::arg("n"))
      .def("min_member", &ison::CofiniteSet::min_member)
      .def("subset_of", &ison::CofiniteSet::subset_of, py::arg("other"))
      .def("intersect", &ison::CofiniteSet::intersect, py::arg("other"))
      .def("translate", &ison::CofiniteSet::translate, py::arg("c"))
      .def("complement_list", &ison::CofiniteSet::complement_list)
      .def_property_readonly("finite_part", &ison::CofiniteSet::finite_part)
      .def_property_readonly("tail_start", &ison::CofiniteSet::tail_start)
      .def("__str__", &ison::CofiniteSet::str)
      .def("__repr__", &ison::CofiniteSet::str)
      .def("__hash__",
           [](const ison::CofiniteSet& s) { return py::hash(py::str(s.str())); })
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::class_<ison::CanonicalForm>(m, "CanonicalForm")
      .def(py::init<>())
      .def_readwrite("A", &ison::CanonicalForm::A)
      .def_readwrite("n0", &ison::CanonicalForm::n0)
      .def_readwrite("i", &ison::CanonicalForm::i)
      .def_readwrite("j", &ison::CanonicalForm::j)
      .def("__str__", &ison::CanonicalForm::str)
      .def("__repr__", &ison::CanonicalForm::str)
      .def(py::self == py::self);

  py::class_<ison::Isometry>(m, "Isometry")
      .def(py::init<>())
      .def(py::init<ison::CofiniteSet, int>(), py::arg("dom"),
           py::arg("shift"))
      .def_static("identity", &ison::Isometry::identity)
      .def_static("alpha", &ison::Isometry::alpha)
      .def_static("beta", &ison::Isometry::beta)
      .def_static("epsilon", &ison::Isometry::epsilon, py::arg("A"),
                  py::arg("n0"), py::arg("i"))
      .def_property_readonly("dom", &ison::Isometry::dom)
      .def_property_readonly("ran", &ison::Isometry::ran)
      .def_property_readonly("shift", &ison::Isometry::shift)
      .def("eval", &ison::Isometry::eval, py::arg("n"))
      .def("idempotent", &ison::Isometry::idempotent)
      .def("noise", &ison::Isometry::noise)
      .def("canonical", &ison::Isometry::canonical)
      .def("invert", &ison::Isometry::invert)
      .def("__str__", &ison::Isometry::str)
      .def("__repr__", &ison::Isometry::str)
      .def("__hash__",
           [](const ison::Isometry& g) { return py::hash(py::str(g.str())); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self * py::self);

  m.def("compose", &ison::compose, py::arg("g"), py::arg("d"),
        "apply g, then d");
  m.def("pow", &ison::pow, py::arg("g"), py::arg("k"));
  m.def("bicyclic", &ison::bicyclic, py::arg("i"), py::arg("j"),
        "b^i a^j, the pure shift by j - i on [i+1)");
  m.def("rebuild", &ison::rebuild, py::arg("cf"));

  py::class_<ison::Coset>(m, "Coset")
      .def_readonly("A", &ison::Coset::A)
      .def_readonly("n0", &ison::Coset::n0)
      .def("__str__", &ison::Coset::str)
      .def("__repr__", &ison::Coset::str)
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::enum_<ison::Gen>(m, "Gen")
      .value("alpha", ison::Gen::alpha)
      .value("beta", ison::Gen::beta);
  py::enum_<ison::Side>(m, "Side")
      .value("left", ison::Side::left)
      .value("right", ison::Side::right);

  py::class_<ison::EpsCommutation>(m, "EpsCommutation")
      .def_readonly("eps", &ison::EpsCommutation::eps)
      .def_readonly("word", &ison::EpsCommutation::word)
      .def_readonly("eps_side", &ison::EpsCommutation::eps_side);

  py::class_<ison::ChainCursor>(m, "ChainCursor")
      .def(py::init<ison::Isometry>(), py::arg("base"))
      .def_property_readonly("base", &ison::ChainCursor::base)
      .def_property_readonly("index", &ison::ChainCursor::index)
      .def("current", &ison::ChainCursor::current)
      .def("advance", &ison::ChainCursor::advance)
      .def("take", &ison::ChainCursor::take, py::arg("count"));

  m.def("natural_leq", &ison::natural_leq, py::arg("s"), py::arg("t"));
  m.def("ll_leq", &ison::ll_leq, py::arg("g"), py::arg("d"));
  m.def("conjugate_down", &ison::conjugate_down, py::arg("g"), py::arg("k"));
  m.def("conjugate_up", &ison::conjugate_up, py::arg("g"), py::arg("k"));
  m.def("coset_of", &ison::coset_of, py::arg("g"));
  m.def("commute_eps", &ison::commute_eps, py::arg("word_side"),
        py::arg("gen"), py::arg("power"), py::arg("A"), py::arg("n0"),
        py::arg("i"));

  py::class_<ison::MgWitness>(m, "MgWitness")
      .def_readonly("related", &ison::MgWitness::related)
      .def_readonly("witness", &ison::MgWitness::witness);

  m.def("mg_image", &ison::mg_image, py::arg("g"));
  m.def("mg_related", &ison::mg_related, py::arg("g"), py::arg("d"));
  m.def("simple_witness", &ison::simple_witness, py::arg("g"), py::arg("d"),
        "a pair (u, v) with u * g * v = d");
  m.def("green_R", &ison::green_R, py::arg("g"), py::arg("d"));
  m.def("green_L", &ison::green_L, py::arg("g"), py::arg("d"));
  m.def("green_H", &ison::green_H, py::arg("g"), py::arg("d"));
  m.def("green_D", &ison::green_D, py::arg("g"), py::arg("d"));

  py::class_<ison::EnumBounds>(m, "EnumBounds")
      .def(py::init<>())
      .def(py::init([](int max_complement, int max_offset) {
             return ison::EnumBounds{max_complement, max_offset};
           }),
           py::arg("max_complement") = 3, py::arg("max_offset") = 4)
      .def_readwrite("max_complement", &ison::EnumBounds::max_complement)
      .def_readwrite("max_offset", &ison::EnumBounds::max_offset)
      .def(py::self == py::self);

  m.def("enumerate_elements", &ison::enumerate_elements, py::arg("bounds"));
  m.def("solve_left", &ison::solve_left, py::arg("a"), py::arg("b"),
        "all x with a * x = b");
  m.def("solve_right", &ison::solve_right, py::arg("c"), py::arg("d"),
        "all x with x * c = d");

  py::class_<ison::ZElem>(m, "ZElem")
      .def(py::init<>())
      .def(py::init<ison::Isometry>(), py::arg("g"))
      .def_static("zero", &ison::ZElem::zero)
      .def("is_zero", &ison::ZElem::is_zero)
      .def("elem",
           [](const ison::ZElem& x) {
             if (x.is_zero()) {
               throw ison::InvalidParameters("zero has no underlying element");
             }
             return x.elem();
           })
      .def("__str__", &ison::ZElem::str)
      .def("__repr__", &ison::ZElem::str)
      .def("__hash__",
           [](const ison::ZElem& x) { return py::hash(py::str(x.str())); })
      .def(py::self == py::self)
      .def(py::self * py::self);

  m.def("zmul", &ison::zmul, py::arg("x"), py::arg("y"));

  py::class_<ison::CofiniteNbhd>(m, "CofiniteNbhd")
      .def(py::init<>())
      .def(py::init<std::vector<ison::Isometry>>(), py::arg("excluded"))
      .def_readonly("excluded", &ison::CofiniteNbhd::excluded)
      .def("contains", &ison::CofiniteNbhd::contains, py::arg("x"));

  m.def("shrink_neighborhood", &ison::shrink_neighborhood, py::arg("g"),
        py::arg("u"));
  m.def("products_stay_inside", &ison::products_stay_inside, py::arg("g"),
        py::arg("v"), py::arg("u"), py::arg("bounds"));
  m.def("check_separate_continuity", &ison::check_separate_continuity,
        py::arg("g"), py::arg("u"), py::arg("bounds"));
  m.def("symmetric_difference_check", &ison::symmetric_difference_check,
        py::arg("u"), py::arg("v"));

  m.def("eval_text", &ison::eval_text, py::arg("text"),
        "parse and evaluate a word");
  m.def("format", py::overload_cast<const ison::ZElem&>(&ison::format),
        py::arg("x"));
  m.def("format", py::overload_cast<const ison::Isometry&>(&ison::format),
        py::arg("g"));

  auto v = m.def_submodule("verify", "lemma-indexed property checks");
  py::class_<ison::verify::Options>(v, "Options")
      .def(py::init<>())
      .def_readwrite("bounds", &ison::verify::Options::bounds)
      .def_readwrite("max_i", &ison::verify::Options::max_i)
      .def_readwrite("samples", &ison::verify::Options::samples)
      .def_readwrite("seed", &ison::verify::Options::seed);
  py::class_<ison::verify::CheckResult>(v, "CheckResult")
      .def_readonly("id", &ison::verify::CheckResult::id)
      .def_readonly("title", &ison::verify::CheckResult::title)
      .def_readonly("passed", &ison::verify::CheckResult::passed)
      .def_readonly("checks", &ison::verify::CheckResult::checks)
      .def_readonly("detail", &ison::verify::CheckResult::detail);
  v.def("check_ids", &ison::verify::check_ids);
  v.def("run_check", &ison::verify::run_check, py::arg("id"),
        py::arg("options") = ison::verify::Options{});
  v.def("run_all", &ison::verify::run_all,
        py::arg("options") = ison::verify::Options{});
}
