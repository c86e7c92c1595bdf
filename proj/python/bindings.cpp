#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sbraid/cli.hpp"
#include "sbraid/desingular.hpp"
#include "sbraid/diamond.hpp"
#include "sbraid/experiments.hpp"
#include "sbraid/garside.hpp"
#include "sbraid/rewrite.hpp"

namespace py = pybind11;
using namespace sbraid;

namespace {

rewrite::Budget make_budget(std::size_t max_nodes, std::optional<std::size_t> max_len,
                            std::size_t slack) {
  rewrite::Budget b;
  b.max_nodes = max_nodes;
  b.max_length = max_len;
  b.length_slack = slack;
  return b;
}

std::vector<std::string> describe(const rewrite::Chain& chain, const rewrite::RelationSystem& sys) {
  std::vector<std::string> out;
  for (const auto& s : chain) out.push_back(sys.describe(s) + " @" + std::to_string(s.position + 1));
  return out;
}

py::dict verdict_dict(const rewrite::Verdict& v, const rewrite::RelationSystem* sys) {
  py::dict d;
  d["status"] = std::string(to_string(v.status));
  d["method"] = v.method;
  if (sys) {
    d["max_length"] = v.max_length;
    d["max_nodes"] = v.max_nodes;
    d["nodes"] = v.nodes;
    if (v.witness) d["witness"] = describe(*v.witness, *sys);
  }
  return d;
}

py::dict equal(const BraidWord& u, const BraidWord& v, const std::string& calc_name,
               std::size_t max_nodes, std::optional<std::size_t> max_len, std::size_t slack) {
  const auto calc = parse_calculus(calc_name);
  require_alphabet(u, calc);
  require_alphabet(v, calc);
  if (u.strands() != v.strands()) throw InputError("strand count mismatch");
  const auto budget = make_budget(max_nodes, max_len, slack);
  rewrite::Verdict verdict;
  switch (calc) {
    case Calculus::B:
      verdict.status = garside::equal_B(u, v) ? rewrite::Status::equal : rewrite::Status::distinct;
      verdict.method = "garside";
      return verdict_dict(verdict, nullptr);
    case Calculus::SB:
      verdict.status = desingular::oracle_equal_SB(u, v) ? rewrite::Status::equal
                                                         : rewrite::Status::distinct;
      verdict.method = "eta";
      return verdict_dict(verdict, nullptr);
    case Calculus::M: {
      diamond::MEquality m(u.strands(), budget);
      return verdict_dict(m.equal(u, v), &m.system());
    }
    case Calculus::SG: {
      diamond::SgEquality sg(u.strands(), budget);
      return verdict_dict(sg.equal(u, v), &sg.sg_system());
    }
  }
  return {};
}

py::object loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Singular braid words, normal forms, rewriting and desingularization";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<diamond::TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);

  py::class_<BraidWord>(m, "Word")
      .def(py::init([](const std::string& text, int strands) { return parse_word(text, strands); }),
           py::arg("text"), py::arg("strands"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters",
                             [](const BraidWord& w) {
                               std::vector<std::string> out;
                               for (auto g : w.letters()) out.push_back(g.to_string());
                               return out;
                             })
      .def_property_readonly("exponent_sum", &BraidWord::exponent_sum)
      .def_property_readonly("black_count", &BraidWord::black_count)
      .def_property_readonly("white_count", &BraidWord::white_count)
      .def("permutation",
           [](const BraidWord& w) {
             const auto perm = underlying_permutation(w);
             std::vector<int> out;
             for (auto x : perm.images()) out.push_back(x + 1);
             return out;
           })
      .def("resolve",
           [](const BraidWord& w, std::size_t p, int sign) {
             if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
             return resolve(w, p, sign > 0 ? Sign::positive : Sign::negative);
           },
           py::arg("position"), py::arg("sign"))
      .def("recolor",
           [](const BraidWord& w, std::size_t p, const std::string& color) {
             if (color != "black" && color != "white")
               throw InputError("colour must be 'black' or 'white'");
             return recolor(w, p, color == "black" ? Color::black : Color::white);
           },
           py::arg("position"), py::arg("color"))
      .def("__add__", [](const BraidWord& u, const BraidWord& v) { return concat(u, v); })
      .def("__len__", &BraidWord::size)
      .def("__eq__", [](const BraidWord& u, const BraidWord& v) { return u == v; })
      .def("__hash__", [](const BraidWord& w) {
        return py::hash(py::make_tuple(w.strands(), py::bytes(w.key())));
      })
      .def("__str__", &BraidWord::to_string)
      .def("__repr__", [](const BraidWord& w) {
        return "Word('" + w.to_string() + "', " + std::to_string(w.strands()) + ")";
      });

  m.def("normal_form", [](const BraidWord& w) { return garside::normal_form(w).to_string(); },
        py::arg("word"));
  m.def("equal_B", &garside::equal_B, py::arg("u"), py::arg("v"));
  m.def("eta", [](const BraidWord& w) { return desingular::eta(w).to_string(); }, py::arg("word"));
  m.def("eta2", [](const BraidWord& w) { return desingular::eta2(w).to_string(); },
        py::arg("word"));
  m.def("equal", &equal, py::arg("u"), py::arg("v"), py::arg("calc") = "M",
        py::arg("max_nodes") = 200000, py::arg("max_len") = py::none(), py::arg("slack") = 2);

  m.def(
      "reduce",
      [](const BraidWord& w, const std::string& strategy, std::uint64_t seed,
         std::size_t max_nodes) {
        auto s = strategy == "randomized" ? diamond::Strategy::randomized(seed)
                                          : diamond::Strategy::deterministic();
        if (strategy != "randomized" && strategy != "deterministic")
          throw InputError("unknown strategy " + strategy);
        auto trace = diamond::reduce_irreducible(w, make_budget(max_nodes, std::nullopt, 2), s);
        py::dict d;
        d["result"] = trace.result;
        d["deletions"] = trace.moves.size();
        d["truncated"] = trace.truncated;
        return d;
      },
      py::arg("word"), py::arg("strategy") = "deterministic", py::arg("seed") = 0,
      py::arg("max_nodes") = 200000);

  m.def(
      "opposite_pairs",
      [](const BraidWord& w) {
        auto search = diamond::find_opposite_pairs(w, rewrite::Budget{});
        py::list out;
        for (const auto& site : search.sites) {
          py::dict d;
          d["representative"] = site.representative;
          d["position"] = site.position;
          d["points"] = py::make_tuple(site.points.first, site.points.second);
          d["erased"] = site.erased();
          out.append(d);
        }
        return out;
      },
      py::arg("word"));

  m.def(
      "closure",
      [](const BraidWord& w, const std::string& calc, std::size_t max_len) {
        const rewrite::RelationSystem sys(parse_calculus(calc), w.strands());
        rewrite::Budget b;
        b.max_length = max_len;
        return rewrite::closure(w, sys, b).members();
      },
      py::arg("word"), py::arg("calc") = "M", py::arg("max_len"));

  m.def(
      "inject",
      [](int n, std::size_t max_len, int jobs) {
        return loads(experiments::to_json(
            experiments::injectivity_experiment(n, max_len, rewrite::Budget{}, jobs, false),
            false));
      },
      py::arg("n"), py::arg("max_len"), py::arg("jobs") = 1);
  m.def(
      "diamond",
      [](int n, std::size_t max_len, int jobs) {
        return loads(experiments::to_json(
            experiments::diamond_experiment(n, max_len, rewrite::Budget{}, jobs), false));
      },
      py::arg("n"), py::arg("max_len"), py::arg("jobs") = 1);

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int status;
        {
          py::gil_scoped_release release;
          status = cli::run(args, out, err);
        }
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"));
}
