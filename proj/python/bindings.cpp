#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "ncpart/census.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/paths.hpp"
#include "ncpart/symmetry.hpp"
#include "ncpart/trees.hpp"
#include "ncpart/verify.hpp"

namespace py = pybind11;
using namespace ncpart;

namespace {

py::int_ to_py(const Natural& x) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(x.to_string().c_str(), nullptr, 10));
}

Chirality chirality_from(const std::string& name) {
  if (name == "rotation") return Chirality::kRotationOnly;
  if (name == "rotation-reflection") return Chirality::kRotationAndReflection;
  throw std::invalid_argument("chirality must be 'rotation' or "
                              "'rotation-reflection'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Noncrossing partitions under rotation and reflection";

  py::class_<SetPartition>(m, "SetPartition")
      .def(py::init([](const std::string& text) { return parse_partition(text); }),
           py::arg("text"))
      .def_static("from_blocks", &SetPartition::from_blocks, py::arg("n"),
                  py::arg("blocks"))
      .def_property_readonly("n", &SetPartition::size)
      .def_property_readonly("blocks", &SetPartition::block_elements)
      .def("__len__", &SetPartition::block_count)
      .def("__str__", &format_partition)
      .def("__repr__",
           [](const SetPartition& p) {
             return "SetPartition('" + format_partition(p) + "')";
           })
      .def("__hash__",
           [](const SetPartition& p) {
             return py::hash(py::str(format_partition(p)));
           })
      .def(py::self == py::self)  // NOLINT
      .def(py::self < py::self);  // NOLINT
  py::implicitly_convertible<std::string, SetPartition>();

  py::class_<PartitionStats>(m, "PartitionStats")
      .def_readonly("singletons", &PartitionStats::singletons)
      .def_readonly("adjacencies", &PartitionStats::adjacencies)
      .def_readonly("block_count", &PartitionStats::block_count)
      .def_readonly("maximal_block_count", &PartitionStats::maximal_block_count);

  m.def("parse_partition", &parse_partition, py::arg("text"),
        py::arg("expected_n") = py::none());
  m.def("format_partition", &format_partition);
  m.def("is_noncrossing", &is_noncrossing);
  m.def("stats", &stats);
  m.def("enumerate_nc", &enumerate_nc, py::arg("n"));
  m.def("enumerate_all", &enumerate_all, py::arg("n"));

  m.def("rotate", &rotate, py::arg("p"), py::arg("k") = 1);
  m.def("complement", &complement);
  m.def("kreweras", &kreweras);
  m.def("transpose", &transpose);
  m.def("is_self_complementary", &is_self_complementary);
  m.def("complement_order", &complement_order);
  m.def("rotation_orbit", [](const SetPartition& p) {
    const RotationClass c = rotation_orbit(p);
    py::dict d;
    d["representative"] = c.representative;
    d["orbit_size"] = c.orbit_size;
    d["achiral"] = c.achiral;
    d["sc_members"] = c.sc_members;
    d["complement_order_parity"] = std::string(to_string(c.complement_order_parity));
    return d;
  });
  m.def("verify_operator_identities", [](int n) {
    py::dict d;
    for (const auto& c : verify_operator_identities(n).checks) {
      d[py::str(c.name)] = c.passed();
    }
    return d;
  });

  m.def("nc_to_dyck",
        [](const SetPartition& p) { return format_path(nc_to_dyck(p)); });
  m.def("dyck_to_nc",
        [](const std::string& path) { return dyck_to_nc(parse_path(path)); });
  m.def("sc_to_balanced",
        [](const SetPartition& p) { return format_path(sc_to_balanced(p)); });
  m.def("balanced_to_sc", [](const std::string& path, int m) {
    return balanced_to_sc(parse_path(path), m);
  });

  m.def("nc_to_tree",
        [](const SetPartition& p) { return format_tree(nc_to_tree(p)); });
  m.def("tree_to_nc",
        [](const std::string& tree) { return tree_to_nc(parse_tree(tree)); });
  m.def(
      "canonical_code",
      [](const std::string& tree, const std::string& chirality) {
        return canonical_code(parse_tree(tree), chirality_from(chirality)).code;
      },
      py::arg("tree"), py::arg("chirality") = "rotation");
  m.def("enumerate_tree_classes", [](int n) {
    std::vector<std::string> out;
    for (const auto& c : enumerate_tree_classes(n)) out.push_back(c.code);
    return out;
  });

  m.def("catalan", [](long long m) { return to_py(catalan(m)); });
  m.def("bell", [](int n) { return to_py(bell(n)); });
  m.def("binom", [](int n, int k) { return to_py(binom(n, k)); });
  m.def("ncpp", [](int n) { return to_py(ncpp_formula(n)); });
  m.def("dihedral", [](int n) { return to_py(dihedral_formula(n)); });
  m.def("chiral_pairs", [](int n) { return to_py(chiral_pairs_formula(n)); });
  m.def("fpt", [](int n) { return to_py(fpt_formula(n)); });
  m.def("bicolored_trees",
        [](int n) { return to_py(bicolored_tree_formula(n)); });
  m.def("ncpp_brute", [](int n) { return ncpp_brute(n); });
  m.def("sc_nc_brute", [](int n) { return sc_nc_brute(n); });
  m.def("achiral_classes_brute", [](int n) { return achiral_classes_brute(n); });
  m.def("conjecture_check", [](int n) {
    const ConjectureResult r = conjecture_check(n);
    return py::make_tuple(r.sc_partitions, r.sc_rotation_classes, r.equal);
  });
  m.def("table_csv",
        [](int n_max) { return table_csv(table(n_max)); }, py::arg("n_max") = 22);
  m.def("run_suite", [](const std::string& suite, int n) {
    return run_suite(suite, n).all_passed();
  });
}
