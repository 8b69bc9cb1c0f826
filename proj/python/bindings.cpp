#include "ncfusion/algebra.hpp"
#include "ncfusion/decorated.hpp"
#include "ncfusion/errors.hpp"
#include "ncfusion/fusion.hpp"
#include "ncfusion/io.hpp"
#include "ncfusion/partition.hpp"
#include "ncfusion/tensor_map.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ncfusion;

namespace {

py::int_ to_py(const BigInt &v) { return py::int_(py::str(v.str())); }

Partition partition_from_tokens(int upper, int lower, const std::vector<std::vector<std::string>> &blocks) {
    std::vector<std::vector<PointRef>> pts;
    for (const auto &b : blocks) {
        pts.emplace_back();
        for (const auto &tok : b)
            pts.back().push_back(parse_point(tok));
    }
    return Partition::from_blocks(upper, lower, pts);
}

std::vector<std::vector<std::string>> partition_tokens(const Partition &p) {
    std::vector<std::vector<std::string>> out;
    for (const auto &b : p.blocks()) {
        out.emplace_back();
        for (const auto &pt : b)
            out.back().push_back(to_string(pt));
    }
    return out;
}

Word word_arg(const Group &g, const py::object &w) {
    if (py::isinstance<py::str>(w))
        return parse_word(g, w.cast<std::string>());
    Word out;
    for (const auto &tok : w)
        out.push_back(g.parse_element(py::str(tok).cast<std::string>()));
    return out;
}

std::vector<std::string> word_names(const Group &g, const Word &w) {
    std::vector<std::string> out;
    for (const auto &a : w)
        out.push_back(g.name(a));
    return out;
}

py::list combination_list(const Group &g, const RepCombination &c) {
    py::list out;
    for (const auto &[w, m] : c.terms())
        out.append(py::make_tuple(word_names(g, w), m));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Noncrossing partitions, T_p maps and free wreath product fusion rules";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", validation.ptr());
    py::register_exception<FileError>(m, "FileError", validation.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

    py::class_<Partition>(m, "Partition")
        .def(py::init(&partition_from_tokens), py::arg("upper"), py::arg("lower"), py::arg("blocks"),
             "Blocks as lists of point tokens such as 'u1' and 'l2'.")
        .def_static("identity", &Partition::identity)
        .def_static("one_block", &Partition::one_block)
        .def_static("singletons", &Partition::singletons)
        .def_property_readonly("upper", &Partition::upper)
        .def_property_readonly("lower", &Partition::lower)
        .def_property_readonly("block_count", &Partition::block_count)
        .def("blocks", &partition_tokens)
        .def("to_json", [](const Partition &p) { return partition_to_json(p).dump(); })
        .def_static("from_json", [](const std::string &text) {
            return partition_from_json(parse_json_text(text, "partition"));
        })
        .def("__eq__", [](const Partition &a, const Partition &b) { return a == b; })
        .def("__hash__", [](const Partition &p) { return std::hash<Partition>{}(p); })
        .def("__repr__", [](const Partition &p) { return partition_to_json(p).dump(); });

    m.def("enumerate", &enumerate, py::arg("upper"), py::arg("lower"),
          py::arg("max_points") = kDefaultMaxPoints);
    m.def(
        "compose",
        [](const Partition &p, const Partition &q) {
            const auto c = compose(p, q);
            return py::make_tuple(c.result, c.central_blocks, c.cycles);
        },
        "Returns (qp, central_blocks, cycles).");
    m.def("adjoint", py::overload_cast<const Partition &>(&adjoint));
    m.def("tensor", py::overload_cast<const Partition &, const Partition &>(&tensor));
    m.def("catalan", [](int k) { return to_py(catalan(k)); });

    py::class_<MultiMatrixAlgebra>(m, "Algebra")
        .def(py::init([](const std::vector<std::pair<int, std::vector<double>>> &blocks, double tol) {
                 std::vector<MatrixBlock> bs;
                 for (const auto &[n, q] : blocks)
                     bs.push_back({n, q});
                 return MultiMatrixAlgebra(std::move(bs), tol);
             }),
             py::arg("blocks"), py::arg("tolerance") = kDefaultTolerance,
             "Blocks as (size, eigenvalues of Q) pairs.")
        .def_static("commutative_uniform", &MultiMatrixAlgebra::commutative_uniform)
        .def_static("from_json", &MultiMatrixAlgebra::from_json)
        .def("to_json", &MultiMatrixAlgebra::to_json)
        .def_property_readonly("dim", &MultiMatrixAlgebra::dim)
        .def("basis", [](const MultiMatrixAlgebra &a) {
            std::vector<std::tuple<int, int, int>> out;
            for (const auto &x : a.basis())
                out.emplace_back(x.block, x.row, x.col);
            return out;
        })
        .def("delta_form", &MultiMatrixAlgebra::delta_form)
        .def("decompose", [](const MultiMatrixAlgebra &a) {
            py::list out;
            for (const auto &f : decompose_by_delta(a))
                out.append(py::dict(py::arg("blocks") = f.block_ids, py::arg("delta") = f.delta,
                                    py::arg("mass") = f.mass, py::arg("algebra") = f.algebra));
            return out;
        });

    m.def(
        "build_map",
        [](const MultiMatrixAlgebra &a, const Partition &p) { return build_map(a, p).matrix; },
        py::arg("algebra"), py::arg("partition"));
    m.def("verify_composition", &verify_composition);
    m.def(
        "gram_rank",
        [](const MultiMatrixAlgebra &a, int upper, int lower) {
            std::vector<TensorMap> maps;
            for (const auto &p : enumerate(upper, lower))
                maps.push_back(build_map(a, p));
            return gram_rank(maps);
        },
        py::arg("algebra"), py::arg("upper"), py::arg("lower"));

    py::class_<Group>(m, "Group")
        .def_static("cyclic", &Group::cyclic)
        .def_static("integers", &Group::integers)
        .def_static("parse", &Group::parse_spec)
        .def_property_readonly("order", &Group::order)
        .def("describe", &Group::describe)
        .def("elements", [](const Group &g) {
            std::vector<std::string> out;
            for (const auto &a : g.elements())
                out.push_back(g.name(a));
            return out;
        });

    m.def("fusion_product", [](const Group &g, const py::object &x, const py::object &y) {
        return combination_list(g, fusion_product(g, word_arg(g, x), word_arg(g, y)));
    });
    m.def("dimension", [](const Group &g, const py::object &w, int n) {
        return to_py(dimension(g, word_arg(g, w), n));
    });
    m.def("a_rep_trivial_multiplicity", [](const Group &g, const py::object &w) {
        return a_rep_trivial_multiplicity(g, word_arg(g, w));
    });
    m.def(
        "decorated_hom_dimension",
        [](const Group &g, const py::object &up, const py::object &down) {
            return decorated_hom_dimension(g, word_arg(g, up), word_arg(g, down));
        },
        py::arg("group"), py::arg("upper"), py::arg("lower"));
    m.def("free_product_fusion",
          [](const Group &g, const std::vector<int> &dims, const std::string &x, const std::string &y) {
              RingList rings;
              for (int n : dims)
                  rings.push_back(std::make_shared<WreathWordRing>(g, n));
              const auto c = free_product_fusion(rings, parse_alternating(rings, x),
                                                 parse_alternating(rings, y));
              py::list out;
              for (const auto &[w, mult] : c.terms())
                  out.append(py::make_tuple(format_alternating(rings, w), mult));
              return out;
          });
}
