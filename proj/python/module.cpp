#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsp/jcrystal.hpp"
#include "qsp/lr.hpp"
#include "qsp/ujmod.hpp"

namespace py = pybind11;
using namespace qsp;

namespace {

Dir parse_dir(const std::string& dir) {
    if (dir == "raise") return Dir::Raise;
    if (dir == "lower") return Dir::Lower;
    throw py::value_error("dir must be 'raise' or 'lower'");
}

py::object opt_word(const std::optional<Word>& w) {
    if (!w) return py::none();
    return py::cast(*w);
}

py::list tableau_rows(const Tableau& t) {
    py::list rows;
    for (const auto& row : t.rows) rows.append(py::cast(row));
    return rows;
}

} // namespace

PYBIND11_MODULE(pyqsp, m) {
    m.doc() = "exact two-parameter quantum symmetric pair toolkit";

    // --- scalars -----------------------------------------------------------
    m.def("qint", [](int n) { return qint(n).str(); },
          "quantum integer [n] as a canonical string");
    m.def("brace", [](int n) { return brace(n).str(); });
    m.def("qfact", [](int n) { return qfact(n).str(); });
    m.def("ratfunc_eval", [](const std::string& expr) {
        return RatFunc::parse(expr).str();
    }, "parse an expression in p, q and return its canonical form");
    m.def("ratfunc_limit", [](const std::string& expr) {
        return RatFunc::parse(expr).specialize_p0_q0().get_str();
    }, "iterated limit p->0 then q->0; raises ValueError at a pole");

    // --- shapes --------------------------------------------------------------
    m.def("pi_map", [](const std::string& shape, int r) {
        ClassificationData d = pi_map(Bipartition::parse(shape, r));
        return py::make_tuple(d.a, d.b);
    });
    m.def("pi_inverse", [](const std::vector<int>& a, const std::vector<int>& b) {
        return pi_inverse(ClassificationData{a, b}).str();
    });
    m.def("pi_equiv", [](const std::string& x, const std::string& y, int r) {
        return pi_equiv(Bipartition::parse(x, r), Bipartition::parse(y, r));
    });
    m.def("standard_count", [](const std::string& shape, int r) {
        return st_count(Bipartition::parse(shape, r));
    });
    m.def("module_dimension", [](const std::string& shape, int r) {
        return sst_count(Bipartition::parse(shape, r), r);
    });

    // --- word operators --------------------------------------------------------
    m.def("crystal_op", [](const Word& w, int twice_index, const std::string& dir) {
        return opt_word(crystal_op(w, HalfInt{twice_index}, parse_dir(dir)));
    }, py::arg("word"), py::arg("twice_index"), py::arg("dir"),
       "ordinary operator at the half-integer index twice_index/2");
    m.def("jop", [](const Word& w, int i, const std::string& dir) {
        return opt_word(jop(w, i, parse_dir(dir)));
    });
    m.def("jop_primed", [](const Word& w, int i, const std::string& dir) {
        return opt_word(jop_primed(w, i, parse_dir(dir)));
    });
    m.def("is_yamanouchi_biword", &is_yamanouchi_biword, py::arg("word"), py::arg("r"));

    m.def("rs_pair", [](const Word& w, int r) {
        RSPair pq = rs(w, full_alphabet(r));
        return py::make_tuple(tableau_rows(pq.p), tableau_rows(pq.q));
    }, "column-insertion pair of a word over {-r..r}");

    // --- decomposition -----------------------------------------------------------
    m.def("decompose", [](int r, int d, std::size_t guard) {
        JDecomposition dec = decompose_tensor_power(r, d, guard);
        py::list shapes;
        for (const auto& [shape, mult] : dec.multiplicity) {
            py::dict row;
            row["shape"] = shape.str();
            row["multiplicity"] = mult;
            row["dimension"] = sst_count(shape, r);
            row["standard_count"] = st_count(shape);
            shapes.append(row);
        }
        return shapes;
    }, py::arg("r"), py::arg("d"), py::arg("guard") = 20000);

    // --- LR -------------------------------------------------------------------------
    m.def("lr", [](int r, const std::string& lambda, const std::string& mu,
                   const std::string& nu) {
        LRQuery q{Bipartition::parse(lambda, r), Partition::parse(mu),
                  Bipartition::parse(nu, r), r};
        return lr_j(q);
    });
    m.def("lr_all", [](int r, const std::string& lambda, const std::string& mu) {
        py::dict out;
        for (const auto& [nu, c] : lr_j_all(Bipartition::parse(lambda, r),
                                            Partition::parse(mu), r))
            out[py::str(nu.str())] = c;
        return out;
    });

    // --- Hecke ----------------------------------------------------------------------
    m.def("left_cells", [](int rank) {
        HeckeAlgebra h(rank);
        const auto& cd = h.left_cells();
        py::list out;
        for (const auto& cell : cd.cells) {
            py::list elems;
            for (int w : cell) elems.append(h.group().element(w).str());
            out.append(elems);
        }
        return out;
    });
    m.def("kl_basis", [](int rank, const std::string& window) {
        HeckeAlgebra h(rank);
        py::dict out;
        for (const auto& [y, c] : h.kl_basis(h.group().index(SignedPerm::parse(window))).coeffs)
            out[py::str(h.group().element(y).str())] = c.str();
        return out;
    });

    // --- verification -------------------------------------------------------------------
    m.def("verify", [](int r, int d, const std::vector<std::string>& only) {
        VerifyReport rep = verify_suite(r, d, only);
        py::list checks;
        for (const auto& c : rep.checks) {
            py::dict row;
            row["group"] = c.group;
            row["name"] = c.name;
            row["pass"] = c.pass;
            row["detail"] = c.detail;
            checks.append(row);
        }
        py::dict out;
        out["checks"] = checks;
        out["all_pass"] = rep.all_pass();
        return out;
    }, py::arg("r"), py::arg("d"), py::arg("only") = std::vector<std::string>{});

    py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
    py::register_exception<SizeLimit>(m, "SizeLimit", PyExc_RuntimeError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
}
