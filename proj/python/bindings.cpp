#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebw/decode.hpp"
#include "ebw/design.hpp"
#include "ebw/eaqecc.hpp"
#include "ebw/evenfree.hpp"
#include "ebw/gf2.hpp"
#include "ebw/io.hpp"
#include "ebw/tanner.hpp"

namespace py = pybind11;

namespace {

ebw::designs::Design design_from_dict(const py::dict& d) {
    ebw::designs::Design out;
    out.v = d["v"].cast<int>();
    out.blocks = d["blocks"].cast<std::vector<std::vector<int>>>();
    return out;
}

py::dict design_to_dict(const ebw::designs::Design& d) {
    py::dict out;
    out["v"] = d.v;
    out["blocks"] = d.blocks;
    return out;
}

ebw::gf2::BinaryMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("matrix must be non-empty");
    ebw::gf2::BinaryMatrix h(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.front().size())
            throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] & 1) h.set(r, c, true);
    }
    return h;
}

std::vector<std::vector<int>> matrix_to_rows(const ebw::gf2::BinaryMatrix& h) {
    std::vector<std::vector<int>> rows(h.rows(), std::vector<int>(h.cols(), 0));
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) rows[r][c] = h.get(r, c) ? 1 : 0;
    return rows;
}

ebw::gf2::BinaryMatrix matrix_from_any(const py::object& obj) {
    if (py::isinstance<py::dict>(obj))
        return ebw::designs::incidence_matrix(design_from_dict(obj.cast<py::dict>()));
    return matrix_from_rows(obj.cast<std::vector<std::vector<int>>>());
}

py::dict verify_dict(const ebw::designs::Design& d) {
    auto rep = ebw::designs::verify_pbd(d);
    py::dict out;
    out["structurally_valid"] = rep.structurally_valid;
    if (!rep.structurally_valid) {
        out["structural_error"] = rep.structural_error;
        out["offending_block"] = rep.offending_block;
    }
    out["is_pbd"] = rep.is_pbd;
    if (rep.counterexample_pair) {
        out["counterexample_pair"] =
            py::make_tuple(rep.counterexample_pair->first, rep.counterexample_pair->second);
        out["counterexample_coverage"] = rep.counterexample_coverage;
    }
    out["block_sizes"] = std::vector<int>(rep.block_sizes.begin(), rep.block_sizes.end());
    out["equireplicate"] = rep.equireplicate;
    out["replication_number"] = rep.replication_number;
    out["odd_replicate"] = rep.odd_replicate;
    out["is_steiner"] = rep.is_steiner;
    out["is_trivial"] = rep.is_trivial;
    return out;
}

py::dict characterize_dict(const ebw::gf2::BinaryMatrix& h, int distance_cap,
                           bool with_quantum_d) {
    auto p = ebw::eaqecc::characterize(h, distance_cap, with_quantum_d);
    py::dict out;
    out["n"] = p.n;
    out["rank"] = p.rank;
    out["classical_k"] = p.classical_k;
    out["c"] = p.c;
    out["quantum_k"] = p.quantum_k;
    out["one_ebit"] = p.one_ebit;
    py::dict cyc;
    if (p.cycles.girth)
        cyc["girth"] = *p.cycles.girth;
    else
        cyc["girth"] = py::none();
    cyc["four_cycles"] = p.cycles.four_cycles;
    cyc["six_cycles"] = p.cycles.six_cycles;
    if (p.cycles.predicted_six)
        cyc["predicted_six_cycles"] = *p.cycles.predicted_six;
    out["cycles"] = cyc;
    if (p.classical_d)
        out["classical_d"] = *p.classical_d;
    else
        out["classical_d"] = py::none();
    out["distance_cap"] = p.distance_cap;
    if (p.quantum_d) {
        py::dict q;
        switch (p.quantum_d->status) {
            case ebw::eaqecc::QuantumDistance::Status::value:
                q["status"] = "value";
                q["d"] = p.quantum_d->d;
                break;
            case ebw::eaqecc::QuantumDistance::Status::degenerate: q["status"] = "degenerate"; break;
            case ebw::eaqecc::QuantumDistance::Status::above_cap: q["status"] = "above_cap"; break;
            case ebw::eaqecc::QuantumDistance::Status::infeasible: q["status"] = "infeasible"; break;
        }
        out["quantum_d"] = q;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "entanglement-assisted LDPC codes from block designs";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("construct_sts", [](int v) { return design_to_dict(ebw::designs::construct_sts(v)); },
          py::arg("v"));
    m.def("pg_lines",
          [](int m_) { return design_to_dict(ebw::designs::construct_pg_lines(m_)); },
          py::arg("m"));
    m.def("ag_lines",
          [](int n, int q) { return design_to_dict(ebw::designs::construct_ag_lines(n, q)); },
          py::arg("n"), py::arg("q"));
    m.def("projective_plane",
          [](int q) { return design_to_dict(ebw::designs::construct_projective_plane(q)); },
          py::arg("q"));

    m.def("verify", [](const py::dict& d) { return verify_dict(design_from_dict(d)); },
          py::arg("design"));
    m.def("incidence_matrix",
          [](const py::dict& d) {
              return matrix_to_rows(
                  ebw::designs::incidence_matrix(design_from_dict(d)));
          },
          py::arg("design"));

    m.def("characterize",
          [](const py::object& obj, int distance_cap, bool quantum_distance) {
              return characterize_dict(matrix_from_any(obj), distance_cap, quantum_distance);
          },
          py::arg("design_or_matrix"), py::arg("distance_cap") = 8,
          py::arg("quantum_distance") = false);

    m.def("classical_min_distance",
          [](const py::object& obj, int cap) -> py::object {
              auto d = ebw::evenfree::classical_min_distance(matrix_from_any(obj), cap);
              if (!d) return py::none();
              return py::int_(*d);
          },
          py::arg("design_or_matrix"), py::arg("cap") = 8);

    m.def("min_even_configuration",
          [](const py::dict& d, int cap) {
              auto rep = ebw::evenfree::min_even_configuration(design_from_dict(d), cap);
              py::dict out;
              out["cap"] = rep.cap;
              out["max_verified_r"] = rep.max_verified_r;
              out["complete"] = rep.complete;
              if (rep.witness)
                  out["witness"] = *rep.witness;
              else
                  out["witness"] = py::none();
              return out;
          },
          py::arg("design"), py::arg("cap"));

    m.def("count_pasch",
          [](const py::dict& d) { return ebw::evenfree::count_pasch(design_from_dict(d)); },
          py::arg("design"));

    m.def("dimension_bounds",
          [](long long n, long long mu) {
              auto b = ebw::eaqecc::dimension_bounds(n, mu);
              py::dict out;
              out["n"] = b.n;
              if (b.hillebrandt_rank_lower)
                  out["hillebrandt_rank_lower"] = *b.hillebrandt_rank_lower;
              if (b.k_lower) out["k_lower"] = *b.k_lower;
              if (b.k_upper) out["k_upper"] = *b.k_upper;
              if (b.sts_window) {
                  py::dict w;
                  w["k_lower"] = b.sts_window->k_lower;
                  w["k_upper"] = b.sts_window->k_upper;
                  w["t"] = b.sts_window->t;
                  w["u"] = b.sts_window->u;
                  out["sts_k_window"] = w;
              }
              return out;
          },
          py::arg("n"), py::arg("mu"));

    m.def("read_design",
          [](const std::string& path) {
              return design_to_dict(ebw::io::read_design_json_file(path));
          },
          py::arg("path"));
    m.def("write_design",
          [](const py::dict& d, const std::string& path) {
              ebw::io::write_design_json_file(path, design_from_dict(d));
          },
          py::arg("design"), py::arg("path"));
    m.def("read_alist",
          [](const std::string& path) {
              return matrix_to_rows(ebw::io::read_alist_file(path));
          },
          py::arg("path"));
    m.def("write_alist",
          [](const std::vector<std::vector<int>>& rows, const std::string& path) {
              ebw::io::write_alist_file(path, matrix_from_rows(rows));
          },
          py::arg("matrix"), py::arg("path"));

    m.def("simulate",
          [](const py::object& obj, double p, std::uint64_t trials,
             const std::string& decoder, std::uint64_t seed, int t_max, int max_iters) {
              auto h = matrix_from_any(obj);
              ebw::decode::SimOptions opts;
              opts.bp_max_iters = max_iters;
              if (t_max > 0) opts.t_max = t_max;
              auto kind = decoder == "bp" || decoder == "sum-product"
                              ? ebw::decode::DecoderKind::sum_product
                              : ebw::decode::DecoderKind::syndrome_table;
              if (decoder != "bp" && decoder != "sum-product" && decoder != "syndrome")
                  throw std::invalid_argument("unknown decoder: " + decoder);
              auto r = ebw::decode::simulate_depolarizing(h, {p}, trials, kind, seed, opts);
              py::dict out;
              out["trials"] = r.trials;
              out["block_errors"] = r.block_errors;
              out["x_failures"] = r.x_failures;
              out["z_failures"] = r.z_failures;
              out["p"] = r.p;
              out["seed"] = r.seed;
              out["rate"] = r.rate;
              out["wilson_lo"] = r.wilson_lo;
              out["wilson_hi"] = r.wilson_hi;
              out["rng"] = r.rng;
              return out;
          },
          py::arg("design_or_matrix"), py::arg("p"), py::arg("trials") = 10000,
          py::arg("decoder") = "syndrome", py::arg("seed") = 1, py::arg("t_max") = -1,
          py::arg("max_iters") = 50);
}
