/*
 * Copyright 2026 The envy-census Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "envy/census.hpp"
#include "envy/combinatorics.hpp"
#include "envy/error.hpp"
#include "envy/fairness.hpp"
#include "envy/io.hpp"
#include "envy/valuation.hpp"

namespace py = pybind11;
using namespace envy;

namespace {

// Big integers cross the boundary as Python ints via their decimal form.
py::int_ to_py(const BigInt& x) {
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10)));
}

BigInt from_py(const py::int_& x) { return BigInt{py::str(x).cast<std::string>()}; }

std::vector<std::uint32_t> bits_of(const SetSystem& s) {
    std::vector<std::uint32_t> out;
    for (Bundle b : s) out.push_back(b.bits());
    return out;
}

SetSystem system_of(int m, const std::vector<std::uint32_t>& bits) {
    std::vector<Bundle> members;
    for (auto b : bits) members.emplace_back(b);
    return SetSystem{m, std::move(members)};
}

Value to_value(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return Value::parse(h.cast<std::string>());
    if (py::isinstance<py::int_>(h)) return Value::from_integer(h.cast<std::int64_t>());
    return Value::from_double(h.cast<double>());
}

std::pair<std::uint32_t, std::uint32_t> pair_of(const Allocation& a) { return {a.first.bits(), a.second.bits()}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "EF1/EFX allocation census for two agents";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<InvalidBundle>(m, "InvalidBundle", PyExc_IndexError);

    py::class_<Valuation>(m, "Valuation")
        .def_property_readonly("m", &Valuation::items)
        .def("value", [](const Valuation& v, std::uint32_t b) { return v.value(Bundle{b}).to_double(); })
        .def("table", [](const Valuation& v) {
            std::vector<double> out;
            for (Value x : v.table()) out.push_back(x.to_double());
            return out;
        })
        .def("__len__", &Valuation::bundle_count);

    py::class_<Instance>(m, "Instance")
        .def(py::init<Valuation, Valuation>(), py::arg("first"), py::arg("second"))
        .def_property_readonly("m", &Instance::items)
        .def_property_readonly("v1", &Instance::v1)
        .def_property_readonly("v2", &Instance::v2);

    py::enum_<BundleClass>(m, "BundleClass")
        .value("Good", BundleClass::Good)
        .value("TooSmall", BundleClass::TooSmall)
        .value("TooLarge", BundleClass::TooLarge);

    m.def("make_additive", [](const py::list& values) {
        std::vector<Value> v;
        for (auto h : values) v.push_back(to_value(h));
        return make_additive(v);
    }, py::arg("item_values"));
    m.def("from_table", [](const py::list& values) {
        std::vector<Value> v;
        for (auto h : values) v.push_back(to_value(h));
        return Valuation::from_table(std::move(v));
    }, py::arg("table"));
    m.def("random_monotone", &random_monotone, py::arg("m"), py::arg("seed"));
    m.def("random_monotone_instance", &random_monotone_instance, py::arg("m"), py::arg("seed"));
    m.def("tight_ef1_instance", &tight_ef1_instance, py::arg("m"));
    m.def("tight_efx_instance", &tight_efx_instance, py::arg("m"));
    m.def("load_instance", &load_instance, py::arg("path"));

    m.def("is_ef1_bundle", [](const Valuation& v, std::uint32_t s) { return is_ef1_bundle(v, Bundle{s}); });
    m.def("is_efx_bundle", [](const Valuation& v, std::uint32_t s) { return is_efx_bundle(v, Bundle{s}); });
    m.def("is_ef1_allocation", [](const Instance& i, std::uint32_t s) { return is_ef1_allocation(i, Bundle{s}); });
    m.def("is_efx_allocation", [](const Instance& i, std::uint32_t s) { return is_efx_allocation(i, Bundle{s}); });
    m.def("classify_bundle", [](const Valuation& v, std::uint32_t s) { return classify_bundle(v, Bundle{s}); });

    m.def("count_ef1_allocations", [](const Instance& i, unsigned workers) {
        py::gil_scoped_release release;
        return count_ef1_allocations(i, {workers});
    }, py::arg("instance"), py::arg("workers") = 1);
    m.def("count_efx_allocations", [](const Instance& i, unsigned workers) {
        py::gil_scoped_release release;
        return count_efx_allocations(i, {workers});
    }, py::arg("instance"), py::arg("workers") = 1);
    m.def("f_ef1", [](int k) { return to_py(f_ef1(k)); }, py::arg("m"));
    m.def("extract_set_systems", [](const Valuation& v) {
        const auto s = extract_set_systems(v);
        py::dict d;
        d["too_small"] = bits_of(s.too_small);
        d["too_large"] = bits_of(s.too_large);
        d["good"] = bits_of(s.good);
        return d;
    });
    m.def("verify_separation", &verify_separation);
    m.def("list_ef1_partitions", [](const Valuation& v) { return bits_of(list_ef1_partitions(v)); });
    m.def("combine_ef1_partitions", [](const std::vector<std::uint32_t>& first,
                                       const std::vector<std::uint32_t>& second, const Instance& inst) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (const auto& a : combine_ef1_partitions(system_of(inst.items(), first),
                                                    system_of(inst.items(), second), inst)) {
            out.push_back(pair_of(a));
        }
        return out;
    });
    m.def("efx_partition", [](const Valuation& v) {
        const auto p = efx_partition(v);
        return std::pair{p.part.bits(), p.rest.bits()};
    });
    m.def("cut_and_choose_efx", [](const Instance& inst) {
        const auto r = cut_and_choose_efx(inst);
        return std::vector{pair_of(r[0]), pair_of(r[1])};
    });
    m.def("census", [](const Instance& inst, bool ef1, bool efx) {
        return to_json(run_census(inst, ef1, efx)).dump();
    }, py::arg("instance"), py::arg("ef1") = true, py::arg("efx") = true,
       "Census report as a JSON string");

    m.def("binom", [](const py::int_& n, std::uint64_t k) { return to_py(binom(from_py(n), k)); });
    m.def("cascade_decompose", [](const py::int_& n, int k) {
        std::vector<std::pair<py::int_, int>> out;
        for (const auto& t : cascade_decompose(from_py(n), k).terms) out.emplace_back(to_py(t.top), t.level);
        return out;
    }, py::arg("n"), py::arg("k"));
    m.def("shadow", [](const py::int_& n, int k) { return to_py(shadow(from_py(n), k)); }, py::arg("n"), py::arg("k"));
    m.def("shadow_is_monotone", &shadow_is_monotone, py::arg("k"), py::arg("n_max"));
    m.def("bjorner_feasible", [](int n, const std::vector<std::uint64_t>& counts) {
        return bjorner_feasible({n, counts});
    }, py::arg("n"), py::arg("counts"));
    m.def("is_sperner", [](int m_items, const std::vector<std::uint32_t>& members) {
        return is_sperner(system_of(m_items, members));
    }, py::arg("m"), py::arg("members"));
    m.def("hamming_ball", [](std::uint32_t center, int radius, int m_items) {
        return bits_of(the_hamming_ball(Bundle{center}, radius, m_items));
    }, py::arg("center"), py::arg("radius"), py::arg("m"));
    m.def("partial_hamming_ball", [](std::uint32_t center, std::uint64_t size, int m_items) {
        return bits_of(a_hamming_ball(Bundle{center}, size, m_items));
    }, py::arg("center"), py::arg("size"), py::arg("m"));
    m.def("verify_harper", [](int m_items, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        const auto r = verify_harper(system_of(m_items, a), system_of(m_items, b));
        py::dict d;
        d["d_original"] = r.original_distance;
        d["d_balls"] = r.ball_distance;
        d["ok"] = r.ok;
        return d;
    }, py::arg("m"), py::arg("a"), py::arg("b"));
}
