#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "awrpsim/awrp.hpp"
#include "awrpsim/metrics.hpp"
#include "awrpsim/report.hpp"
#include "awrpsim/sim.hpp"
#include "awrpsim/trace_io.hpp"

namespace py = pybind11;
using namespace awrpsim;

namespace {

PolicyKind kind_from(const std::string &name) {
    const auto kind = parse_policy_kind(name);
    if (!kind) throw ConfigError("unknown policy '" + name + "'");
    return *kind;
}

ReportFormat report_format_from(const std::string &name) {
    const auto fmt = parse_report_format(name);
    if (!fmt) throw ConfigError("unknown report format '" + name + "'");
    return *fmt;
}

TraceFormat trace_format_from(const std::string &name) {
    const auto fmt = parse_trace_format(name);
    if (!fmt) throw ConfigError("unknown trace format '" + name + "'");
    return *fmt;
}

std::vector<PolicyKind> kinds_from(const std::vector<std::string> &names) {
    std::vector<PolicyKind> kinds;
    for (const auto &n : names) kinds.push_back(kind_from(n));
    return kinds;
}

} // namespace

PYBIND11_MODULE(_awrpsim, m) {
    m.doc() = "Trace-driven cache replacement simulator";

    auto config_error = py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_RuntimeError);
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_AssertionError);
    (void)config_error;

    m.attr("POLICIES") = [] {
        std::vector<std::string> names;
        for (const auto k : kAllPolicyKinds) names.emplace_back(policy_name(k));
        return names;
    }();
    m.attr("DEFAULT_CAPACITIES") = kDefaultCapacities;
    m.attr("PRNG") = std::string(kPrngName);

    py::class_<Trace>(m, "Trace")
        .def(py::init<std::string, std::vector<BlockId>>(), py::arg("name"), py::arg("blocks"))
        .def_property_readonly("name", &Trace::name)
        .def_property_readonly("blocks", &Trace::blocks)
        .def("__len__", &Trace::size)
        .def("__repr__", [](const Trace &t) {
            return "Trace(name='" + t.name() + "', len=" + std::to_string(t.size()) + ")";
        });

    py::class_<CacheConfig>(m, "CacheConfig")
        .def(py::init([](std::uint64_t capacity, std::uint64_t num_sets, unsigned block_size_log2) {
                 CacheConfig c{capacity, num_sets, block_size_log2};
                 c.validate();
                 return c;
             }),
             py::arg("capacity"), py::arg("num_sets") = 1, py::arg("block_size_log2") = 0)
        .def_readonly("capacity", &CacheConfig::capacity)
        .def_readonly("num_sets", &CacheConfig::num_sets)
        .def_readonly("block_size_log2", &CacheConfig::block_size_log2)
        .def_property_readonly("associativity", &CacheConfig::associativity);

    py::class_<AccessOutcome>(m, "AccessOutcome")
        .def_property_readonly("kind", [](const AccessOutcome &o) { return to_string(o.kind); })
        .def_readonly("evicted", &AccessOutcome::evicted)
        .def_property_readonly("is_hit", &AccessOutcome::is_hit)
        .def("__eq__", [](const AccessOutcome &a, const AccessOutcome &b) { return a == b; })
        .def("__repr__", [](const AccessOutcome &o) { return to_string(o); });

    py::class_<Policy>(m, "Policy")
        .def_property_readonly("name", [](const Policy &p) { return std::string(policy_name(p.kind())); })
        .def_property_readonly("capacity", &Policy::capacity)
        .def_property_readonly("clock", &Policy::clock)
        .def("access", &Policy::access, py::arg("block"))
        .def("contains", &Policy::contains, py::arg("block"))
        .def("residents", &Policy::residents)
        .def("__len__", &Policy::size);

    m.def(
        "make_policy",
        [](const std::string &name, std::size_t capacity, std::optional<std::vector<BlockId>> stream) {
            const auto kind = kind_from(name);
            if (is_offline(kind)) {
                if (!stream) throw ConfigError("OPT needs the full reference stream");
                return make_offline_policy(capacity, std::move(*stream));
            }
            return make_policy(kind, capacity);
        },
        py::arg("policy"), py::arg("capacity"), py::arg("stream") = py::none());

    py::class_<SimResult>(m, "SimResult")
        .def_property_readonly("policy", [](const SimResult &r) { return std::string(policy_name(r.policy)); })
        .def_readonly("config", &SimResult::config)
        .def_readonly("hits", &SimResult::hits)
        .def_readonly("misses", &SimResult::misses)
        .def_readonly("evictions", &SimResult::evictions)
        .def_readonly("hit_ratio", &SimResult::hit_ratio_percent)
        .def_property_readonly("accesses", &SimResult::accesses);

    py::class_<ComparisonTable>(m, "ComparisonTable")
        .def_readonly("trace_name", &ComparisonTable::trace_name)
        .def_property_readonly("policies",
                               [](const ComparisonTable &t) {
                                   std::vector<std::string> names;
                                   for (const auto k : t.policies) names.emplace_back(policy_name(k));
                                   return names;
                               })
        .def_readonly("capacities", &ComparisonTable::capacities)
        .def_readonly("ratios", &ComparisonTable::ratios)
        .def(
            "ratio",
            [](const ComparisonTable &t, const std::string &policy, std::uint64_t capacity) {
                return t.ratio(kind_from(policy), capacity);
            },
            py::arg("policy"), py::arg("capacity"));

    m.def(
        "simulate",
        [](const Trace &trace, const std::string &policy, const CacheConfig &config,
           std::optional<std::function<void(std::size_t, std::uint64_t, BlockId, const AccessOutcome &)>> observer) {
            return simulate(trace, kind_from(policy), config, observer ? StepObserver(*observer) : StepObserver{});
        },
        py::arg("trace"), py::arg("policy"), py::arg("config"), py::arg("observer") = py::none());

    m.def(
        "sweep",
        [](const Trace &trace, const std::vector<std::string> &policies, const std::vector<std::uint64_t> &capacities,
           std::uint64_t num_sets, unsigned block_size_log2, unsigned jobs) {
            const auto kinds = kinds_from(policies);
            const CacheConfig base{1, num_sets, block_size_log2};
            py::gil_scoped_release release;
            return sweep(trace, kinds, capacities, base, jobs);
        },
        py::arg("trace"), py::arg("policies") = std::vector<std::string>{"LRU", "FIFO", "CAR", "AWRP"},
        py::arg("capacities") = kDefaultCapacities, py::arg("num_sets") = 1, py::arg("block_size_log2") = 0,
        py::arg("jobs") = 1);

    m.def("scan", [](std::uint64_t n, std::uint64_t universe) { return generate(ScanWorkload{n, universe}); },
          py::arg("n"), py::arg("universe"));
    m.def("loop", [](std::uint64_t n, std::uint64_t loop_len) { return generate(LoopWorkload{n, loop_len}); },
          py::arg("n"), py::arg("loop_len"));
    m.def(
        "zipf",
        [](std::uint64_t n, std::uint64_t universe, double s, std::uint64_t seed) {
            return generate(ZipfWorkload{n, universe, s, seed});
        },
        py::arg("n"), py::arg("universe"), py::arg("s"), py::arg("seed"));

    m.def(
        "parse_trace",
        [](const std::string &text, const std::string &format, unsigned block_size_log2, const std::string &name) {
            return parse_trace(std::string_view(text), trace_format_from(format), block_size_log2, name);
        },
        py::arg("text"), py::arg("format") = "plain", py::arg("block_size_log2") = 0, py::arg("name") = "trace");
    m.def(
        "load_trace",
        [](const std::filesystem::path &path, const std::string &format, unsigned block_size_log2) {
            return load_trace(path, trace_format_from(format), block_size_log2);
        },
        py::arg("path"), py::arg("format") = "plain", py::arg("block_size_log2") = 0);

    m.def(
        "render",
        [](const ComparisonTable &table, const std::string &format, std::optional<std::string> candidate) {
            std::vector<GainReport> gains;
            if (candidate) gains = gain_reports(table, kind_from(*candidate));
            return render(table, report_format_from(format), gains);
        },
        py::arg("table"), py::arg("format") = "text", py::arg("candidate") = py::none());
    m.def(
        "render_result",
        [](const SimResult &result, const std::string &format, const std::string &trace_name) {
            return render(result, report_format_from(format), trace_name);
        },
        py::arg("result"), py::arg("format") = "text", py::arg("trace_name") = "");
    m.def("parse_csv", [](const std::string &text) { return parse_csv(text); }, py::arg("text"));

    m.def("hit_ratio", &hit_ratio, py::arg("hits"), py::arg("total"));
    m.def("relative_gain", &relative_gain, py::arg("candidate"), py::arg("baseline"));
    m.def("awrp_weight", &awrp_weight, py::arg("freq"), py::arg("recency"), py::arg("clock"));
}
