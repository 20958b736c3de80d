#include "report_io.hpp"

#include <cstdio>
#include <sstream>

namespace ssz::cli {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json enclosure_json(Enclosure e) { return {{"lo", e.lo()}, {"hi", e.hi()}, {"width", e.width()}}; }

json exact_json(std::uint64_t v) { return {{"value", v}, {"exact", true}}; }

json exact_json(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return {{"value", c.get_num().get_str() + "/" + c.get_den().get_str()}, {"approx", c.get_d()}, {"exact", true}};
}

json exact_json(Rational r) {
    return {{"value", std::to_string(r.num()) + "/" + std::to_string(r.den())}, {"approx", r.approx()}, {"exact", true}};
}

json anchors_json(const std::vector<EtaAnchor>& anchors) {
    json a = json::array();
    for (const auto& x : anchors) a.push_back({{"from", x.from}, {"bound", x.bound}});
    return a;
}

json params_json(const TruncationParams& p) {
    return {{"N_main", p.N_main},
            {"N_secondary", p.N_secondary},
            {"eta_anchors", anchors_json(p.eta.anchors)},
            {"eta_global_lower", p.eta.global_lower}};
}

json report_json(const ConstantReport& r) {
    json j = {{"name", r.name},
              {"lo", r.value.lo()},
              {"hi", r.value.hi()},
              {"width", r.value.width()},
              {"certified", certified_prefix(r.value)},
              {"params", params_json(r.params)},
              {"anchors_used", anchors_json(r.anchors_used)}};
    json subs = json::array();
    for (const auto& [k, e] : r.sub_terms) {
        json s = enclosure_json(e);
        s["name"] = k;
        subs.push_back(std::move(s));
    }
    j["sub_terms"] = std::move(subs);
    if (!r.ledger.empty()) {
        json led = json::array();
        for (const auto& [p, e] : r.ledger) {
            json s = enclosure_json(e);
            s["p"] = p;
            led.push_back(std::move(s));
        }
        j["ledger"] = std::move(led);
    }
    return j;
}

std::string report_csv_header() { return "name,lo,hi,width\n"; }

std::string report_csv_rows(const ConstantReport& r) {
    std::ostringstream os;
    auto row = [&](const std::string& name, Enclosure e) {
        os << '"' << name << "\"," << format_double(e.lo()) << ',' << format_double(e.hi()) << ','
           << format_double(e.width()) << '\n';
    };
    row(r.name, r.value);
    for (const auto& [k, e] : r.sub_terms) row(r.name + "/" + k, e);
    return os.str();
}

std::string report_text(const ConstantReport& r) {
    std::ostringstream os;
    os << r.name << " in [" << format_double(r.value.lo()) << ", " << format_double(r.value.hi())
       << "]  width " << format_double(r.value.width()) << "  (" << certified_prefix(r.value) << ")\n";
    os << "  N = " << r.params.N_main;
    if (r.params.N_secondary) os << ", N2 = " << r.params.N_secondary;
    os << "\n";
    for (const auto& [k, e] : r.sub_terms)
        os << "  " << k << " in [" << format_double(e.lo()) << ", " << format_double(e.hi()) << "]\n";
    return os.str();
}

json density_json(const DensityGrid& g) {
    json pts = json::array();
    for (std::size_t i = 0; i < g.values.size(); ++i)
        pts.push_back({{"u", static_cast<double>(i) * g.h}, {"value", g.values[i]}});
    json j = {{"name", g.name()}, {"h", g.h}, {"u_max", g.u_max}, {"approximate", true}, {"points", std::move(pts)}};
    if (g.kind == DensityKind::d_r) j["r"] = g.r;
    return j;
}

std::string density_csv(const DensityGrid& g) {
    std::ostringstream os;
    os << "u,value\n";
    for (std::size_t i = 0; i < g.values.size(); ++i)
        os << format_double(static_cast<double>(i) * g.h) << ',' << format_double(g.values[i]) << '\n';
    return os.str();
}

} // namespace ssz::cli
