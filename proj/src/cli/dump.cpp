#include "mirror/cli/dump.hpp"

#include "mirror/amodel/disk.hpp"
#include "mirror/amodel/rmatrix.hpp"
#include "mirror/cli/checks.hpp"
#include "mirror/curve/mirror_p1.hpp"
#include "mirror/curve/rcheck.hpp"
#include "mirror/curve/vseries.hpp"
#include "mirror/recursion/eo.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace mirror {

namespace {

using Json = nlohmann::ordered_json;

KnotParams knot(const DumpOptions& o) {
    try {
        return validate_knot(o.p, o.r, o.s);
    } catch (const KnotError& e) {
        throw UsageError(e.what());
    }
}

std::string ext(const DumpOptions& o) { return o.format == "json" ? ".json" : ".tsv"; }

DumpFile series_file(const PhasedSeries& f, const DumpOptions& o, std::string suffix = "") {
    return {suffix.empty() ? suffix : suffix + ext(o), o.format == "json" ? f.to_json() + "\n" : f.to_tsv()};
}

LayoutPtr eta_of(const KnotParams& kp, const DumpOptions& o) {
    return eta_layout(kp, o.q_order, static_cast<int>(kp.r) * o.x_order);
}

// Matrix of coefficient lists as strings.
template <class M, class Str>
DumpFile matrix_file(const M& m, size_t size, int order, const DumpOptions& o, Str str) {
    if (o.format == "json") {
        Json j;
        j["order"] = order;
        j["entries"] = Json::array();
        for (size_t a = 0; a < size; ++a) {
            Json row = Json::array();
            for (size_t b = 0; b < size; ++b) {
                Json list = Json::array();
                for (int e = 0; e < order; ++e) list.push_back(str(m, a, b, e));
                row.push_back(list);
            }
            j["entries"].push_back(row);
        }
        return {"", j.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << "row\tcol\texp_z\tvalue\n";
    for (size_t a = 0; a < size; ++a)
        for (size_t b = 0; b < size; ++b)
            for (int e = 0; e < order; ++e) os << a << '\t' << b << '\t' << e << '\t' << str(m, a, b, e) << '\n';
    return {"", os.str()};
}

GenusZeroCurve p1_curve(const KnotParams& kp, const DumpOptions& o, int local_order) {
    if (kp.p != 1) throw UsageError("this selector needs p = 1");
    return make_spectral_curve(mirror_curve_p1(kp, o.q), local_order);
}

}  // namespace

const std::vector<std::string>& dump_selectors() {
    static const std::vector<std::string> names{"v", "w01", "tau", "J", "F01", "omega", "rcheck", "rlimit"};
    return names;
}

std::vector<DumpFile> dump_selector(const std::string& selector, const DumpOptions& o) {
    const auto& names = dump_selectors();
    if (std::find(names.begin(), names.end(), selector) == names.end())
        throw UsageError("unknown dump selector: " + selector);
    if (o.format != "tsv" && o.format != "json") throw UsageError("format must be tsv or json");
    if (o.q_order < 0 || o.x_order < 0 || o.z_order < 0) throw UsageError("orders must be nonnegative");
    KnotParams kp = knot(o);
    if (selector == "v") return {series_file(solve_v_series(kp, eta_of(kp, o)), o)};
    if (selector == "w01") return {series_file(w01_series(kp, phi_newton(kp, eta_of(kp, o))), o)};
    if (selector == "F01") return {series_file(disk_potential_A(kp, o.q_order, o.x_order), o)};
    if (selector == "tau") {
        MirrorMap mm = mirror_map(kp, o.q_order);
        std::vector<DumpFile> out;
        for (size_t i = 0; i < mm.tau.size(); ++i) out.push_back(series_file(mm.tau[i], o, "_tau" + std::to_string(i + 2)));
        return out;
    }
    if (selector == "J") {
        std::vector<JCoefficient> js;
        for (long h = 0; h < kp.p; ++h) js.push_back(j_coefficient(h, kp, o.q_order));
        if (o.format == "json") {
            Json arr = Json::array();
            for (const auto& jc : js) {
                Json j;
                j["h"] = jc.h_index;
                j["z_power"] = jc.z_power;
                j["terms"] = Json::array();
                for (const auto& [e, f] : jc.terms) j["terms"].push_back({{"exp", e}, {"value", f.to_string("u")}});
                arr.push_back(j);
            }
            return {{"", arr.dump(2) + "\n"}};
        }
        std::ostringstream os;
        os << "h\tz_power";
        for (long a = 1; a <= kp.p; ++a) os << "\texp_q" << a;
        os << "\tvalue\n";
        for (const auto& jc : js)
            for (const auto& [e, f] : jc.terms) {
                os << jc.h_index << '\t' << jc.z_power;
                for (int x : e) os << '\t' << x;
                os << '\t' << f.to_string("u") << '\n';
            }
        return {{"", os.str()}};
    }
    if (selector == "omega") {
        if (o.g < 0 || o.n < 1 || 2 * o.g - 2 + o.n <= 0) throw UsageError("omega needs 2g - 2 + n > 0");
        GenusZeroCurve curve = p1_curve(kp, o, local_order_for(o.g, o.n, 0));
        EORecursion eo(curve);
        Multidifferential w = eo.omega(o.g, o.n);
        if (o.format == "json") return {{"", w.to_json() + "\n"}};
        std::ostringstream os;
        for (int i = 1; i <= o.n; ++i) os << "sigma" << i << "\td" << i << '\t';
        os << "coeff\n";
        for (const auto& [idx, c] : w.terms) {
            for (auto [s, d] : idx) os << s << '\t' << d << '\t';
            os << c.to_string() << '\n';
        }
        return {{"", os.str()}};
    }
    if (selector == "rcheck") {
        GenusZeroCurve curve = p1_curve(kp, o, local_order_for(0, 0, o.z_order));
        FieldSeriesMatrix R = r_check_matrix(curve, o.z_order);
        return {matrix_file(R, R.size(), R.order, o,
                            [](const FieldSeriesMatrix& m, size_t a, size_t b, int e) { return m.at(a, b, e).to_string(); })};
    }
    SeriesMatrix R = r_matrix_limit(kp, o.z_order);
    return {matrix_file(R, R.size(), R.order, o, [](const SeriesMatrix& m, size_t a, size_t b, int e) {
        return m.entry[a][b][static_cast<size_t>(e)].to_string();
    })};
}

}  // namespace mirror
