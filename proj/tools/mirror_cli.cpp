#include "mirror/cli/checks.hpp"
#include "mirror/cli/dump.hpp"
#include "mirror/curve/spectral.hpp"
#include "mirror/recursion/dvv.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace mirror;

namespace {

struct Flags {
    long p = 1, r = 1;
    std::optional<long> s;
    int q_order = 3;
    std::optional<int> x_order;
    std::optional<int> x2_order;
    int z_order = 4;
    std::string q_value = "1/7";
    std::optional<std::string> format;
    std::string out;
    int max_euler = 3;

    long s_or_default() const { return s ? *s : default_s(p, r); }
    int x() const { return x_order ? *x_order : 3; }
    Rational q() const {
        try {
            return parse_rational(q_value);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

void add_knot(CLI::App* cmd, Flags& f, bool with_p = true) {
    if (with_p) cmd->add_option("--p", f.p, "orbifold order p");
    cmd->add_option("--r", f.r, "knot parameter r");
    cmd->add_option("--s", f.s, "knot parameter s (default: smallest valid)");
}

void add_output(CLI::App* cmd, Flags& f) {
    cmd->add_option("--format", f.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    cmd->add_option("--out", f.out, "output file (prefix for multi-file dumps)");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot open " + path);
    os << text;
}

int emit(const CheckReport& rep, const Flags& f) {
    std::string fmt = f.format.value_or("json");
    write_text(f.out, fmt == "json" ? rep.to_json().dump(2) + "\n" : rep.to_tsv());
    return rep.pass ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of open mirror symmetry identities for the orbifold resolved conifold"};
    app.require_subcommand(1);
    Flags f;

    auto* disk = app.add_subcommand("check-disk", "closed-form disk potential against the curve side");
    add_knot(disk, f);
    disk->add_option("--q-order", f.q_order, "total q-degree bound");
    disk->add_option("--x-order", f.x_order, "X-degree bound (eta-degree r times this)");
    add_output(disk, f);

    auto* vser = app.add_subcommand("check-vseries", "closed-form v series against the Newton solve");
    add_knot(vser, f);
    vser->add_option("--q-order", f.q_order, "total q-degree bound");
    vser->add_option("--x-order", f.x_order, "X-degree bound (eta-degree r times this)");
    add_output(vser, f);

    int g = 0, n = 0;
    auto* gsum = app.add_subcommand("check-graphsum", "graph sum against the recursion on the p = 1 curve");
    gsum->add_option("g", g, "genus")->required();
    gsum->add_option("n", n, "number of points")->required();
    add_knot(gsum, f, false);
    gsum->add_option("--q-value,--q", f.q_value, "numeric q (rational)");
    add_output(gsum, f);

    auto* rmat = app.add_subcommand("check-rmatrix", "R-matrix limit unitarity and the q -> 0 identification");
    add_knot(rmat, f);
    rmat->add_option("--z-order", f.z_order, "compare coefficients of z^e for e below this");
    rmat->add_option("--q-value,--q", f.q_value, "numeric q for the full-curve unitarity (p = 1)");
    add_output(rmat, f);

    auto* ann = app.add_subcommand("check-annulus-q0", "annulus potential at q = 0 against the A-model formula (p = 1)");
    add_knot(ann, f, false);
    ann->add_option("--x-order", f.x_order, "X1-degree bound");
    ann->add_option("--x2-order", f.x2_order, "X2-degree bound (default: the X1 bound)");
    add_output(ann, f);

    auto* airy = app.add_subcommand("check-airy", "recursion on x = t^2, y = t against the DVV table");
    airy->add_option("--max-euler", f.max_euler, "largest 2g - 2 + n");
    add_output(airy, f);

    std::string selector;
    auto* dump = app.add_subcommand("dump", "write a series or matrix");
    dump->add_option("selector", selector, "v, w01, tau, J, F01, omega, rcheck, rlimit")->required();
    dump->add_option("g", g, "genus (omega)");
    dump->add_option("n", n, "number of points (omega)");
    add_knot(dump, f);
    dump->add_option("--q-order", f.q_order, "total q-degree bound");
    dump->add_option("--x-order", f.x_order, "X-degree bound (eta-degree r times this)");
    dump->add_option("--z-order", f.z_order, "z-order for R matrices");
    dump->add_option("--q-value,--q", f.q_value, "numeric q (omega, rcheck)");
    add_output(dump, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (disk->parsed()) return emit(check_disk(f.p, f.r, f.s_or_default(), f.q_order, f.x()), f);
        if (vser->parsed()) return emit(check_vseries(f.p, f.r, f.s_or_default(), f.q_order, f.x()), f);
        if (gsum->parsed()) {
            f.p = 1;
            return emit(check_graphsum(f.r, f.s_or_default(), g, n, f.q()), f);
        }
        if (rmat->parsed()) return emit(check_rmatrix(f.p, f.r, f.s_or_default(), f.z_order, f.q()), f);
        if (ann->parsed()) {
            f.p = 1;
            return emit(check_annulus_q0(f.r, f.s_or_default(), f.x(), f.x2_order.value_or(f.x())), f);
        }
        if (airy->parsed()) return emit(check_airy(f.max_euler), f);
        if (dump->parsed()) {
            DumpOptions o;
            o.p = f.p;
            o.r = f.r;
            o.s = f.s_or_default();
            o.q_order = f.q_order;
            o.x_order = f.x();
            o.z_order = f.z_order;
            o.q = f.q();
            o.g = g;
            o.n = n;
            bool structured = selector == "omega" || selector == "rcheck" || selector == "rlimit" || selector == "J";
            o.format = f.format.value_or(structured ? "json" : "tsv");
            auto files = dump_selector(selector, o);
            if (files.size() == 1 && files[0].suffix.empty()) {
                write_text(f.out, files[0].content);
            } else {
                std::string prefix = f.out.empty() ? selector : f.out;
                for (const auto& file : files) {
                    write_text(prefix + file.suffix, file.content);
                    std::cout << prefix + file.suffix << '\n';
                }
            }
            return kExitPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const KnotError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CurveError& e) {
        std::string what = e.what();
        bool degenerate = what.find("degenerate") != std::string::npos;
        std::cerr << (degenerate ? "degenerate geometry: " : "curve error: ") << what << '\n';
        if (degenerate) return kExitDegenerate;
        return what.find("needs p = 1") != std::string::npos ? kExitUsage : kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
