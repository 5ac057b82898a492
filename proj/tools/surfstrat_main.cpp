#include "surfstrat/oracle.hpp"
#include "surfstrat/parse.hpp"
#include "surfstrat/pipeline.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace surfstrat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUser = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::variant<ProjParam, PlaneReport> load(const std::string& path) {
    return validate(parse_param_file(read_file(path)));
}

void write_out(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write output file: " + path);
    out << content;
}

struct PointArg {
    std::vector<PolyQ> coords;  // in the extension symbol r (or constants)
    PolyQ minpoly;              // zero when rational
};

PointArg parse_point(const std::string& text, const std::string& minpoly_text) {
    PointArg out;
    std::string s = text;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ValidationError("point must look like (t0 : s0 : v0)");
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= s.size(); i++) {
        if (i == s.size() || (s[i] == ':' && depth == 0)) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        } else if (s[i] == '(') {
            depth++;
        } else if (s[i] == ')') {
            depth--;
        }
    }
    if (parts.size() != 3) throw ValidationError("point needs three coordinates (t0 : s0 : v0)");
    std::set<std::string> allowed{"r"};
    for (auto& p : parts) {
        try {
            out.coords.push_back(parse_poly(p, allowed));
        } catch (const ParseError& e) {
            throw ValidationError(std::string("bad point coordinate: ") + e.what());
        }
    }
    if (!minpoly_text.empty()) {
        try {
            out.minpoly = parse_poly(minpoly_text, allowed);
        } catch (const ParseError& e) {
            throw ValidationError(std::string("bad minimal polynomial: ") + e.what());
        }
    } else {
        for (auto& c : out.coords) {
            if (c.has_var(var("r")))
                throw ValidationError("coordinates use 'r' but no --minpoly was given");
        }
    }
    return out;
}

int cmd_mult(const std::string& input, const std::string& point_text,
             const std::string& minpoly_text) {
    auto loaded = load(input);
    if (std::holds_alternative<PlaneReport>(loaded)) {
        std::cout << "surface is a plane; every parameter point is simple\n1\n";
        return kExitOk;
    }
    ProjParam P = std::get<ProjParam>(loaded);
    PointArg pa = parse_point(point_text, minpoly_text);

    NFPtr fld;
    if (!pa.minpoly.is_zero() && pa.minpoly.degree(var("r")) >= 1)
        fld = make_number_field(pa.minpoly, var("r"), "r");
    auto to_nf = [&](const PolyQ& c) -> NFElem {
        if (!fld) {
            if (!c.is_constant())
                throw ValidationError("non-constant coordinate without a minimal polynomial");
            return c.is_zero() ? NFElem()
                               : NFElem(nullptr, UPoly<Rational>::constant(c.constant_value()));
        }
        MPoly<NFElem> l = lift_nf(c, fld);
        MPoly<NFElem> e = l.subst(var("r"), MPoly<NFElem>::constant(NFElem::generator(fld)));
        return e.is_zero() ? NFElem() : e.constant_value();
    };
    std::vector<NFElem> proj{to_nf(pa.coords[0]), to_nf(pa.coords[1]), to_nf(pa.coords[2])};
    if (proj[0].is_zero() && proj[1].is_zero() && proj[2].is_zero())
        throw ValidationError("projective point cannot be (0:0:0)");

    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    if (is_plane_generic(Pw)) {
        std::cout << "surface is a plane; every parameter point is simple\n1\n";
        return kExitOk;
    }
    SurfaceCache cache = build_cache(Pw);

    // choose the chart for the parameter point
    long m = -1;
    if (!proj[2].is_zero()) {
        AlgPoint pt;
        pt.field = fld;
        pt.coords = {proj[0] / proj[2], proj[1] / proj[2]};
        // base point check
        bool base = true;
        for (int i = 1; i <= 4 && base; i++) {
            if (!point_eval(pt, p_tilde(P, i)).is_zero()) base = false;
        }
        if (base) {
            std::cout << "base point\n";
            return kExitOk;
        }
        for (int i = 4; i >= 1 && m < 0; i--) {
            if (!point_eval(pt, p_tilde(P, i)).is_zero())
                m = multiplicity_at_point(dehomogenize(P, i, Flavor::affine), pt, cache);
        }
    } else {
        // at infinity
        auto eval_proj = [&](int i, const NFElem& tc, const NFElem& sc) {
            MPoly<NFElem> l = fld ? lift_nf(P.at(i), fld)
                                  : P.at(i).map_coeffs<NFElem>([](const Rational& r) {
                                        return NFElem(nullptr, UPoly<Rational>::constant(r));
                                    });
            MPoly<NFElem> e = l.eval_partial(
                {{var("t"), tc}, {var("s"), sc}, {var("v"), NFElem()}});
            return e.is_zero() ? NFElem() : e.constant_value();
        };
        bool base = true;
        for (int i = 1; i <= 4 && base; i++) {
            if (!eval_proj(i, proj[0], proj[1]).is_zero()) base = false;
        }
        if (base) {
            std::cout << "base point\n";
            return kExitOk;
        }
        if (proj[0].is_zero()) {
            // (0:1:0): tilde chart at (t~, v~) = (0, 0)
            for (int i = 1; i <= 4 && m < 0; i++) {
                if (!eval_proj(i, NFElem(), proj[1]).is_zero()) {
                    AlgPoint origin;
                    origin.coords = {NFElem(), NFElem()};
                    m = multiplicity_at_point(dehomogenize(P, i, Flavor::tilde), origin, cache);
                }
            }
        } else {
            // (1:lambda:0): hat chart at (s^, v^) = (lambda, 0)
            NFElem lam = proj[1] / proj[0];
            for (int i = 1; i <= 4 && m < 0; i++) {
                NFElem one = fld ? NFElem::from_base(fld, Rational(1))
                                 : NFElem(nullptr, UPoly<Rational>::constant(Rational(1)));
                if (!eval_proj(i, one, lam).is_zero()) {
                    AlgPoint pt;
                    pt.field = fld;
                    pt.coords = {lam, NFElem()};
                    m = multiplicity_at_point(dehomogenize(P, i, Flavor::hat), pt, cache);
                }
            }
        }
    }
    if (m < 0) throw InternalError("no chart classified the point");
    std::cout << m << "\n";
    return kExitOk;
}

int cmd_degrees(const std::string& input) {
    auto loaded = load(input);
    if (std::holds_alternative<PlaneReport>(loaded)) {
        std::cout << "surface is a plane (p_i proportional to p_j)\n";
        return kExitOk;
    }
    ProjParam P = std::get<ProjParam>(loaded);
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    if (is_plane_generic(Pw)) {
        std::cout << "surface is a plane\n";
        return kExitOk;
    }
    SurfaceCache c = build_cache(Pw);
    const char* names[3] = {"x", "y", "z"};
    std::cout << "map degree n2 = " << c.n2 << "\n";
    std::cout << "deg Phi23(A0) n1 = " << c.n1 << "\n";
    std::cout << "surface degree = " << c.deg_z << "\n";
    std::cout << "partial degree w.r.t. " << names[c.change.perm[0]] << " = " << c.partial_deg
              << "\n";
    std::cout << "A0 = (" << c.A0[0].str() << ", " << c.A0[1].str() << ", " << c.A0[2].str()
              << ")\n";
    return kExitOk;
}

int cmd_offpoint(const std::string& input) {
    auto loaded = load(input);
    if (std::holds_alternative<PlaneReport>(loaded)) {
        std::cout << "surface is a plane; any point off it works trivially\n";
        return kExitOk;
    }
    ProjParam P = std::get<ProjParam>(loaded);
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    if (is_plane_generic(Pw)) {
        std::cout << "surface is a plane\n";
        return kExitOk;
    }
    long pairs = 0;
    auto A0 = off_surface_point(Pw, &pairs);
    std::cout << "A0 = (" << A0[0].str() << ", " << A0[1].str() << ", " << A0[2].str() << ")\n";
    std::cout << "verified after " << pairs << " (lambda, mu) pair(s)\n";
    return kExitOk;
}

int cmd_oracle_check(const std::string& input, int points, uint64_t seed) {
    auto loaded = load(input);
    if (std::holds_alternative<PlaneReport>(loaded)) {
        std::cout << "plane input: nothing to cross-check\n";
        return kExitOk;
    }
    ProjParam P = std::get<ProjParam>(loaded);
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    if (is_plane_generic(Pw)) {
        std::cout << "plane input: nothing to cross-check\n";
        return kExitOk;
    }
    SurfaceCache cache = build_cache(Pw);
    ImplicitSurface S = implicitize(Pw);
    std::cout << "oracle implicit degree = " << S.degree() << " (pipeline " << cache.deg_z
              << ")\n";
    if (S.degree() != cache.deg_z) {
        std::cout << "DEGREE MISMATCH\n";
        return kExitInternal;
    }
    uint64_t st = seed ? seed : 1;
    auto next = [&]() {
        st ^= st << 13;
        st ^= st >> 7;
        st ^= st << 17;
        return st;
    };
    int done = 0, bad = 0;
    while (done < points) {
        Rational t0(static_cast<long>(next() % 31) - 15);
        Rational s0(static_cast<long>(next() % 31) - 15);
        try {
            long mine = multiplicity_at_param(Pw, t0, s0, cache);
            std::map<VarId, Rational> at{{var("t"), t0}, {var("s"), s0}};
            std::array<Rational, 3> A;
            for (int i = 0; i < 3; i++)
                A[i] = Pw.comp[i].num().eval_all(at) / Pw.comp[i].den().eval_all(at);
            long oracle = mult_translate(S, A);
            done++;
            if (mine != oracle) {
                bad++;
                std::cout << "mismatch at (" << t0.str() << ", " << s0.str() << "): " << mine
                          << " vs oracle " << oracle << "\n";
            }
        } catch (const ValidationError&) {
            // on a denominator locus: resample
        }
    }
    std::cout << "checked " << done << " parameter points, " << bad << " mismatch(es)\n";
    return bad == 0 ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratification of the parameter plane of a rational surface parametrization "
                 "by the multiplicity of the image point"};
    app.require_subcommand(1);

    std::string input, point_text, minpoly_text;
    std::string json_path, svg_path;
    bool text_out = false, with_oracle = false;
    int sample_verify = 0;
    int oracle_points = 20;
    long max_ext = 16;
    double timeout = 0;
    uint64_t seed = 20240101;

    auto* analyze_cmd = app.add_subcommand("analyze", "decompose the parameter plane into strata");
    analyze_cmd->add_option("input", input, "input file (p1..p4 in t,s,v)")->required();
    analyze_cmd->add_option("--json", json_path, "write the JSON report to a file ('-' = stdout)");
    analyze_cmd->add_option("--svg", svg_path, "write the parameter-plane picture");
    analyze_cmd->add_flag("--text", text_out, "print a human-readable summary (default)");
    analyze_cmd->add_option("--sample-verify", sample_verify,
                            "re-check n sampled points per piece after the run");
    analyze_cmd->add_option("--seed", seed, "seed for sampling-based verification");
    analyze_cmd->add_option("--max-ext-degree", max_ext,
                            "cap on the algebraic degree of pointwise runs");
    analyze_cmd->add_option("--timeout", timeout, "soft time budget in seconds");
    analyze_cmd->add_flag("--oracle", with_oracle,
                          "cross-check sampled multiplicities against the implicitization oracle");

    auto* mult_cmd = app.add_subcommand("mult", "multiplicity of one parameter point");
    mult_cmd->add_option("input", input)->required();
    mult_cmd->add_option("point", point_text, "projective point, e.g. \"(0:1:0)\"")->required();
    mult_cmd->add_option("--minpoly", minpoly_text, "minimal polynomial of r, e.g. \"r^2+1\"");

    auto* deg_cmd = app.add_subcommand("degrees", "n2, n1, partial degree and surface degree");
    deg_cmd->add_option("input", input)->required();

    auto* off_cmd = app.add_subcommand("offpoint", "a verified point off the surface");
    off_cmd->add_option("input", input)->required();

    auto* oc_cmd = app.add_subcommand("oracle-check",
                                      "compare against the implicitization oracle (test aid)");
    oc_cmd->add_option("input", input)->required();
    oc_cmd->add_option("--points", oracle_points, "number of sampled parameter points");
    oc_cmd->add_option("--seed", seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze_cmd)) {
            auto loaded = load(input);
            Decomposition D;
            if (std::holds_alternative<PlaneReport>(loaded)) {
                auto pr = std::get<PlaneReport>(loaded);
                std::cout << "surface is a plane (p" << pr.i << " = " << pr.lambda.str() << " * p"
                          << pr.j << "); all points simple\n";
                return kExitOk;
            }
            AnalyzeOptions opt;
            opt.max_ext_degree = max_ext;
            opt.seed = seed;
            opt.timeout_seconds = timeout;
            D = analyze(std::get<ProjParam>(loaded), opt);
            if (!json_path.empty()) write_out(json_path, to_json(D));
            if (!svg_path.empty()) write_out(svg_path, to_svg(D));
            if (json_path.empty() || text_out) std::cout << to_text(D);
            if (sample_verify > 0) {
                VerifyReport rep = verify_samples(D, sample_verify, seed);
                std::cout << "sample verification: " << rep.checked << " checked, "
                          << rep.mismatches << " mismatch(es), " << rep.grid_errors
                          << " partition error(s)\n";
                for (auto& d : rep.details) std::cout << "  " << d << "\n";
                if (rep.mismatches || rep.grid_errors) return kExitInternal;
            }
            if (with_oracle) {
                int rc = cmd_oracle_check(input, oracle_points, seed);
                if (rc != kExitOk) return rc;
            }
            return kExitOk;
        }
        if (app.got_subcommand(mult_cmd)) return cmd_mult(input, point_text, minpoly_text);
        if (app.got_subcommand(deg_cmd)) return cmd_degrees(input);
        if (app.got_subcommand(off_cmd)) return cmd_offpoint(input);
        if (app.got_subcommand(oc_cmd)) return cmd_oracle_check(input, oracle_points, seed);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const OracleError& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUser;
}
