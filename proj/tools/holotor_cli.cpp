// holotor: classify special structures on frames with constant structure
// coefficients, build warped structures over an interval, and verify the
// Einstein realizability tables.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 input/usage error.
// HOLOTOR_TOL overrides the default 1e-9 tolerance; --json emits a single
// structured document instead of the human-readable report.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "holotor/catalog.hpp"
#include "holotor/io.hpp"
#include "holotor/riemann.hpp"
#include "holotor/tables.hpp"
#include "holotor/warp.hpp"

using namespace holotor;
using ordered_json = nlohmann::ordered_json;

namespace {

double base_tol() {
    if (const char* env = std::getenv("HOLOTOR_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || v <= 0.0)
            throw std::invalid_argument("HOLOTOR_TOL must be a positive number");
        return v;
    }
    return 1e-9;
}

/// Stable numeric formatting so reports are byte-identical across runs.
std::string num(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return in.good();
}

/// A frame argument is either a catalog fiber name or a path to a frame file.
FrameAlgebra frame_from_arg(const std::string& arg) {
    if (!file_exists(arg)) {
        SU3FiberEntry e = load_su3_fiber(arg);  // throws for unknown names
        if (!e.frame_backed())
            throw std::invalid_argument("catalog entry '" + arg +
                                        "' is torsion data only and has no frame");
        return *e.frame;
    }
    return load_frame_file(arg).frame;
}

SU3FiberEntry su3_fiber_from_arg(const std::string& arg) {
    if (!file_exists(arg)) return load_su3_fiber(arg);
    FrameFile ff = load_frame_file(arg);
    if (ff.frame.dim != 6)
        throw std::invalid_argument("fiber frame file must be 6-dimensional");
    SU3FiberEntry e;
    e.name = arg;
    e.structure = canonical_su3();
    e.frame = ff.frame;
    e.torsion = su3_torsion(e.structure, ff.frame);
    e.note = "loaded from frame file";
    return e;
}

struct Options {
    bool json = false;
};

void emit(const Options& opt, const ordered_json& doc, const std::string& human) {
    if (opt.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

// ---------------------------------------------------------------------------

int cmd_classify_su3(const Options& opt, const std::string& frame_arg) {
    FrameAlgebra frame = frame_from_arg(frame_arg);
    if (frame.dim != 6) throw std::invalid_argument("classify-su3 needs a 6-dimensional frame");
    auto v = frame.validate();
    if (!v.ok) throw std::invalid_argument("frame fails d^2 = 0");
    SU3Structure s = canonical_su3();
    TorsionSU3 t = su3_torsion(s, frame);
    SU3Class cls = su3_class(t);
    Exact scal = su3_scalar(t, frame);
    auto slot_norm = [](const Form<Exact>& x) { return std::sqrt(std::abs(norm2(x).to_double())); };

    ordered_json doc;
    doc["command"] = "classify-su3";
    doc["frame"] = frame_arg;
    doc["class"] = cls.name();
    ordered_json slots;
    slots["pi0"] = to_string(t.pi0);
    slots["sigma0"] = to_string(t.sigma0);
    slots["|pi1|"] = num(slot_norm(t.pi1));
    slots["|nu1|"] = num(slot_norm(t.nu1));
    slots["|pi2|"] = num(slot_norm(t.pi2));
    slots["|sigma2|"] = num(slot_norm(t.sigma2));
    slots["|nu3|"] = num(slot_norm(t.nu3));
    doc["torsion"] = slots;
    if (cls.coupled_c) doc["coupled_c"] = to_string(*cls.coupled_c);
    doc["scal"] = to_string(scal);

    std::ostringstream os;
    os << "classify-su3 " << frame_arg << "\n"
       << "  class      " << cls.name() << "\n"
       << "  pi0        " << to_string(t.pi0) << "\n"
       << "  sigma0     " << to_string(t.sigma0) << "\n"
       << "  |pi1|      " << num(slot_norm(t.pi1)) << "\n"
       << "  |nu1|      " << num(slot_norm(t.nu1)) << "\n"
       << "  |pi2|      " << num(slot_norm(t.pi2)) << "\n"
       << "  |sigma2|   " << num(slot_norm(t.sigma2)) << "\n"
       << "  |nu3|      " << num(slot_norm(t.nu3)) << "\n";
    if (cls.coupled_c) os << "  coupled_c  " << to_string(*cls.coupled_c) << "\n";
    os << "  scal       " << to_string(scal) << "\n";
    emit(opt, doc, os.str());
    return 0;
}

int cmd_classify_g2(const Options& opt, const std::string& fiber_arg, const std::string& spec,
                    int grid_n, double tol) {
    SU3FiberEntry fiber = su3_fiber_from_arg(fiber_arg);
    G2Family fam = make_g2_family(spec, fiber);
    WarpProfile w = fam.profile;
    table_detail::clamp_window(w.t_min, w.t_max, w.f_name);
    FamilyClassification cl = classify_g2_family(fiber, w, grid_n, tol);
    double scal_dev = 0.0, max_residual = 0.0;
    double tau0_min = 0.0, tau0_max = 0.0;
    bool first = true;
    for (double t : cl.grid) {
        WarpedG2Result r = warped_g2_torsion(fiber, w, t);
        scal_dev = std::max(scal_dev, std::abs(r.scal - 7.0 * fam.lambda));
        tau0_min = first ? r.torsion_h.tau0.v : std::min(tau0_min, r.torsion_h.tau0.v);
        tau0_max = first ? r.torsion_h.tau0.v : std::max(tau0_max, r.torsion_h.tau0.v);
        for (double c : cor_g2_conditions(fiber, w, t)) max_residual = std::max(max_residual, c);
        first = false;
    }
    bool pass = (cl.cls == fam.expected_class) && cl.max_unit_residual < tol && scal_dev < tol;

    ordered_json doc;
    doc["command"] = "classify-g2";
    doc["fiber"] = fiber_arg;
    doc["family"] = spec;
    doc["description"] = fam.description;
    doc["class"] = cl.cls.name();
    doc["expected_class"] = fam.expected_class.name();
    doc["lambda"] = num(fam.lambda);
    doc["tau0_min"] = num(tau0_min);
    doc["tau0_max"] = num(tau0_max);
    doc["scal_min"] = num(cl.scal_min);
    doc["scal_max"] = num(cl.scal_max);
    doc["max_scal_deviation"] = num(scal_dev);
    doc["max_condition_residual"] = num(max_residual);
    doc["grid_points"] = grid_n;
    doc["tol"] = num(tol);
    doc["pass"] = pass;

    std::ostringstream os;
    os << "classify-g2 " << fiber_arg << " / " << spec << "\n"
       << "  family           " << fam.description << "\n"
       << "  class            " << cl.cls.name() << " (expected " << fam.expected_class.name()
       << ")\n"
       << "  lambda           " << num(fam.lambda) << "\n"
       << "  tau0             [" << num(tau0_min) << ", " << num(tau0_max) << "]\n"
       << "  scal             [" << num(cl.scal_min) << ", " << num(cl.scal_max) << "]\n"
       << "  |scal - 7*l|     " << num(scal_dev) << "\n"
       << "  max residual     " << num(max_residual) << "\n"
       << "  verdict          " << (pass ? "pass" : "FAIL") << "\n";
    emit(opt, doc, os.str());
    return pass ? 0 : 1;
}

int cmd_classify_spin7(const Options& opt, const std::string& fiber_arg, const std::string& f_name,
                       int grid_n, double tol) {
    G2FiberEntry fiber = load_g2_fiber(fiber_arg);
    ScalarFn f_fn = named_fn(f_name);
    auto [lo, hi] = warp_detail::default_domain(f_name);
    table_detail::clamp_window(lo, hi, f_name);
    Spin7Class cls = classify_spin7_family(fiber, f_fn, lo, hi, grid_n, tol);
    std::optional<double> lambda;
    try {
        lambda = profile_lambda(f_name, fiber.mu.to_double(), 7);
    } catch (const HypothesisError&) {
        // not an Einstein pairing; report the class without a Scal check
    }
    double scal_min = 0.0, scal_max = 0.0, scal_dev = 0.0;
    bool first = true;
    for (double t : chebyshev_grid(lo, hi, grid_n)) {
        double s = warped_spin7_torsion(fiber, f_fn, t).scal;
        scal_min = first ? s : std::min(scal_min, s);
        scal_max = first ? s : std::max(scal_max, s);
        if (lambda) scal_dev = std::max(scal_dev, std::abs(s - 8.0 * *lambda));
        first = false;
    }
    bool pass = !lambda || scal_dev < tol;

    ordered_json doc;
    doc["command"] = "classify-spin7";
    doc["fiber"] = fiber_arg;
    doc["f"] = f_name;
    doc["class"] = cls.name();
    if (lambda) {
        doc["lambda"] = num(*lambda);
        doc["max_scal_deviation"] = num(scal_dev);
    }
    doc["scal_min"] = num(scal_min);
    doc["scal_max"] = num(scal_max);
    doc["grid_points"] = grid_n;
    doc["tol"] = num(tol);
    doc["pass"] = pass;

    std::ostringstream os;
    os << "classify-spin7 " << fiber_arg << " x f = " << f_name << "\n"
       << "  class            " << cls.name() << "\n"
       << "  scal             [" << num(scal_min) << ", " << num(scal_max) << "]\n";
    if (lambda)
        os << "  lambda           " << num(*lambda) << "\n"
           << "  |scal - 8*l|     " << num(scal_dev) << "\n";
    else
        os << "  lambda           (not an Einstein pairing)\n";
    os << "  verdict          " << (pass ? "pass" : "FAIL") << "\n";
    emit(opt, doc, os.str());
    return pass ? 0 : 1;
}

int cmd_ricci(const Options& opt, const std::string& frame_arg, std::optional<double> mu,
              double tol) {
    FrameAlgebra frame = frame_from_arg(frame_arg);
    auto ric = ricci(frame);
    double trace = 0.0;
    for (int i = 0; i < frame.dim; ++i) trace += ric[i][i];
    double mu_used = mu ? *mu : trace / frame.dim;
    EinsteinReport rep = einstein_verify(frame, mu_used, tol);

    ordered_json doc;
    doc["command"] = "ricci";
    doc["frame"] = frame_arg;
    doc["mu"] = num(mu_used);
    doc["mu_source"] = mu ? "given" : "fitted";
    doc["scal"] = num(rep.scal);
    doc["max_deviation"] = num(rep.max_deviation);
    doc["tol"] = num(tol);
    doc["pass"] = rep.ok;
    ordered_json diag = ordered_json::array();
    for (int i = 0; i < frame.dim; ++i) diag.push_back(num(ric[i][i]));
    doc["ricci_diagonal"] = diag;

    std::ostringstream os;
    os << "ricci " << frame_arg << "\n"
       << "  mu               " << num(mu_used) << (mu ? " (given)" : " (fitted)") << "\n"
       << "  scal             " << num(rep.scal) << "\n"
       << "  |Ric - mu*id|    " << num(rep.max_deviation) << "\n"
       << "  verdict          " << (rep.ok ? "pass" : "FAIL") << "\n";
    emit(opt, doc, os.str());
    return rep.ok ? 0 : 1;
}

int cmd_verify_tables(const Options& opt, int which, double tol) {
    std::vector<RowReport> reports = verify_table(which, tol);
    bool all_ok = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream os;
    os << "verify-tables" << (which == 0 ? "" : " --table " + std::to_string(which)) << "\n";
    for (const RowReport& rep : reports) {
        all_ok = all_ok && rep.pass;
        ordered_json row;
        row["class"] = rep.cls;
        row["realizable"] = rep.realizable;
        row["pass"] = rep.pass;
        row["max_scal_deviation"] = num(rep.max_scal_dev);
        row["details"] = rep.details;
        rows.push_back(row);
        os << "  " << (rep.pass ? "[ok]  " : "[FAIL]") << " " << rep.cls;
        if (!rep.realizable)
            os << " (expected-absent)";
        else
            os << "  max dev " << num(rep.max_scal_dev);
        os << "\n";
        for (const std::string& d : rep.details) os << "         " << d << "\n";
    }
    os << (all_ok ? "all rows pass" : "verification failures present") << "\n";
    ordered_json doc;
    doc["command"] = "verify-tables";
    doc["table"] = which == 0 ? "all" : std::to_string(which);
    doc["tol"] = num(tol);
    doc["rows"] = rows;
    doc["pass"] = all_ok;
    emit(opt, doc, os.str());
    return all_ok ? 0 : 1;
}

int cmd_crosscheck(const Options& opt, const std::string& fiber_arg, const std::string& spec,
                   int grid_n, double tol) {
    double worst = 0.0, worst_star = 0.0, worst_membership = 0.0;
    bool all_ok = true;
    std::string mode;
    std::optional<SU3FiberEntry> su3_fiber;
    try {
        su3_fiber = su3_fiber_from_arg(fiber_arg);
    } catch (const std::invalid_argument&) {
        // fall through to the 7-dimensional fiber catalog below
    }
    if (su3_fiber) {
        if (!su3_fiber->frame_backed())
            throw std::invalid_argument("crosscheck needs a frame-backed fiber; '" + fiber_arg +
                                        "' is torsion data only");
        G2Family fam = make_g2_family(spec, *su3_fiber);
        WarpProfile w = fam.profile;
        table_detail::clamp_window(w.t_min, w.t_max, w.f_name);
        mode = "warped 7-dim";
        for (double t : chebyshev_grid(w.t_min, w.t_max, grid_n)) {
            CrosscheckReport rep = warped_g2_generic_crosscheck(*su3_fiber, w, t, tol);
            worst = std::max(worst, rep.max_deviation / rep.reference);
            worst_star = std::max(worst_star, rep.star_residual / rep.reference);
            worst_membership = std::max(worst_membership, rep.membership_residual / rep.reference);
            all_ok = all_ok && rep.ok;
        }
    } else {
        // The family argument names a warping function in this mode.
        G2FiberEntry fiber = load_g2_fiber(fiber_arg);
        ScalarFn f_fn = named_fn(spec);
        auto [lo, hi] = warp_detail::default_domain(spec);
        table_detail::clamp_window(lo, hi, spec);
        mode = "warped 8-dim";
        for (double t : chebyshev_grid(lo, hi, grid_n)) {
            CrosscheckReport rep = warped_spin7_generic_crosscheck(fiber, f_fn, t, tol);
            worst = std::max(worst, rep.max_deviation / rep.reference);
            worst_star = std::max(worst_star, rep.star_residual / rep.reference);
            worst_membership = std::max(worst_membership, rep.membership_residual / rep.reference);
            all_ok = all_ok && rep.ok;
        }
    }

    ordered_json doc;
    doc["command"] = "crosscheck";
    doc["fiber"] = fiber_arg;
    doc["family"] = spec;
    doc["mode"] = mode;
    doc["grid_points"] = grid_n;
    doc["max_relative_deviation"] = num(worst);
    doc["max_star_residual"] = num(worst_star);
    doc["max_membership_residual"] = num(worst_membership);
    doc["tol"] = num(tol);
    doc["pass"] = all_ok;

    std::ostringstream os;
    os << "crosscheck " << fiber_arg << " / " << spec << " (" << mode << ")\n"
       << "  closed form vs generic extraction over " << grid_n << " grid points\n"
       << "  max relative deviation   " << num(worst) << "\n"
       << "  max star residual        " << num(worst_star) << "\n"
       << "  max membership residual  " << num(worst_membership) << "\n"
       << "  verdict                  " << (all_ok ? "pass" : "FAIL") << "\n";
    emit(opt, doc, os.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"holotor: intrinsic-torsion classification and warped Einstein verification"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "structured output only");

    std::string frame_arg, fiber_arg, family_spec, f_name;
    int grid_n = 17, table = 0;
    double tol_flag = -1.0;
    std::optional<double> mu;

    CLI::App* su3 = app.add_subcommand("classify-su3", "torsion, class, and scalar of a 6-dim frame");
    su3->add_option("--frame", frame_arg, "frame file or catalog fiber name")->required();

    CLI::App* g2 = app.add_subcommand("classify-g2", "warped structure over a 6-dim fiber");
    g2->add_option("--fiber", fiber_arg, "catalog fiber name or frame file")->required();
    g2->add_option("--family", family_spec, "family spec, e.g. sine_cone_np:eps=1")->required();
    g2->add_option("--t-grid", grid_n, "number of grid points");
    g2->add_option("--tol", tol_flag, "vanishing threshold");

    CLI::App* spin7 = app.add_subcommand("classify-spin7", "warped structure over a 7-dim fiber");
    spin7->add_option("--fiber", fiber_arg, "catalog fiber name")->required();
    spin7->add_option("--f", f_name, "warping function: t, sin, sinh, cosh, exp")->required();
    spin7->add_option("--t-grid", grid_n, "number of grid points");
    spin7->add_option("--tol", tol_flag, "vanishing threshold");

    CLI::App* ric = app.add_subcommand("ricci", "Ricci tensor and Einstein verification");
    ric->add_option("--frame", frame_arg, "frame file or catalog fiber name")->required();
    ric->add_option("--mu", mu, "Einstein constant to verify (default: fitted)");

    CLI::App* tables = app.add_subcommand("verify-tables", "reproduce the realizability tables");
    tables->add_option("--table", table, "5 or 6 (default: both)")->check(CLI::IsMember({5, 6}));

    CLI::App* cross = app.add_subcommand("crosscheck", "closed-form vs generic torsion extraction");
    cross->add_option("--fiber", fiber_arg, "frame-backed catalog fiber name")->required();
    cross->add_option("--family", family_spec, "family spec (7-dim) or warping function (8-dim)")
        ->required();
    cross->add_option("--t-grid", grid_n, "number of grid points");
    cross->add_option("--tol", tol_flag, "agreement threshold");

    // Accept --json after the subcommand name as well.
    for (CLI::App* sub : {su3, g2, spin7, ric, tables, cross}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        double tol = tol_flag > 0.0 ? tol_flag : base_tol();
        if (su3->parsed()) return cmd_classify_su3(opt, frame_arg);
        if (g2->parsed()) return cmd_classify_g2(opt, fiber_arg, family_spec, grid_n, tol);
        if (spin7->parsed()) return cmd_classify_spin7(opt, fiber_arg, f_name, grid_n, tol);
        if (ric->parsed()) return cmd_ricci(opt, frame_arg, mu, tol);
        if (tables->parsed()) return cmd_verify_tables(opt, table, tol);
        if (cross->parsed()) return cmd_crosscheck(opt, fiber_arg, family_spec, grid_n, tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
