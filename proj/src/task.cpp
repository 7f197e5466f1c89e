#include "momentum/task.hpp"

#include "momentum/error.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace momentum {

namespace {

const std::set<std::string> kTop = {"task", "data", "parameters", "numeric_mode", "epsilon", "output", "sweep", "description"};
const std::set<std::string> kParams = {"c",          "lambda",    "variant",   "alpha",     "b",   "dphi_minus",
                                       "dphi_plus",  "convention", "b_range",  "grid",      "r_samples",
                                       "tau_samples", "tau0",     "t0",        "phi"};
const std::set<std::string> kTasks = {"analyze", "profile", "c0", "einstein", "table2", "extremal", "coords", "sweep"};

std::string g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct Ctx {
    NumericMode mode;
    Json params = Json::object();
    TaskResult out;

    bool has(const char* k) const { return params.contains(k); }
    Scalar scalar(const char* k) const {
        if (!has(k)) throw InvalidInput(std::string("parameter '") + k + "' is required for this task");
        return scalar_from_json(params[k], mode, std::string("parameters.") + k);
    }
    Scalar scalar_or(const char* k, const Scalar& dflt) const { return has(k) ? scalar(k) : dflt; }
    Variant variant() const {
        std::string v = params.value("variant", std::string("A"));
        if (v == "A") return Variant::A;
        if (v == "B") return Variant::B;
        throw InvalidInput("parameters.variant must be \"A\" or \"B\"");
    }
    std::vector<double> doubles(const char* k) const {
        std::vector<double> v;
        if (!params[k].is_array()) throw InvalidInput(std::string("parameters.") + k + " must be an array");
        NumericMode fl{false, mode.epsilon};
        for (const auto& x : params[k]) v.push_back(x.is_number() ? x.get<double>() : scalar_from_json(x, fl, k).to_double());
        return v;
    }
    void table(const std::string& name, std::string csv) {
        out.report["tables"].push_back("tables/" + name);
        out.tables.emplace_back(name, std::move(csv));
    }
};

const HorizontalData& need_horizontal(const AnyData& d, const std::string& task) {
    if (auto* h = std::get_if<HorizontalData>(&d)) return *h;
    throw InvalidInput("task " + task + " needs line-bundle (horizontal) data");
}

// Worker pool over indices; results are written by index so order is stable.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex m;
    auto loop = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(m);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(loop);
    loop();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

std::vector<double> default_taus(const Domain& d) {
    std::vector<double> v;
    if (d.lower.is_finite() && d.upper.is_finite()) {
        double a = d.lower.value.to_double(), b = d.upper.value.to_double();
        for (int k = 1; k < 20; ++k) v.push_back(a + (b - a) * k / 20.0);
    } else if (d.lower.is_finite()) {
        for (int k = -4; k <= 6; ++k) v.push_back(d.lower.value.to_double() + std::ldexp(1.0, k));
    } else if (d.upper.is_finite()) {
        for (int k = 6; k >= -4; --k) v.push_back(d.upper.value.to_double() - std::ldexp(1.0, k));
    } else {
        for (int k = -8; k <= 8; ++k) v.push_back(k);
    }
    return v;
}

Json scalar_checks(const RationalFn& phi, const RationalFn& sigma, const Scalar& c) {
    Json j;
    j["sigma"] = sigma.str();
    j["sigma_equals_c"] = (sigma - RationalFn(c)).is_zero();
    j["phi_at_0"] = phi.den().eval(Scalar(0)).is_zero() ? Json() : to_json(phi.eval(Scalar(0)));
    RationalFn d = phi.derivative();
    j["dphi_at_0"] = d.den().eval(Scalar(0)).is_zero() ? Json() : to_json(d.eval(Scalar(0)));
    return j;
}

void coords_table(Ctx& ctx, const RationalFn& phi, const Domain& dom, const std::string& name) {
    double tau0 = ctx.has("tau0") ? ctx.scalar("tau0").to_double() : Coordinates::default_tau0(phi, dom);
    double t0 = ctx.has("t0") ? ctx.scalar("t0").to_double() : 0.0;
    Coordinates co(phi, dom, tau0, t0);
    Json j;
    j["tau0"] = tau0;
    j["t0"] = t0;
    j["t_lower"] = to_json(co.t_end(-1));
    j["t_upper"] = to_json(co.t_end(+1));
    j["s_lower"] = to_json(co.s_end(-1));
    j["s_upper"] = to_json(co.s_end(+1));
    double rmin = co.r_min(), rmax = co.r_max();
    j["r_min"] = std::isinf(rmin) ? Json("inf") : Json(rmin);
    j["r_max"] = std::isinf(rmax) ? Json("inf") : Json(rmax);
    CoordTable t;
    if (ctx.has("r_samples")) t = co.table_at_r(ctx.doubles("r_samples"));
    else t = co.table_at_tau(ctx.has("tau_samples") ? ctx.doubles("tau_samples") : default_taus(dom));
    j["rows"] = t.rows.size();
    ctx.out.report["coordinates"] = j;
    ctx.table(name, t.csv());
}

void task_analyze(Ctx& ctx, const AnyData& data) {
    Json& r = ctx.out.report;
    if (auto* v = std::get_if<VectorBundleData>(&data)) {
        r["rank"] = v->rank();
        r["q"] = v->q().str();
        r["r"] = v->r().str();
        r["r_infinity"] = to_json(v->r_infinity());
        ThresholdAnalysis t = c_threshold_vb(*v);
        r["c0"] = to_json(t.c0);
        r["threshold"] = to_json(t);
        r["exceptional"] = to_json(exceptional_curvatures_vb(*v));
        if (ctx.has("c")) r["classification"] = to_json(classify_csc_vb(*v, ctx.scalar("c")));
        ctx.out.summary = "c0=" + t.c0.str();
        return;
    }
    const auto& d = std::get<HorizontalData>(data);
    Variant var = ctx.variant();
    r["variant"] = to_string(var);
    r["dimension"] = d.dimension();
    r["q"] = d.q().str();
    r["r"] = d.r().str();
    r["p"] = d.p().str();
    r["r_infinity"] = to_json(d.r_infinity());
    ThresholdAnalysis t = c_threshold(d, var);
    auto [lo, hi] = c0_bounds(d);
    r["c0"] = to_json(t.c0);
    r["c0_bounds"] = {to_json(lo), to_json(hi)};
    r["threshold"] = to_json(t);
    r["exceptional"] = to_json(exceptional_curvatures(d, var));
    if (ctx.has("c")) r["classification"] = to_json(classify_csc(d, ctx.scalar("c"), var));
    ctx.out.summary = "c0=" + t.c0.str();
}

void task_c0(Ctx& ctx, const AnyData& data) {
    Json& r = ctx.out.report;
    ThresholdAnalysis t;
    if (auto* v = std::get_if<VectorBundleData>(&data)) {
        t = c_threshold_vb(*v);
        auto [lo, hi] = c0_bounds(csc_system_vb(*v));
        r["c0"] = to_json(t.c0);
        r["c0_bounds"] = {to_json(lo), to_json(hi)};
    } else {
        const auto& d = std::get<HorizontalData>(data);
        Variant var = ctx.variant();
        t = c_threshold(d, var);
        auto [lo, hi] = c0_bounds(csc_system(d, var));
        r["variant"] = to_string(var);
        r["c0"] = to_json(t.c0);
        r["c0_bounds"] = {to_json(lo), to_json(hi)};
    }
    r["threshold"] = to_json(t);
    ctx.out.summary = "c0=" + t.c0.str() + (t.c0_exact ? "" : " (approx)");
}

void task_profile(Ctx& ctx, const AnyData& data) {
    Json& r = ctx.out.report;
    Scalar c = ctx.scalar("c");
    if (auto* v = std::get_if<VectorBundleData>(&data)) {
        RationalFn phi = csc_profile_c(*v, c);
        r["phi"] = phi.str();
        r["checks"] = scalar_checks(phi, scalar_curvature_vb(*v, phi), c);
        VbClassification k = classify_csc_vb(*v, c);
        r["classification"] = to_json(k);
        if (k.base.valid) coords_table(ctx, phi, k.base.domain.interior(), "profile.csv");
        ctx.out.summary = "habitat=" + k.habitat;
        return;
    }
    const auto& d = std::get<HorizontalData>(data);
    Variant var = ctx.variant();
    RationalFn phi = csc_profile(d, c, var);
    r["variant"] = to_string(var);
    r["phi"] = phi.str();
    r["checks"] = scalar_checks(phi, scalar_curvature(d, phi), c);
    CscClassification k = classify_csc(d, c, var);
    r["classification"] = to_json(k);
    if (k.valid) coords_table(ctx, phi, k.domain.interior(), "profile.csv");
    ctx.out.summary = "habitat=" + k.habitat.kind;
}

void task_einstein(Ctx& ctx, const AnyData& data) {
    Json& r = ctx.out.report;
    EinsteinVerdict ev;
    RationalFn phi;
    if (auto* v = std::get_if<VectorBundleData>(&data)) {
        phi = ctx.has("lambda") ? einstein_profile_vb(*v, ctx.scalar("lambda")) : csc_profile_c(*v, ctx.scalar("c"));
        ev = einstein_check_vb(*v, phi);
    } else {
        const auto& d = std::get<HorizontalData>(data);
        Variant var = ctx.variant();
        r["variant"] = to_string(var);
        phi = ctx.has("lambda") ? einstein_profile(d, ctx.scalar("lambda"), var) : csc_profile(d, ctx.scalar("c"), var);
        ev = is_einstein(d, phi);
        if (ev.einstein)
            r["identity_holds"] = var == Variant::A ? einstein_identity_check(d, ev.lambda) : einstein_identity_check_b(d, ev.lambda);
    }
    r["phi"] = phi.str();
    r["einstein"] = to_json(ev);
    ctx.out.summary = ev.einstein ? "einstein lambda=" + ev.lambda.str() : "not einstein";
}

void task_table2(Ctx& ctx) {
    Scalar c = ctx.scalar_or("c", Scalar(1)), alpha = ctx.scalar_or("alpha", Scalar(1));
    auto rows = ctx.has("r_samples") ? table2_generate(c, alpha, ctx.doubles("r_samples")) : table2_generate(c, alpha);
    Json& r = ctx.out.report;
    r["c"] = to_json(c);
    r["alpha"] = to_json(alpha);
    r["rows"] = Json::array();
    double worst = 0;
    for (const auto& row : rows) {
        r["rows"].push_back(to_json(row));
        worst = std::max(worst, row.max_error);
    }
    ctx.table("table2.csv", table2_csv(rows));
    ctx.out.summary = "rows=" + std::to_string(rows.size()) + " max_factor_error=" + g12(worst);
}

MomentConvention convention(const Ctx& ctx) {
    std::string s = ctx.params.value("convention", std::string("derived"));
    if (s == "derived") return MomentConvention::derived;
    if (s == "literal") return MomentConvention::literal;
    throw InvalidInput("parameters.convention must be \"derived\" or \"literal\"");
}

std::string extremal_habitat(const ExtremalSolution& s) {
    if (!s.positive) return "not-positive";
    Domain dom = Domain::open(Bound::at(-s.b), Bound::at(s.b));
    return habitat_of(classify_endpoint(s.phi, EndpointSpec::lower(dom.lower)),
                      classify_endpoint(s.phi, EndpointSpec::upper(dom.upper)))
        .kind;
}

void task_extremal(Ctx& ctx, const AnyData& data) {
    const auto& d = need_horizontal(data, "extremal");
    Json& r = ctx.out.report;
    Scalar dm = ctx.scalar_or("dphi_minus", Scalar(2)), dp = ctx.scalar_or("dphi_plus", Scalar(-2));
    MomentConvention conv = convention(ctx);
    r["convention"] = to_string(conv);
    if (ctx.has("b")) {
        Scalar b = ctx.scalar("b");
        ExtremalSolution s = extremal_profile(d, b, dm, dp, conv);
        Json j = to_json(s);
        j["futaki"] = to_json(futaki_like(d, b, dm, dp, conv));
        j["habitat"] = extremal_habitat(s);
        r["solution"] = j;
        ctx.out.summary = "sigma0=" + s.sigma0.str() + " sigma1=" + s.sigma1.str();
    }
    if (ctx.has("b_range")) {
        const Json& br = ctx.params["b_range"];
        if (!br.is_array() || br.size() != 2) throw InvalidInput("parameters.b_range must be [b_min, b_max]");
        int grid = ctx.params.value("grid", 64);
        CscScan s = find_csc_classes(d, scalar_from_json(br[0], ctx.mode, "b_range[0]"),
                                     scalar_from_json(br[1], ctx.mode, "b_range[1]"), dm, dp, grid);
        Json j;
        j["identically_zero"] = s.identically_zero;
        if (s.identically_zero) j["family_positive"] = s.family_positive;
        j["futaki_polynomial"] = futaki_polynomial(d, dm, dp).str("b");
        j["sturm_root_count"] = s.sturm_root_count;
        j["classes"] = Json::array();
        for (const auto& c : s.classes) j["classes"].push_back(to_json(c));
        r["scan"] = j;
        std::ostringstream csv;
        csv << "b,futaki\n";
        for (std::size_t i = 0; i < s.grid.size(); ++i) csv << g12(s.grid[i]) << ',' << g12(s.futaki[i]) << '\n';
        ctx.table("futaki_scan.csv", csv.str());
        std::ostringstream cls;
        cls << "b,sigma0,sigma1,futaki,positive,habitat\n";
        for (const auto& c : s.classes)
            cls << g12(c.b) << ',' << g12(c.sigma0.to_double()) << ',' << g12(c.sigma1) << ',' << g12(c.futaki_at_b) << ','
                << (c.positive ? "true" : "false") << ',' << c.habitat << '\n';
        ctx.table("csc_classes.csv", cls.str());
        if (ctx.out.summary.empty())
            ctx.out.summary = s.identically_zero ? "futaki identically zero" : "classes=" + std::to_string(s.classes.size());
    }
    if (!ctx.has("b") && !ctx.has("b_range")) throw InvalidInput("task extremal needs parameters.b or parameters.b_range");
}

Poly poly_from_json(const Json& j, const NumericMode& mode, const std::string& what) {
    if (!j.is_array() || j.empty()) throw InvalidInput(what + " must be a non-empty coefficient array, lowest degree first");
    std::vector<Scalar> c;
    for (const auto& x : j) c.push_back(scalar_from_json(x, mode, what));
    return Poly(c);
}

void task_coords(Ctx& ctx, const std::optional<AnyData>& data) {
    Json& r = ctx.out.report;
    if (ctx.has("phi")) {
        const Json& p = ctx.params["phi"];
        reject_unknown(p, {"num", "den", "domain"}, "parameters.phi");
        Poly num = poly_from_json(p.value("num", Json()), ctx.mode, "phi.num");
        Poly den = p.contains("den") ? poly_from_json(p["den"], ctx.mode, "phi.den") : Poly(Scalar(1));
        if (den.is_zero()) throw InvalidInput("phi.den vanishes");
        RationalFn phi(num, den);
        Domain dom = p.contains("domain") ? domain_from_json(p["domain"], ctx.mode) : Domain::positive_reals();
        r["phi"] = phi.str();
        r["domain"] = to_json(dom);
        coords_table(ctx, phi, dom.interior(), "coords.csv");
    } else {
        if (!data) throw InvalidInput("task coords needs data or parameters.phi");
        Scalar c = ctx.scalar("c");
        CscClassification k;
        if (auto* v = std::get_if<VectorBundleData>(&*data)) k = classify_csc_vb(*v, c).base;
        else k = classify_csc(std::get<HorizontalData>(*data), c, ctx.variant());
        if (!k.valid) throw InvalidInput("profile at c = " + c.str() + " is not positive near 0");
        r["phi"] = k.phi.str();
        r["domain"] = to_json(k.domain);
        coords_table(ctx, k.phi, k.domain.interior(), "coords.csv");
    }
    ctx.out.summary = "rows=" + r["coordinates"]["rows"].dump();
}

void task_sweep(Ctx& ctx, const Json& spec, const AnyData& data) {
    reject_unknown(spec, {"parameter", "from", "to", "step"}, "sweep");
    std::string par = spec.value("parameter", std::string());
    NumericMode exact{true, ctx.mode.epsilon};
    for (const char* k : {"from", "to", "step"})
        if (!spec.contains(k)) throw InvalidInput(std::string("sweep.") + k + " is required");
    Scalar from = scalar_from_json(spec["from"], exact, "sweep.from"), to = scalar_from_json(spec["to"], exact, "sweep.to");
    Scalar step = scalar_from_json(spec["step"], exact, "sweep.step");
    if (step.sign() <= 0 || to < from) throw InvalidInput("sweep needs from <= to and step > 0");
    std::vector<Scalar> values;
    for (Scalar x = from; x <= to; x = x + step) {
        values.push_back(x);
        if (values.size() > 100000) throw InvalidInput("sweep has more than 100000 points");
    }
    std::vector<Json> rows(values.size());
    std::vector<std::string> lines(values.size());
    std::string header;
    std::function<void(std::size_t)> f;
    auto vb = std::get_if<VectorBundleData>(&data);
    auto hd = std::get_if<HorizontalData>(&data);
    Variant var = ctx.variant();
    if (par == "c") {
        header = "c,valid,positive_on_half_line,first_zero,habitat";
        f = [&](std::size_t i) {
            Scalar c = values[i];
            CscClassification k;
            std::string hab;
            if (vb) {
                VbClassification x = classify_csc_vb(*vb, c);
                k = x.base;
                hab = x.habitat;
            } else {
                k = classify_csc(*hd, c, var);
                hab = k.habitat.kind;
            }
            double fz = k.first_zero ? k.first_zero->b.approx() : NAN;
            rows[i] = {{"c", to_json(c)}, {"valid", k.valid}, {"positive_on_half_line", k.positive_on_half_line},
                       {"first_zero", k.first_zero ? Json(fz) : Json()}, {"habitat", hab}};
            lines[i] = g12(c.to_double()) + ',' + (k.valid ? "true" : "false") + ',' +
                       (k.positive_on_half_line ? "true" : "false") + ',' + (k.first_zero ? g12(fz) : "") + ',' + hab;
        };
    } else if (par == "b") {
        const auto& d = need_horizontal(data, "sweep over b");
        Scalar dm = ctx.scalar_or("dphi_minus", Scalar(2)), dp = ctx.scalar_or("dphi_plus", Scalar(-2));
        MomentConvention conv = convention(ctx);
        if (from.sign() <= 0) throw InvalidInput("sweep over b needs b > 0");
        header = "b,sigma0,sigma1,futaki,positive,habitat";
        f = [&, dm, dp, conv](std::size_t i) {
            Scalar b = values[i];
            ExtremalSolution s = extremal_profile(d, b, dm, dp, conv);
            Scalar fut = futaki_like(d, b, dm, dp, conv);
            std::string hab = extremal_habitat(s);
            rows[i] = {{"b", to_json(b)}, {"sigma0", to_json(s.sigma0)}, {"sigma1", to_json(s.sigma1)},
                       {"futaki", to_json(fut)}, {"positive", s.positive}, {"habitat", hab}};
            lines[i] = g12(b.to_double()) + ',' + g12(s.sigma0.to_double()) + ',' + g12(s.sigma1.to_double()) + ',' +
                       g12(fut.to_double()) + ',' + (s.positive ? "true" : "false") + ',' + hab;
        };
    } else if (par == "a") {
        if (!vb) throw InvalidInput("sweep over the collapse parameter a needs vector bundle data");
        if (from.sign() <= 0) throw InvalidInput("sweep over a needs a > 0");
        header = "a,c0,c0_exact,lower_bound";
        f = [&](std::size_t i) {
            Scalar a = values[i];
            HorizontalData line = vb->rebase(a).as_line_bundle().with_interval(HorizontalData::half_line());
            ThresholdAnalysis t = c_threshold(line, Variant::A);
            Scalar lb = c0_bounds(line).first;
            rows[i] = {{"a", to_json(a)}, {"c0", to_json(t.c0)}, {"c0_approx", t.c0.to_double()},
                       {"c0_exact", t.c0_exact}, {"lower_bound", to_json(lb)}};
            lines[i] = g12(a.to_double()) + ',' + g12(t.c0.to_double()) + ',' + (t.c0_exact ? "true" : "false") + ',' +
                       g12(lb.to_double());
        };
    } else {
        throw InvalidInput("sweep.parameter must be c, b or a");
    }
    parallel_for(values.size(), f);
    Json& r = ctx.out.report;
    r["sweep"] = {{"parameter", par}, {"from", to_json(from)}, {"to", to_json(to)}, {"step", to_json(step)},
                  {"points", values.size()}};
    if (par == "c" && hd) r["sweep"]["variant"] = to_string(var);
    r["rows"] = rows;
    std::string csv = header + "\n";
    for (const auto& l : lines) csv += l + "\n";
    ctx.table("sweep.csv", csv);
    ctx.out.summary = "points=" + std::to_string(values.size());
}

}  // namespace

TaskResult run_task(const Json& task, const TaskOverrides& ov) {
    reject_unknown(task, kTop, "task file");
    if (!task.contains("task") || !task["task"].is_string()) throw InvalidInput("task file needs a string field 'task'");
    std::string name = task["task"].get<std::string>();
    if (!kTasks.count(name)) throw InvalidInput("unknown task '" + name + "'");
    if (task.contains("output")) reject_unknown(task["output"], {"dir"}, "output");
    if (task.contains("description") && !task["description"].is_string()) throw InvalidInput("description must be a string");

    Ctx ctx;
    std::string mode = task.value("numeric_mode", std::string("exact"));
    if (ov.mode) mode = *ov.mode;
    if (mode != "exact" && mode != "float") throw InvalidInput("numeric_mode must be exact or float");
    ctx.mode.exact = mode == "exact";
    if (task.contains("epsilon")) {
        if (!task["epsilon"].is_number()) throw InvalidInput("epsilon must be a number");
        ctx.mode.epsilon = task["epsilon"].get<double>();
    }
    if (ov.epsilon) ctx.mode.epsilon = *ov.epsilon;
    if (!(ctx.mode.epsilon > 0)) throw InvalidInput("epsilon must be positive");

    if (task.contains("parameters")) {
        reject_unknown(task["parameters"], kParams, "parameters");
        ctx.params = task["parameters"];
    }
    if (task.contains("sweep") && name != "sweep") throw InvalidInput("field 'sweep' only applies to task sweep");

    std::optional<AnyData> data;
    if (task.contains("data")) data = data_from_json(task["data"], ctx.mode);

    Json& r = ctx.out.report;
    r["task"] = name;
    r["numeric_mode"] = mode;
    if (!ctx.mode.exact) r["epsilon"] = ctx.mode.epsilon;
    if (data) r["data"] = std::visit([](const auto& d) { return to_json(d); }, *data);
    r["tables"] = Json::array();

    auto need = [&]() -> const AnyData& {
        if (!data) throw InvalidInput("task " + name + " needs data");
        return *data;
    };
    if (name == "analyze") task_analyze(ctx, need());
    else if (name == "c0") task_c0(ctx, need());
    else if (name == "profile") task_profile(ctx, need());
    else if (name == "einstein") task_einstein(ctx, need());
    else if (name == "table2") task_table2(ctx);
    else if (name == "extremal") task_extremal(ctx, need());
    else if (name == "coords") task_coords(ctx, data);
    else {
        if (!task.contains("sweep")) throw InvalidInput("task sweep needs a 'sweep' object");
        task_sweep(ctx, task["sweep"], need());
    }
    r["status"] = "ok";
    ctx.out.summary = name + ": ok " + ctx.out.summary;
    return std::move(ctx.out);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e)) return 2;
    return 3;
}

Json error_report(const std::string& task, const std::exception& e) {
    Json j;
    j["task"] = task;
    j["status"] = "error";
    std::string kind = exit_code_for(e) == 2 ? "invalid-input" : "invariant-breach";
    j["error"] = {{"kind", kind}, {"exit_code", exit_code_for(e)}, {"message", e.what()}};
    return j;
}

}  // namespace momentum
