#include "cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscint/errors.hpp"
#include "oscint/half_power.hpp"
#include "oscint/selfcheck.hpp"
#include "oscint/transform.hpp"

namespace oscint::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string family = "half-power";
    std::string kernel = "sin";
    std::string x = "1";
    std::string zeta = "1";
    std::string a = "1";
    std::string b = "2";
    std::string c3 = "3";
    std::string alpha = "0";
    std::string n = "0";
    std::string m = "1";
    bool plus_one = false;
    std::string method;
    std::string format;
    double tol = 1e-8;
    double rel_tol = 0.0;
    int max_terms = 0;
    bool as_printed = false;
    bool timing = false;
    std::vector<std::string> only;
    bool json = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    if (out.empty())
        throw UsageError("empty value list '" + s + "'");
    return out;
}

std::vector<double> reals(const std::string& s, const char* flag)
{
    std::vector<double> out;
    for (const auto& item : split(s)) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw UsageError(std::string("--") + flag + ": '" + item + "' is not a number");
        out.push_back(v);
    }
    return out;
}

std::vector<int> integers(const std::string& s, const char* flag)
{
    std::vector<int> out;
    for (double v : reals(s, flag)) {
        if (v != std::floor(v) || std::abs(v) > 1e6)
            throw UsageError(std::string("--") + flag + ": " + std::to_string(v) + " is not an integer");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

Family family_of(const Options& o)
{
    const auto f = parse_family(o.family);
    if (!f)
        throw UsageError("--family: unknown family '" + o.family +
                         "' (half-power, two-radical, radical-pole, lommel, three-radical, log-weighted)");
    return *f;
}

std::optional<Method> method_of(const Options& o)
{
    if (o.method.empty())
        return std::nullopt;
    const auto m = parse_method(o.method);
    if (!m)
        throw UsageError("--method: unknown method '" + o.method +
                         "' (closed-form, series, approximation, oracle, as-printed)");
    return m;
}

SeriesControl control_of(const Options& o)
{
    SeriesControl ctl = SeriesControl::from_environment();
    if (o.rel_tol != 0.0)
        ctl.rel_tol = o.rel_tol;
    if (o.max_terms != 0)
        ctl.max_terms = o.max_terms;
    ctl.validate();
    return ctl;
}

/// Cartesian product of the list-valued flags, in a fixed order.
std::vector<TransformRequest> grid(const Options& o)
{
    const Family family = family_of(o);
    std::vector<Kernel> kernels;
    for (const auto& k : split(o.kernel)) {
        const auto parsed = parse_kernel(k);
        if (!parsed)
            throw UsageError("--kernel: expected sin or cos, got '" + k + "'");
        kernels.push_back(*parsed);
    }

    std::vector<TransformRequest> out;
    TransformRequest base;
    base.family = family;
    base.plus_one = o.plus_one;
    for (double x : reals(o.x, "x"))
        for (double zeta : reals(o.zeta, "zeta"))
            for (double a : reals(o.a, "a"))
                for (double b : reals(o.b, "b"))
                    for (double c3 : reals(o.c3, "c3"))
                        for (int alpha : integers(o.alpha, "alpha"))
                            for (int n : integers(o.n, "n"))
                                for (int m : integers(o.m, "m"))
                                    for (Kernel k : kernels) {
                                        TransformRequest r = base;
                                        r.x = x;
                                        r.zeta = zeta;
                                        r.a = a;
                                        r.b = b;
                                        r.c3 = c3;
                                        r.alpha = alpha;
                                        r.n = n;
                                        r.m = m;
                                        r.kernel = k;
                                        out.push_back(r);
                                    }
    return out;
}

Json params_of(const TransformRequest& r)
{
    Json p = Json::object();
    switch (r.family) {
    case Family::HalfPower:
        p["alpha"] = r.alpha;
        p["x"] = r.x;
        break;
    case Family::TwoRadical:
    case Family::RadicalPole:
        p["a"] = r.a;
        p["b"] = r.b;
        break;
    case Family::Lommel:
        p["n"] = r.n;
        p["m"] = r.m;
        p["plus_one"] = r.plus_one;
        p["x"] = r.x;
        break;
    case Family::ThreeRadical:
        p["a"] = r.a;
        p["b"] = r.b;
        p["c3"] = r.c3;
        break;
    case Family::LogWeighted:
        p["x"] = r.x;
        return p;
    }
    p["zeta"] = r.zeta;
    p["kernel"] = std::string(to_string(r.kernel));
    return p;
}

// Half-power order matching the general exponent.
double lommel_alpha(const TransformRequest& r)
{
    return 2.0 * r.n + 1.0 / r.m + (r.plus_one ? 1.0 : 0.0) - 0.5;
}

std::string csv_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const Json& v)
{
    if (v.is_number_float())
        return csv_number(v.get<double>());
    if (v.is_string()) {
        const auto text = v.get<std::string>();
        if (text.find_first_of(",\"\n") == std::string::npos)
            return text;
        std::string quoted = "\"";
        for (char ch : text)
            quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return quoted + "\"";
    }
    return v.dump();
}

/// Flattens records with a nested params object into CSV rows.
void write_csv(const std::vector<Json>& rows, std::ostream& out)
{
    if (rows.empty())
        return;
    std::vector<std::string> header;
    for (const auto& [key, value] : rows.front().items()) {
        if (key == "params") {
            for (const auto& [pk, pv] : value.items())
                header.push_back(pk);
        } else if (!value.is_structured()) {
            header.push_back(key);
        }
    }
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& [key, value] : row.items()) {
            if (key == "params") {
                for (const auto& [pk, pv] : value.items()) {
                    out << (first ? "" : ",") << csv_cell(pv);
                    first = false;
                }
            } else if (!value.is_structured()) {
                out << (first ? "" : ",") << csv_cell(value);
                first = false;
            }
        }
        out << '\n';
    }
}

void emit(const std::vector<Json>& rows, const std::string& format, std::ostream& out)
{
    if (format == "csv") {
        write_csv(rows, out);
        return;
    }
    if (rows.size() == 1)
        out << rows.front().dump(2) << '\n';
    else
        out << Json(rows).dump(2) << '\n';
}

std::string resolve_format(const Options& o, const char* fallback)
{
    const std::string f = o.format.empty() ? fallback : o.format;
    if (f != "json" && f != "csv")
        throw UsageError("--format: expected json or csv, got '" + f + "'");
    return f;
}

Json record(const TransformRequest& r, const EvalResult& e, long long elapsed_us)
{
    Json j;
    j["family"] = std::string(to_string(r.family));
    j["params"] = params_of(r);
    j["method"] = std::string(to_string(e.method));
    j["value"] = e.value;
    j["err_estimate"] = e.err_estimate;
    j["elapsed_us"] = elapsed_us;
    j["route"] = e.route;
    return j;
}

template <class F>
auto timed(bool enabled, long long& elapsed_us, F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    elapsed_us = enabled ? std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                                 start)
                               .count()
                         : 0;
    return result;
}

int cmd_eval(const Options& o, const char* default_format, std::ostream& out, std::ostream& err)
{
    const std::string format = resolve_format(o, default_format);
    const SeriesControl ctl = control_of(o);
    const Formula formula = o.as_printed ? Formula::AsPrinted : Formula::Verified;
    const auto requested = method_of(o);

    std::vector<Json> rows;
    for (const auto& r : grid(o)) {
        Method method = requested.value_or(default_method(r.family));
        if (r.family == Family::RadicalPole && r.b < r.a && method != Method::Oracle) {
            err << "notice: radical-pole closed forms need b >= a (a=" << r.a << ", b=" << r.b
                << "); evaluating with the oracle\n";
            method = Method::Oracle;
        }
        long long us = 0;
        const EvalResult e = timed(o.timing, us, [&] { return evaluate(r, method, ctl, formula); });
        rows.push_back(record(r, e, us));
    }
    emit(rows, format, out);
    return kOk;
}

int cmd_compare(const Options& o, std::ostream& out)
{
    const std::string format = resolve_format(o, "json");
    const SeriesControl ctl = control_of(o);
    const Formula formula = o.as_printed ? Formula::AsPrinted : Formula::Verified;
    if (!(o.tol >= 0.0))
        throw UsageError("--tol must be nonnegative");

    bool all_within = true;
    std::vector<Json> rows;
    for (const auto& r : grid(o)) {
        struct Column {
            std::string name;
            EvalResult result;
            bool checked;
        };
        std::vector<Column> columns;
        for (Method m : supported_methods(r.family)) {
            if (m == Method::AsPrinted)
                continue;
            if (m == Method::Approximation) {
                try {
                    validate(r, m);
                } catch (const DomainError&) {
                    continue; // outside the approximation's range
                }
            }
            if (r.family == Family::RadicalPole && r.b < r.a && m != Method::Oracle)
                continue;
            columns.push_back({std::string(to_string(m)), evaluate(r, m, ctl, formula), m != Method::Approximation});
        }
        // Half-integer exponents of the general family coincide with the half-power family.
        if (r.family == Family::Lommel) {
            const double alpha = lommel_alpha(r);
            if (alpha >= 0.0 && alpha == std::floor(alpha)) {
                TransformRequest hp = r;
                hp.family = Family::HalfPower;
                hp.alpha = static_cast<int>(alpha);
                EvalResult e = evaluate(hp, Method::ClosedForm, ctl, formula);
                columns.push_back({"half-power", e, true});
            }
        }
        if (columns.size() < 2)
            throw NotSupported("compare needs at least two methods; family " + std::string(to_string(r.family)) +
                               " offers one here");

        Json row;
        row["family"] = std::string(to_string(r.family));
        row["params"] = params_of(r);
        Json cols = Json::array();
        for (const auto& c : columns) {
            Json col;
            col["method"] = c.name;
            col["value"] = c.result.value;
            col["err_estimate"] = c.result.err_estimate;
            col["checked"] = c.checked;
            cols.push_back(col);
            row[c.name] = c.result.value;
        }
        double worst = 0.0;
        Json devs = Json::array();
        for (std::size_t i = 0; i < columns.size(); ++i)
            for (std::size_t j = i + 1; j < columns.size(); ++j) {
                const double u = columns[i].result.value;
                const double v = columns[j].result.value;
                const double scale = std::max(std::abs(u), std::abs(v));
                const double rel = scale > 0.0 ? std::abs(u - v) / scale : 0.0;
                const bool checked = columns[i].checked && columns[j].checked;
                devs.push_back({{"pair", columns[i].name + "/" + columns[j].name}, {"rel", rel}, {"checked", checked}});
                if (checked)
                    worst = std::max(worst, rel);
            }
        const bool within = worst <= o.tol;
        all_within = all_within && within;
        row["max_deviation"] = worst;
        row["tolerance"] = o.tol;
        row["within_tolerance"] = within;
        row["columns"] = cols;
        row["deviations"] = devs;
        rows.push_back(row);
    }
    emit(rows, format, out);
    return all_within ? kOk : kCheckFailed;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    const std::string format = resolve_format(o, "json");
    const SeriesControl ctl = control_of(o);
    std::vector<Json> rows;
    for (const auto& r : grid(o)) {
        validate(r, Method::Oracle);
        long long us = 0;
        const auto report = timed(o.timing, us, [&] { return oracle::integrate_semi_infinite(to_integrand(r), ctl); });
        Json j;
        j["family"] = std::string(to_string(r.family));
        j["params"] = params_of(r);
        j["method"] = "oracle";
        j["value"] = report.value;
        j["err_estimate"] = report.abs_err_est;
        j["elapsed_us"] = us;
        j["zero_intervals_used"] = report.zero_intervals_used;
        j["accelerated"] = report.accelerated;
        rows.push_back(j);
    }
    emit(rows, format, out);
    return kOk;
}

int cmd_selfcheck(const Options& o, std::ostream& out)
{
    std::vector<std::string> only;
    for (const auto& item : o.only)
        for (const auto& name : split(item))
            only.push_back(name);
    const auto report = selfcheck::run(only, control_of(o));

    if (o.json) {
        Json groups = Json::array();
        for (const auto& g : report.groups) {
            Json checks = Json::array();
            for (const auto& c : g.checks) {
                Json cj;
                cj["name"] = c.name;
                cj["passed"] = c.passed;
                cj["points"] = c.points;
                cj["worst_ratio"] = c.worst_ratio;
                if (!c.detail.empty())
                    cj["detail"] = c.detail;
                checks.push_back(cj);
            }
            Json gj;
            gj["group"] = g.name;
            gj["passed"] = g.passed();
            if (o.timing)
                gj["elapsed_ms"] = g.elapsed_ms;
            gj["checks"] = checks;
            groups.push_back(gj);
        }
        Json j;
        j["passed"] = report.passed();
        j["groups"] = groups;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& g : report.groups) {
            out << (g.passed() ? "PASS " : "FAIL ") << g.name << " (" << g.checks.size() << " checks";
            if (o.timing)
                out << ", " << static_cast<long long>(g.elapsed_ms) << " ms";
            out << ")\n";
            for (const auto& c : g.checks)
                if (!c.passed)
                    out << "  FAIL " << c.name << ": " << c.detail << '\n';
        }
        out << (report.passed() ? "all groups passed" : "some groups failed") << '\n';
    }
    return report.passed() ? kOk : kCheckFailed;
}

void add_point_options(CLI::App& sub, Options& o, bool with_method)
{
    sub.add_option("--family", o.family, "half-power, two-radical, radical-pole, lommel, three-radical, log-weighted");
    sub.add_option("--kernel", o.kernel, "sin or cos (comma list allowed)");
    sub.add_option("--x", o.x, "shift x (comma list allowed)");
    sub.add_option("--zeta", o.zeta, "frequency zeta");
    sub.add_option("--a", o.a, "first shift a");
    sub.add_option("--b", o.b, "second shift b");
    sub.add_option("--c3", o.c3, "third shift, three-radical only");
    sub.add_option("--alpha", o.alpha, "half-power order, integer >= 0");
    sub.add_option("--n", o.n, "lommel exponent 2n + 1/m");
    sub.add_option("--m", o.m, "lommel exponent 2n + 1/m");
    sub.add_flag("--plus-one", o.plus_one, "lommel exponent 2n + 1 + 1/m");
    sub.add_option("--rel-tol", o.rel_tol, "series and quadrature relative tolerance");
    sub.add_option("--max-terms", o.max_terms, "series term limit");
    sub.add_option("--format", o.format, "json or csv");
    sub.add_flag("--as-printed", o.as_printed, "use the printed forms of corrected formulas");
    sub.add_flag("--timing", o.timing, "report wall-clock time (breaks byte-identical output)");
    if (with_method)
        sub.add_option("--method", o.method, "closed-form, series, approximation, oracle, as-printed");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fourier sine and cosine transforms of irrational weights", "oscint"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "evaluate one family at a grid of points");
    add_point_options(*eval, o, true);
    auto* compare = app.add_subcommand("compare", "every method side by side, with relative deviations");
    add_point_options(*compare, o, false);
    compare->add_option("--tol", o.tol, "largest accepted relative deviation (default 1e-8)");
    auto* table = app.add_subcommand("table", "parameter sweep, CSV by default");
    add_point_options(*table, o, true);
    auto* orc = app.add_subcommand("oracle", "direct oscillatory quadrature");
    add_point_options(*orc, o, false);
    auto* check = app.add_subcommand("selfcheck", "run the identity and cross-method checks");
    check->add_option("--only", o.only, "comma-separated group names");
    check->add_flag("--json", o.json, "machine-readable report");
    check->add_flag("--timing", o.timing, "include group timings");
    check->add_option("--rel-tol", o.rel_tol, "series and quadrature relative tolerance");
    check->add_option("--max-terms", o.max_terms, "series term limit");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval)
            return cmd_eval(o, "json", out, err);
        if (*table)
            return cmd_eval(o, "csv", out, err);
        if (*compare)
            return cmd_compare(o, out);
        if (*orc)
            return cmd_oracle(o, out);
        return cmd_selfcheck(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DivergentIntegral& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotSupported& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}

const std::vector<OperationRoute>& operation_routes()
{
    using V = std::vector<std::string>;
    static const std::vector<OperationRoute> kRoutes = {
        {"fresnel_s", V{"selfcheck", "--only", "special-functions"}},
        {"fresnel_c", V{"selfcheck", "--only", "special-functions"}},
        {"bessel_j0", V{"eval", "--family", "two-radical", "--a", "1", "--b", "2", "--method", "closed-form"}},
        {"bessel_y0", V{"eval", "--family", "two-radical", "--a", "1", "--b", "2", "--method", "closed-form"}},
        {"gamma_real", V{"eval", "--family", "half-power", "--alpha", "3"}},
        {"upper_incomplete_gamma", V{"eval", "--family", "lommel", "--n", "1", "--m", "3"}},
        {"hyp2f1", V{"eval", "--family", "two-radical", "--a", "1", "--b", "2", "--method", "series"}},
        {"hyp2f2_half", V{"eval", "--family", "log-weighted", "--x", "1"}},
        {"gen_si", V{"eval", "--family", "lommel", "--method", "series", "--kernel", "sin"}},
        {"gen_ci", V{"eval", "--family", "lommel", "--method", "series", "--kernel", "cos"}},
        {"integrate_semi_infinite", V{"oracle", "--family", "three-radical", "--a", "0.5", "--b", "1", "--c3", "2"}},
        {"integrate_finite", V{"eval", "--family", "radical-pole", "--a", "1", "--b", "2", "--method", "closed-form"}},
        {"s0", V{"eval", "--family", "half-power", "--alpha", "0", "--x", "1"}},
        {"c0", V{"eval", "--family", "half-power", "--alpha", "0", "--x", "1", "--kernel", "cos"}},
        {"family_coefficients", V{"eval", "--family", "half-power", "--alpha", "4", "--kernel", "cos"}},
        {"s_alpha", V{"eval", "--family", "half-power", "--alpha", "1,2,3,4,5"}},
        {"c_alpha", V{"eval", "--family", "half-power", "--alpha", "1,2,3,4,5", "--kernel", "cos"}},
        {"tail_sin", V{"eval", "--family", "two-radical", "--a", "1", "--b", "2"}},
        {"tail_cos", V{"eval", "--family", "two-radical", "--a", "1", "--b", "2", "--kernel", "cos"}},
        {"head_sin_series", V{"eval", "--family", "two-radical", "--a", "1", "--b", "2", "--method", "series"}},
        {"head_cos_series",
         V{"eval", "--family", "two-radical", "--a", "1", "--b", "2", "--method", "series", "--kernel", "cos"}},
        {"sin_transform", V{"compare", "--family", "two-radical", "--a", "1", "--b", "2"}},
        {"cos_transform", V{"compare", "--family", "two-radical", "--a", "1", "--b", "2", "--kernel", "cos"}},
        {"head_sin_approx", V{"eval", "--family", "two-radical", "--a", "1", "--b", "3", "--method", "approximation"}},
        {"head_cos_approx",
         V{"eval", "--family", "two-radical", "--a", "1", "--b", "3", "--method", "approximation", "--kernel", "cos"}},
        {"pole_tail_sin", V{"eval", "--family", "radical-pole", "--a", "1", "--b", "2"}},
        {"pole_tail_cos", V{"eval", "--family", "radical-pole", "--a", "1", "--b", "2", "--kernel", "cos"}},
        {"pole_head_sin_series", V{"eval", "--family", "radical-pole", "--a", "1", "--b", "2", "--method", "series"}},
        {"pole_head_cos_series",
         V{"eval", "--family", "radical-pole", "--a", "1", "--b", "2", "--method", "series", "--kernel", "cos"}},
        {"pole_sin_transform", V{"compare", "--family", "radical-pole", "--a", "1", "--b", "2"}},
        {"pole_cos_transform", V{"compare", "--family", "radical-pole", "--a", "1", "--b", "2", "--kernel", "cos"}},
        {"pole_head_approx",
         V{"eval", "--family", "radical-pole", "--a", "1", "--b", "3", "--method", "approximation"}},
        {"lommel_s_half", V{"eval", "--family", "lommel", "--n", "0", "--m", "3", "--x", "1"}},
        {"general_sin_transform", V{"compare", "--family", "lommel", "--n", "1", "--m", "3"}},
        {"general_cos_transform", V{"compare", "--family", "lommel", "--n", "0", "--m", "1", "--plus-one", "--kernel", "cos"}},
        {"log_weighted_sin_integral", V{"compare", "--family", "log-weighted", "--x", "0.5,1,2"}},
        {"si_ci_representation", V{"eval", "--family", "lommel", "--n", "0", "--m", "1", "--zeta", "2", "--kernel", "cos", "--method", "series"}},
        {"cmd_eval", V{"eval", "--family", "half-power", "--alpha", "0", "--x", "0"}},
        {"cmd_compare", V{"compare", "--family", "radical-pole", "--a", "1", "--b", "2"}},
        {"cmd_selfcheck", V{"selfcheck", "--only", "difference-equations"}},
    };
    return kRoutes;
}

} // namespace oscint::cli
