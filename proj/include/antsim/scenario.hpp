#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "antsim/stepper.hpp"

namespace antsim {

/// A uniform disk of food holding `amount` total mass.
struct FoodSource {
    Vec2 center{};
    double radius = 0.0;
    double amount = 0.0;
    bool operator==(const FoodSource&) const = default;
};

struct RunConfig {
    double dt = 0.0;
    long steps = 0;
    long snapshot_every = 1;
    long timeseries_every = 1;
    std::string out_dir = "out";
    bool operator==(const RunConfig&) const = default;
};

/// Trail / depletion event thresholds. Kept in the scenario file, not in
/// code: the right levels depend on the experiment's scales.
struct EventConfig {
    double theta_form = 0.05;
    double theta_fade = 0.01;
    double depletion_fraction = 0.01;
    bool operator==(const EventConfig&) const = default;
};

/// Complete experiment description.
struct Scenario {
    int nx = 0;
    int ny = 0;
    double h = 0.0;
    ModelParams params;
    Vec2 nest_center{};
    double nest_radius = 0.25;
    std::vector<FoodSource> food;
    Topography topo;
    RunConfig run;
    EventConfig events;
    double initial_u = 0.0; ///< uniform initial forager density (0 = empty)

    Grid grid() const { return make_grid(nx, ny, h); }
    bool operator==(const Scenario&) const = default;
};

struct Violation {
    std::string code;
    std::string message;
};

/// Default simulated-time horizon used when [run] steps is omitted.
inline constexpr double default_time_horizon = 150.0;

namespace detail {

inline std::string trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

/// Removes a trailing '#' comment, honoring double quotes.
inline std::string strip_comment(std::string_view line) {
    bool in_string = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] == '"') in_string = !in_string;
        else if (line[k] == '#' && !in_string) return std::string(line.substr(0, k));
    }
    return std::string(line);
}

struct ConfigValue {
    enum class Kind { Number, String, Pair } kind;
    double num = 0.0;
    std::string str;
    Vec2 pair{};
};

inline ConfigValue parse_value(const std::string& raw, int line) {
    ConfigValue v{};
    if (raw.empty()) throw ParseError(line, "missing value");
    if (raw.front() == '"') {
        if (raw.size() < 2 || raw.back() != '"')
            throw ParseError(line, "unterminated string value");
        v.kind = ConfigValue::Kind::String;
        v.str = raw.substr(1, raw.size() - 2);
        return v;
    }
    if (raw.front() == '[') {
        if (raw.back() != ']') throw ParseError(line, "unterminated array value");
        const std::string inner = raw.substr(1, raw.size() - 2);
        auto comma = inner.find(',');
        if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
            throw ParseError(line, "expected [x, y] with exactly two numbers");
        double a, b;
        if (!parse_double(trim(inner.substr(0, comma)), a) ||
            !parse_double(trim(inner.substr(comma + 1)), b))
            throw ParseError(line, "expected [x, y] with exactly two numbers");
        v.kind = ConfigValue::Kind::Pair;
        v.pair = {a, b};
        return v;
    }
    double num;
    if (!parse_double(raw, num) || std::isnan(num))
        throw ParseError(line, "expected a number, got '" + raw + "'");
    v.kind = ConfigValue::Kind::Number;
    v.num = num;
    return v;
}

inline double expect_number(const ConfigValue& v, const std::string& key, int line) {
    if (v.kind != ConfigValue::Kind::Number)
        throw ParseError(line, "key '" + key + "' expects a number");
    return v.num;
}

inline Vec2 expect_pair(const ConfigValue& v, const std::string& key, int line) {
    if (v.kind != ConfigValue::Kind::Pair)
        throw ParseError(line, "key '" + key + "' expects [x, y]");
    return v.pair;
}

inline long expect_integer(const ConfigValue& v, const std::string& key, int line) {
    const double d = expect_number(v, key, line);
    if (!std::isfinite(d) || d != std::floor(d) || std::abs(d) > 9e15)
        throw ParseError(line, "key '" + key + "' expects an integer");
    return long(d);
}

} // namespace detail

/// Parses the scenario config format: [grid], [params], [nest], repeated
/// [[food]] entries, [topography], [run], [initial] and [events] sections
/// with '#' comments. Unknown sections or keys are errors; omitted
/// optional keys take documented defaults. Throws ParseError with the
/// offending line number.
inline Scenario parse_config(const std::string& text) {
    using detail::ConfigValue;

    struct FoodStage {
        std::optional<Vec2> center;
        std::optional<double> radius, amount;
        int line = 0;
    };
    std::optional<long> nx, ny, steps, snapshot_every, timeseries_every;
    std::optional<double> h, dt, nest_radius, initial_u;
    std::optional<Vec2> nest_center, topo_center;
    std::optional<std::string> preset, out_dir;
    std::optional<double> amplitude, sigma;
    ModelParams params;
    EventConfig events;
    std::vector<FoodStage> foods;

    static const std::map<std::string, std::set<std::string>> schema = {
        {"grid", {"nx", "ny", "h"}},
        {"params",
         {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "gamma", "u_max", "m0", "t_inflow",
          "eps_nest"}},
        {"nest", {"center", "radius"}},
        {"food", {"center", "radius", "amount"}},
        {"topography", {"preset", "center", "amplitude", "sigma"}},
        {"run", {"dt", "steps", "snapshot_every", "timeseries_every", "out_dir"}},
        {"initial", {"u"}},
        {"events", {"theta_form", "theta_fade", "depletion_fraction"}},
    };

    std::string section;
    std::set<std::string> seen_in_section;
    bool saw_grid = false;

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::string line = detail::trim(detail::strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            bool array = line.size() > 1 && line[1] == '[';
            const std::string closer = array ? "]]" : "]";
            if (line.size() < 2 + 2 * closer.size() ||
                line.substr(line.size() - closer.size()) != closer)
                throw ParseError(line_no, "malformed section header '" + line + "'");
            std::string name =
                detail::trim(line.substr(array ? 2 : 1, line.size() - 2 * closer.size()));
            if (!schema.count(name))
                throw ParseError(line_no, "unknown section [" + name + "]");
            if (array != (name == "food"))
                throw ParseError(line_no, name == "food"
                                              ? "[[food]] entries use double brackets"
                                              : "section [" + name + "] is not repeatable");
            section = name;
            seen_in_section.clear();
            if (name == "grid") saw_grid = true;
            if (name == "food") {
                FoodStage stage;
                stage.line = line_no;
                foods.push_back(stage);
            }
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, "expected 'key = value', got '" + line + "'");
        if (section.empty()) throw ParseError(line_no, "key outside of any section");
        const std::string key = detail::trim(line.substr(0, eq));
        if (!schema.at(section).count(key))
            throw ParseError(line_no, "unknown key '" + key + "' in section [" + section + "]");
        if (!seen_in_section.insert(key).second)
            throw ParseError(line_no, "duplicate key '" + key + "' in section [" + section + "]");
        const ConfigValue val = detail::parse_value(detail::trim(line.substr(eq + 1)), line_no);

        auto num = [&] { return detail::expect_number(val, key, line_no); };
        auto integer = [&] { return detail::expect_integer(val, key, line_no); };
        auto pair = [&] { return detail::expect_pair(val, key, line_no); };

        if (section == "grid") {
            if (key == "nx") nx = integer();
            else if (key == "ny") ny = integer();
            else h = num();
        } else if (section == "params") {
            if (key == "alpha1") params.alpha1 = num();
            else if (key == "alpha2") params.alpha2 = num();
            else if (key == "alpha3") params.alpha3 = num();
            else if (key == "alpha4") params.alpha4 = num();
            else if (key == "alpha5") params.alpha5 = num();
            else if (key == "gamma") params.gamma = num();
            else if (key == "u_max") {
                if (val.kind == ConfigValue::Kind::String && val.str == "inf")
                    params.u_max = std::numeric_limits<double>::infinity();
                else params.u_max = num();
            } else if (key == "m0") params.m0 = num();
            else if (key == "t_inflow") params.t_inflow = num();
            else params.eps_nest = num();
        } else if (section == "nest") {
            if (key == "center") nest_center = pair();
            else nest_radius = num();
        } else if (section == "food") {
            FoodStage& f = foods.back();
            if (key == "center") f.center = pair();
            else if (key == "radius") f.radius = num();
            else f.amount = num();
        } else if (section == "topography") {
            if (key == "preset") {
                if (val.kind != ConfigValue::Kind::String ||
                    (val.str != "flat" && val.str != "gaussian_hill"))
                    throw ParseError(line_no, "preset must be \"flat\" or \"gaussian_hill\"");
                preset = val.str;
            } else if (key == "center") topo_center = pair();
            else if (key == "amplitude") amplitude = num();
            else sigma = num();
        } else if (section == "run") {
            if (key == "dt") dt = num();
            else if (key == "steps") steps = integer();
            else if (key == "snapshot_every") snapshot_every = integer();
            else if (key == "timeseries_every") timeseries_every = integer();
            else {
                if (val.kind != ConfigValue::Kind::String)
                    throw ParseError(line_no, "out_dir expects a quoted string");
                out_dir = val.str;
            }
        } else if (section == "initial") {
            if (val.kind == ConfigValue::Kind::String) {
                if (val.str != "empty")
                    throw ParseError(line_no, "initial u must be \"empty\" or a number");
                initial_u = 0.0;
            } else initial_u = num();
        } else { // events
            if (key == "theta_form") events.theta_form = num();
            else if (key == "theta_fade") events.theta_fade = num();
            else events.depletion_fraction = num();
        }
    }

    if (!saw_grid) throw ParseError(line_no, "missing required section [grid]");
    if (!nx) throw ParseError(line_no, "missing required key 'nx' in [grid]");
    if (!ny) throw ParseError(line_no, "missing required key 'ny' in [grid]");
    if (!h) throw ParseError(line_no, "missing required key 'h' in [grid]");

    Scenario sc;
    sc.nx = int(*nx);
    sc.ny = int(*ny);
    sc.h = *h;
    sc.params = params;
    sc.events = events;

    const double lx = sc.nx * sc.h, ly = sc.ny * sc.h;
    sc.nest_center = nest_center.value_or(Vec2{lx / 2.0, ly / 2.0});
    sc.nest_radius = nest_radius.value_or(0.25);

    for (const auto& f : foods) {
        if (!f.center) throw ParseError(f.line, "[[food]] entry missing required key 'center'");
        if (!f.radius) throw ParseError(f.line, "[[food]] entry missing required key 'radius'");
        if (!f.amount) throw ParseError(f.line, "[[food]] entry missing required key 'amount'");
        sc.food.push_back(FoodSource{*f.center, *f.radius, *f.amount});
    }

    sc.topo.kind = (preset.value_or("flat") == "flat") ? Topography::Kind::Flat
                                                       : Topography::Kind::GaussianHill;
    sc.topo.center = topo_center.value_or(Vec2{lx / 2.0, ly / 2.0});
    sc.topo.amplitude = amplitude.value_or(1.0);
    sc.topo.sigma = sigma.value_or(1.0);

    // Default dt: 0.9 x the zero-state stability estimate on flat terrain.
    double dt_default = sc.h * sc.h / (4.0 * std::max({params.alpha1, params.alpha3, 1.0}));
    if (params.alpha2 > 0.0)
        dt_default = std::min(dt_default, sc.h / (std::sqrt(2.0) * params.alpha2));
    sc.run.dt = dt.value_or(0.9 * dt_default);
    sc.run.steps = steps.value_or(sc.run.dt > 0.0 ? long(std::ceil(default_time_horizon / sc.run.dt))
                                                  : 0);
    sc.run.snapshot_every = snapshot_every.value_or(std::max(1L, sc.run.steps / 10));
    sc.run.timeseries_every = timeseries_every.value_or(std::max(1L, sc.run.steps / 500));
    sc.run.out_dir = out_dir.value_or("out");
    sc.initial_u = initial_u.value_or(0.0);
    return sc;
}

/// Emits a config that parse_config maps back to exactly this Scenario.
inline std::string serialize_config(const Scenario& sc) {
    std::string out;
    auto kv = [&](const char* key, const std::string& v) {
        out += key;
        out += " = ";
        out += v;
        out += '\n';
    };
    auto pair = [](Vec2 p) { return "[" + format_double(p.x) + ", " + format_double(p.y) + "]"; };

    out += "[grid]\n";
    kv("nx", std::to_string(sc.nx));
    kv("ny", std::to_string(sc.ny));
    kv("h", format_double(sc.h));
    out += "\n[params]\n";
    kv("alpha1", format_double(sc.params.alpha1));
    kv("alpha2", format_double(sc.params.alpha2));
    kv("alpha3", format_double(sc.params.alpha3));
    kv("alpha4", format_double(sc.params.alpha4));
    kv("alpha5", format_double(sc.params.alpha5));
    kv("gamma", format_double(sc.params.gamma));
    kv("u_max", std::isinf(sc.params.u_max) ? "inf" : format_double(sc.params.u_max));
    kv("m0", format_double(sc.params.m0));
    kv("t_inflow", format_double(sc.params.t_inflow));
    kv("eps_nest", format_double(sc.params.eps_nest));
    out += "\n[nest]\n";
    kv("center", pair(sc.nest_center));
    kv("radius", format_double(sc.nest_radius));
    for (const auto& f : sc.food) {
        out += "\n[[food]]\n";
        kv("center", pair(f.center));
        kv("radius", format_double(f.radius));
        kv("amount", format_double(f.amount));
    }
    out += "\n[topography]\n";
    kv("preset", sc.topo.kind == Topography::Kind::Flat ? "\"flat\"" : "\"gaussian_hill\"");
    kv("center", pair(sc.topo.center));
    kv("amplitude", format_double(sc.topo.amplitude));
    kv("sigma", format_double(sc.topo.sigma));
    out += "\n[run]\n";
    kv("dt", format_double(sc.run.dt));
    kv("steps", std::to_string(sc.run.steps));
    kv("snapshot_every", std::to_string(sc.run.snapshot_every));
    kv("timeseries_every", std::to_string(sc.run.timeseries_every));
    kv("out_dir", "\"" + sc.run.out_dir + "\"");
    out += "\n[initial]\n";
    kv("u", sc.initial_u == 0.0 ? "\"empty\"" : format_double(sc.initial_u));
    out += "\n[events]\n";
    kv("theta_form", format_double(sc.events.theta_form));
    kv("theta_fade", format_double(sc.events.theta_fade));
    kv("depletion_fraction", format_double(sc.events.depletion_fraction));
    return out;
}

/// Builds the initial state: u uniform (usually empty), w = v = 0, food
/// disks normalized so each contributes exactly its configured amount,
/// terrain and homing field sampled at cell centers, nest mask with
/// unit-mass weight. Requires a scenario that validates cleanly.
inline SimState build_initial_state(const Scenario& sc) {
    const Grid g = sc.grid();
    auto statics = std::make_shared<StaticFields>();
    statics->z = Field2D(g);
    statics->nest_mask = Field2D(g);
    statics->nest_weight = Field2D(g);
    statics->vfield_x = Field2D(g);
    statics->vfield_y = Field2D(g);

    long nest_cells = 0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const Vec2 pc = g.center(i, j);
            statics->z(i, j) = topography_height(sc.topo, pc);
            const Vec2 home = nest_field(pc, sc.nest_center, sc.params.eps_nest);
            statics->vfield_x(i, j) = home.x;
            statics->vfield_y(i, j) = home.y;
            if (norm(pc - sc.nest_center) <= sc.nest_radius) {
                statics->nest_mask(i, j) = 1.0;
                ++nest_cells;
            }
        }
    if (nest_cells == 0)
        throw Error("nest resolves to zero cells: radius " + format_double(sc.nest_radius) +
                    " is below what a " + format_double(sc.h) + "-cell grid can represent");
    const double wgt = 1.0 / (double(nest_cells) * g.h * g.h);
    for (std::size_t k = 0; k < statics->nest_mask.size(); ++k)
        statics->nest_weight[k] = statics->nest_mask[k] * wgt;

    SimState s;
    s.t = 0.0;
    s.statics = std::move(statics);
    s.u = Field2D(g, sc.initial_u);
    s.w = Field2D(g);
    s.v = Field2D(g);
    s.c = Field2D(g);
    for (std::size_t fi = 0; fi < sc.food.size(); ++fi) {
        const FoodSource& f = sc.food[fi];
        long n = 0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                if (norm(g.center(i, j) - f.center) <= f.radius) ++n;
        if (n == 0)
            throw Error("food source " + std::to_string(fi) + " resolves to zero cells");
        const double conc = f.amount / (double(n) * g.h * g.h);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                if (norm(g.center(i, j) - f.center) <= f.radius) s.c(i, j) += conc;
    }
    return s;
}

/// Structural checks plus, when those pass, a zero-state stability check
/// of the configured dt. Violations are data, not errors.
inline std::vector<Violation> validate(const Scenario& sc) {
    std::vector<Violation> out;
    auto bad = [&](std::string code, std::string msg) {
        out.push_back({std::move(code), std::move(msg)});
    };

    if (sc.nx < 3 || sc.ny < 3)
        bad("grid.too_small", "grid must be at least 3x3, got " + std::to_string(sc.nx) + "x" +
                                  std::to_string(sc.ny));
    if (!(sc.h > 0.0) || !std::isfinite(sc.h))
        bad("grid.h_nonpositive", "cell size h must be positive");

    const ModelParams& p = sc.params;
    if (!(p.alpha1 > 0.0)) bad("params.alpha1_nonpositive", "alpha1 must be > 0");
    if (!(p.alpha3 > 0.0)) bad("params.alpha3_nonpositive", "alpha3 must be > 0");
    if (p.alpha2 < 0.0) bad("params.alpha2_negative", "alpha2 must be >= 0");
    if (p.alpha4 < 0.0) bad("params.alpha4_negative", "alpha4 must be >= 0");
    if (p.alpha5 < 0.0) bad("params.alpha5_negative", "alpha5 must be >= 0");
    if (p.gamma < 0.0) bad("params.gamma_negative", "gamma must be >= 0");
    if (p.m0 < 0.0) bad("params.m0_negative", "m0 must be >= 0");
    if (p.t_inflow < 0.0) bad("params.t_inflow_negative", "t_inflow must be >= 0");
    if (!(p.u_max > 0.0)) bad("params.u_max_nonpositive", "u_max must be > 0 or inf");
    if (!(p.eps_nest > 0.0)) bad("params.eps_nest_nonpositive", "eps_nest must be > 0");

    const double lx = sc.nx * sc.h, ly = sc.ny * sc.h;
    auto disk_inside = [&](Vec2 c, double r) {
        return c.x - r >= 0.0 && c.x + r <= lx && c.y - r >= 0.0 && c.y + r <= ly;
    };
    if (!(sc.nest_radius > 0.0)) bad("nest.radius_nonpositive", "nest radius must be > 0");
    else if (!disk_inside(sc.nest_center, sc.nest_radius))
        bad("nest.out_of_domain", "nest disk extends outside the domain");
    for (std::size_t i = 0; i < sc.food.size(); ++i) {
        const FoodSource& f = sc.food[i];
        const std::string tag = "food source " + std::to_string(i);
        if (!(f.radius > 0.0)) bad("food.radius_nonpositive", tag + ": radius must be > 0");
        else if (!disk_inside(f.center, f.radius))
            bad("food.out_of_domain", tag + ": disk extends outside the domain");
        if (!(f.amount > 0.0)) bad("food.amount_nonpositive", tag + ": amount must be > 0");
    }
    if (sc.topo.kind == Topography::Kind::GaussianHill && !(sc.topo.sigma > 0.0))
        bad("topography.sigma_nonpositive", "gaussian_hill sigma must be > 0");

    if (!(sc.run.dt > 0.0)) bad("run.dt_nonpositive", "dt must be > 0");
    if (sc.run.steps < 0) bad("run.steps_negative", "steps must be >= 0");
    if (sc.run.snapshot_every < 1) bad("run.cadence_nonpositive", "snapshot_every must be >= 1");
    if (sc.run.timeseries_every < 1)
        bad("run.cadence_nonpositive", "timeseries_every must be >= 1");
    if (sc.run.out_dir.empty()) bad("run.out_dir_empty", "out_dir must not be empty");
    if (sc.initial_u < 0.0) bad("initial.u_negative", "initial u must be >= 0");

    if (!(sc.events.depletion_fraction > 0.0) || !(sc.events.depletion_fraction < 1.0))
        bad("events.depletion_fraction_range", "depletion_fraction must lie in (0, 1)");
    if (sc.events.theta_fade > sc.events.theta_form)
        bad("events.threshold_order", "theta_fade must not exceed theta_form");

    if (!out.empty()) return out;

    // Structure is sound; check the nest and food resolve on this grid and
    // that dt clears the zero-state stability bound.
    try {
        const SimState s0 = build_initial_state(sc);
        const StepLimits lim = cfl_limits(s0, sc.params);
        if (sc.run.dt > lim.dt_max)
            bad("run.dt_unstable", "dt = " + format_double(sc.run.dt) +
                                       " exceeds the stable limit dt_max = " +
                                       format_double(lim.dt_max) + " at t = 0");
    } catch (const Error& e) {
        const std::string what = e.what();
        bad(what.find("nest") != std::string::npos ? "nest.no_cells" : "food.no_cells", what);
    }
    return out;
}

/// The bundled reference experiment: full-resolution two-source layout,
/// one food disk above the nest and one below. This is also what
/// `print-defaults` emits.
inline std::string reference_config_text() {
    return R"(# antsim reference scenario: central nest, two food sources.
#
# A colony emerges from the nest at the domain center. Foragers disperse,
# find the two food disks, and returning ants lay pheromone on their way
# home; trails form along both nest-food corridors, the smaller source is
# exhausted first, and each trail fades once its source is gone.
#
# Full resolution: 200x200 cells, 300000 steps of dt = 5e-4 (t = 0..150).
# For a quick look, override on the command line, e.g.
#   antsim run --config two_sources.toml --steps 2000

[grid]
nx = 200              # cells in x
ny = 200              # cells in y
h = 0.05              # cell edge length (domain is 10 x 10)

[params]
alpha1 = 0.1          # forager diffusivity
alpha2 = 1.0          # drift strength: pheromone taxis and homing speed
alpha3 = 0.03         # returner diffusivity
alpha4 = 0.25         # food depletion rate
alpha5 = 5.0          # nest unloading rate
gamma = 2.0           # pheromone suppression of forager diffusion
u_max = 20.0          # crowding cap for the transport limiter ("inf" disables)
m0 = 2.0              # total nest outflow, ants per unit time
t_inflow = 120.0      # outflow stops at this time
eps_nest = 0.2        # homing-field regularization radius at the nest

[nest]
center = [5.0, 5.0]   # domain center
radius = 0.25

[[food]]              # upper source, exhausted first
center = [5.0, 7.5]
radius = 0.4
amount = 4.0

[[food]]              # lower source
center = [5.0, 2.5]
radius = 0.4
amount = 6.0

[topography]
preset = "flat"       # or "gaussian_hill" with center / amplitude / sigma
center = [5.0, 5.0]
amplitude = 1.0
sigma = 1.0

[run]
dt = 0.0005           # explicit Euler step
steps = 300000        # total simulated time = dt * steps = 150
snapshot_every = 30000
timeseries_every = 300
out_dir = "out"

[initial]
u = "empty"           # all ants start in the nest; or a uniform density

[events]
theta_form = 0.05     # trail counts as formed at this strength
theta_fade = 0.01     # and as faded below this (hysteresis)
depletion_fraction = 0.01
)";
}

} // namespace antsim
