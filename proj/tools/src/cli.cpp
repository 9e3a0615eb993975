#include "qlimits/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qlimits/bht.hpp"
#include "qlimits/bounds.hpp"
#include "qlimits/constants.hpp"
#include "qlimits/dynamics.hpp"
#include "qlimits/error.hpp"
#include "qlimits/keylength.hpp"
#include "qlimits/scenario.hpp"
#include "qlimits/schedules.hpp"
#include "qlimits/serialize.hpp"
#include "qlimits/trace_io.hpp"
#include "qlimits/units.hpp"

namespace qlimits::cli {

namespace {

using nlohmann::json;

// Flags whose value is a duration; numeric config values get an "s" suffix.
const std::set<std::string> kDurationFlags{"time", "dt"};

struct Options {
    // shared
    std::string out;
    std::string format;
    std::optional<int> n;
    std::optional<double> work;
    std::optional<double> power;
    std::optional<std::string> time;
    std::optional<double> temp;
    std::optional<double> psuccess;
    std::optional<std::string> scenario;

    // simulate
    std::string protocol;
    std::optional<double> workRadps;
    double pulsePhase = std::numbers::pi;
    std::optional<int> iterations;
    double errorBudget = 0.1;
    std::string adiabaticKind = "local";
    int segments = kDefaultAdiabaticSegments;
    std::optional<std::string> scheduleFile;
    std::optional<std::string> scheduleOut;
    std::optional<std::string> dt;

    // bound
    std::string boundKind;
    std::optional<std::string> solve;
    std::optional<long long> correctedErrors;

    // keylength
    std::string mode = "quantum";
    bool solarLuminosity = false;

    // bht
    std::optional<double> samples;
    bool invert = false;

    // cosmic
    double h0 = 67.36;
    double omegaLambda = 0.6847;
    std::optional<double> rhoM;
    std::string form = "fromOmega";

    // scenario
    std::string action;
    std::string name;
};

Error usage(const std::string& message, std::string offending = {}) {
    return Error(ErrorKind::usage, message, std::move(offending));
}

double duration_seconds(const std::string& text) { return parse_duration(text).seconds(); }

// Appends flags from a JSON config object unless the command line already
// sets them.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    auto it = std::find_if(args.begin(), args.end(),
                           [](const std::string& a) { return a == "--config" || a.rfind("--config=", 0) == 0; });
    if (it == args.end()) return args;

    std::string path;
    if (*it == "--config") {
        if (std::next(it) == args.end()) throw usage("--config needs a path", "--config");
        path = *std::next(it);
        it = args.erase(it, std::next(it, 2));
    } else {
        path = it->substr(std::string("--config=").size());
        it = args.erase(it);
    }

    std::ifstream in(path);
    if (!in) throw usage("cannot open config file", path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("config is not valid JSON: ") + e.what(), path);
    }
    if (!doc.is_object()) throw Error(ErrorKind::parse, "config must be a JSON object", path);

    auto present = [&](const std::string& flag) {
        return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    };
    for (const auto& [key, value] : doc.items()) {
        const std::string flag = "--" + key;
        if (present(flag)) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_string()) {
            args.push_back(flag);
            args.push_back(value.get<std::string>());
        } else if (value.is_number_integer()) {
            args.push_back(flag);
            args.push_back(std::to_string(value.get<long long>()) + (kDurationFlags.count(key) ? "s" : ""));
        } else if (value.is_number()) {
            args.push_back(flag);
            args.push_back(format_number(value.get<double>()) + (kDurationFlags.count(key) ? "s" : ""));
        } else {
            throw Error(ErrorKind::parse, "config values must be strings, numbers or booleans", key);
        }
    }
    return args;
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw usage("cannot open output file", path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void emit(const Options& o, std::ostream& out, const json& doc) {
    Output target(o.out, out);
    target.stream() << doc.dump(2) << '\n';
}

// Work from --work or --power x --time; exactly one of the two forms.
std::optional<double> resolve_work(const Options& o) {
    if (o.work && o.power) throw usage("give either --work or --power, not both", "--power");
    if (o.power) {
        if (!o.time) throw usage("--power needs --time", "--power");
        return *o.power * duration_seconds(*o.time);
    }
    return o.work;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const Options& o, std::ostream& out) {
    if (!o.n) throw usage("simulate needs --n", "--n");
    const SearchSpace space(*o.n);
    const double hbar = constants().hbar;

    if (o.workRadps && (o.work || o.power)) throw usage("give one of --work, --work-radps, --power", "--work-radps");
    const auto work = resolve_work(o);
    auto energy = [&](double factor) -> double {
        if (o.workRadps) return hbar * *o.workRadps * factor;
        if (work) return *work;
        throw usage("protocol needs --work, --work-radps or --power", "--work");
    };

    std::optional<ControlSchedule> sched;
    if (o.protocol == "ballistic") {
        // --work-radps gives omega directly: W = hbar omega (1 + 2^(-n/2)).
        sched = ballistic_schedule(space, energy(1.0 + space.overlap()));
    } else if (o.protocol == "grover") {
        sched = grover_pulsed_schedule(space, energy(1.0), o.pulsePhase, o.iterations.value_or(grover_iterations(space)));
    } else if (o.protocol == "adiabatic") {
        AdiabaticKind kind = AdiabaticKind::local;
        if (o.adiabaticKind == "linear") kind = AdiabaticKind::linear;
        sched = adiabatic_schedule(space, energy(1.0), o.errorBudget, kind, o.segments);
    } else {
        if (!o.scheduleFile) throw usage("custom protocol needs --schedule-file", "--schedule-file");
        std::ifstream in(*o.scheduleFile);
        if (!in) throw usage("cannot open schedule file", *o.scheduleFile);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::parse, std::string("schedule file is not valid JSON: ") + e.what(), *o.scheduleFile);
        }
        sched = schedule_from_json(doc);
    }

    const double total = sched->total_duration();
    const double step = o.dt ? duration_seconds(*o.dt) : total / 1000.0;
    if (!(step > 0.0)) throw Error(ErrorKind::domain, "--dt must be > 0", "--dt");
    const auto trace = evolve(EffectiveState::initial(space), *sched, step);

    if (o.scheduleOut) {
        std::ofstream s(*o.scheduleOut);
        if (!s) throw usage("cannot open schedule output file", *o.scheduleOut);
        s << schedule_to_json(*sched).dump(2) << '\n';
    }

    Output target(o.out, out);
    if (o.format == "json") {
        json doc = {
            {"protocol", o.protocol},
            {"n", *o.n},
            {"schedule", schedule_to_json(*sched)},
            {"trace", trace_to_json(trace)},
            {"solution_probability_underflow", trace.solutionProbabilityUnderflow},
            {"constants_version", std::string(kConstantsVersion)},
        };
        target.stream() << doc.dump(2) << '\n';
    } else {
        write_trace_csv(target.stream(), trace);
    }
    if (target.to_file()) {
        const auto& last = trace.points.back();
        json summary = {
            {"written", o.out},
            {"samples", trace.points.size()},
            {"t_final_s", last.t},
            {"P_s_final", last.obs.P_s},
            {"constants_version", std::string(kConstantsVersion)},
        };
        out << summary.dump(2) << '\n';
    }
    return 0;
}

// ------------------------------------------------------------------- bound

int cmd_bound(const Options& o, std::ostream& out) {
    BoundKind kind = BoundKind::quantum;
    if (o.boundKind == "classical") kind = BoundKind::classical;
    else if (o.boundKind == "gate") kind = BoundKind::gate;
    else if (o.boundKind == "ballistic") kind = BoundKind::ballistic;

    if (o.work && o.power) throw usage("give either --work or --power, not both", "--power");

    BoundQuery q;
    if (o.n) q.bits = *o.n;
    if (o.time) q.time = duration_seconds(*o.time);
    q.temperature = o.temp;
    q.successProbability = o.psuccess;
    q.correctedErrors = o.correctedErrors;
    const bool haveWork = o.work || (o.power && o.time);

    Unknown unknown;
    if (o.solve) {
        unknown = parse_unknown(*o.solve);
    } else {
        std::vector<Unknown> missing;
        if (!haveWork && !o.power) missing.push_back(Unknown::work);
        if (!o.time) missing.push_back(Unknown::time);
        if (!o.psuccess) missing.push_back(Unknown::successProbability);
        if (!o.n) missing.push_back(Unknown::bits);
        if (missing.size() != 1) throw usage("cannot infer the unknown; pass --solve", "--solve");
        unknown = missing.front();
    }
    q.unknown = unknown;

    // Power form for the runtime: P t = W(t).
    if (o.power && unknown == Unknown::time) {
        if (!o.n || !o.psuccess) throw usage("power-form runtime needs --n and --psuccess", "--power");
        double t = 0.0;
        if (kind == BoundKind::quantum) {
            t = quantum_time_at_power(*o.n, *o.psuccess, *o.power);
        } else if (kind == BoundKind::classical) {
            if (!o.temp) throw usage("classical bound needs --temp", "--temp");
            t = classical_time_at_power(*o.n, *o.psuccess, *o.power, *o.temp);
        } else {
            throw usage("--power with an unknown runtime is supported for classical and quantum bounds", "--power");
        }
        q.time.reset();
        q.work = *o.power * t;
        BoundResult r = solve_bound(kind, [&] {
            BoundQuery check = q;
            check.time = t;
            check.work.reset();
            check.unknown = Unknown::work;
            return check;
        }());
        r.value = t;
        r.unit = "s";
        r.inputs = q;
        r.formulaTag += " with W = P t";
        json doc = to_json(r);
        doc["power_W"] = *o.power;
        emit(o, out, doc);
        return 0;
    }

    if (haveWork) q.work = resolve_work(o);
    if (unknown == Unknown::work) q.work.reset();
    if (unknown == Unknown::time) q.time.reset();
    if (unknown == Unknown::successProbability) q.successProbability.reset();
    if (unknown == Unknown::bits) q.bits.reset();
    if (kind == BoundKind::classical && !q.temperature) throw usage("classical bound needs --temp", "--temp");

    emit(o, out, to_json(solve_bound(kind, q)));
    return 0;
}

// --------------------------------------------------------------- keylength

int cmd_keylength(const Options& o, std::ostream& out) {
    Scenario s;
    s.name = "custom";
    s.classicalKeyBits.reset();
    bool haveWork = false;
    bool haveTime = false;
    bool haveP = false;
    if (o.scenario) {
        s = scenario(*o.scenario);
        haveWork = haveTime = haveP = true;
    }
    if (o.time) {
        s.duration = parse_duration(*o.time);
        haveTime = true;
    }
    if (o.solarLuminosity) {
        if (o.work || o.power) throw usage("--solar-luminosity replaces --work/--power", "--solar-luminosity");
        if (!haveTime) throw usage("--solar-luminosity needs a time", "--solar-luminosity");
        s.work = constants().solarLuminosity * s.duration.seconds();
        haveWork = true;
    } else if (const auto w = resolve_work(o)) {
        s.work = *w;
        haveWork = true;
    }
    if (o.psuccess) {
        s.successProbability = *o.psuccess;
        haveP = true;
    }
    if (o.temp) s.temperature = *o.temp;

    if (o.mode == "table") {
        std::vector<Scenario> list;
        if (o.scenario || haveWork) {
            if (!haveWork || !haveTime || !haveP) throw usage("table row needs --work, --time and --psuccess", "--work");
            list.push_back(s);
        } else {
            list = all_scenarios();
        }
        const auto rows = build_report(list);
        Output target(o.out, out);
        if (o.format == "csv") write_report_csv(target.stream(), rows);
        else target.stream() << to_json(std::span<const KeylengthReport>(rows)).dump(2) << '\n';
        return 0;
    }

    if (!haveWork) throw usage("keylength needs --scenario or --work/--power", "--work");
    if (!haveTime) throw usage("keylength needs --time", "--time");
    const double t = s.duration.seconds();

    json doc = {
        {"mode", o.mode},
        {"work_J", s.work},
        {"time_s", t},
        {"constants_version", std::string(kConstantsVersion)},
    };
    if (o.scenario) doc["scenario"] = s.name;

    if (o.mode == "deterministic") {
        doc["deterministic_bits"] = max_deterministic_keylength(s.work, t);
    } else {
        if (!haveP) throw usage("keylength needs --psuccess", "--psuccess");
        doc["p_success"] = s.successProbability;
        if (o.mode == "quantum") {
            doc["quantum_bits"] = equivalent_quantum_keylength(s.work, t, s.successProbability);
            doc["log2_keyspace"] = log2_quantum_keyspace(s.work, t, s.successProbability);
        } else if (o.mode == "recoverable") {
            doc["recoverable_bits"] = max_recoverable_keylength(s.work, t, s.successProbability);
            doc["log2_keyspace"] = log2_quantum_keyspace(s.work, t, s.successProbability);
        } else {
            if (!o.temp && !o.scenario) throw usage("classical mode needs --temp", "--temp");
            const auto c = classical_keylength(s.work, t, s.temperature, s.successProbability);
            doc["temperature_K"] = s.temperature;
            doc["classical_bits"] = c.bits;
            doc["below_floor"] = c.belowFloor;
        }
    }
    emit(o, out, doc);
    return 0;
}

// --------------------------------------------------------------------- bht

int cmd_bht(const Options& o, std::ostream& out) {
    std::optional<double> work;
    std::optional<double> time;
    std::optional<double> temp = o.temp;
    std::optional<double> p = o.psuccess;
    if (o.scenario) {
        const auto s = scenario(*o.scenario);
        work = s.work;
        time = s.duration.seconds();
        if (!temp) temp = s.temperature;
        if (!p) p = s.successProbability;
    }
    if (o.time) time = duration_seconds(*o.time);
    if (const auto w = resolve_work(o)) work = *w;
    if (!time) throw usage("bht needs --time", "--time");
    if (!temp) throw usage("bht needs --temp", "--temp");
    if (!p) throw usage("bht needs --psuccess", "--psuccess");

    if (o.invert) {
        if (!work) throw usage("--invert needs --work, --power or --scenario", "--work");
        const int n = bht_min_image_bits(*work, *time, *temp, *p);
        json doc = {
            {"min_image_bits", n},
            {"work_J", *work},
            {"t_total_s", *time},
            {"temperature_K", *temp},
            {"p_success", *p},
            {"log2_min_work_at_n_J", log2_bht_min_work(n, *time, *temp, *p)},
            {"constants_version", std::string(kConstantsVersion)},
        };
        if (o.scenario) doc["scenario"] = *o.scenario;
        emit(o, out, doc);
        return 0;
    }

    if (!o.n) throw usage("bht needs --n (or --invert)", "--n");
    if (o.samples) {
        const double lw = log2_bht_work(*o.n, *o.samples, *time, *temp, *p);
        json doc = {
            {"n", *o.n},
            {"k", *o.samples},
            {"log2_k", std::log2(*o.samples)},
            {"t_s_s", bht_quantum_time(*o.n, *o.samples, *time, *p)},
            {"t_total_s", *time},
            {"work_J", std::exp2(lw)},
            {"log2_work_J", lw},
            {"constants_version", std::string(kConstantsVersion)},
        };
        emit(o, out, doc);
        return 0;
    }
    emit(o, out, to_json(bht_optimal(*o.n, *time, *temp, *p)));
    return 0;
}

// ------------------------------------------------------------------ cosmic

int cmd_cosmic(const Options& o, std::ostream& out) {
    const auto params = CosmologyParams::from_km_s_mpc(o.h0, o.omegaLambda, o.rhoM);
    const CosmicForm form = o.form == "fromDensity" ? CosmicForm::fromDensity : CosmicForm::fromOmega;
    json doc = {
        {"form", o.form},
        {"energy_J", cosmic_energy(params, form)},
        {"H0_km_s_Mpc", o.h0},
        {"H0_per_s", params.H0},
        {"omega_lambda", o.omegaLambda},
        {"constants_version", std::string(kConstantsVersion)},
    };
    if (o.rhoM) doc["rho_m_kg_m3"] = *o.rhoM;
    emit(o, out, doc);
    return 0;
}

// ---------------------------------------------------------------- scenario

int cmd_scenario(const Options& o, std::ostream& out) {
    if (o.action == "list") {
        json arr = json::array();
        for (const auto& s : all_scenarios()) arr.push_back(to_json(s));
        emit(o, out, {{"scenarios", arr}, {"constants", constants_json()}});
        return 0;
    }
    if (o.name.empty()) throw usage("scenario show needs a name", "show");
    json doc = to_json(scenario(o.name));
    doc["constants_version"] = std::string(kConstantsVersion);
    emit(o, out, doc);
    return 0;
}

template <class T>
CLI::Option* opt(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& desc) {
    return app->add_option_function<T>(name, [&target](const T& v) { target = v; }, desc);
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::usage:
        case ErrorKind::parse:
        case ErrorKind::lookup: return 2;
        default: return 1;
    }
}

}  // namespace

int run(const std::vector<std::string>& rawArgs, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Thermodynamic limits of classical and quantum exhaustive search", "qlimits"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto addOut = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Write the result to PATH"); };

    auto* simulate = app.add_subcommand("simulate", "Integrate the search Hamiltonian and emit a trace");
    simulate->add_option("--protocol", o.protocol, "Schedule protocol")
        ->required()
        ->check(CLI::IsMember({"ballistic", "grover", "adiabatic", "custom"}));
    opt(simulate, "--n", o.n, "Key length in bits");
    opt(simulate, "--work", o.work, "Work budget / pulse energy [J]");
    opt(simulate, "--work-radps", o.workRadps, "Energy scale as an angular frequency [rad/s]");
    opt(simulate, "--power", o.power, "Power supply [W]; work = power x time");
    opt(simulate, "--time", o.time, "Budget duration (with --power), e.g. 1s, 5a");
    simulate->add_option("--pulse-phase", o.pulsePhase, "Phase per Grover pulse [rad]")->capture_default_str();
    opt(simulate, "--iterations", o.iterations, "Grover oracle/diffusion pairs");
    simulate->add_option("--error-budget", o.errorBudget, "Adiabatic pacing parameter in (0,1)")->capture_default_str();
    simulate->add_option("--adiabatic-kind", o.adiabaticKind, "Adiabatic sweep pacing")
        ->check(CLI::IsMember({"linear", "local"}))
        ->capture_default_str();
    simulate->add_option("--segments", o.segments, "Adiabatic segments (>= 256)")->capture_default_str();
    opt(simulate, "--schedule-file", o.scheduleFile, "JSON schedule for --protocol custom");
    opt(simulate, "--schedule-out", o.scheduleOut, "Also write the schedule as JSON to PATH");
    opt(simulate, "--dt", o.dt, "Sample step, e.g. 1e-3s (default: runtime/1000)");
    simulate->add_option("--format", o.format, "Trace format")->check(CLI::IsMember({"csv", "json"}));
    addOut(simulate);

    auto* bound = app.add_subcommand("bound", "Solve a work/time/probability bound for one unknown");
    bound->add_option("kind", o.boundKind, "Bound family")
        ->required()
        ->check(CLI::IsMember({"classical", "quantum", "gate", "ballistic"}));
    opt(bound, "--n", o.n, "Key length in bits");
    opt(bound, "--time", o.time, "Runtime, e.g. 1s, 5a");
    opt(bound, "--work", o.work, "Work [J]");
    opt(bound, "--power", o.power, "Power [W]; work = power x time");
    opt(bound, "--temp", o.temp, "Bath temperature [K]");
    opt(bound, "--psuccess", o.psuccess, "Success probability");
    opt(bound, "--solve", o.solve, "Unknown to solve for")->check(CLI::IsMember({"work", "time", "psuccess", "n"}));
    opt(bound, "--corrected-errors", o.correctedErrors, "Corrected errors K (gate bound)");
    addOut(bound);

    auto* keylength = app.add_subcommand("keylength", "Key lengths secure against a given adversary budget");
    opt(keylength, "--scenario", o.scenario, "Registry scenario (datacenter, dyson, cosmic)");
    opt(keylength, "--work", o.work, "Work budget [J]");
    opt(keylength, "--power", o.power, "Power [W]; work = power x time");
    keylength->add_flag("--solar-luminosity", o.solarLuminosity, "Budget = solar luminosity x time");
    opt(keylength, "--time", o.time, "Budget duration, e.g. 5a");
    opt(keylength, "--psuccess", o.psuccess, "Success probability");
    opt(keylength, "--temp", o.temp, "Bath temperature [K] (classical mode)");
    keylength->add_option("--mode", o.mode, "Solver")
        ->check(CLI::IsMember({"quantum", "classical", "deterministic", "recoverable", "table"}))
        ->capture_default_str();
    keylength->add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
    addOut(keylength);

    auto* bht = app.add_subcommand("bht", "Collision-search work bound and minimum image size");
    opt(bht, "--n", o.n, "Image size in bits");
    opt(bht, "--time", o.time, "Total time, e.g. 5a");
    opt(bht, "--temp", o.temp, "Bath temperature [K]");
    opt(bht, "--psuccess", o.psuccess, "Success probability");
    opt(bht, "--samples", o.samples, "Evaluate at this sample count k instead of the optimum");
    bht->add_flag("--invert", o.invert, "Solve for the minimum image size given --work");
    opt(bht, "--work", o.work, "Work budget [J]");
    opt(bht, "--power", o.power, "Power [W]; work = power x time");
    opt(bht, "--scenario", o.scenario, "Take work, time, temperature and P_s from a registry scenario");
    addOut(bht);

    auto* cosmic = app.add_subcommand("cosmic", "Mass-energy inside the cosmic event horizon");
    cosmic->add_option("--h0", o.h0, "Hubble constant [km/s/Mpc]")->capture_default_str();
    cosmic->add_option("--omega-lambda", o.omegaLambda, "Dark-energy density parameter")->capture_default_str();
    opt(cosmic, "--rho-m", o.rhoM, "Matter density [kg/m^3]");
    cosmic->add_option("--form", o.form, "Formula")
        ->check(CLI::IsMember({"fromOmega", "fromDensity"}))
        ->capture_default_str();
    addOut(cosmic);

    auto* scen = app.add_subcommand("scenario", "List or show registry scenarios");
    scen->add_option("action", o.action, "list | show")->required()->check(CLI::IsMember({"list", "show"}));
    scen->add_option("name", o.name, "Scenario name for show");
    addOut(scen);

    auto report = [&](const Error& e) {
        err << to_json(e).dump(2) << '\n';
        return exit_code(e.kind());
    };

    try {
        auto args = apply_config(rawArgs);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        return report(usage(e.what()));
    } catch (const Error& e) {
        return report(e);
    }

    try {
        if (simulate->parsed()) return cmd_simulate(o, out);
        if (bound->parsed()) return cmd_bound(o, out);
        if (keylength->parsed()) return cmd_keylength(o, out);
        if (bht->parsed()) return cmd_bht(o, out);
        if (cosmic->parsed()) return cmd_cosmic(o, out);
        return cmd_scenario(o, out);
    } catch (const Error& e) {
        return report(e);
    } catch (const std::exception& e) {
        return report(Error(ErrorKind::internal, e.what()));
    }
}

}  // namespace qlimits::cli
