#include "qdiv/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include "qdiv/basis.hpp"
#include "qdiv/canonical.hpp"
#include "qdiv/decay.hpp"
#include "qdiv/dephasing.hpp"

namespace qdiv {

std::vector<double> GridSpec::points() const {
    std::vector<double> ts(steps);
    const double h = (stop - start) / (steps - 1);
    for (int i = 0; i < steps; ++i) ts[i] = start + h * i;
    ts.back() = stop;
    return ts;
}

RunConfig parse_config(const json& j) {
    if (!j.is_object()) fail(ErrorKind::ConfigParse, "config must be a JSON object");
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        fail(ErrorKind::ConfigParse, "config needs schema: 1");
    if (!j.contains("model") || !j["model"].is_string())
        fail(ErrorKind::ConfigParse, "config needs a model string");

    RunConfig c;
    c.model = j["model"].get<std::string>();
    const bool scan_model = c.model == "dephasing" || c.model == "decay";
    if (c.model != "dephasing" && c.model != "decay" && c.model != "raw-family" && c.model != "canonical")
        fail(ErrorKind::ConfigParse, "unknown model: " + c.model);

    if (scan_model) {
        if (!j.contains("grid")) fail(ErrorKind::ConfigParse, "scan config needs a grid");
        const json& g = j["grid"];
        if (!g.contains("start") || !g.contains("stop") || !g.contains("steps"))
            fail(ErrorKind::ConfigParse, "grid needs start, stop, steps");
        c.grid = {g["start"].get<double>(), g["stop"].get<double>(), g["steps"].get<int>()};
        if (c.grid.steps < 2) fail(ErrorKind::ConfigParse, "grid needs at least 2 steps");
        if (!(c.grid.stop > c.grid.start)) fail(ErrorKind::ConfigParse, "grid stop must exceed start");
    }

    if (c.model == "dephasing") {
        if (!j.contains("levels")) fail(ErrorKind::ConfigParse, "dephasing config needs levels");
        const json& l = j["levels"];
        if (l.is_number_integer()) {
            c.level_min = c.level_max = l.get<int>();
        } else if (l.is_object() && l.contains("min") && l.contains("max")) {
            c.level_min = l["min"].get<int>();
            c.level_max = l["max"].get<int>();
        } else {
            fail(ErrorKind::ConfigParse, "levels must be an integer or {min, max}");
        }
        if (c.level_min < 2 || c.level_max > 64 || c.level_min > c.level_max)
            fail(ErrorKind::ConfigParse, "levels must lie within [2, 64]");
        if (!j.contains("bath")) fail(ErrorKind::ConfigParse, "dephasing config needs a bath");
        c.payload = j["bath"];
    } else if (c.model == "decay") {
        if (!j.contains("decay")) fail(ErrorKind::ConfigParse, "decay config needs a decay section");
        c.payload = j["decay"];
    } else if (c.model == "raw-family") {
        if (!j.contains("family")) fail(ErrorKind::ConfigParse, "raw-family config needs a family");
        c.payload = j["family"];
        if (j.contains("split")) c.split = j["split"].get<int>();
    } else {
        if (!j.contains("generator")) fail(ErrorKind::ConfigParse, "canonical config needs a generator");
        c.payload = j["generator"];
    }

    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (!(c.tol > 0.0)) fail(ErrorKind::ConfigParse, "tol must be positive");
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("pairwise")) c.pairwise = j["pairwise"].get<bool>();

    std::ostringstream hex;
    hex << std::hex << fnv1a64(j.dump());
    c.hash = hex.str();
    return c;
}

namespace {

void finalize_hierarchy(Report& rep, const std::vector<double>& times) {
    rep.hierarchy_consistent = true;
    for (const auto& r : rep.records)
        for (size_t i = 0; i + 1 < r.divisible.size(); ++i)
            if (!r.divisible[i] && r.divisible[i + 1]) rep.hierarchy_consistent = false;

    // maximal runs of grid times where some level fails
    size_t i = 0;
    while (i < rep.records.size()) {
        const auto failing = [&](size_t idx) {
            const auto& d = rep.records[idx].divisible;
            return std::find(d.begin(), d.end(), false) != d.end();
        };
        if (!failing(i)) {
            ++i;
            continue;
        }
        size_t j = i;
        std::set<int> levels;
        while (j < rep.records.size() && failing(j)) {
            for (size_t l = 0; l < rep.records[j].divisible.size(); ++l)
                if (!rep.records[j].divisible[l]) levels.insert(rep.levels[l]);
            ++j;
        }
        rep.witness_intervals.push_back({times[i], times[j - 1], {levels.begin(), levels.end()}});
        i = j;
    }
}

Report run_dephasing(const RunConfig& config) {
    const BathSpec bath = bath_from_json(config.payload);
    const int kmax = config.level_max;
    const std::vector<double> times = config.grid.points();

    Report rep;
    rep.model = config.model;
    for (int k = config.level_min; k <= kmax; ++k) rep.levels.push_back(k);
    rep.records.resize(times.size());

#pragma omp parallel for schedule(dynamic)
    for (int ti = 0; ti < static_cast<int>(times.size()); ++ti) {
        const double t = times[ti];
        const ComplexMatrix dk = toeplitz_D(bath, kmax, t);

        const std::vector<double> full_ev = herm_eigvals(hermitize(dk));
        const double scale = std::max(std::abs(full_ev.front()), std::abs(full_ev.back()));
        const double threshold = config.tol * std::max(1.0, scale);

        ScanRecord rec;
        rec.time = t;
        for (int k : rep.levels) {
            const ComplexMatrix section = leading_principal_submatrix(dk, k - 1);
            const std::vector<double> ev = herm_eigvals(hermitize(section));
            rec.min_eig.push_back(ev.front());
            rec.divisible.push_back(ev.front() >= -threshold);
        }
        rep.records[ti] = std::move(rec);
    }

    finalize_hierarchy(rep, times);
    return rep;
}

Report run_decay(const RunConfig& config) {
    const DecayModelSpec spec = decay_spec_from_json(config.payload);
    const std::vector<double> times = config.grid.points();

    Report rep;
    rep.model = config.model;
    for (int n = 2; n <= spec.levels; ++n) rep.levels.push_back(n);
    rep.records.resize(times.size());

    bool error = false;
    std::string error_msg;

#pragma omp parallel for schedule(dynamic)
    for (int ti = 0; ti < static_cast<int>(times.size()); ++ti) {
        if (error) continue;
        try {
            const double t = times[ti];
            const GeneratorSpec full = decay_generator(spec, t);
            const DecoherenceMatrix dfull = decoherence_matrix(full, gell_mann_basis(spec.levels));
            const std::vector<double> full_ev = herm_eigvals(dfull.mat);
            const double scale = std::max(std::abs(full_ev.front()), std::abs(full_ev.back()));
            const double threshold = config.tol * std::max(1.0, scale);

            ScanRecord rec;
            rec.time = t;
            for (int n : rep.levels) {
                std::vector<double> ev;
                if (n == spec.levels) {
                    ev = full_ev;
                } else {
                    const GeneratorSpec sub = subdynamics_generator(spec, n, t);
                    ev = herm_eigvals(decoherence_matrix(sub, gell_mann_basis(n)).mat);
                }
                rec.min_eig.push_back(ev.front());
                rec.divisible.push_back(ev.front() >= -threshold);
            }
            rep.records[ti] = std::move(rec);
        } catch (const Error& e) {
#pragma omp critical
            {
                error = true;
                error_msg = "t=" + std::to_string(times[ti]) + ": " + e.what();
            }
        }
    }
    require(!error, ErrorKind::ModelError, "decay scan failed at " + error_msg);

    finalize_hierarchy(rep, times);
    return rep;
}

Report run_check_family(const RunConfig& config) {
    const MapFamily fam = family_from_json(config.payload);

    Report rep;
    rep.model = config.model;

    json per_map = json::array();
    for (int i = 0; i < fam.size(); ++i) {
        const CptpVerdict v = is_cptp(fam.maps[i], config.tol);
        per_map.push_back({{"time", fam.times[i]},
                           {"cp", v.cp},
                           {"tp", v.tp},
                           {"choi_min_eig", v.choi_min_eig},
                           {"tp_deviation", v.tp_deviation}});
    }
    rep.extra["maps_cptp"] = std::move(per_map);

    const DivisibilityReport div = divisibility_scan(fam, config.tol, config.pairwise);
    rep.extra["divisible"] = div.divisible;
    json intervals = json::array();
    for (const auto& iv : div.intervals)
        intervals.push_back({{"t1", fam.times[iv.i1]},
                             {"t2", fam.times[iv.i2]},
                             {"cp", iv.cp},
                             {"tp", iv.tp},
                             {"choi_min_eig", iv.choi_min_eig},
                             {"tp_deviation", iv.tp_deviation}});
    rep.extra["intervals"] = std::move(intervals);

    if (config.split) {
        const SubspaceSplit split(fam.dim, *config.split);
        json s;
        s["sub_dim"] = *config.split;
        s["invariant"] = is_invariant_subspace(fam, split, config.tol);
        double pa_max = 0.0, tp_dev = 0.0;
        for (const auto& m : fam.maps) {
            const CompressedBlocks b = compress(m, split);
            pa_max = std::max(pa_max, b.pa.max_abs());
            tp_dev = std::max(tp_dev, is_cptp(b.aa, config.tol).tp_deviation);
        }
        s["max_pa_norm"] = pa_max;
        s["max_compressed_tp_deviation"] = tp_dev;
        double gap = 0.0;
        for (int i = 0; i + 1 < fam.size(); ++i)
            gap = std::max(gap, composition_gap(fam, split, i, i + 1));
        s["max_composition_gap"] = gap;
        rep.extra["split"] = std::move(s);
    }
    return rep;
}

Report run_canonical(const RunConfig& config) {
    const GeneratorInput gen = generator_from_json(config.payload);

    Report rep;
    rep.model = config.model;

    const CanonicalForm form = gen.raw ? canonical_form(gen.superop) : canonical_form(gen.terms);
    const OperatorBasis basis = gell_mann_basis(gen.dim);
    const DecoherenceMatrix d =
        gen.raw ? decoherence_matrix(gen.superop, basis) : decoherence_matrix(gen.terms, basis);
    const PsdVerdict psd = psd_check(d.mat, config.tol);

    rep.extra["rates"] = form.rates;
    rep.extra["min_eigenvalue"] = psd.min_eigenvalue;
    rep.extra["tolerance_used"] = psd.tolerance_used;
    rep.extra["divisible"] = psd.is_psd;
    rep.extra["hamiltonian"] = matrix_to_json(form.hamiltonian);
    return rep;
}

std::string scan_csv(const Report& rep) {
    std::ostringstream out;
    out << "time";
    for (int k : rep.levels) out << ",min_eig_k" << k;
    for (int k : rep.levels) out << ",divisible_k" << k;
    out << "\n";
    for (const auto& r : rep.records) {
        out << format_double(r.time);
        for (double e : r.min_eig) out << "," << format_double(e);
        for (bool d : r.divisible) out << "," << (d ? 1 : 0);
        out << "\n";
    }
    return out.str();
}

std::string family_csv(const Report& rep) {
    std::ostringstream out;
    out << "t1,t2,cp,tp,choi_min_eig,tp_deviation\n";
    for (const auto& iv : rep.extra["intervals"]) {
        out << format_double(iv["t1"].get<double>()) << "," << format_double(iv["t2"].get<double>()) << ","
            << (iv["cp"].get<bool>() ? 1 : 0) << "," << (iv["tp"].get<bool>() ? 1 : 0) << ","
            << format_double(iv["choi_min_eig"].get<double>()) << ","
            << format_double(iv["tp_deviation"].get<double>()) << "\n";
    }
    return out.str();
}

std::string rates_csv(const Report& rep) {
    std::ostringstream out;
    const auto& rates = rep.extra["rates"];
    for (size_t i = 0; i < rates.size(); ++i) out << (i ? "," : "") << "rate_" << (i + 1);
    out << "\n";
    for (size_t i = 0; i < rates.size(); ++i) out << (i ? "," : "") << format_double(rates[i].get<double>());
    out << "\n";
    return out.str();
}

} // namespace

Report run(const RunConfig& config, const std::string& out_dir) {
    Report rep;
    if (config.model == "dephasing") {
        rep = run_dephasing(config);
    } else if (config.model == "decay") {
        rep = run_decay(config);
    } else if (config.model == "raw-family") {
        rep = run_check_family(config);
    } else if (config.model == "canonical") {
        rep = run_canonical(config);
    } else {
        fail(ErrorKind::ConfigParse, "unknown model: " + config.model);
    }

    std::filesystem::create_directories(out_dir);

    json j;
    j["schema"] = 1;
    j["tool_version"] = kToolVersion;
    j["config_hash"] = config.hash;
    j["seed"] = config.seed;
    j["model"] = rep.model;
    j["hierarchy_consistent"] = rep.hierarchy_consistent;
    if (!rep.levels.empty()) j["levels"] = rep.levels;
    if (!rep.records.empty()) {
        json records = json::array();
        for (const auto& r : rep.records) {
            json rec;
            rec["time"] = r.time;
            rec["min_eig"] = r.min_eig;
            rec["divisible"] = r.divisible;
            records.push_back(std::move(rec));
        }
        j["records"] = std::move(records);
        json wits = json::array();
        for (const auto& w : rep.witness_intervals)
            wits.push_back({{"t_begin", w.t_begin}, {"t_end", w.t_end}, {"levels", w.levels}});
        j["witness_intervals"] = std::move(wits);
    }
    for (auto& [key, value] : rep.extra.items()) j[key] = value;

    write_file_atomic(out_dir + "/report.json", j.dump(2) + "\n");

    std::string csv;
    if (!rep.records.empty())
        csv = scan_csv(rep);
    else if (config.model == "raw-family")
        csv = family_csv(rep);
    else if (config.model == "canonical")
        csv = rates_csv(rep);
    if (!csv.empty()) write_file_atomic(out_dir + "/scan.csv", csv);

    return rep;
}

} // namespace qdiv
