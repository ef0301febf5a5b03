#include "anyonwalk/experiments.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "anyonwalk/bracket.hpp"
#include "anyonwalk/entanglement.hpp"
#include "anyonwalk/kraus.hpp"
#include "anyonwalk/observables.hpp"
#include "anyonwalk/pathsum.hpp"
#include "anyonwalk/walk.hpp"

namespace anyonwalk {

namespace fs = std::filesystem;
using nlohmann::json;

std::string version_string() { return "anyonwalk 0.1.0"; }

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint64_t h = 1469598103934665603ULL;
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ULL;
        }
        if (!in) break;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016" PRIx64, h);
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json config_json(const ExperimentConfig& c) {
    json j;
    j["experiment"] = c.experiment;
    j["model"] = c.model;
    j["sites"] = c.sites;
    j["s0"] = c.s0;
    j["t_max"] = c.t_max;
    j["epsilon"] = c.epsilon;
    j["boundary"] = c.boundary;
    j["memory_budget"] = c.memory_budget;
    j["seed"] = c.seed;
    j["threads"] = c.threads;
    j["levels"] = c.levels;
    return j;
}

struct CsvWriter {
    std::ofstream out;
    explicit CsvWriter(const fs::path& p) : out(p) {
        if (!out) throw std::runtime_error("cannot write " + p.string());
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << cells[i] << (i + 1 < cells.size() ? "," : "\n");
    }
};

std::vector<PositionDistribution> run_quantum(const WalkConfig& wc) {
    WalkEngine engine(wc);
    std::vector<PositionDistribution> traj;
    traj.reserve(wc.t_max + 1);
    engine.evolve([&](int, const PositionDistribution& d) { traj.push_back(d); });
    return traj;
}

void do_walk(const ExperimentConfig& cfg, std::vector<std::string>& files) {
    WalkConfig wc;
    wc.model = parse_model(cfg.model);
    wc.t_max = cfg.t_max < 0 ? 16 : cfg.t_max;
    wc.s0 = cfg.s0;
    wc.memory_budget = cfg.memory_budget;
    fs::path csv = fs::path(cfg.output_dir) / "walk.csv";
    CsvWriter w(csv);
    w.row({"t", "s", "p"});
    WalkEngine engine(wc);
    engine.evolve([&](int t, const PositionDistribution& d) {
        for (std::size_t i = 0; i < d.p.size(); ++i)
            if (d.p[i] != 0.0)
                w.row({std::to_string(t), std::to_string(d.site0 + static_cast<int>(i)),
                       fmt(d.p[i])});
    });
    files.push_back(csv.string());
    // variance series + scaling fit
    fs::path vcsv = fs::path(cfg.output_dir) / "walk_variance.csv";
    {
        CsvWriter vw(vcsv);
        vw.row({"t", "variance"});
        WalkEngine e2(wc);
        std::vector<std::pair<int, double>> series;
        e2.evolve([&](int t, const PositionDistribution& d) {
            double v = variance(d, wc.s0);
            vw.row({std::to_string(t), fmt(v)});
            if (t >= 1) series.emplace_back(t, v);
        });
        json rep;
        if (series.size() >= 5) {
            auto fit = classify_scaling(series);
            rep["exponent"] = fit.exponent;
            rep["k2"] = fit.k2;
            rep["k1"] = fit.k1;
            rep["k0"] = fit.k0;
        }
        fs::path jpath = fs::path(cfg.output_dir) / "walk_scaling.json";
        std::ofstream(jpath) << rep.dump(2) << "\n";
        files.push_back(jpath.string());
    }
    files.push_back(vcsv.string());
}

void do_mixing(const ExperimentConfig& cfg, std::vector<std::string>& files) {
    int N = cfg.sites > 0 ? cfg.sites : 5;
    int T = cfg.t_max < 0 ? 1000 : cfg.t_max;
    int s0 = cfg.s0 > 0 ? cfg.s0 : (N + 1) / 2;

    WalkConfig wc;
    wc.boundary = BoundaryCondition::Periodic;
    wc.sites = N;
    wc.s0 = s0;
    wc.t_max = T;
    wc.memory_budget = cfg.memory_budget;

    wc.model = parse_model(cfg.model);
    auto traj_model = run_quantum(wc);
    auto traj_had = hadamard_reference(wc);
    auto rw = classical_rw_reference(N, s0, T, BoundaryCondition::Periodic);

    auto d_rw_inst = [&] {
        std::vector<double> out(T + 1);
        for (int t = 0; t <= T; ++t)
            out[t] = total_variation(rw.trajectory[t], rw.trajectory[T]);
        return out;
    }();
    auto d_rw_avg = distance_to_final(rw.trajectory, T);
    auto d_qw_avg = distance_to_final(traj_had, T);
    auto d_model_avg = distance_to_final(traj_model, T);

    fs::path csv = fs::path(cfg.output_dir) / "mixing.csv";
    CsvWriter w(csv);
    w.row({"t", "D_RW", "D_RWavg", "D_QWavg", "D_Isingavg"});
    for (int t = 0; t <= T; ++t)
        w.row({std::to_string(t), fmt(d_rw_inst[t]), fmt(d_rw_avg[t]), fmt(d_qw_avg[t]),
               fmt(d_model_avg[t])});
    files.push_back(csv.string());
}

void do_exit(const ExperimentConfig& cfg, std::vector<std::string>& files) {
    int N = cfg.sites > 0 ? cfg.sites : 12;
    int T = cfg.t_max < 0 ? 300 : cfg.t_max;
    int s0 = cfg.s0 > 0 ? cfg.s0 : N / 2;

    auto rw = classical_rw_reference(N, s0, T, BoundaryCondition::Absorbing);

    WalkConfig wc;
    wc.boundary = BoundaryCondition::Absorbing;
    wc.sites = N;
    wc.s0 = s0;
    wc.t_max = T;
    wc.memory_budget = cfg.memory_budget;

    auto run_exit = [&](const AnyonModel& m) {
        WalkConfig c = wc;
        c.model = m;
        WalkEngine e(c);
        std::vector<double> acc;
        acc.reserve(T);
        for (int t = 1; t <= T; ++t) {
            e.step();
            acc.push_back(e.absorbed_total());
        }
        return acc;
    };
    auto p_qw = run_exit(AnyonModel::abelian(0.0));
    auto p_model = run_exit(parse_model(cfg.model));

    fs::path csv = fs::path(cfg.output_dir) / "exit.csv";
    CsvWriter w(csv);
    w.row({"t", "P_RW", "P_QW", "P_Ising"});
    for (int t = 1; t <= T; ++t)
        w.row({std::to_string(t), fmt(rw.exit_series[t - 1]), fmt(p_qw[t - 1]),
               fmt(p_model[t - 1])});
    files.push_back(csv.string());
}

void do_channel(const ExperimentConfig& cfg, std::vector<std::string>& files) {
    int T = cfg.t_max < 0 ? 200 : cfg.t_max;
    json fits;
    fs::path csv = fs::path(cfg.output_dir) / "channel_variance.csv";
    CsvWriter w(csv);
    w.row({"k", "t", "variance"});
    for (int k : cfg.levels) {
        auto kraus = build_w2_kraus(AnyonModel::su2k(k));
        int window = 4 * T + 9;
        auto rho = PositionDensityMatrix::delta(window, window / 2);
        std::vector<std::pair<int, double>> series;
        for (int t = 1; t <= T; ++t) {
            apply_channel(rho, kraus);
            double v = rho.variance(window / 2);
            w.row({std::to_string(k), std::to_string(t), fmt(v)});
            if (t >= (T + 3) / 4) series.emplace_back(t, v);
        }
        auto fit = classify_scaling(series);
        fits["su2k:" + std::to_string(k)] = fit.exponent;
    }
    fs::path jpath = fs::path(cfg.output_dir) / "channel_fit.json";
    std::ofstream(jpath) << fits.dump(2) << "\n";
    files.push_back(csv.string());
    files.push_back(jpath.string());
}

void do_entropy(const ExperimentConfig& cfg, std::vector<std::string>& files) {
    std::vector<int> levels = cfg.levels;
    if (levels.empty()) for (int k = 1; k <= 20; ++k) levels.push_back(k);
    std::vector<EntropyReport> reports(levels.size());
    int nt = std::max(1, cfg.threads);
    if (nt == 1) {
        reports = entropy_sweep(levels);
    } else {
        std::vector<std::thread> pool;
        std::size_t stride = (levels.size() + nt - 1) / nt;
        for (int w = 0; w < nt; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w * stride; i < std::min(levels.size(), (w + 1) * stride); ++i)
                    reports[i] = linear_entropy(double_braid(initial_two_tree_state(levels[i])));
            });
        }
        for (auto& th : pool) th.join();
    }
    fs::path csv = fs::path(cfg.output_dir) / "entropy.csv";
    CsvWriter w(csv);
    w.row({"k", "Q", "leakage"});
    for (const auto& r : reports)
        w.row({std::to_string(r.k), fmt(r.q), fmt(r.leakage)});
    files.push_back(csv.string());
}

void do_oracle_check(const ExperimentConfig& cfg, std::vector<std::string>& files) {
    // deterministic word set from a small LCG
    std::uint64_t state = cfg.seed ? cfg.seed : 1;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    json cases = json::array();
    int checked = 0;
    for (int k : {2, 3, 4}) {
        AnyonModel model = AnyonModel::su2k(k);
        for (int trial = 0; trial < 12; ++trial) {
            int strands = 2 + static_cast<int>(next() % 5);
            int len = static_cast<int>(next() % 9);
            BraidWord word;
            for (int i = 0; i < len; ++i)
                word.push(1 + static_cast<int>(next() % std::max(1, strands - 1)),
                          next() % 2 == 0);
            auto rep = verify_trace_identity(word, strands, model);
            json c;
            c["model"] = model.name();
            c["strands"] = strands;
            c["length"] = len;
            c["fusion"] = {rep.fusion_side.real(), rep.fusion_side.imag()};
            c["bracket"] = {rep.bracket_side.real(), rep.bracket_side.imag()};
            c["difference"] = rep.difference;
            c["pass"] = rep.difference <= 1e-9;
            cases.push_back(c);
            ++checked;
        }
    }
    json rep;
    rep["cases"] = cases;
    rep["total"] = checked;
    fs::path jpath = fs::path(cfg.output_dir) / "oracle_check.json";
    std::ofstream(jpath) << rep.dump(2) << "\n";
    files.push_back(jpath.string());
}

}  // namespace

std::vector<std::string> validate(const ExperimentConfig& cfg) {
    std::vector<std::string> diags;
    static const std::vector<std::string> kKnown = {"walk",    "mixing",  "exit",
                                                    "channel", "entropy", "oracle-check"};
    bool known = false;
    for (const auto& e : kKnown) known = known || e == cfg.experiment;
    if (!known) diags.push_back("unknown experiment '" + cfg.experiment + "'");
    try {
        parse_model(cfg.model);
    } catch (const std::exception& e) {
        diags.push_back(e.what());
    }
    if (cfg.experiment == "mixing" || cfg.experiment == "exit") {
        int N = cfg.sites > 0 ? cfg.sites : (cfg.experiment == "mixing" ? 5 : 12);
        if (cfg.s0 > 0 && (cfg.s0 < 1 || cfg.s0 > N))
            diags.push_back("s0 outside site range 1.." + std::to_string(N));
        if (cfg.experiment == "mixing" && N % 2 == 0)
            diags.push_back("warning: even N gives a bipartite oscillating RW; odd N recommended");
    }
    if (cfg.experiment == "walk") {
        try {
            WalkConfig wc;
            wc.model = parse_model(cfg.model);
            wc.t_max = cfg.t_max < 0 ? 16 : cfg.t_max;
            wc.s0 = cfg.s0;
            std::uint64_t need = state_bytes(wc);
            if (need > cfg.memory_budget)
                diags.push_back("state vector needs " + std::to_string(need) +
                                " bytes ((2t+1) * fusion_dim * 2 amplitudes), budget " +
                                std::to_string(cfg.memory_budget));
        } catch (const std::exception& e) {
            diags.push_back(e.what());
        }
    }
    if (cfg.t_max == 0) diags.push_back("t_max must be positive");
    return diags;
}

RunManifest run_experiment(const ExperimentConfig& cfg) {
    auto diags = validate(cfg);
    for (const auto& d : diags)
        if (d.rfind("warning:", 0) != 0) throw std::invalid_argument(d);
    fs::create_directories(cfg.output_dir);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> files;
    if (cfg.experiment == "walk") do_walk(cfg, files);
    else if (cfg.experiment == "mixing") do_mixing(cfg, files);
    else if (cfg.experiment == "exit") do_exit(cfg, files);
    else if (cfg.experiment == "channel") do_channel(cfg, files);
    else if (cfg.experiment == "entropy") do_entropy(cfg, files);
    else if (cfg.experiment == "oracle-check") do_oracle_check(cfg, files);
    auto t1 = std::chrono::steady_clock::now();

    RunManifest m;
    m.experiment = cfg.experiment;
    m.config_echo = config_json(cfg).dump();
    m.code_version = version_string();
    m.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    for (const auto& f : files) m.output_digests.emplace_back(f, file_digest(f));

    json mj;
    mj["experiment"] = m.experiment;
    mj["config"] = json::parse(m.config_echo);
    mj["code_version"] = m.code_version;
    mj["wall_seconds"] = m.wall_seconds;
    mj["assumptions"] = {"fig3 default s0 = N/2", "rw initialized at the same s0"};
    json dig = json::object();
    for (const auto& [f, d] : m.output_digests) dig[fs::path(f).filename().string()] = d;
    mj["output_digests"] = dig;
    std::ofstream(fs::path(cfg.output_dir) / (cfg.experiment + "_manifest.json"))
        << mj.dump(2) << "\n";
    return m;
}

}  // namespace anyonwalk
