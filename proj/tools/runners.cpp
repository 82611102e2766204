#include "runners.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace qwcli {

using json = nlohmann::ordered_json;
using namespace qwalk;

std::string fmt17(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json config_json(const ResolvedConfig& rc) {
    json j;
    j["theta"] = rc.raw.theta;
    j["alpha"] = {rc.alpha.real(), rc.alpha.imag()};
    j["beta"] = {rc.beta.real(), rc.beta.imag()};
    j["weight"] = {{"kind", rc.raw.weight}, {"sigma", rc.raw.sigma}, {"csv", rc.raw.weight_csv}};
    j["t_list"] = rc.raw.t_list;
    j["r_max"] = rc.raw.r_max;
    j["grid_size"] = rc.raw.grid_size;
    j["tail_tol"] = rc.raw.tail_tol;
    j["out"] = rc.raw.out;
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << body;
}

void write_json(const std::filesystem::path& path, const json& j) {
    write_text(path, j.dump(2) + "\n");
}

TiltedDensity limit_density(const ResolvedConfig& rc, const SpectralContext& ctx,
                            const InitCoin& coin) {
    if (rc.closed_form)
        return closed_form_density(*rc.closed_form, ctx, coin, rc.raw.sigma);
    return general_density(rc.weight, ctx, coin, rc.raw.grid_size);
}

}  // namespace

RunSummary run_simulate(const ResolvedConfig& rc) {
    std::filesystem::create_directories(rc.out_dir);
    const InitCoin coin{rc.alpha, rc.beta};
    const Stopwatch total;

    auto [state, report] =
        synthesize_initial(rc.weight, coin, rc.raw.grid_size, rc.raw.tail_tol);
    const double wnum = (rc.weight.kind() == WeightKind::Unit)
                            ? 2.0 * std::numbers::pi
                            : weight_norm(rc.weight,
                                          std::max<std::size_t>(rc.raw.grid_size, 1u << 16));

    RunSummary summary;
    std::int64_t reached = 0;
    for (const std::int64_t t : rc.raw.t_list) {
        const Stopwatch leg;
        state = evolve(state, rc.theta, t - reached);
        reached = t;
        const ProbabilityDistribution dist = distribution(trim(state));

        std::string csv = "x,prob\n";
        for (std::size_t i = 0; i < dist.probs.size(); ++i) {
            csv += std::to_string(dist.origin + static_cast<std::int64_t>(i));
            csv += ',';
            csv += fmt17(dist.probs[i]);
            csv += '\n';
        }
        const auto csv_path = rc.out_dir / ("simulate_t" + std::to_string(t) + ".csv");
        write_text(csv_path, csv);

        json side;
        side["config"] = config_json(rc);
        side["t"] = t;
        side["W_numeric"] = wnum;
        side["X0"] = report.cutoff;
        side["deficit"] = report.deficit;
        side["renormalized"] = report.renormalized;
        side["total_mass"] = dist.total();
        side["wall_time_s"] = leg.seconds();
        side["wall_time_total_s"] = total.seconds();
        const auto json_path = rc.out_dir / ("simulate_t" + std::to_string(t) + ".json");
        write_json(json_path, side);
        summary.files.push_back(csv_path);
        summary.files.push_back(json_path);
    }
    return summary;
}

RunSummary run_density(const ResolvedConfig& rc) {
    std::filesystem::create_directories(rc.out_dir);
    const InitCoin coin{rc.alpha, rc.beta};
    const SpectralContext ctx{rc.theta};
    const Stopwatch total;

    const TiltedDensity general = general_density(rc.weight, ctx, coin, rc.raw.grid_size);
    std::optional<TiltedDensity> closed;
    if (rc.closed_form) closed = closed_form_density(*rc.closed_form, ctx, coin, rc.raw.sigma);

    const double ac = ctx.abs_c();
    const double xmax = 0.999 * ac;
    const int npts = 2001;

    std::string csv = closed ? "x,limit_density,closed_form\n" : "x,limit_density\n";
    double max_diff = 0.0;
    double trapz = 0.0;
    double prev_v = 0.0;
    for (int i = 0; i < npts; ++i) {
        const double x = -xmax + 2.0 * xmax * static_cast<double>(i) / (npts - 1);
        const double v = general.evaluate(x);
        csv += fmt17(x);
        csv += ',';
        csv += fmt17(v);
        if (closed) {
            const double vc = closed->evaluate(x);
            csv += ',';
            csv += fmt17(vc);
            max_diff = std::max(max_diff, std::abs(v - vc));
        }
        csv += '\n';
        if (i > 0) trapz += 0.5 * (v + prev_v);
        prev_v = v;
    }
    trapz *= 2.0 * xmax / (npts - 1);

    const auto csv_path = rc.out_dir / "density.csv";
    write_text(csv_path, csv);

    json side;
    side["config"] = config_json(rc);
    side["support"] = ac;
    side["lambda"] = general.lambda();
    side["grid"] = {{"points", npts}, {"x_max", xmax}};
    side["trapezoid_mass"] = trapz;
    side["covered_mass"] = density_cdf(general, xmax) - density_cdf(general, -xmax);
    if (closed) side["max_closed_form_diff"] = max_diff;
    side["wall_time_s"] = total.seconds();
    const auto json_path = rc.out_dir / "density.json";
    write_json(json_path, side);
    return {{csv_path, json_path}};
}

RunSummary run_moments(const ResolvedConfig& rc) {
    std::filesystem::create_directories(rc.out_dir);
    const InitCoin coin{rc.alpha, rc.beta};
    const SpectralContext ctx{rc.theta};
    const Stopwatch total;

    const TiltedDensity density = limit_density(rc, ctx, coin);
    const int r_max = rc.raw.r_max;
    std::vector<double> xs(static_cast<std::size_t>(r_max) + 1);
    for (int r = 0; r <= r_max; ++r) xs[static_cast<std::size_t>(r)] = xspace_moment(density, r);
    const std::vector<double> ks_moments = kspace_moments(rc.weight, ctx, coin, r_max);

    ConvergenceReport conv;
    for (int r = 0; r <= r_max; ++r) conv.r_values.push_back(r);

    auto [state, report] =
        synthesize_initial(rc.weight, coin, rc.raw.grid_size, rc.raw.tail_tol);
    std::int64_t reached = 0;
    std::vector<MomentReport> rows;
    for (const std::int64_t t : rc.raw.t_list) {
        state = evolve(state, rc.theta, t - reached);
        reached = t;
        const ProbabilityDistribution dist = distribution(state);
        conv.t_values.push_back(t);
        conv.ks.push_back(ks_distance(dist, density));
        std::vector<double> errs;
        for (int r = 0; r <= r_max; ++r) {
            MomentReport row;
            row.r = r;
            row.t = t;
            row.simulated = empirical_moment(dist, r);
            row.xspace = xs[static_cast<std::size_t>(r)];
            row.kspace = ks_moments[static_cast<std::size_t>(r)];
            rows.push_back(row);
            errs.push_back(row.diff_sim_x());
        }
        conv.moment_errors.push_back(std::move(errs));
    }

    std::string csv = "r,simulated,xspace,kspace,t,diff_sim_x,diff_sim_k,diff_x_k\n";
    for (const MomentReport& row : rows) {
        csv += std::to_string(row.r) + ',' + fmt17(row.simulated) + ',' + fmt17(row.xspace) +
               ',' + fmt17(row.kspace) + ',' + std::to_string(row.t) + ',' +
               fmt17(row.diff_sim_x()) + ',' + fmt17(row.diff_sim_k()) + ',' +
               fmt17(row.diff_x_k()) + '\n';
    }
    const auto csv_path = rc.out_dir / "moments.csv";
    write_text(csv_path, csv);

    json side;
    side["config"] = config_json(rc);
    side["W_numeric"] = (rc.weight.kind() == WeightKind::Unit)
                            ? 2.0 * std::numbers::pi
                            : weight_norm(rc.weight,
                                          std::max<std::size_t>(rc.raw.grid_size, 1u << 16));
    side["X0"] = report.cutoff;
    side["deficit"] = report.deficit;
    side["xspace_route"] = rc.closed_form ? "closed_form" : "general";
    side["wall_time_s"] = total.seconds();
    const auto json_path = rc.out_dir / "moments.json";

    RunSummary summary;
    summary.files = {csv_path, json_path};

    // convergence table rides along whenever several t values are present
    std::string conv_csv = "t,ks";
    for (int r = 0; r <= r_max; ++r) conv_csv += ",err_r" + std::to_string(r);
    conv_csv += '\n';
    for (std::size_t i = 0; i < conv.t_values.size(); ++i) {
        conv_csv += std::to_string(conv.t_values[i]) + ',' + fmt17(conv.ks[i]);
        for (double e : conv.moment_errors[i]) conv_csv += ',' + fmt17(e);
        conv_csv += '\n';
    }
    const auto conv_csv_path = rc.out_dir / "convergence.csv";
    write_text(conv_csv_path, conv_csv);
    summary.files.push_back(conv_csv_path);

    json conv_json;
    conv_json["t_values"] = conv.t_values;
    conv_json["ks"] = conv.ks;
    conv_json["r_values"] = conv.r_values;
    conv_json["moment_errors"] = conv.moment_errors;
    if (conv.t_values.size() >= 3 && r_max >= 2) {
        const RateFit fit = rate_fit(conv);
        conv_json["rate_fit"] = {
            {"slope", fit.slope}, {"residual", fit.residual}, {"degenerate", fit.degenerate}};
        side["rate_fit_slope"] = fit.degenerate ? json(nullptr) : json(fit.slope);
    }
    const auto conv_json_path = rc.out_dir / "convergence.json";
    write_json(conv_json_path, conv_json);
    summary.files.push_back(conv_json_path);

    write_json(json_path, side);
    return summary;
}

RunSummary run_figure1(const ResolvedConfig& rc) {
    std::filesystem::create_directories(rc.out_dir);
    // caption coin, regardless of flags
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const InitCoin coin{cd{inv_sqrt2, 0.0}, cd{0.0, inv_sqrt2}};
    const SpectralContext ctx{rc.theta};
    const std::int64_t t = rc.raw.t_list.back();
    const double sigma = rc.raw.sigma > 0.0 ? rc.raw.sigma : 0.25 * ctx.abs_c();
    const Stopwatch total;

    struct Panel {
        const char* name;
        WeightSpec weight;
        TiltedDensity density;
    };
    const Panel panels[] = {
        {"semicircle", WeightSpec::semicircle(rc.theta), TiltedDensity::semicircle(ctx, coin)},
        {"arcsine", WeightSpec::arcsine(rc.theta), TiltedDensity::arcsine(ctx, coin)},
        {"gaussian", WeightSpec::gaussian(rc.theta, sigma),
         TiltedDensity::truncated_gaussian(ctx, coin, sigma)},
        {"uniform", WeightSpec::uniform(rc.theta), TiltedDensity::uniform(ctx, coin)},
    };

    RunSummary summary;
    json side;
    side["config"] = config_json(rc);
    side["t"] = t;
    side["theta"] = rc.raw.theta;
    side["sigma"] = sigma;
    side["alpha"] = {coin.alpha.real(), coin.alpha.imag()};
    side["beta"] = {coin.beta.real(), coin.beta.imag()};
    json per_seed = json::object();

    for (const Panel& panel : panels) {
        const auto [state0, report] =
            synthesize_initial(panel.weight, coin, rc.raw.grid_size, rc.raw.tail_tol);
        const WalkState state = evolve(state0, rc.theta, t);
        const ProbabilityDistribution dist = distribution(state);
        const OverlayCurve curve = density_overlay(dist, panel.density);

        std::string csv = "x,simulated,limit\n";
        for (const OverlayRow& row : curve.rows)
            csv += fmt17(row.x) + ',' + fmt17(row.simulated) + ',' + fmt17(row.limit) + '\n';
        const auto csv_path = rc.out_dir / (std::string(panel.name) + ".csv");
        write_text(csv_path, csv);
        summary.files.push_back(csv_path);

        json seed;
        seed["W_numeric"] =
            weight_norm(panel.weight, std::max<std::size_t>(rc.raw.grid_size, 1u << 16));
        seed["X0"] = report.cutoff;
        seed["deficit"] = report.deficit;
        seed["ks"] = ks_distance(dist, panel.density);
        seed["single_parity"] = curve.single_parity;
        per_seed[panel.name] = seed;
    }
    side["seeds"] = per_seed;
    side["wall_time_s"] = total.seconds();
    const auto json_path = rc.out_dir / "figure1.json";
    write_json(json_path, side);
    summary.files.push_back(json_path);

    std::string gp;
    gp += "set terminal pngcairo size 1200,300\n";
    gp += "set output 'figure1.png'\n";
    gp += "set multiplot layout 1,4\n";
    for (const Panel& panel : panels) {
        gp += "set title '" + std::string(panel.name) + "'\n";
        gp += "plot '" + std::string(panel.name) +
              ".csv' using 1:2 with points pt 7 ps 0.2 lc rgb 'blue' title 'walk t=" +
              std::to_string(t) + "', '' using 1:3 with lines lc rgb 'red' title 'limit'\n";
    }
    gp += "unset multiplot\n";
    const auto gp_path = rc.out_dir / "figure1.gp";
    write_text(gp_path, gp);
    summary.files.push_back(gp_path);
    return summary;
}

}  // namespace qwcli
