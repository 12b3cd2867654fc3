// Command-line front end for the logical Bayesian inference library.
//
// Subcommands: channel, info, fit-truth, classify, cm-class, mixture,
// confirm, demo-adult. All outputs are deterministic: fixed field order and
// shortest round-trip float formatting capped at 12 significant digits.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lbi/lbi.hpp"

namespace fs = std::filesystem;
using namespace lbi;

namespace {

struct CommonOpts {
    std::string out_dir = ".";
    std::string base = "bits";
    std::size_t bins = 101;
    std::string range;  // "lo:hi"
    std::size_t max_iter = 100;
    double tol = 1e-9;
    unsigned seed = 0;

    double scale() const { return base == "nats" ? std::log(2.0) : 1.0; }
    std::string unit() const { return base; }

    void parse_range(double& lo, double& hi) const {
        const auto colon = range.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("expected --range lo:hi");
        lo = std::stod(range.substr(0, colon));
        hi = std::stod(range.substr(colon + 1));
        if (!(hi > lo)) throw std::runtime_error("range must have lo < hi");
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--base", opts.base, "Log base for reports: bits or nats")
        ->check(CLI::IsMember({"bits", "nats"}));
    cmd->add_option("--bins", opts.bins, "Bin count for raw-sample binning")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    cmd->add_option("--range", opts.range, "Binning range lo:hi");
    cmd->add_option("--max-iter", opts.max_iter, "Iteration cap")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    cmd->add_option("--tol", opts.tol, "Convergence tolerance");
    cmd->add_option("--seed", opts.seed, "Seed for synthetic fixture generation");
}

std::ofstream open_out(const CommonOpts& opts, const std::string& name) {
    fs::create_directories(opts.out_dir);
    const fs::path p = fs::path(opts.out_dir) / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    return out;
}

// Minimal flat JSON emitter; numbers go through format_double.
class JsonWriter {
public:
    void key(const std::string& k) { pending_key_ = k; }
    void value(double v) { emit(format_double(v)); }
    void value(const std::string& s) { emit("\"" + s + "\""); }
    void value(bool b) { emit(b ? "true" : "false"); }
    void begin_object() { emit("{"); fresh_ = true; }
    void end_object() { buf_ << "}"; fresh_ = false; }
    void begin_array() { emit("["); fresh_ = true; }
    void end_array() { buf_ << "]"; fresh_ = false; }
    std::string str() const { return buf_.str(); }

private:
    void emit(const std::string& token) {
        if (!fresh_) buf_ << ",";
        fresh_ = false;
        if (!pending_key_.empty()) {
            buf_ << "\"" << pending_key_ << "\":";
            pending_key_.clear();
        }
        buf_ << token;
        if (token == "{" || token == "[") fresh_ = true;
    }
    std::ostringstream buf_;
    std::string pending_key_;
    bool fresh_ = true;
};

ParsedJoint load_joint(const std::string& path, const std::string& x_alpha,
                       const std::string& y_alpha) {
    std::optional<Alphabet> ax, ay;
    if (!x_alpha.empty()) ax = read_alphabet_file(x_alpha);
    if (!y_alpha.empty()) ay = read_alphabet_file(y_alpha);
    return read_joint_csv(path, ax, ay);
}

int run_channel(const CommonOpts& opts, const std::string& joint_path,
                const std::string& x_alpha, const std::string& y_alpha) {
    const ParsedJoint pj = load_joint(joint_path, x_alpha, y_alpha);
    const SemanticChannel sc = semantic_channel_from_joint(pj.joint);
    const Distribution prior = pj.joint.instance_marginal();

    JsonWriter w;
    w.begin_object();
    w.key("labels");
    w.begin_array();
    for (std::size_t j = 0; j < sc.num_labels(); ++j) {
        w.begin_object();
        w.key("label");
        w.value(pj.labels.name(j));
        w.key("defined");
        w.value(sc.defined(j));
        if (sc.defined(j)) {
            w.key("logical_probability");
            w.value(logical_probability(sc.truth(j), prior));
            w.key("values");
            w.begin_array();
            for (double v : sc.truth(j).values()) w.value(v);
            w.end_array();

            auto csv = open_out(opts, "truth_" + pj.labels.name(j) + ".csv");
            csv << "x,truth\n";
            for (std::size_t i = 0; i < pj.instances.size(); ++i)
                csv << pj.instances.name(i) << "," << format_double(sc.truth(j)[i]) << "\n";
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    open_out(opts, "semantic_channel.json") << w.str() << "\n";
    return 0;
}

int run_info(const CommonOpts& opts, const std::string& joint_path,
             const std::string& x_alpha, const std::string& y_alpha) {
    const ParsedJoint pj = load_joint(joint_path, x_alpha, y_alpha);
    const SemanticChannel sc = semantic_channel_from_joint(pj.joint);
    const Distribution prior = pj.joint.instance_marginal();
    const Distribution py = pj.joint.label_marginal();
    const InfoReport report = semantic_mutual_information(pj.joint, sc);
    const double s = opts.scale();

    JsonWriter w;
    w.begin_object();
    w.key("base");
    w.value(opts.unit());
    w.key("shannon_mi");
    w.value(shannon_mutual_information(pj.joint) * s);
    w.key("semantic_mi");
    w.value(report.value * s);
    w.key("h_theta");
    w.value(report.h_theta * s);
    w.key("h_theta_given_x");
    w.value(report.h_theta_given_x * s);
    w.key("labels");
    w.begin_array();
    for (std::size_t j = 0; j < sc.num_labels(); ++j) {
        if (!sc.defined(j)) continue;
        w.begin_object();
        w.key("label");
        w.value(pj.labels.name(j));
        w.key("probability");
        w.value(py[j]);
        w.key("logical_probability");
        w.value(logical_probability(sc.truth(j), prior));
        w.key("generalized_kl");
        w.value(generalized_kl(pj.joint.conditional_given_label(j), sc.truth(j), prior) * s);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    open_out(opts, "info.json") << w.str() << "\n";
    return 0;
}

int run_fit_truth(const CommonOpts& opts, const std::string& data_path,
                  const std::string& prior_path, const std::string& label) {
    double lo = 0.0, hi = 1.0;
    if (!opts.range.empty()) opts.parse_range(lo, hi);
    const ParsedDistribution pd = read_distribution_csv(data_path, opts.bins, lo, hi);
    Distribution prior = Distribution::uniform(pd.dist.size());
    std::string prior_kind = "uniform";
    if (!prior_path.empty()) {
        const ParsedDistribution pp = read_distribution_csv(prior_path, opts.bins, lo, hi);
        if (pp.dist.size() != pd.dist.size())
            throw std::runtime_error("prior/data grids differ");
        prior = pp.dist;
        prior_kind = "file";
    }
    const GridSearchSpec spec = GridSearchSpec::for_grid(pd.alphabet.values());
    const TruthFitResult fit =
        optimize_truth_params(pd.dist, prior, pd.alphabet.values(), spec);
    const double t_theta =
        logical_probability(fit.params.evaluate(pd.alphabet.values()), prior);
    const double s = opts.scale();
    const double h_theta = -std::log2(t_theta) * s;
    const double info = fit.info_bits * s;

    JsonWriter w;
    w.begin_object();
    w.key("label");
    w.value(label);
    w.key("c");
    w.value(fit.params.center);
    w.key("d");
    w.value(fit.params.width);
    w.key(opts.base == "nats" ? "I_nats" : "I_bits");
    w.value(info);
    w.key("H_theta");
    w.value(h_theta);
    w.key("H_theta_given_X");
    w.value(h_theta - info);
    w.key("prior");
    w.value(prior_kind);
    w.key("grid_spec");
    w.begin_object();
    w.key("c_lo"); w.value(spec.c_lo);
    w.key("c_hi"); w.value(spec.c_hi);
    w.key("c_steps"); w.value(double(spec.c_steps));
    w.key("d_lo"); w.value(spec.d_lo);
    w.key("d_hi"); w.value(spec.d_hi);
    w.key("d_steps"); w.value(double(spec.d_steps));
    w.key("refine_rounds"); w.value(double(spec.refine_rounds));
    w.end_object();
    w.end_object();
    open_out(opts, "fit_truth.json") << w.str() << "\n";
    return 0;
}

int run_classify(const CommonOpts& opts, const std::string& joint_path,
                 const std::string& x_alpha, const std::string& y_alpha, bool crisp) {
    const ParsedJoint pj = load_joint(joint_path, x_alpha, y_alpha);
    const SemanticChannel sc = semantic_channel_from_joint(pj.joint);
    const Distribution prior = pj.joint.instance_marginal();
    auto out = open_out(opts, "assignments.csv");
    out << "x,label\n";
    for (std::size_t i = 0; i < pj.instances.size(); ++i) {
        const std::size_t j = crisp ? classify_crisp(i, sc, prior)
                                    : classify_semantic(i, sc, prior);
        out << pj.instances.name(i) << "," << pj.labels.name(j) << "\n";
    }
    return 0;
}

int run_cm_class(const CommonOpts& opts, const std::string& joint_path,
                 std::size_t num_labels) {
    const ParsedJoint pj = load_joint(joint_path, "", "");
    const Classifier f0 = quantile_partition(pj.joint.num_labels(), num_labels);
    const CmClassificationResult res =
        cm_iterate(pj.joint, f0, num_labels, opts.max_iter);

    auto trace = open_out(opts, "trace.csv");
    trace << "iter,G_bits,changed\n";
    for (std::size_t t = 0; t < res.trace_bits.size(); ++t) {
        const bool last = t + 1 == res.trace_bits.size();
        const bool changed = !(last && res.converged);
        trace << t + 1 << "," << format_double(res.trace_bits[t]) << ","
              << (changed ? 1 : 0) << "\n";
    }
    auto assign = open_out(opts, "assignment.csv");
    assign << "z,label\n";
    for (std::size_t z = 0; z < res.classifier.size(); ++z)
        assign << pj.labels.name(z) << ",y" << res.classifier[z] << "\n";
    if (!res.converged)
        std::cerr << "warning: did not converge within " << opts.max_iter
                  << " iterations\n";
    return 0;
}

void write_mixture_trace(std::ofstream out, const FitTrace& trace) {
    out << "iter,R,G,R_minus_G,loglik\n";
    for (std::size_t t = 0; t < trace.records.size(); ++t) {
        const FitRecord& r = trace.records[t];
        out << t << "," << format_double(r.shannon_mi) << ","
            << format_double(r.semantic_mi) << "," << format_double(r.r_minus_g)
            << "," << format_double(r.log_likelihood) << "\n";
    }
}

int run_mixture(const CommonOpts& opts, const std::string& data_path, std::size_t k) {
    double lo = 0.0, hi = 1.0;
    if (!opts.range.empty()) opts.parse_range(lo, hi);
    const ParsedDistribution pd = read_distribution_csv(data_path, opts.bins, lo, hi);
    const MixtureModel init = default_mixture_init(k, pd.alphabet.values());
    MixtureFitOptions fit_opts;
    fit_opts.max_iter = opts.max_iter;
    fit_opts.tol_bits = opts.tol;

    const MixtureFitResult em = em_fit(pd.dist, k, init, fit_opts);
    const MixtureFitResult cm = cm_fit(pd.dist, k, init, pd.alphabet.values(), fit_opts);
    write_mixture_trace(open_out(opts, "trace_em.csv"), em.trace);
    write_mixture_trace(open_out(opts, "trace_cm.csv"), cm.trace);

    JsonWriter w;
    w.begin_object();
    for (const auto* side : {"em", "cm"}) {
        const MixtureFitResult& r = std::string(side) == "em" ? em : cm;
        w.key(side);
        w.begin_object();
        w.key("converged");
        w.value(r.trace.converged);
        w.key("log_likelihood");
        w.value(r.trace.records.back().log_likelihood);
        w.key("weights");
        w.begin_array();
        for (double v : r.model.weights) w.value(v);
        w.end_array();
        if (r.model.params) {
            w.key("components");
            w.begin_array();
            for (const auto& p : *r.model.params) {
                w.begin_object();
                w.key("c"); w.value(p.center);
                w.key("d"); w.value(p.width);
                w.end_object();
            }
            w.end_array();
        }
        w.end_object();
    }
    w.end_object();
    open_out(opts, "mixture.json") << w.str() << "\n";
    return 0;
}

int run_confirm(const CommonOpts& opts, double tpr, double fpr,
                const std::string& counts_path, bool have_rates) {
    Evidence2x2 ev;
    if (have_rates) {
        ev.p_pos_given_disease = tpr;
        ev.p_pos_given_healthy = fpr;
    } else {
        const ParsedJoint pj = load_joint(counts_path, "", "");
        if (pj.joint.num_instances() != 2 || pj.joint.num_labels() != 2)
            throw std::runtime_error("confirm expects a 2x2 table");
        // Row 1 is the diseased instance, column 1 the positive label.
        const auto decomp = channel_and_marginals(pj.joint);
        ev.p_pos_given_disease = decomp.channel.defined(1) ? decomp.channel.row(1)[1] : 0.0;
        ev.p_pos_given_healthy = decomp.channel.defined(0) ? decomp.channel.row(0)[1] : 0.0;
    }
    const ConfirmationResult res = confirm(ev);
    JsonWriter w;
    w.begin_object();
    w.key("b_prime");
    w.value(res.b_prime);
    w.key("b_star");
    w.value(res.b_star);
    w.key("cl");
    w.value(res.cl);
    w.end_object();
    open_out(opts, "confirm.json") << w.str() << "\n";
    return 0;
}

int run_demo_adult(const CommonOpts& opts) {
    // Ages 0..100 in 101 bins. The "adult" label is a crisp threshold at 18.
    const std::size_t m = 101;
    std::vector<double> ages(m);
    for (std::size_t i = 0; i < m; ++i) ages[i] = double(i);

    auto gaussian_prior = [&](double c, double d) {
        std::vector<double> p(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double dev = (ages[i] - c) / d;
            p[i] = std::exp(-0.5 * dev * dev);
        }
        return normalize(p);
    };
    const Distribution prior = gaussian_prior(30.0, 20.0);
    const Distribution shifted = gaussian_prior(40.0, 20.0);

    std::vector<double> tpf(m);
    for (std::size_t i = 0; i < m; ++i) tpf[i] = ages[i] >= 18.0 ? 1.0 : 0.0;
    const TruthFunction t = truth_from_tpf(tpf, "adult");

    auto truth_csv = open_out(opts, "truth_adult.csv");
    truth_csv << "x,truth\n";
    for (std::size_t i = 0; i < m; ++i)
        truth_csv << format_double(ages[i]) << "," << format_double(t[i]) << "\n";

    const Distribution posterior = bayes_prediction(t.values(), shifted);
    auto pred_csv = open_out(opts, "prediction_adult.csv");
    pred_csv << "x,prob\n";
    for (std::size_t i = 0; i < m; ++i)
        pred_csv << format_double(ages[i]) << "," << format_double(posterior[i]) << "\n";

    JsonWriter w;
    w.begin_object();
    w.key("label");
    w.value(std::string("adult"));
    w.key("threshold_age");
    w.value(18.0);
    w.key("logical_probability");
    w.value(logical_probability(t, prior));
    w.key("logical_probability_shifted");
    w.value(logical_probability(t, shifted));
    w.end_object();
    open_out(opts, "demo_adult.json") << w.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logical Bayesian inference toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    CommonOpts opts;
    std::string joint_path, data_path, prior_path, counts_path;
    std::string x_alpha, y_alpha, label = "y";
    std::size_t num_labels = 2, k = 2;
    double tpr = -1.0, fpr = -1.0;
    bool crisp = false;

    auto* channel = app.add_subcommand("channel", "Derive the semantic channel of a joint");
    channel->add_option("--joint", joint_path, "Joint CSV (x,y,count|prob)")->required();
    channel->add_option("--x-alphabet", x_alpha, "Declared instance alphabet file");
    channel->add_option("--y-alphabet", y_alpha, "Declared label alphabet file");
    add_common(channel, opts);

    auto* info = app.add_subcommand("info", "Information measures of a joint");
    info->add_option("--joint", joint_path, "Joint CSV")->required();
    info->add_option("--x-alphabet", x_alpha, "Declared instance alphabet file");
    info->add_option("--y-alphabet", y_alpha, "Declared label alphabet file");
    add_common(info, opts);

    auto* fit = app.add_subcommand("fit-truth", "Fit a Gaussian truth function by MSI");
    fit->add_option("--data", data_path, "Sampling distribution CSV (x,prob) or raw samples")->required();
    fit->add_option("--prior", prior_path, "Prior CSV; uniform when omitted");
    fit->add_option("--label", label, "Label name for the report");
    add_common(fit, opts);

    auto* classify = app.add_subcommand("classify", "Semantic classification of instances");
    classify->add_option("--joint", joint_path, "Joint CSV")->required();
    classify->add_option("--x-alphabet", x_alpha, "Declared instance alphabet file");
    classify->add_option("--y-alphabet", y_alpha, "Declared label alphabet file");
    classify->add_flag("--crisp", crisp, "Least-logical-probability crisp classifier");
    add_common(classify, opts);

    auto* cmclass = app.add_subcommand("cm-class", "Channels' Matching classification");
    cmclass->add_option("--joint", joint_path, "Observation joint CSV (x,z,count|prob)")->required();
    cmclass->add_option("--labels", num_labels, "Number of labels")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
    add_common(cmclass, opts);

    auto* mixture = app.add_subcommand("mixture", "CM vs EM mixture fitting");
    mixture->add_option("--data", data_path, "Data CSV (x,prob) or raw samples")->required();
    mixture->add_option("--k", k, "Component count")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
    add_common(mixture, opts);

    auto* confirm_cmd = app.add_subcommand("confirm", "Confirmation measure b*");
    confirm_cmd->add_option("--tpr", tpr, "P(positive | disease)");
    confirm_cmd->add_option("--fpr", fpr, "P(positive | healthy)");
    confirm_cmd->add_option("--counts", counts_path, "2x2 count table CSV (x,y,count)");
    add_common(confirm_cmd, opts);

    auto* demo = app.add_subcommand("demo-adult", "Built-in age/adult worked example");
    add_common(demo, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (channel->parsed()) return run_channel(opts, joint_path, x_alpha, y_alpha);
        if (info->parsed()) return run_info(opts, joint_path, x_alpha, y_alpha);
        if (fit->parsed()) return run_fit_truth(opts, data_path, prior_path, label);
        if (classify->parsed()) return run_classify(opts, joint_path, x_alpha, y_alpha, crisp);
        if (cmclass->parsed()) return run_cm_class(opts, joint_path, num_labels);
        if (mixture->parsed()) return run_mixture(opts, data_path, k);
        if (confirm_cmd->parsed()) {
            const bool have_rates = tpr >= 0.0 && fpr >= 0.0;
            if (!have_rates && counts_path.empty())
                throw std::runtime_error("confirm needs --tpr/--fpr or --counts");
            return run_confirm(opts, tpr, fpr, counts_path, have_rates);
        }
        if (demo->parsed()) return run_demo_adult(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
