// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lbi/lbi.hpp"

namespace fs = std::filesystem;
using namespace lbi;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

Distribution random_dist(std::mt19937& rng, std::size_t m) {
    std::uniform_real_distribution<double> u(0.02, 1.0);
    std::vector<double> v(m);
    for (double& x : v) x = u(rng);
    return normalize(v);
}

TruthFunction random_truth(std::mt19937& rng, std::size_t m) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(m);
    double mx = 0.0;
    for (double& x : v) {
        x = u(rng);
        mx = std::max(mx, x);
    }
    for (double& x : v) x /= mx;
    return TruthFunction(std::move(v));
}

// --- 1. both directions of the truth/likelihood conversion round-trip ---
void criterion_1() {
    std::mt19937 rng(101);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const std::size_t m = 2 + rng() % 49;
        const Distribution prior = random_dist(rng, m);

        const TruthFunction t = random_truth(rng, m);
        const TruthFunction t2 = truth_from_likelihood(likelihood_from_truth(t, prior), prior);
        const Distribution lik = random_dist(rng, m);
        const Distribution lik2 = likelihood_from_truth(truth_from_likelihood(lik, prior), prior);
        for (std::size_t i = 0; i < m; ++i) {
            if (std::abs(t2[i] - t[i]) > 1e-9 || std::abs(lik2[i] - lik[i]) > 1e-9) {
                ok = false;
                detail = "round trip deviates at trial " + std::to_string(trial);
                break;
            }
        }
    }
    report(1, "truth/likelihood round trips", ok, detail);
}

// --- 2. the normalized transition column maximizes generalized KL info ---
void criterion_2() {
    std::mt19937 rng(103);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const std::size_t m = 2 + rng() % 7, n = 2 + rng() % 7;
        const JointDistribution joint(m, n, random_dist(rng, m * n).probs());
        const auto d = channel_and_marginals(joint);
        for (std::size_t j = 0; j < n && ok; ++j) {
            const Distribution sampling = joint.conditional_given_label(j);
            const TruthFunction star = truth_from_tpf(d.channel.tpf(j));
            const double best = generalized_kl(sampling, star, d.instance_marginal);

            auto challenge = [&](const TruthFunction& t) {
                const double v = generalized_kl(sampling, t, d.instance_marginal);
                if (v > best + 1e-9) {
                    ok = false;
                    detail = "beaten by " + std::to_string(v - best) + " bits";
                }
            };

            if (m <= 3) {
                // exhaustive scan over the 21-level grid of truth functions
                std::vector<std::size_t> lv(m, 0);
                while (true) {
                    std::size_t mx = *std::max_element(lv.begin(), lv.end());
                    if (mx == 20) {
                        std::vector<double> v(m);
                        for (std::size_t i = 0; i < m; ++i) v[i] = double(lv[i]) / 20.0;
                        challenge(TruthFunction(std::move(v)));
                        if (!ok) break;
                    }
                    std::size_t pos = 0;
                    while (pos < m && lv[pos] == 20) lv[pos++] = 0;
                    if (pos == m) break;
                    ++lv[pos];
                }
            } else {
                for (int s = 0; s < 500 && ok; ++s) challenge(random_truth(rng, m));
            }
        }
    }
    report(2, "transition-column truth function is optimal", ok, detail);
}

// --- 3. semantic-information and likelihood objectives share an argmax ---
void criterion_3() {
    const Alphabet grid = Alphabet::binned(0, 10, 21);
    const GridSearchSpec spec = GridSearchSpec::for_grid(grid.values());
    std::mt19937 rng(107);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const Distribution sampling = random_dist(rng, 21);
        const Distribution prior = random_dist(rng, 21);
        std::size_t best_msi = 0, best_ml = 0;
        double msi = kNegInf, ml = kNegInf;
        std::size_t idx = 0;
        for (std::size_t a = 0; a < 101; ++a) {
            for (std::size_t b = 0; b < 101; ++b, ++idx) {
                const double c = spec.c_lo + (spec.c_hi - spec.c_lo) * double(a) / 100.0;
                const double d = spec.d_lo + (spec.d_hi - spec.d_lo) * double(b) / 100.0;
                const TruthFunction t = GaussianTruthParams{c, d}.evaluate(grid.values());
                const double v1 = generalized_kl(sampling, t, prior);
                const Distribution lik = likelihood_from_truth(t, prior);
                double v2 = 0.0;
                for (std::size_t i = 0; i < 21; ++i)
                    if (sampling[i] > 0.0) v2 += sampling[i] * std::log2(lik[i]);
                if (v1 > msi) { msi = v1; best_msi = idx; }
                if (v2 > ml) { ml = v2; best_ml = idx; }
            }
        }
        if (best_msi != best_ml) {
            ok = false;
            detail = "argmax mismatch at trial " + std::to_string(trial);
        }
    }
    report(3, "semantic-information and likelihood objectives agree", ok, detail);
}

// --- 4. G is bounded by R, with equality at the matched channel ---
void criterion_4() {
    std::mt19937 rng(109);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const std::size_t m = 2 + rng() % 6, n = 2 + rng() % 6;
        const JointDistribution joint(m, n, random_dist(rng, m * n).probs());
        const double ceiling = shannon_mutual_information(joint);
        for (int s = 0; s < 500; ++s) {
            std::vector<std::optional<TruthFunction>> tfs;
            for (std::size_t j = 0; j < n; ++j) tfs.emplace_back(random_truth(rng, m));
            const InfoReport r = semantic_mutual_information(joint, SemanticChannel(tfs));
            if (r.value > ceiling + 1e-9) {
                ok = false;
                detail = "G exceeds R by " + std::to_string(r.value - ceiling);
                break;
            }
        }
        const InfoReport matched =
            semantic_mutual_information(joint, semantic_channel_from_joint(joint));
        if (std::abs(matched.value - ceiling) > 1e-9) {
            ok = false;
            detail = "matched channel misses R";
        }
    }
    report(4, "semantic information never exceeds the Shannon ceiling", ok, detail);
}

// --- 5. count-weighted information equals the summed log likelihood ---
void criterion_5() {
    std::mt19937 rng(113);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const std::size_t m = 2 + rng() % 5, n = 2 + rng() % 5;
        std::vector<double> counts(m * n);
        double total = 0.0;
        do {
            total = 0.0;
            for (double& c : counts) {
                c = double(rng() % 5);
                total += c;
            }
        } while (total == 0.0 || total > 40.0);

        const JointDistribution joint = JointDistribution::from_counts(m, n, counts);
        const SemanticChannel sc = semantic_channel_from_joint(joint);
        const Distribution prior = joint.instance_marginal();

        const double linked = log_likelihood_link(m, n, counts, sc, prior);
        double direct = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!sc.defined(j)) continue;
            const Distribution lik = likelihood_from_truth(sc.truth(j), prior);
            for (std::size_t i = 0; i < m; ++i)
                if (counts[i * n + j] > 0.0)
                    direct += counts[i * n + j] * std::log2(lik[i] / prior[i]);
        }
        const double scale = std::max(1.0, std::abs(direct));
        if (std::abs(linked - direct) / scale > 1e-6) {
            ok = false;
            detail = "routes differ at trial " + std::to_string(trial);
        }
    }
    report(5, "count-weighted information equals the log-likelihood sum", ok, detail);
}

// --- 6. alternating classification reaches the exhaustive optimum ---
void criterion_6() {
    std::mt19937 rng(127);
    std::uniform_real_distribution<double> jitter(-0.03, 0.03);
    std::uniform_int_distribution<std::size_t> pick(0, 1);
    const std::size_t n_obs = 8;
    bool ok = true;
    std::string detail;

    auto objective = [](const JointDistribution& joint, const Classifier& f) {
        return classifier_semantic_information(joint, f, cm_step_I(joint, f, 2));
    };

    for (int trial = 0; trial < 20 && ok; ++trial) {
        std::vector<double> probs(2 * n_obs);
        for (std::size_t z = 0; z < n_obs; ++z) {
            const double strong = 0.95 + jitter(rng);
            probs[z] = (z < n_obs / 2) ? strong : 1.0 - strong;
            probs[n_obs + z] = 1.0 - probs[z];
        }
        double sum = 0.0;
        for (double v : probs) sum += v;
        for (double& v : probs) v /= sum;
        const JointDistribution joint(2, n_obs, std::move(probs));

        double best_true = 0.0;
        for (std::size_t mask = 1; mask + 1 < (1u << n_obs); ++mask) {
            Classifier f(n_obs);
            for (std::size_t z = 0; z < n_obs; ++z) f[z] = (mask >> z) & 1u;
            best_true = std::max(best_true, objective(joint, f));
        }

        for (int s = 0; s < 10 && ok; ++s) {
            Classifier f0(n_obs);
            do {
                for (std::size_t z = 0; z < n_obs; ++z) f0[z] = pick(rng);
            } while (std::count(f0.begin(), f0.end(), 0u) == 0 ||
                     std::count(f0.begin(), f0.end(), 1u) == 0);
            const CmClassificationResult r = cm_iterate(joint, f0, 2, 100);
            if (!r.converged) {
                ok = false;
                detail = "no convergence within 100 iterations";
                break;
            }
            for (std::size_t i = 1; i < r.trace_bits.size(); ++i) {
                if (r.trace_bits[i] < r.trace_bits[i - 1] - 1e-12) {
                    ok = false;
                    detail = "decreasing trace";
                }
            }
            if (std::abs(r.trace_bits.back() - best_true) > 1e-9) {
                ok = false;
                detail = "stuck " + std::to_string(best_true - r.trace_bits.back()) +
                         " bits below the optimum";
            }
        }
    }
    report(6, "alternating classification matches exhaustive search", ok, detail);
}

// --- 7. the two mixture fitters agree on the committed fixtures ---
void criterion_7() {
    bool ok = true;
    std::string detail;
    try {
        for (const char* name : {"mixture_overlap_50.csv", "mixture_separated_50.csv"}) {
            const ParsedDistribution pd = read_distribution_csv(
                std::string(LBI_FIXTURE_DIR) + "/" + name, 50, 0, 50);
            const auto& grid = pd.alphabet.values();
            const MixtureModel init = default_mixture_init(2, grid);
            MixtureFitOptions opts;
            opts.max_iter = 2000;
            const MixtureFitResult em = em_fit(pd.dist, 2, init, opts);
            const MixtureFitResult cm = cm_fit(pd.dist, 2, init, grid, opts);

            const double em_ll = em.trace.records.back().log_likelihood;
            const double cm_ll = cm.trace.records.back().log_likelihood;
            if (std::abs(em_ll - cm_ll) > 1e-3) {
                ok = false;
                detail = std::string(name) + ": log-likelihood gap " +
                         std::to_string(std::abs(em_ll - cm_ll));
            }
            for (std::size_t i = 1; i < cm.trace.records.size(); ++i) {
                if (cm.trace.records[i].r_minus_g >
                    cm.trace.records[i - 1].r_minus_g + 1e-9) {
                    ok = false;
                    detail = std::string(name) + ": R-G trace increased";
                }
            }
            if (std::string(name) == "mixture_separated_50.csv") {
                // center recovery from a deterministic separating start (the
                // free-form EM components keep whatever split the start
                // encodes, so give both fitters the same half-grid split)
                MixtureModel split;
                split.weights = {0.5, 0.5};
                std::vector<double> lhs(grid.size(), 0.0), rhs(grid.size(), 0.0);
                for (std::size_t i = 0; i < grid.size() / 2; ++i) {
                    lhs[i] = 1.0;
                    rhs[i + grid.size() / 2] = 1.0;
                }
                split.components = {normalize(lhs), normalize(rhs)};
                const MixtureFitResult em2 = em_fit(pd.dist, 2, split, opts);
                const MixtureFitResult cm2 = cm_fit(pd.dist, 2, split, grid, opts);
                auto component_mean = [&](const Distribution& c) {
                    double mu = 0.0;
                    for (std::size_t i = 0; i < c.size(); ++i) mu += grid[i] * c[i];
                    return mu;
                };
                std::vector<double> em_centers{component_mean(em2.model.components[0]),
                                               component_mean(em2.model.components[1])};
                std::vector<double> cm_centers{(*cm2.model.params)[0].center,
                                               (*cm2.model.params)[1].center};
                std::sort(em_centers.begin(), em_centers.end());
                std::sort(cm_centers.begin(), cm_centers.end());
                for (const auto& centers : {em_centers, cm_centers}) {
                    if (std::abs(centers[0] - 12.0) > 1.0 || std::abs(centers[1] - 38.0) > 1.0) {
                        ok = false;
                        detail = std::string(name) + ": centers off by more than one bin";
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(7, "mixture fitters agree on the committed fixtures", ok, detail);
}

// --- 8. confirmation boundary values and exact conversions ---
void criterion_8() {
    bool ok = true;
    std::string detail;
    if (confirm({0.6, 0.0}).b_star != 1.0) { ok = false; detail = "fpr=0"; }
    if (confirm({0.4, 0.4}).b_star != 0.0) { ok = false; detail = "tpr=fpr"; }
    if (confirm({0.0, 0.3}).b_star != -1.0) { ok = false; detail = "tpr=0"; }
    if (cl_to_bstar(1.0) != 1.0 || cl_to_bstar(0.5) != 0.0) { ok = false; detail = "cl anchors"; }
    for (int i = 0; i <= 1000 && ok; ++i) {
        const double cl = double(i) / 1000.0;
        if (std::abs(bstar_to_cl(cl_to_bstar(cl)) - cl) > 1e-12) {
            ok = false;
            detail = "round trip at cl=" + std::to_string(cl);
        }
        const double b = -1.0 + 2.0 * double(i) / 1000.0;
        if (std::abs(cl_to_bstar(bstar_to_cl(b)) - b) > 1e-12) {
            ok = false;
            detail = "round trip at b=" + std::to_string(b);
        }
    }
    report(8, "confirmation boundaries and conversions", ok, detail);
}

// --- 9. continuous and grid gaussian information agree ---
void criterion_9() {
    const Alphabet grid = Alphabet::binned(0, 100, 1001);
    std::mt19937 rng(131);
    std::uniform_real_distribution<double> cs(5.0, 95.0), ds(0.5, 30.0);
    std::uniform_int_distribution<std::size_t> is(0, 1000);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const GaussianTruthParams p{cs(rng), ds(rng)};
        const Distribution prior =
            (trial % 2 == 0) ? Distribution::uniform(1001) : random_dist(rng, 1001);
        const TruthFunction t = p.evaluate(grid.values());
        for (int s = 0; s < 20; ++s) {
            const std::size_t i = is(rng);
            const double a = gaussian_semantic_info(grid.value(i), p, grid.values(), prior);
            const double b = semantic_info_point(i, t, prior);
            if (std::abs(a - b) > 1e-6) {
                ok = false;
                detail = "gap " + std::to_string(std::abs(a - b)) + " bits";
                break;
            }
        }
    }
    report(9, "parametric and grid information agree", ok, detail);
}

// --- 10. the command-line tool is deterministic ---
std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool same_outputs(const fs::path& a, const fs::path& b, std::string& detail) {
    std::map<std::string, std::string> fa, fb;
    for (const auto& e : fs::directory_iterator(a)) fa[e.path().filename()] = slurp(e.path());
    for (const auto& e : fs::directory_iterator(b)) fb[e.path().filename()] = slurp(e.path());
    if (fa.empty() || fa.size() != fb.size()) {
        detail = "output sets differ under " + a.string();
        return false;
    }
    for (const auto& [name, content] : fa) {
        if (fb[name] != content) {
            detail = name + " differs between runs";
            return false;
        }
    }
    return true;
}

void criterion_10() {
    bool ok = true;
    std::string detail;
    const fs::path root = fs::temp_directory_path() / "lbi_acceptance_cli";
    fs::remove_all(root);
    const std::string fixtures = LBI_FIXTURE_DIR;
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"channel", "channel --joint " + fixtures + "/joint_example_2x2.csv"},
        {"info", "info --joint " + fixtures + "/joint_example_2x2.csv"},
        {"fit_truth", "fit-truth --data " + fixtures + "/sampling_gauss_30.csv"},
        {"classify", "classify --joint " + fixtures + "/joint_example_2x2.csv"},
        {"cm_class", "cm-class --labels 2 --joint " + fixtures + "/obs_joint_2x4.csv"},
        {"mixture", "mixture --k 2 --data " + fixtures + "/mixture_separated_50.csv"},
        {"confirm", "confirm --tpr 0.8 --fpr 0.2"},
        {"demo_adult", "demo-adult"},
    };
    for (const auto& [name, args] : cases) {
        for (const char* rep : {"a", "b"}) {
            const fs::path out = root / name / rep;
            fs::create_directories(out);
            const std::string cmd = std::string(LBI_CLI_PATH) + " " + args +
                                    " --out " + out.string() + " >/dev/null 2>&1";
            if (std::system(cmd.c_str()) != 0) {
                ok = false;
                detail = name + " exited nonzero";
            }
        }
        if (ok && !same_outputs(root / name / "a", root / name / "b", detail)) ok = false;
        if (!ok) break;
    }

    if (ok) {
        // the worked example emits the exact threshold indicator
        std::ostringstream expected;
        expected << "x,truth\n";
        for (int age = 0; age <= 100; ++age)
            expected << age << "," << (age >= 18 ? 1 : 0) << "\n";
        if (slurp(root / "demo_adult" / "a" / "truth_adult.csv") != expected.str()) {
            ok = false;
            detail = "threshold truth function is not the exact indicator";
        }
    }
    report(10, "command-line outputs are deterministic", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures > 0) {
        std::cout << g_failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
