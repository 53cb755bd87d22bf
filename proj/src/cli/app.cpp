#include "conevol/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <future>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "conevol/algebra/rm_polynomial.hpp"
#include "conevol/conevolume/cone_volume.hpp"
#include "conevol/errors.hpp"
#include "conevol/numerics/quadrature.hpp"
#include "conevol/representation/identities.hpp"
#include "conevol/representation/words.hpp"

namespace conevol::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt12(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::optional<std::complex<double>> record_root(const cone::VolumeResult& v) {
    if (v.geometric_root) return v.geometric_root;
    if (v.alpha == 0.0) return std::nullopt;
    const auto roots = num::find_roots(cone::rm_poly_at(v.A));
    return cone::display_root(roots);
}

nlohmann::json volume_json(const cone::VolumeResult& v) {
    nlohmann::json j;
    j["alpha"] = v.alpha;
    j["A"] = v.A;  // non-finite serializes as null
    const auto root = record_root(v);
    if (root) {
        j["V_re"] = root->real();
        j["V_im"] = root->imag();
    } else {
        j["V_re"] = nullptr;
        j["V_im"] = nullptr;
    }
    j["volume"] = v.volume;
    j["err_estimate"] = v.err_estimate;
    j["regime"] = std::string(cone::to_string(v.regime));
    return j;
}

void print_volume_text(std::ostream& out, const cone::VolumeResult& v) {
    out << "alpha        = " << fmt12(v.alpha) << "\n";
    out << "A            = " << fmt12(v.A) << "\n";
    const auto root = record_root(v);
    if (root)
        out << "V            = " << fmt12(root->real()) << " + " << fmt12(root->imag())
            << "i\n";
    else
        out << "V            = -\n";
    out << "volume       = " << fmt12(v.volume) << "\n";
    out << "err_estimate = " << fmt12(v.err_estimate) << "\n";
    out << "regime       = " << cone::to_string(v.regime) << "\n";
}

struct TableRow {
    double alpha;
    double A;
    std::complex<double> v;
    bool has_v;
    double integrand;
    double volume;
    cone::Regime regime;
};

int table_threads() {
    if (const char* env = std::getenv("CONEVOL_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

std::string render_table(double min, double max, int steps, double tol) {
    const double a0 = cone::alpha0();
    std::vector<double> alphas(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        alphas[static_cast<std::size_t>(i)] = min + (max - min) * i / (steps - 1);

    // per-row quantities except volume, parallelizable
    std::vector<TableRow> rows(alphas.size());
    auto fill_row = [&](std::size_t i) {
        TableRow& r = rows[i];
        r.alpha = alphas[i];
        r.A = r.alpha == 0.0 ? std::numeric_limits<double>::infinity()
                             : 1.0 / std::tan(r.alpha / 2.0);
        r.has_v = r.alpha > 0.0;
        if (r.has_v) {
            const auto roots = num::find_roots(cone::rm_poly_at(r.A));
            r.v = cone::display_root(roots);
        }
        r.integrand = (r.alpha <= 0.0 || r.alpha >= a0) ? 0.0 : cone::integrand(r.alpha);
        r.regime = r.alpha == 0.0 ? cone::Regime::Hyperbolic : cone::classify_regime(r.alpha);
    };

    // segment integrals between consecutive rows, clipped to [0, a0]
    std::vector<double> segment(alphas.size(), 0.0);
    const auto f = [a0](double x) {
        if (x <= 0.0 || x >= a0) return 0.0;
        return cone::integrand(x);
    };
    auto fill_segment = [&](std::size_t i) {  // segment i covers [alpha_i, alpha_{i+1}]
        const double lo = std::min(alphas[i], a0);
        const double hi = std::min(alphas[i + 1], a0);
        segment[i] = lo < hi ? num::adaptive_integrate(f, lo, hi, tol).value : 0.0;
    };

    const int nthreads = table_threads();
    const std::size_t n = rows.size();
    if (nthreads > 1) {
        std::vector<std::future<void>> futs;
        const std::size_t chunk = (n + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const std::size_t lo = std::min(n, chunk * static_cast<std::size_t>(t));
            const std::size_t hi = std::min(n, lo + chunk);
            futs.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) {
                    fill_row(i);
                    if (i + 1 < n) fill_segment(i);
                }
            }));
        }
        for (auto& fu : futs) fu.get();
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            fill_row(i);
            if (i + 1 < n) fill_segment(i);
        }
    }

    // top row by one full quadrature, then accumulate downward; summation
    // order is fixed so output is identical regardless of thread count
    rows[n - 1].volume = cone::volume(alphas[n - 1], tol).volume;
    for (std::size_t i = n - 1; i-- > 0;) rows[i].volume = rows[i + 1].volume + segment[i];

    std::ostringstream os;
    os << "alpha,A,V_re,V_im,integrand,volume,regime\n";
    for (const TableRow& r : rows) {
        os << fmt12(r.alpha) << ',' << fmt12(r.A) << ',';
        if (r.has_v)
            os << fmt12(r.v.real()) << ',' << fmt12(r.v.imag()) << ',';
        else
            os << "nan,nan,";
        os << fmt12(r.integrand) << ',' << fmt12(r.volume) << ','
           << cone::to_string(r.regime) << '\n';
    }
    return os.str();
}

int run_verify(std::ostream& out, std::size_t samples, std::uint64_t seed) {
    using std::complex;
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << detail << ")\n";
        all_ok = all_ok && ok;
    };

    {  // exact trace-identity factorization on the certification family
        const auto family = rep::exact_sample_family(samples);
        std::size_t passed = 0;
        for (const auto& s : family) passed += rep::exact_identity_check(s) ? 1 : 0;
        report("exact-trace-identity", passed == family.size(),
               std::to_string(passed) + "/" + std::to_string(family.size()) + " exact");
    }

    {  // longitude trace lemma on random SL(2,C) pairs
        rep::Sl2Sampler sampler(seed);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const rep::Mat2c s = sampler.next();
            const rep::Mat2c t = sampler.next();
            const auto [ls, lt] = rep::longitudes(s, t);
            worst = std::max(worst, std::abs((s.inverse() * lt).trace() - s.trace()));
            worst = std::max(worst, std::abs((t.inverse() * ls).trace() - t.trace()));
        }
        report("longitude-trace-lemma", worst < 1e-9,
               "200 random pairs, worst residual " + fmt12(worst));
    }

    {  // relator/involution identity at random variety points
        rep::Sl2Sampler sampler(seed + 1);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double alpha = sampler.uniform(0.15, 3.0);
            const complex<double> rho(sampler.uniform(-1.0, 1.0), sampler.uniform(-1.0, 1.0));
            const auto p = rep::RepPoint::from_alpha_and_rho(alpha, rho);
            const auto g = rep::build_generators(p);
            const auto w = rep::word_eval<complex<double>>(rep::relator_word(), g.S, g.T);
            const auto swn = g.S * w * g.n;
            const auto lhs = g.S * w * g.S.inverse() * w.inverse();
            worst = std::max(worst, rep::distance(lhs, -(swn * swn)));
        }
        report("involution-square-identity", worst < 1e-8,
               "200 random variety points, worst residual " + fmt12(worst));
    }

    {  // vanishing trace and commutator at geometric roots
        const double a0 = cone::alpha0();
        double worst_tr = 0.0;
        double worst_comm = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double alpha = 0.1 + (a0 - 0.11) * i / 49.0;
            const auto roots = num::find_roots(cone::rm_poly_at(1.0 / std::tan(alpha / 2)));
            const auto sel = cone::select_geometric_root(roots, alpha);
            const auto p = rep::RepPoint::from_alpha_and_v(alpha, sel.V);
            worst_tr = std::max(worst_tr, std::abs(rep::trace_swn(p)));
            const auto g = rep::build_generators(p);
            const auto w = rep::word_eval<complex<double>>(rep::relator_word(), g.S, g.T);
            worst_comm = std::max(
                worst_comm,
                rep::distance(g.S * w * g.S.inverse() * w.inverse(), rep::Mat2c::identity()));
        }
        report("geometric-root-relation", worst_tr < 1e-8 && worst_comm < 1e-8,
               "50 angles, worst trace " + fmt12(worst_tr) + ", worst commutator " +
                   fmt12(worst_comm));
    }

    {  // longitude eigenvalue consistency at sampled hyperbolic angles
        const double a0 = cone::alpha0();
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double alpha = 0.3 + (a0 - 0.35) * i / 19.0;
            const auto roots = num::find_roots(cone::rm_poly_at(1.0 / std::tan(alpha / 2)));
            const auto sel = cone::select_geometric_root(roots, alpha);
            worst = std::max(
                worst, rep::pythagorean_check(rep::RepPoint::from_alpha_and_v(alpha, sel.V)));
        }
        report("longitude-eigenvalue-consistency", worst < 1e-8,
               "20 angles, worst residual " + fmt12(worst));
    }

    return all_ok ? 0 : 2;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperbolic cone-manifold volumes for the two-bridge link with slope 9/16"};
    app.require_subcommand(1);

    double alpha = 0.0;
    bool degrees = false;
    double tol = 1e-9;
    std::string format = "text";

    auto* vol = app.add_subcommand("volume", "cone-manifold volume at a cone angle");
    vol->add_option("--alpha", alpha, "cone angle (radians unless --deg)")->required();
    vol->add_flag("--deg", degrees, "interpret --alpha in degrees");
    vol->add_option("--tol", tol, "quadrature tolerance");
    vol->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    double a0tol = 1e-10;
    auto* a0cmd = app.add_subcommand("alpha0", "Euclidean transition angle");
    a0cmd->add_option("--tol", a0tol, "bisection tolerance");

    int cover_k = 0;
    double cover_tol = 1e-9;
    auto* cover = app.add_subcommand("cover", "volume of the k-fold cyclic branched cover");
    cover->add_option("--k", cover_k, "covering degree (k >= 3)")->required();
    cover->add_option("--tol", cover_tol, "quadrature tolerance");

    double tmin = 0.0, tmax = 0.0;
    int steps = 0;
    std::string out_path;
    double table_tol = 1e-9;
    auto* table = app.add_subcommand("table", "CSV sweep over a cone-angle grid");
    table->add_option("--min", tmin, "smallest angle (radians)")->required();
    table->add_option("--max", tmax, "largest angle (radians)")->required();
    table->add_option("--steps", steps, "number of rows (>= 2)")->required();
    table->add_option("--out", out_path, "write CSV to this file instead of stdout");
    table->add_option("--tol", table_tol, "quadrature tolerance");

    double roots_alpha = 0.0;
    auto* roots_cmd = app.add_subcommand("roots", "all five roots at a cone angle");
    roots_cmd->add_option("--alpha", roots_alpha, "cone angle (radians)")->required();

    std::size_t samples = 1369;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->add_option("--samples", samples, "exact-identity sample count");
    verify->add_option("--seed", seed, "seed for the randomized suites");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 64;
    }

    try {
        if (vol->parsed()) {
            const double a = degrees ? alpha * kPi / 180.0 : alpha;
            const cone::VolumeResult v = cone::volume(cone::ConeAngle(a).radians(), tol);
            if (format == "json")
                out << volume_json(v).dump() << "\n";
            else
                print_volume_text(out, v);
            return 0;
        }
        if (a0cmd->parsed()) {
            out << fmt12(cone::alpha0(a0tol)) << "\n";
            return 0;
        }
        if (cover->parsed()) {
            const cone::VolumeResult v = cone::cover_volume(cover_k, cover_tol);
            out << "k            = " << cover_k << "\n";
            print_volume_text(out, v);
            return 0;
        }
        if (table->parsed()) {
            if (!(tmin < tmax)) throw std::invalid_argument("table: requires min < max");
            if (steps < 2) throw std::invalid_argument("table: requires steps >= 2");
            cone::ConeAngle lo(tmin);
            cone::ConeAngle hi(tmax);
            const std::string csv = render_table(lo.radians(), hi.radians(), steps, table_tol);
            if (out_path.empty()) {
                out << csv;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::invalid_argument("table: cannot open '" + out_path + "'");
                f << csv;
                if (!f.good())
                    throw std::invalid_argument("table: write failed for '" + out_path + "'");
            }
            return 0;
        }
        if (roots_cmd->parsed()) {
            const cone::ConeAngle a(roots_alpha);
            if (a.radians() == 0.0)
                throw std::invalid_argument("roots: alpha must be positive");
            const double A = a.cot_half();
            const auto poly = cone::rm_poly_at(A);
            auto roots = num::find_roots(poly);
            std::optional<std::complex<double>> selected;
            try {
                selected = cone::select_geometric_root(roots, a.radians()).V;
            } catch (const NonHyperbolicError&) {
            }
            std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
                if (x.real() != y.real()) return x.real() < y.real();
                return x.imag() < y.imag();
            });
            out << "alpha = " << fmt12(a.radians()) << ", A = " << fmt12(A) << "\n";
            for (const auto& r : roots) {
                const double resid = std::abs(poly.eval(r)) / poly.magnitude_scale(r);
                const bool is_sel = selected && std::abs(r - *selected) == 0.0;
                out << (is_sel ? "  * " : "    ") << fmt12(r.real()) << " + "
                    << fmt12(r.imag()) << "i   residual " << fmt12(resid) << "\n";
            }
            if (!selected) out << "  (no geometric root: not hyperbolic at this angle)\n";
            return 0;
        }
        if (verify->parsed()) {
            return run_verify(out, samples, seed);
        }
    } catch (const RootFindingError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        err << "numerical failure: " << e.what()
            << " (partial value " << fmt12(e.partial_value) << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 64;
}

}  // namespace conevol::cli
