#pragma once

// Identity checks grouped into suites, a bounded worker pool to run them, and
// the renderers behind the command-line tool.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "umbracomb/coeffring.hpp"
#include "umbracomb/noncrossing.hpp"
#include "umbracomb/parking.hpp"
#include "umbracomb/partitions.hpp"
#include "umbracomb/series.hpp"
#include "umbracomb/symfunc.hpp"
#include "umbracomb/umbral.hpp"

namespace umbracomb {

/// Bad command-line parameters (exit status 2).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Truncation order from UMBRACOMB_ORDER, default 12.
inline unsigned default_order() {
    if (const char* env = std::getenv("UMBRACOMB_ORDER")) {
        try {
            int v = std::stoi(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw usage_error(std::string("UMBRACOMB_ORDER must be a positive integer, got '") + env + "'");
    }
    return 12;
}

struct CheckParams {
    std::optional<unsigned> n;
    std::optional<unsigned> k;
    std::optional<unsigned> order;
};

inline std::string to_string(const CheckParams& p) {
    std::string out;
    auto field = [&](const char* name, const std::optional<unsigned>& v) {
        if (!v)
            return;
        if (!out.empty())
            out += ' ';
        out += std::string(name) + "=" + std::to_string(*v);
    };
    field("n", p.n);
    field("k", p.k);
    field("order", p.order);
    return out;
}

struct CheckReport {
    std::string name;
    CheckParams params;
    bool pass = false;
    std::string left;
    std::string right;
    double elapsed_ms = 0;
};

/// A named identity: run() returns the serialized left and right sides.
struct Check {
    std::string name;
    CheckParams params;
    std::function<std::pair<std::string, std::string>()> run;
};

enum class Suite { counts, symfunc, umbral, volume, flags, typeb, all };

inline std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "counts") return Suite::counts;
    if (name == "symfunc") return Suite::symfunc;
    if (name == "umbral") return Suite::umbral;
    if (name == "volume") return Suite::volume;
    if (name == "flags") return Suite::flags;
    if (name == "typeb") return Suite::typeb;
    if (name == "all") return Suite::all;
    return std::nullopt;
}

namespace checks {

inline Integer ipow(unsigned base, unsigned exp) {
    Integer out = 1;
    for (unsigned i = 0; i < exp; ++i)
        out *= base;
    return out;
}

inline Integer catalan(unsigned n) {
    return binomial(2 * n, n) / (n + 1);
}

/// 1 + sum_{n=1}^{order-1} F_n t^n, multiplied by t.
inline TruncSeries<GradedPoly> t_times(unsigned order, const std::function<SymFunc(unsigned)>& coeff) {
    TruncSeries<GradedPoly> s(order);
    s[0] = GradedPoly(Rational(1), Family::h);
    for (unsigned n = 1; n < order; ++n)
        s[n] = coeff(n).poly();
    return shift_up(s);
}

inline std::string series_string(const TruncSeries<GradedPoly>& s) {
    std::string out;
    for (unsigned k = 0; k <= s.order(); ++k) {
        if (k)
            out += "; ";
        out += "[t^" + std::to_string(k) + "] " + to_string(s[k]);
    }
    return out;
}

inline std::pair<std::string, std::string> equal_strings(const std::string& l, const std::string& r) { return {l, r}; }

template <class T>
std::pair<std::string, std::string> sides(const T& l, const T& r) {
    using umbracomb::to_string;
    if constexpr (std::is_same_v<T, Integer>)
        return {l.str(), r.str()};
    else
        return {to_string(l), to_string(r)};
}

inline std::vector<Rational> sample_rationals(unsigned count) {
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    std::vector<Rational> out;
    for (unsigned i = 0; i < count; ++i)
        out.emplace_back(num(rng), den(rng));
    return out;
}

inline void counts(std::vector<Check>& out, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 7u); ++n) {
        out.push_back({"counts.parking", {n, {}, {}}, [n] {
                           return sides(Integer(enumerate_parking(n, ParkingKind::classical()).size()),
                                        ipow(n + 1, n - 1));
                       }});
        out.push_back({"counts.orbits", {n, {}, {}}, [n] {
                           return sides(Integer(orbit_representatives(n).size()), catalan(n));
                       }});
    }
    for (unsigned n = 1; n <= std::min(max_n, 6u); ++n)
        out.push_back({"counts.parking_typeB", {n, {}, {}}, [n] {
                           return sides(Integer(enumerate_parking(n, ParkingKind::type_B()).size()), ipow(n, n));
                       }});
    for (unsigned n = 1; n <= std::min(max_n, 9u); ++n)
        out.push_back({"counts.nc", {n, {}, {}}, [n] {
                           return sides(Integer(enumerate_nc(n, NCKind::A()).size()), catalan(n));
                       }});
    for (unsigned k = 2; k <= 3; ++k)
        for (unsigned n = 1; n <= max_n && k * n <= 8; ++n)
            out.push_back({"counts.nc_k_divisible", {n, k, {}}, [n, k] {
                               // Fuss-Catalan number (1/(kn+1)) binom((k+1)n, n)
                               return sides(Integer(enumerate_nc(n, NCKind::k_divisible(k)).size()),
                                            Integer(binomial((k + 1) * n, n) / (k * n + 1)));
                           }});
    for (unsigned n = 1; n <= std::min(max_n, 4u); ++n)
        out.push_back({"counts.nc_typeB", {n, {}, {}}, [n] {
                           return sides(Integer(enumerate_nc(n, NCKind::B()).size()), binomial(2 * n, n));
                       }});
    for (unsigned n = 1; n <= std::min(max_n, 6u); ++n)
        out.push_back({"counts.chains_nc", {n, {}, {}}, [n] {
                           return sides(maximal_chains(n, LatticeType::A), n >= 2 ? ipow(n, n - 2) : Integer(1));
                       }});
    for (unsigned n = 1; n <= std::min(max_n, 4u); ++n)
        out.push_back({"counts.chains_nc_typeB", {n, {}, {}}, [n] {
                           return sides(maximal_chains(n, LatticeType::B), ipow(n, n));
                       }});
}

inline void symfunc_checks(std::vector<Check>& out, unsigned max_n) {
    const unsigned st1_order = std::min(max_n, 6u) + 1;
    out.push_back({"symfunc.st1_compose", {{}, {}, st1_order}, [st1_order] {
                       auto tpf = t_times(st1_order, [](unsigned n) { return pf(n); });
                       auto t_over_h = shift_up(reciprocal(h_series(st1_order)));
                       auto t = TruncSeries<GradedPoly>::identity(st1_order);
                       return std::pair{series_string(compose(tpf, t_over_h)) + " | " +
                                            series_string(compose(t_over_h, tpf)),
                                        series_string(t) + " | " + series_string(t)};
                   }});
    const unsigned st2_order = std::min(max_n, 4u) + 1;
    for (unsigned k = 2; k <= 3; ++k)
        out.push_back({"symfunc.st2_compose", {{}, k, st2_order}, [k, st2_order] {
                           // PF^(k) from the orbit decomposition of k-parking functions.
                           auto tpf = t_times(st2_order, [k](unsigned n) {
                               return frobenius_from_orbits(n, ParkingKind::k_parking(k));
                           });
                           auto g = shift_up(pow(h_series(st2_order), -static_cast<int>(k)));
                           auto t = TruncSeries<GradedPoly>::identity(st2_order);
                           return std::pair{series_string(compose(tpf, g)) + " | " + series_string(compose(g, tpf)),
                                            series_string(t) + " | " + series_string(t)};
                       }});
    for (unsigned n = 1; n <= std::min(max_n, 6u); ++n) {
        out.push_back({"symfunc.pf_orbits", {n, {}, {}}, [n] {
                           return sides(pf(n), frobenius_from_orbits(n, ParkingKind::classical()));
                       }});
        out.push_back({"symfunc.hstar_methods", {n, {}, {}}, [n] {
                           return sides(hstar(n, HstarMethod::lagrange_formula), hstar(n, HstarMethod::series_inversion));
                       }});
        out.push_back({"symfunc.hstar_omega", {n, {}, {}}, [n] {
                           SymFunc lhs = omega(hstar(n, HstarMethod::series_inversion));
                           return sides(n % 2 == 0 ? lhs : -lhs, pf(n));
                       }});
    }
    for (unsigned k = 2; k <= 3; ++k)
        for (unsigned n = 1; n <= std::min(max_n, 4u); ++n)
            out.push_back({"symfunc.pf_k_orbits", {n, k, {}}, [n, k] {
                               return sides(pf_k(n, k), frobenius_from_orbits(n, ParkingKind::k_parking(k)));
                           }});
    for (unsigned n = 1; n <= std::min(max_n, 6u); ++n)
        out.push_back({"symfunc.pf_typeB_orbits", {n, {}, {}}, [n] {
                           return sides(pf_typeB(n), frobenius_from_orbits(n, ParkingKind::type_B()));
                       }});
}

inline void umbral_checks(std::vector<Check>& out, unsigned max_n, unsigned order) {
    out.push_back({"umbral.inverse_law", {{}, {}, order}, [order] {
                       UmbraRegistry reg;
                       auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, order));
                       auto product = umbra_to_genfun(alpha) * umbra_to_genfun(reg.dot(-1, alpha));
                       return std::pair{series_string(product),
                                        series_string(TruncSeries<GradedPoly>::constant(order, GradedPoly(1)))};
                   }});
    out.push_back({"umbral.derivative_law", {{}, {}, order}, [order] {
                       UmbraRegistry reg;
                       auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, order));
                       auto lhs = umbra_to_genfun(reg.derivative(alpha));
                       auto rhs = shift_up(umbra_to_genfun(alpha));
                       rhs[0] += GradedPoly(1);
                       return std::pair{series_string(lhs), series_string(rhs)};
                   }});
    const unsigned bell_order = std::min(order, 8u);
    out.push_back({"umbral.bell_moments", {{}, {}, bell_order}, [bell_order] {
                       UmbraRegistry reg;
                       auto beta = reg.special(SpecialUmbra::bell, bell_order);
                       std::string lhs;
                       std::string rhs;
                       for (unsigned i = 1; i <= bell_order; ++i) {
                           lhs += to_string(beta.moments->moment(i)) + " ";
                           rhs += std::to_string(enumerate_set_partitions(Ground::positive, i).size()) + " ";
                       }
                       return std::pair{lhs, rhs};
                   }});
    out.push_back({"umbral.singleton_genfun", {{}, {}, order}, [order] {
                       UmbraRegistry reg;
                       auto chi = reg.special(SpecialUmbra::singleton, order);
                       auto expected = TruncSeries<GradedPoly>::identity(order);
                       expected[0] = GradedPoly(1);
                       return std::pair{series_string(umbra_to_genfun(chi)), series_string(expected)};
                   }});
    out.push_back({"umbral.theta_bar_from_eps_bar", {{}, {}, order}, [order] {
                       UmbraRegistry reg;
                       auto theta = reg.special(SpecialUmbra::theta_bar, order);
                       auto built = reg.dot(-1, reg.negate(reg.special(SpecialUmbra::eps_bar, order)));
                       return std::pair{series_string(umbra_to_genfun(theta)), series_string(umbra_to_genfun(built))};
                   }});
    for (unsigned n = 1; n <= std::min(max_n, 6u); ++n) {
        out.push_back({"umbral.main_theorem", {n, {}, n}, [n] {
                           UmbraRegistry reg;
                           auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, n));
                           GradedPoly lhs = volume_umbral(n, VolumeKind::A, *alpha.moments) * Rational(factorial(n));
                           UmbralExpr rhs = UmbralExpr(alpha) *
                                            pow(UmbralExpr(alpha) + UmbralExpr(reg.dot(static_cast<int>(n), alpha)), n - 1);
                           return sides(lhs, eval(rhs));
                       }});
        out.push_back({"umbral.abel_A", {n, {}, n}, [n] {
                           UmbraRegistry reg;
                           auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, n));
                           GradedPoly lhs = volume_umbral(n, VolumeKind::A, *alpha.moments) * Rational(factorial(n));
                           auto abel = abel_poly(reg, n, alpha, reg.dot(-1, alpha), VolumeKind::A);
                           return sides(lhs, eval(abel));
                       }});
    }
    for (unsigned n = 1; n <= std::min(max_n, 5u); ++n)
        out.push_back({"umbral.inverse_derivative_identity", {n, {}, n + 1}, [n] {
                           UmbraRegistry reg;
                           auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, n + 1));
                           GradedPoly lhs = volume_umbral(n, VolumeKind::A, *alpha.moments) * Rational(factorial(n));
                           auto rho = reg.comp_inverse(reg.derivative(reg.dot(-1, alpha)));
                           GradedPoly rhs = eval(pow(UmbralExpr(rho), n + 1)) * Rational(1, n + 1);
                           return sides(lhs, rhs);
                       }});
    for (unsigned k = 2; k <= 3; ++k)
        for (unsigned n = 1; n <= std::min(max_n, 4u); ++n)
            out.push_back({"umbral.k_parking_theorem", {n, k, n}, [n, k] {
                               UmbraRegistry reg;
                               auto theta = reg.special(SpecialUmbra::theta_bar, n);
                               auto k_theta = reg.dot(static_cast<int>(k), theta);
                               return sides(SymFunc(volume_umbral(n, VolumeKind::A, *k_theta.moments)), pf_k(n, k));
                           }});
}

inline void volume_checks(std::vector<Check>& out, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 6u); ++n) {
        out.push_back({"volume.closed_form_A", {n, {}, {}}, [n] {
                           return sides(volume_poly(n, VolumeKind::A, VolumeMethod::definition),
                                        volume_poly(n, VolumeKind::A, VolumeMethod::closed_form));
                       }});
        out.push_back({"volume.closed_form_B", {n, {}, {}}, [n] {
                           return sides(volume_poly(n, VolumeKind::B, VolumeMethod::definition),
                                        volume_poly(n, VolumeKind::B, VolumeMethod::closed_form));
                       }});
        out.push_back({"volume.theta_bar_is_pf", {n, {}, n}, [n] {
                           UmbraRegistry reg;
                           auto theta = reg.special(SpecialUmbra::theta_bar, n);
                           return sides(SymFunc(volume_umbral(n, VolumeKind::A, *theta.moments)), pf(n));
                       }});
        out.push_back({"volume.remark_substitution", {n, {}, {}}, [n] {
                           return sides(remark_substitution(volume_poly(n, VolumeKind::A, VolumeMethod::closed_form)),
                                        pf(n));
                       }});
        out.push_back({"volume.scalar_abel", {n, {}, {}}, [n] {
                           std::string lhs;
                           std::string rhs;
                           for (const auto& a : sample_rationals(5)) {
                               Rational base = a + a * n;
                               Rational abel = a;
                               for (unsigned i = 1; i < n; ++i)
                                   abel *= base;
                               Rational scaled = volume_scalar(n, VolumeKind::A, a) * factorial(n);
                               lhs += to_string(scaled) + " ";
                               rhs += to_string(abel) + " ";
                           }
                           return std::pair{lhs, rhs};
                       }});
    }
}

inline void flag_checks(std::vector<Check>& out, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 5u); ++n) {
        out.push_back({"flags.omega_is_pf", {n, {}, {}}, [n] { return sides(omega(chain_symfunc(n)), pf(n)); }});
        out.push_back({"flags.eps_bar_volume", {n, {}, n}, [n] {
                           UmbraRegistry reg;
                           auto eps = reg.special(SpecialUmbra::eps_bar, n);
                           return sides(SymFunc(volume_umbral(n, VolumeKind::A, *eps.moments)), chain_symfunc(n));
                       }});
        out.push_back({"flags.alpha_from_beta", {n, {}, {}}, [n] {
                           auto fv = flag_vectors(n);
                           std::string lhs;
                           std::string rhs;
                           for (const auto& [s, a] : fv.alpha) {
                               Integer acc = 0;
                               for (RankMask t = s;; t = (t - 1) & s) {
                                   acc += fv.beta.at(t);
                                   if (t == 0)
                                       break;
                               }
                               lhs += a.str() + " ";
                               rhs += acc.str() + " ";
                           }
                           return std::pair{lhs, rhs};
                       }});
    }
    for (unsigned n = 1; n <= std::min(max_n, 6u); ++n)
        out.push_back({"flags.neg_eps_bar_volume", {n, {}, n}, [n] {
                           UmbraRegistry reg;
                           auto eps = reg.negate(reg.special(SpecialUmbra::eps_bar, n));
                           return sides(SymFunc(volume_umbral(n, VolumeKind::A, *eps.moments)),
                                        hstar(n, HstarMethod::series_inversion));
                       }});
}

inline void typeb_checks(std::vector<Check>& out, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 5u); ++n) {
        auto scaled_pf = [n] { return pf_typeB(n) * Rational(factorial(n)); };
        out.push_back({"typeb.dot_power", {n, {}, n}, [n, scaled_pf] {
                           UmbraRegistry reg;
                           auto theta = reg.special(SpecialUmbra::theta_bar, n);
                           auto lhs = eval(pow(UmbralExpr(reg.dot(static_cast<int>(n), theta)), n));
                           return sides(scaled_pf(), SymFunc(lhs));
                       }});
        out.push_back({"typeb.abel_B", {n, {}, n}, [n, scaled_pf] {
                           UmbraRegistry reg;
                           auto theta = reg.special(SpecialUmbra::theta_bar, n);
                           auto neg = reg.dot(-1, theta);
                           return sides(scaled_pf(), SymFunc(eval(abel_poly(reg, n, neg, neg, VolumeKind::B))));
                       }});
        out.push_back({"typeb.volume_B", {n, {}, n}, [n, scaled_pf] {
                           UmbraRegistry reg;
                           auto theta = reg.special(SpecialUmbra::theta_bar, n);
                           GradedPoly v = volume_umbral(n, VolumeKind::B, *theta.moments) * Rational(factorial(n));
                           return sides(scaled_pf(), SymFunc(v));
                       }});
    }
}

}  // namespace checks

/// The checks of a suite; n ranges are clamped to each check's desk bound.
inline std::vector<Check> build_checks(Suite suite, unsigned max_n, unsigned order) {
    std::vector<Check> out;
    auto want = [suite](Suite s) { return suite == Suite::all || suite == s; };
    if (want(Suite::counts)) checks::counts(out, max_n);
    if (want(Suite::symfunc)) checks::symfunc_checks(out, max_n);
    if (want(Suite::umbral)) checks::umbral_checks(out, max_n, order);
    if (want(Suite::volume)) checks::volume_checks(out, max_n);
    if (want(Suite::flags)) checks::flag_checks(out, max_n);
    if (want(Suite::typeb)) checks::typeb_checks(out, max_n);
    return out;
}

inline CheckReport run_check(const Check& check) {
    CheckReport report{check.name, check.params, false, {}, {}, 0};
    auto start = std::chrono::steady_clock::now();
    try {
        auto [left, right] = check.run();
        report.pass = left == right;
        report.left = std::move(left);
        report.right = std::move(right);
    } catch (const std::exception& e) {
        report.left = std::string("error: ") + e.what();
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Runs independent checks on up to `jobs` threads; reports keep check order.
inline std::vector<CheckReport> run_checks(const std::vector<Check>& checks, unsigned jobs) {
    std::vector<CheckReport> reports(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++)
            reports[i] = run_check(checks[i]);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(checks.size())));
    if (jobs == 1) {
        worker();
        return reports;
    }
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
    pool.clear();
    return reports;
}

inline std::vector<CheckReport> run_suite(Suite suite, unsigned max_n, unsigned jobs, unsigned order = default_order()) {
    if (max_n == 0)
        throw usage_error("max-n must be positive");
    if (jobs == 0)
        throw usage_error("jobs must be positive");
    return run_checks(build_checks(suite, max_n, order), jobs);
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

inline std::string render_text(const std::vector<CheckReport>& reports, bool timing = false) {
    std::string out;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        out += (r.pass ? "PASS " : "FAIL ") + r.name;
        if (auto p = to_string(r.params); !p.empty())
            out += " [" + p + "]";
        if (timing)
            out += " (" + std::to_string(static_cast<long long>(r.elapsed_ms)) + " ms)";
        out += '\n';
        if (!r.pass) {
            ++failed;
            out += "  left:  " + r.left + "\n  right: " + r.right + '\n';
        }
    }
    out += std::to_string(reports.size()) + " checks, " + std::to_string(failed) + " failed\n";
    return out;
}

inline Json render_json(const std::vector<CheckReport>& reports, bool timing = false) {
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& r : reports) {
        Json params = Json::object();
        if (r.params.n) params["n"] = *r.params.n;
        if (r.params.k) params["k"] = *r.params.k;
        if (r.params.order) params["order"] = *r.params.order;
        Json entry{{"name", r.name}, {"params", params}, {"status", r.pass ? "pass" : "fail"}};
        if (!r.pass) {
            ++failed;
            entry["left"] = r.left;
            entry["right"] = r.right;
        }
        if (timing)
            entry["elapsed_ms"] = static_cast<long long>(r.elapsed_ms);
        list.push_back(std::move(entry));
    }
    return Json{{"checks", list}, {"total", reports.size()}, {"failed", failed}};
}

// ---------------------------------------------------------------------------
// compute: single expansions and counts

enum class OutputFormat { text, json };

struct ComputeParams {
    unsigned n = 0;
    std::optional<unsigned> k;
    std::string type = "a";   // a | b
    std::string kind;         // method or variant, command specific
    std::string object;       // for count
};

namespace detail {

inline VolumeKind parse_type(const std::string& t) {
    if (t == "a" || t == "A") return VolumeKind::A;
    if (t == "b" || t == "B") return VolumeKind::B;
    throw usage_error("--type must be a or b, got '" + t + "'");
}

inline std::string render(const Json& j, const std::string& text, OutputFormat format) {
    return format == OutputFormat::json ? j.dump() : text;
}

inline Integer count_object(const std::string& object, unsigned n, std::optional<unsigned> k) {
    auto need_k = [&] {
        if (!k || *k == 0)
            throw usage_error("--k is required for " + object);
        return *k;
    };
    if (object == "partitions") return Integer(enumerate_partitions(n).size());
    if (n == 0) throw usage_error("--n must be positive");
    if (object == "parking") return Integer(enumerate_parking(n, ParkingKind::classical()).size());
    if (object == "parking-k") return Integer(enumerate_parking(n, ParkingKind::k_parking(need_k())).size());
    if (object == "parking-b") return Integer(enumerate_parking(n, ParkingKind::type_B()).size());
    if (object == "orbits") return Integer(orbit_representatives(n).size());
    if (object == "nc") return Integer(enumerate_nc(n, NCKind::A()).size());
    if (object == "nc-k") return Integer(enumerate_nc(n, NCKind::k_divisible(need_k())).size());
    if (object == "nc-b") return Integer(enumerate_nc(n, NCKind::B()).size());
    if (object == "chains-nc") return maximal_chains(n, LatticeType::A);
    if (object == "chains-nc-b") return maximal_chains(n, LatticeType::B);
    throw usage_error("unknown --object '" + object + "'");
}

}  // namespace detail

/// Renders one of pf | volume | hstar | count | flags.
inline std::string compute(const std::string& command, const ComputeParams& params, OutputFormat format) {
    const unsigned n = params.n;
    if (command == "pf") {
        if (n == 0) throw usage_error("--n must be positive");
        SymFunc f;
        if (params.k)
            f = *params.k == 0 ? throw usage_error("--k must be positive") : pf_k(n, *params.k);
        else
            f = detail::parse_type(params.type) == VolumeKind::A ? pf(n) : pf_typeB(n);
        return detail::render(to_json(f), to_string(f), format);
    }
    if (command == "volume") {
        if (n == 0) throw usage_error("--n must be positive");
        VolumeMethod method;
        if (params.kind.empty() || params.kind == "closed_form" || params.kind == "closed-form")
            method = VolumeMethod::closed_form;
        else if (params.kind == "definition")
            method = VolumeMethod::definition;
        else
            throw usage_error("--kind must be definition or closed_form for volume");
        auto agg = volume_poly(n, detail::parse_type(params.type), method);
        return detail::render(to_json(agg), to_string(agg), format);
    }
    if (command == "hstar") {
        if (n == 0) throw usage_error("--n must be positive");
        HstarMethod method;
        if (params.kind.empty() || params.kind == "lagrange" || params.kind == "lagrange_formula")
            method = HstarMethod::lagrange_formula;
        else if (params.kind == "series" || params.kind == "series_inversion")
            method = HstarMethod::series_inversion;
        else
            throw usage_error("--kind must be lagrange_formula or series_inversion for hstar");
        auto f = hstar(n, method);
        return detail::render(to_json(f), to_string(f), format);
    }
    if (command == "count") {
        if (params.object.empty()) throw usage_error("count needs --object");
        Integer c = detail::count_object(params.object, n, params.k);
        Json j{{"object", params.object}, {"n", n}, {"count", c.str()}};
        if (params.k) j["k"] = *params.k;
        return detail::render(j, c.str(), format);
    }
    if (command == "flags") {
        if (n == 0) throw usage_error("--n must be positive");
        auto fv = flag_vectors(n);
        std::string text;
        for (const auto& [s, a] : fv.alpha)
            text += "{" + mask_to_string(s) + "} alpha=" + a.str() + " beta=" + fv.beta.at(s).str() + "\n";
        if (!text.empty()) text.pop_back();
        return detail::render(to_json(fv), text, format);
    }
    throw usage_error("unknown command '" + command + "'");
}

}  // namespace umbracomb
