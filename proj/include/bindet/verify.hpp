#pragma once

// Check orchestration: one suite per topic, a parallel runner over
// independent checks, and a deterministic machine-readable JSON report.

#include "bindet/epsilon.hpp"
#include "bindet/tilings.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

namespace bindet {

struct CheckRecord {
    std::string suite;
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    long elapsed_ms = 0;

    std::string key() const {
        std::string k = suite + "/" + check_id;
        for (const auto& [name, value] : params) k += "," + name + "=" + value;
        return k;
    }
};

struct SuiteConfig {
    std::vector<std::string> suites;  // empty selects nothing; "all" selects everything
    long max_m = 4;
    long max_r = 4;
    long max_n = 9;
    unsigned jobs = 0;  // 0: hardware concurrency
    unsigned seed = 20210437;
};

struct Check {
    std::string suite;
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    std::function<std::pair<RatFunc, RatFunc>()> sides;  // lhs, rhs
};

namespace checks {

inline std::vector<std::pair<std::string, std::string>> ps() { return {}; }

template <typename... Rest>
inline std::vector<std::pair<std::string, std::string>> ps(const std::string& k, long v, Rest... rest) {
    auto tail = ps(rest...);
    tail.insert(tail.begin(), {k, std::to_string(v)});
    return tail;
}

inline void add(std::vector<Check>& out, std::string suite, std::string id,
                std::vector<std::pair<std::string, std::string>> params,
                std::function<std::pair<RatFunc, RatFunc>()> sides) {
    out.push_back({std::move(suite), std::move(id), std::move(params), std::move(sides)});
}

// Boolean checks are recorded as 1 = 1 versus 1 = 0.
inline void add_bool(std::vector<Check>& out, std::string suite, std::string id,
                     std::vector<std::pair<std::string, std::string>> params,
                     std::function<bool()> pred) {
    add(out, std::move(suite), std::move(id), std::move(params), [pred = std::move(pred)]() {
        return std::make_pair(RatFunc(1), RatFunc(pred() ? 1 : 0));
    });
}

inline AffineMu random_base(std::mt19937_64& rng) {
    static const Rational slopes[] = {Rational(1), Rational(1, 2), Rational(-1), Rational(-1, 2), Rational(2)};
    std::uniform_int_distribution<int> slope_pick(0, 4);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 3);
    return AffineMu(slopes[slope_pick(rng)], Rational(num(rng), den(rng)));
}

// --- pochhammer suite -------------------------------------------------------

inline void build_pochhammer(std::vector<Check>& out, const SuiteConfig& cfg) {
    const long cases = 200;
    for (int prop = 1; prop <= 8; ++prop) {
        add_bool(out, "pochhammer", "P" + std::to_string(prop), ps("cases", cases, "seed", cfg.seed),
                 [prop, seed = cfg.seed, cases]() {
                     std::mt19937_64 rng(seed + static_cast<unsigned>(prop));
                     std::uniform_int_distribution<long> len(-12, 12);
                     std::uniform_int_distribution<long> nonneg(0, 12);
                     for (long c = 0; c < cases; ++c) {
                         AffineMu a = random_base(rng);
                         long b = len(rng), k = len(rng);
                         switch (prop) {
                             case 1: {  // Gamma(z+1) = z Gamma(z) quotient form
                                 if (poch(a, b) * RatFunc((a + b).to_poly()) != poch(a, b + 1)) return false;
                                 break;
                             }
                             case 2: {
                                 if (poch(a, -b) != poch(a - b, b).inverse()) return false;
                                 break;
                             }
                             case 3: {
                                 RatFunc lhs = RatFunc(Poly(pow2(2 * b))) * poch(a, b) *
                                               poch(a + Rational(1, 2), b);
                                 AffineMu twoa(a.slope * Rational(2), a.shift * Rational(2));
                                 if (lhs != poch(twoa, 2 * b)) return false;
                                 break;
                             }
                             case 4: {
                                 if (poch(a, b) * poch(a + b, k) != poch(a, b + k)) return false;
                                 break;
                             }
                             case 5: {
                                 if (poch(a, b) / poch(a, k) != poch(a + k, b - k)) return false;
                                 break;
                             }
                             case 6: {
                                 RatFunc rhs = poch(a - b + 1, b);
                                 if (parity_sign(b) < 0) rhs = -rhs;
                                 if (poch(AffineMu(-a.slope, -a.shift), b) != rhs) return false;
                                 break;
                             }
                             case 7: {
                                 long bb = nonneg(rng) % 7, kk = nonneg(rng) % 7;
                                 RatFunc lhs(1), rhs(1);
                                 for (long i = 0; i < bb; ++i) lhs *= poch(a + i, kk);
                                 for (long i = 0; i < kk; ++i) rhs *= poch(a + i, bb);
                                 if (lhs != rhs) return false;
                                 break;
                             }
                             case 8: {
                                 long bb = nonneg(rng) % 7, kk = nonneg(rng) % 7;
                                 RatFunc lhs(1);
                                 for (long i = 0; i < kk; ++i) lhs *= poch(a + i * bb, bb);
                                 if (lhs != poch(a, kk * bb)) return false;
                                 break;
                             }
                         }
                     }
                     return true;
                 });
    }
    add_bool(out, "pochhammer", "pascal", ps("cases", 21 * 21), []() {
        for (long y = -10; y <= 10; ++y)
            for (long c = -10; c <= 10; ++c) {
                auto [lhs1, lhs2, rhs] = pascal_step(mu_plus(c), y);
                if (lhs1 - lhs2 != rhs) return false;
            }
        return true;
    });
    add_bool(out, "pochhammer", "pascalsum", ps("cases", 21 * 10), []() {
        for (long y = -10; y <= 10; ++y)
            for (long j = 1; j <= 10; ++j) {
                AffineMu x = mu_plus(Rational(y, 2));
                Poly rhs = gbinom(x + j, y + j - 1) - gbinom(x, y - 1);
                if (pascal_sum(x, y, j) != rhs) return false;
            }
        return true;
    });
    for (long m = 1; m <= 10; ++m)
        add(out, "pochhammer", "cancelpoch", ps("m", m),
            [m]() { return std::make_pair(cancelpoch_lhs(m), cancelpoch_rhs(m)); });
}

// --- figures suite ----------------------------------------------------------

inline void build_figures(std::vector<Check>& out, const SuiteConfig&) {
    add(out, "figures", "fig2-det", ps(), []() {
        return std::make_pair(RatFunc(Poly(determinant({Family::E, 2, 1, 2}).eval(Rational(2)))), RatFunc(10));
    });
    add(out, "figures", "fig2-minor-empty", ps(), []() {
        Matrix b = build_matrix_at({Family::B, 2, 1, 2}, Rational(2));
        return std::make_pair(minor_det(b, {{}, {}}), RatFunc(6));
    });
    add(out, "figures", "fig2-minor-12", ps(), []() {
        Matrix b = build_matrix_at({Family::B, 2, 1, 2}, Rational(2));
        return std::make_pair(minor_det(b, {{1}, {2}}), RatFunc(4));
    });
    add(out, "figures", "fig2-sum-of-minors", ps(), []() {
        return std::make_pair(RatFunc(Poly(sum_of_minors({Family::E, 2, 1, 2}).eval(Rational(2)))), RatFunc(10));
    });
    add_bool(out, "figures", "fig2-lgv-enumerate", ps(), []() {
        PathProblem full = PathProblem::full(2, 2, 1, 2);
        if (lgv_count(full).value != 6) return false;
        if (enumerate_paths(full).size() != 6) return false;
        PathProblem part = full;
        part.kept_starts = {2};
        part.kept_ends = {1};
        return lgv_count(part).value == 4 && enumerate_paths(part).size() == 4;
    });
}

// --- switch suite -----------------------------------------------------------

inline void build_switch(std::vector<Check>& out, const SuiteConfig& cfg) {
    for (Family fam : {Family::D, Family::E})
        for (long s = 0; s <= 4; ++s)
            for (long t = s + 1; t <= 4; ++t)
                for (long n = 1; n <= std::min<long>(7, cfg.max_n); ++n)
                    add(out, "switch", std::string("switch-") + family_letter(fam),
                        ps("s", s, "t", t, "n", n), [fam, s, t, n]() {
                            return std::make_pair(RatFunc(determinant({fam, s, t, n})),
                                                  RatFunc(switched_determinant(fam, s, t, n)));
                        });
    for (long s = 0; s <= 4; ++s)
        for (long t = s; t <= 4; ++t)
            for (long n = 1; n <= std::min<long>(5, cfg.max_n); ++n)
                add_bool(out, "switch", "factor-diag", ps("s", s, "t", t, "n", n), [s, t, n]() {
                    SwitchVectors sv = switch_vectors(s, t, n);
                    for (Family fam : {Family::D, Family::E}) {
                        Matrix lhs = build_matrix({fam, s, t, n}).transpose();
                        Matrix mid = build_matrix({fam, t, s, n});
                        for (long i = 1; i <= n; ++i)
                            for (long j = 1; j <= n; ++j) {
                                RatFunc rhs = sv.u[static_cast<std::size_t>(i - 1)] *
                                              mid(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                                              sv.v[static_cast<std::size_t>(j - 1)];
                                if (lhs(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != rhs)
                                    return false;
                            }
                    }
                    return true;
                });
}

// --- djd suite --------------------------------------------------------------

inline void build_djd(std::vector<Check>& out, const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> off(-2, 5);
    std::uniform_int_distribution<long> size(2, 6);
    // window determinant of the doubly infinite array binom(mu+i+j-4, j-1)
    auto window = [](long s, long t, long n) {
        if (n <= 0) return RatFunc(1);
        Matrix m = Matrix::build(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                                 [&](std::size_t i, std::size_t j) {
                                     long ii = s + static_cast<long>(i) - 1, jj = t + static_cast<long>(j) - 1;
                                     return RatFunc(gbinom(mu_plus(ii + jj - 4), jj - 1));
                                 });
        return m.det();
    };
    for (int c = 0; c < 50; ++c) {
        long s = off(rng), t = off(rng), n = size(rng);
        add(out, "djd", "djd-window", ps("case", c, "s", s, "t", t, "n", n), [window, s, t, n]() {
            RatFunc lhs = window(s, t, n) * window(s + 1, t + 1, n - 2);
            RatFunc rhs = window(s, t, n - 1) * window(s + 1, t + 1, n - 1) -
                          window(s + 1, t, n - 1) * window(s, t + 1, n - 1);
            return std::make_pair(lhs, rhs);
        });
    }
}

// --- famA suite ---------------------------------------------------------------

inline void build_famA(std::vector<Check>& out, const SuiteConfig& cfg) {
    long cap = std::min<long>(8, cfg.max_n);
    for (long n = 1; n <= cap; ++n)
        for (long s = 1; s <= n; ++s) {
            add(out, "famA", "famA-E", ps("s", s, "n", n), [s, n]() {
                return std::make_pair(RatFunc(determinant({Family::E, s, 0, n})),
                                      RatFunc(determinant_shifted({Family::D, s - 1, 0, n - 1}, Rational(1), Rational(3))));
            });
            add(out, "famA", "famA-D", ps("s", s, "n", n), [s, n]() {
                return std::make_pair(RatFunc(determinant({Family::D, s, 0, n})),
                                      RatFunc(determinant_shifted({Family::E, s - 1, 0, n - 1}, Rational(1), Rational(3))));
            });
            if (n > s)
                for (long mu = 2; mu <= 4; ++mu)
                    add_bool(out, "famA", "famA-region", ps("s", s, "n", n, "mu", mu), [s, n, mu]() {
                        return build_region(s, 0, n, mu).same_region(build_region(s - 1, 0, n - 1, mu + 3));
                    });
        }
}

// --- closed-forms suite -------------------------------------------------------

inline void build_closed_forms(std::vector<Check>& out, const SuiteConfig& cfg) {
    for (long s = 0; s <= 4; ++s)
        for (long t = 0; t <= 4; ++t)
            for (long n = 1; n <= std::min<long>(6, cfg.max_n); ++n) {
                add(out, "closed-forms", "detwithnoKD-B", ps("s", s, "t", t, "n", n), [s, t, n]() {
                    return std::make_pair(RatFunc(determinant({Family::B, s, t, n})), cf_detwithnoKD(s, t, n));
                });
                if (n <= (s > t ? s - t : t - s))  // no delta present
                    for (Family fam : {Family::D, Family::E})
                        add(out, "closed-forms", std::string("detwithnoKD-") + family_letter(fam),
                            ps("s", s, "t", t, "n", n), [fam, s, t, n]() {
                                return std::make_pair(RatFunc(determinant({fam, s, t, n})), cf_detwithnoKD(s, t, n));
                            });
            }
    for (long m = 1; m <= cfg.max_m; ++m)
        add(out, "closed-forms", "E11", ps("m", m), [m]() {
            return std::make_pair(cf_E11(m), RatFunc(determinant({Family::E, 1, 1, 2 * m - 1})));
        });
    for (long m = 1; m <= cfg.max_m; ++m)
        for (long r = 0; r < std::min(m, cfg.max_r + 1); ++r) {
            add(out, "closed-forms", "Es0-even-zero", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_Es0(Es0Variant::EvenZero, m, r),
                                      RatFunc(determinant({Family::E, 2 * r, 0, 2 * m - 1})));
            });
            add(out, "closed-forms", "Es0-even", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_Es0(Es0Variant::Even, m, r),
                                      RatFunc(determinant({Family::E, 2 * r, 0, 2 * m})));
            });
            add(out, "closed-forms", "Es0-odd-dim", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_Es0(Es0Variant::OddDim, m, r),
                                      RatFunc(determinant({Family::E, 2 * r + 1, 0, 2 * m - 1})));
            });
            add(out, "closed-forms", "Es0-even-dim", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_Es0(Es0Variant::EvenDim, m, r),
                                      RatFunc(determinant({Family::E, 2 * r + 1, 0, 2 * m})));
            });
        }
    for (long m = 1; m <= cfg.max_m; ++m)
        for (long r = 1; r <= std::min(m, cfg.max_r); ++r) {
            add(out, "closed-forms", "krat37nice", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_Krat37nice(m, r),
                                      RatFunc(determinant({Family::E, 2 * r - 1, 1, 2 * m - 1})));
            });
            add(out, "closed-forms", "ktconj20", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_KTConj20(m, r), RatFunc(determinant({Family::D, 2 * r, 1, 2 * m})));
            });
            add(out, "closed-forms", "eneg1cf", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_Eneg1CF(m, r),
                                      RatFunc(determinant({Family::E, -1, 2 * r - 1, 2 * m + 1})));
            });
        }
    for (long m = 1; m <= cfg.max_m; ++m)
        for (long r = 0; r < std::min(m, cfg.max_r + 1); ++r)
            add(out, "closed-forms", "ktconj21", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_ktconj21(m, r), RatFunc(determinant({Family::D, -1, 2 * r, 2 * m})));
            });
}

// --- theorems suite -----------------------------------------------------------

inline void build_theorems(std::vector<Check>& out, const SuiteConfig& cfg) {
    for (long m = 1; m <= cfg.max_m; ++m)
        for (long r = 1; r <= std::min(m, cfg.max_r); ++r) {
            add(out, "theorems", "krat37ugly-direct", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(cf_Krat37ugly(m, r),
                                      RatFunc(determinant({Family::E, 1, 2 * r - 1, 2 * m - 1})));
            });
            add(out, "theorems", "krat37ugly-switch", ps("m", m, "r", r), [m, r]() {
                RatFunc rhs = cf_Krat37nice(m, r);
                if (r >= 2) rhs *= switch_prefactor(1, 2 * r - 1, 2 * m - 1);
                return std::make_pair(cf_Krat37ugly(m, r), rhs);
            });
            add(out, "theorems", "biglemma1-even-quotient", ps("m", m, "r", r), [m, r]() {
                RatFunc lhs = RatFunc(determinant({Family::D, 2 * r, 1, 2 * m})) /
                              RatFunc(determinant_shifted({Family::E, 2 * r - 1, 1, 2 * m - 1}, Rational(1), Rational(3)));
                return std::make_pair(lhs, ratio_formula(RatioId::R_s1, 2 * r, 2 * m));
            });
            add(out, "theorems", "biglemma1-odd-quotient", ps("m", m, "r", r), [m, r]() {
                RatFunc lhs = RatFunc(determinant({Family::E, 2 * r + 1, 1, 2 * m + 1})) /
                              RatFunc(determinant_shifted({Family::D, 2 * r, 1, 2 * m}, Rational(1), Rational(3)));
                return std::make_pair(lhs, ratio_formula(RatioId::R_s1, 2 * r + 1, 2 * m + 1));
            });
        }
    long cap24 = std::min<long>(4, cfg.max_m);
    for (long m = 1; m <= cap24; ++m)
        for (long r = 1; r <= std::min(m, cfg.max_r); ++r) {
            add(out, "theorems", "ktconj24-D", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(RatFunc(determinant({Family::D, 2 * r - 1, 0, 2 * m + 1})),
                                      RatFunc(cf_KTConj24_rhs(Family::D, m, r)));
            });
            add(out, "theorems", "ktconj24-E", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(RatFunc(determinant({Family::E, 2 * r - 1, 0, 2 * m + 1})),
                                      RatFunc(cf_KTConj24_rhs(Family::E, m, r)));
            });
        }
    for (long m = 1; m <= std::max<long>(6, cfg.max_m); ++m) {
        add(out, "theorems", "EDCor1", ps("m", m), [m]() {
            RatFunc lhs = RatFunc(determinant({Family::E, 1, 1, 2 * m})) /
                          RatFunc(determinant_shifted({Family::D, 0, 1, 2 * m - 1}, Rational(1), Rational(3)));
            return std::make_pair(lhs, cf_EDCor1(m));
        });
        add(out, "theorems", "EDCor2", ps("m", m), [m]() {
            RatFunc lhs = RatFunc(determinant({Family::E, 2, 2, 2 * m + 1})) /
                          RatFunc(determinant_shifted({Family::D, 1, 2, 2 * m}, Rational(1), Rational(3)));
            return std::make_pair(lhs, cf_EDCor2(m));
        });
    }
    // combinatorial zeros (E_{0,0} odd dimension and the Es0CF zero branch)
    for (long m = 1; m <= std::min<long>(4, cfg.max_m); ++m)
        for (long r = 0; r < m; ++r)
            add(out, "theorems", "zero-E2r0-odd", ps("m", m, "r", r), [m, r]() {
                return std::make_pair(RatFunc(determinant({Family::E, 2 * r, 0, 2 * m - 1})), RatFunc(0));
            });
}

// --- triangles suite ------------------------------------------------------------

inline void build_triangles(std::vector<Check>& out, const SuiteConfig& cfg) {
    auto det_of = [](Family fam, long s, long t, long n) {
        return RatFunc(determinant({fam, s, t, n}));
    };
    long cap = std::min<long>(5, cfg.max_m);
    for (long m = 1; m <= cap; ++m)
        for (long r = 0; r <= std::min(m, cfg.max_r); ++r) {
            if (m > r && r >= 1) {
                add(out, "triangles", "triangleE1-1", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::E, 2 * r, 1, 2 * m + 1) / det_of(Family::E, 2 * r, 1, 2 * m),
                                          cf_triangle(TriangleId::E1_1, m, r));
                });
                add(out, "triangles", "triangleE1-2", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::E, 2 * r, 1, 2 * m + 1) / det_of(Family::E, 2 * r + 1, 1, 2 * m),
                                          cf_triangle(TriangleId::E1_2, m, r));
                });
                add(out, "triangles", "triangleE1-3", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::E, 2 * r + 1, 1, 2 * m) / det_of(Family::E, 2 * r, 1, 2 * m),
                                          cf_triangle(TriangleId::E1_3, m, r));
                });
                add(out, "triangles", "triangleD1-1", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::D, 2 * r - 1, 1, 2 * m) / det_of(Family::D, 2 * r - 1, 1, 2 * m - 1),
                                          cf_triangle(TriangleId::D1_1, m, r));
                });
                add(out, "triangles", "triangleD1-2", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::D, 2 * r, 1, 2 * m - 1) / det_of(Family::D, 2 * r - 1, 1, 2 * m),
                                          cf_triangle(TriangleId::D1_2, m, r));
                });
                add(out, "triangles", "triangleD1-3", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::D, 2 * r, 1, 2 * m - 1) / det_of(Family::D, 2 * r - 1, 1, 2 * m - 1),
                                          cf_triangle(TriangleId::D1_3, m, r));
                });
            }
            if (m - 1 > r && r >= 1) {
                add(out, "triangles", "triangleEneg1-1", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::E, -1, 2 * r, 2 * m) / det_of(Family::E, -1, 2 * r, 2 * m - 1),
                                          cf_triangle(TriangleId::Eneg1_1, m, r));
                });
                add(out, "triangles", "triangleEneg1-2", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::E, -1, 2 * r, 2 * m) / det_of(Family::E, -1, 2 * r - 1, 2 * m),
                                          cf_triangle(TriangleId::Eneg1_2, m, r));
                });
                add(out, "triangles", "triangleEneg1-3", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::E, -1, 2 * r - 1, 2 * m) / det_of(Family::E, -1, 2 * r, 2 * m - 1),
                                          cf_triangle(TriangleId::Eneg1_3, m, r));
                });
            }
            if (m > r) {
                add(out, "triangles", "triangleDneg1-1", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::D, -1, 2 * r + 1, 2 * m + 1) / det_of(Family::D, -1, 2 * r + 1, 2 * m),
                                          cf_triangle(TriangleId::Dneg1_1, m, r));
                });
                add(out, "triangles", "triangleDneg1-2", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::D, -1, 2 * r + 1, 2 * m + 1) / det_of(Family::D, -1, 2 * r, 2 * m + 1),
                                          cf_triangle(TriangleId::Dneg1_2, m, r));
                });
                add(out, "triangles", "triangleDneg1-3", ps("m", m, "r", r), [=]() {
                    return std::make_pair(det_of(Family::D, -1, 2 * r, 2 * m + 1) / det_of(Family::D, -1, 2 * r + 1, 2 * m),
                                          cf_triangle(TriangleId::Dneg1_3, m, r));
                });
            }
        }
    // Prop nonzero on the same grid.
    for (long r = 1; r <= cfg.max_r; ++r)
        for (long n = 2 * r - 1; n <= std::min(2 * cap + 1, cfg.max_n + 2); ++n) {
            add_bool(out, "triangles", "nonzero-E2r1", ps("r", r, "n", n),
                     [r, n]() { return !determinant({Family::E, 2 * r, 1, n}).is_zero(); });
            add_bool(out, "triangles", "nonzero-D2rm11", ps("r", r, "n", n),
                     [r, n]() { return !determinant({Family::D, 2 * r - 1, 1, n}).is_zero(); });
            if (n >= 2 * r + 1) {
                add_bool(out, "triangles", "nonzero-Eneg1", ps("r", r, "n", n),
                         [r, n]() { return !determinant({Family::E, -1, 2 * r, n}).is_zero(); });
                add_bool(out, "triangles", "nonzero-Dneg1", ps("r", r, "n", n),
                         [r, n]() { return !determinant({Family::D, -1, 2 * r + 1, n}).is_zero(); });
            }
        }
}

// --- ansatz suite -----------------------------------------------------------------

inline void build_ansatz(std::vector<Check>& out, const SuiteConfig& cfg) {
    // identities hold on the pairings (s,n) = (2r,2m) and (2r+1,2m+1)
    for (long s = 2; s <= 6; ++s)
        for (long n = std::max<long>(2, s); n <= std::min<long>(10, cfg.max_n + 1); ++n) {
            if ((n - s) % 2 != 0) continue;
            add_bool(out, "ansatz", "sys1-identity", ps("s", s, "n", n),
                     [s, n]() { return verify_ansatz_identity(AnsatzIdentity::Biglemma1, s, n).ok; });
        }
    for (long m = 1; m <= std::min<long>(5, cfg.max_m); ++m)
        add_bool(out, "ansatz", "sys3-identity", ps("m", m),
                 [m]() { return verify_ansatz_identity(AnsatzIdentity::QuoED1, 0, 2 * m + 1).ok; });
    for (long s = 2; s <= 5; ++s)
        for (long n = s + 2; n <= std::min<long>(9, cfg.max_n); n += 2)
            add_bool(out, "ansatz", "sys2-identity", ps("s", s, "n", n),
                     [s, n]() { return verify_ansatz_identity(AnsatzIdentity::Sys2Appendix, s, n).ok; });
    for (long s = 2; s <= 4; ++s)
        for (long n = s + 2; n <= std::min<long>(8, cfg.max_n); n += 2)
            add_bool(out, "ansatz", "syseps-identity", ps("s", s, "n", n),
                     [s, n]() { return verify_ansatz_identity(AnsatzIdentity::Biglemma2, s, n).ok; });
    for (long n = 2; n <= std::min<long>(6, cfg.max_n); ++n)
        add_bool(out, "ansatz", "eq3ansatz-E11", ps("n", n),
                 [n]() { return verify_ansatz_identity(AnsatzIdentity::Eq3Ansatz, 1, n).ok; });
    // consistency of sys1 with the cofactor-quotient definition
    for (long s = 2; s <= 3; ++s)
        for (long n = s; n <= std::min<long>(6, cfg.max_n); ++n)
            add_bool(out, "ansatz", "sys1-cofactor-def", ps("s", s, "n", n), [s, n]() {
                Matrix at = build_biglemma1_tilde(s, n);
                CofactorRatioVector c = solve_sys1(s, n);
                RatFunc c11 = cofactor(at, 1, 1);
                for (long j = 1; j <= n; ++j)
                    if (cofactor(at, 1, static_cast<std::size_t>(j)) / c11 != c.at(j)) return false;
                return true;
            });
}

// --- eps suite ---------------------------------------------------------------------

inline void build_eps(std::vector<Check>& out, const SuiteConfig& cfg) {
    long cap = std::min<long>(5, cfg.max_m);
    for (long m = 1; m <= cap; ++m) {
        for (long r = 1; r < m; ++r)
            add(out, "eps", "biglemma2a", ps("r", r, "m", m), [r, m]() {
                return std::make_pair(eps_limit_ratio({EpsTarget::Biglemma2A, r, m}),
                                      ratio_formula(RatioId::R_sneg1, 2 * r, 2 * m));
            });
        for (long r = 0; r < m; ++r)
            add(out, "eps", "biglemma2b", ps("r", r, "m", m), [r, m]() {
                return std::make_pair(eps_limit_ratio({EpsTarget::Biglemma2B, r, m}),
                                      ratio_formula(RatioId::R_sneg1, 2 * r + 1, 2 * m + 1));
            });
        add(out, "eps", "quoED1", ps("m", m), [m]() {
            return std::make_pair(eps_limit_ratio({EpsTarget::QuoED1, 0, m}), cf_quoED1(m));
        });
        for (long r = 1; r <= m; ++r)
            add_bool(out, "eps", "chain", ps("r", r, "m", m), [r, m]() { return eps_chain_check(r, m); });
    }
    for (long s = 2; s <= 4; ++s)
        for (long n = s + 1; n <= std::min<long>(7, cfg.max_n); ++n)
            add_bool(out, "eps", "leading-coefficients", ps("s", s, "n", n),
                     [s, n]() { return eps_leading_coefficient_check(s, n); });
}

// --- tilings suite -------------------------------------------------------------------

inline void build_tilings(std::vector<Check>& out, const SuiteConfig& cfg) {
    // symbolic sum-of-minors equivalence, both orientations
    for (Family fam : {Family::D, Family::E})
        for (long s = 0; s <= 4; ++s)
            for (long t = 0; t <= s; ++t)
                for (long n = 1; n <= std::min<long>(8, cfg.max_n); ++n) {
                    add(out, "tilings", std::string("sum-of-minors-") + family_letter(fam),
                        ps("s", s, "t", t, "n", n), [fam, s, t, n]() {
                            return std::make_pair(RatFunc(sum_of_minors({fam, s, t, n})),
                                                  RatFunc(determinant({fam, s, t, n})));
                        });
                    if (s != t)
                        add(out, "tilings", std::string("sum-of-minors-switched-") + family_letter(fam),
                            ps("s", t, "t", s, "n", n), [fam, s, t, n]() {
                                return std::make_pair(RatFunc(sum_of_minors({fam, t, s, n})),
                                                      RatFunc(determinant({fam, t, s, n})));
                            });
                }
    for (long mu = 2; mu <= 5; ++mu)
        for (long s = 0; s <= 3; ++s)
            for (long t = 0; t <= s; ++t)
                for (long n = 1; n <= 3; ++n)
                    add_bool(out, "tilings", "lgv-oracle", ps("mu", mu, "s", s, "t", t, "n", n),
                             [mu, s, t, n]() {
                                 PathProblem p = PathProblem::full(mu, s, t, n);
                                 TilingCount c = lgv_count(p);
                                 if (c.value > 5000) return true;  // outside oracle scale
                                 return mpz_class(enumerate_paths(p).size()) == c.value;
                             });
    for (Family fam : {Family::E, Family::D})
        for (long s = 0; s <= 3; ++s)
            for (long t = 0; t <= s; ++t)
                for (long n = 1; n <= 6; ++n)
                    for (long mu = 2 - s; mu <= 6; ++mu)
                        add_bool(out, "tilings", std::string("cyclic-count-") + family_letter(fam),
                                 ps("s", s, "t", t, "n", n, "mu", mu), [fam, s, t, n, mu]() {
                                     TilingCount c = cyclic_tiling_count(fam, s, t, n, mu);
                                     Rational d = determinant({fam, s, t, n}).eval(Rational(mu));
                                     if (Rational(mpz_class(c.value)) != d) return false;
                                     return c.weighted || c.value >= 0;
                                 });
}

}  // namespace checks

inline std::vector<Check> build_checks(const SuiteConfig& cfg) {
    auto want = [&](const std::string& name) {
        for (const auto& s : cfg.suites)
            if (s == "all" || s == name) return true;
        return false;
    };
    std::vector<Check> out;
    if (want("pochhammer")) checks::build_pochhammer(out, cfg);
    if (want("figures")) checks::build_figures(out, cfg);
    if (want("switch")) checks::build_switch(out, cfg);
    if (want("djd")) checks::build_djd(out, cfg);
    if (want("famA")) checks::build_famA(out, cfg);
    if (want("closed-forms")) checks::build_closed_forms(out, cfg);
    if (want("theorems")) checks::build_theorems(out, cfg);
    if (want("triangles")) checks::build_triangles(out, cfg);
    if (want("ansatz")) checks::build_ansatz(out, cfg);
    if (want("eps")) checks::build_eps(out, cfg);
    if (want("tilings")) checks::build_tilings(out, cfg);
    return out;
}

inline const std::vector<std::string>& all_suite_names() {
    static const std::vector<std::string> names = {
        "pochhammer", "figures", "switch", "djd", "famA", "closed-forms",
        "theorems", "triangles", "ansatz", "eps", "tilings"};
    return names;
}

struct Report {
    std::vector<CheckRecord> records;
    bool all_equal = true;
    long elapsed_ms = 0;
};

// Executes the selected checks, continue-on-failure, work distributed over
// an atomic task index; the record list is sorted for determinism.
inline Report run_suite(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks = build_checks(cfg);
    std::vector<CheckRecord> records(checks.size());
    unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, checks.size() ? static_cast<unsigned>(checks.size()) : 1u);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= checks.size()) return;
            const Check& c = checks[k];
            CheckRecord rec;
            rec.suite = c.suite;
            rec.check_id = c.check_id;
            rec.params = c.params;
            auto s0 = std::chrono::steady_clock::now();
            try {
                auto [lhs, rhs] = c.sides();
                rec.lhs = lhs.str();
                rec.rhs = rhs.str();
                rec.equal = (lhs == rhs);
            } catch (const std::exception& ex) {
                rec.lhs = std::string("error: ") + ex.what();
                rec.rhs = "";
                rec.equal = false;
            }
            rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - s0)
                                 .count();
            records[k] = std::move(rec);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    Report rep;
    rep.records = std::move(records);
    std::sort(rep.records.begin(), rep.records.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.key() < b.key(); });
    for (const auto& r : rep.records) rep.all_equal = rep.all_equal && r.equal;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

// Deterministic JSON: fixed key order, schema version first.
inline std::string emit_report(const Report& rep) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["all_equal"] = rep.all_equal;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.records) {
        nlohmann::ordered_json jr;
        jr["suite"] = r.suite;
        jr["check_id"] = r.check_id;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        jr["params"] = params;
        jr["lhs"] = r.lhs;
        jr["rhs"] = r.rhs;
        jr["equal"] = r.equal;
        jr["elapsed_ms"] = r.elapsed_ms;
        doc["checks"].push_back(jr);
    }
    return doc.dump(2) + "\n";
}

inline Report parse_report(const std::string& text) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
    if (doc.at("schema").get<int>() != 1) throw std::invalid_argument("parse_report: unknown schema");
    Report rep;
    rep.all_equal = doc.at("all_equal").get<bool>();
    for (const auto& jr : doc.at("checks")) {
        CheckRecord r;
        r.suite = jr.at("suite").get<std::string>();
        r.check_id = jr.at("check_id").get<std::string>();
        for (auto it = jr.at("params").begin(); it != jr.at("params").end(); ++it)
            r.params.emplace_back(it.key(), it.value().get<std::string>());
        r.lhs = jr.at("lhs").get<std::string>();
        r.rhs = jr.at("rhs").get<std::string>();
        r.equal = jr.at("equal").get<bool>();
        r.elapsed_ms = jr.at("elapsed_ms").get<long>();
        rep.records.push_back(std::move(r));
    }
    return rep;
}

}  // namespace bindet
