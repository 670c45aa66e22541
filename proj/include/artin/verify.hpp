#pragma once

// Fixed-seed verification suites, one per acceptance criterion.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "artin/bounds.hpp"
#include "artin/classify7.hpp"
#include "artin/semigroup.hpp"
#include "artin/structure.hpp"

namespace artin {

struct SuiteResult {
  SuiteResult(std::string n, int c, uint64_t s) : name(std::move(n)), criterion(c), seed(s) {}

  std::string name;
  int criterion = 0;
  uint64_t seed = 0;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failing case identifiers
  std::vector<std::pair<std::string, std::string>> notes;

  bool ok() const { return failed == 0 && passed > 0; }

  void record(bool ok, const std::string& id) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 20) failures.push_back(id);
  }

  /// Runs fn, counting an exception as a failure.
  void check(const std::string& id, const std::function<bool()>& fn) {
    try {
      record(fn(), id);
    } catch (const std::exception& e) {
      record(false, id + ": " + e.what());
    }
  }
};

struct VerifyOptions {
  uint64_t seed = 0;
  bool quick = false;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tables", "generators", "bounds", "normalize", "classify7", "hensel", "rgs", "models1321"};
  return names;
}

struct GridInstance {
  std::string id;
  IdealPresentation ideal;
  HilbertFunction hf;
  int tau = 1;
  int v = 0;
};

/// Stretched cells h in 1..5, 2 <= s <= 8, all tau; almost stretched cells
/// h in 2..5, 3 <= t+1 <= s <= 8; `per_cell` random parameter draws each.
inline std::vector<GridInstance> structure_grid(const VerifyOptions& o) {
  const int max_h = o.quick ? 3 : 5;
  const int max_s = o.quick ? 5 : 8;
  const int per_cell = o.quick ? 2 : 10;
  Rng rng(o.seed);
  std::vector<GridInstance> out;
  auto id = [](const char* kind, int a, int b, int c, int k) {
    return std::string(kind) + "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")#" + std::to_string(k);
  };
  for (int h = 1; h <= max_h; ++h) {
    for (int s = 2; s <= max_s; ++s) {
      for (int tau = 1; tau <= h; ++tau) {
        std::vector<int> hf{1, h};
        for (int j = 2; j <= s; ++j) hf.push_back(1);
        const int draws = tau < h ? per_cell : 1;
        for (int k = 0; k < draws; ++k) {
          out.push_back({id("stretched", h, s, tau, k), make_stretched(random_stretched_params(rng, h, s, tau)), HilbertFunction(hf), tau,
                         h * (h + 1) / 2 - (tau < h ? 1 : 0)});
        }
      }
    }
  }
  for (int h = 2; h <= max_h; ++h) {
    for (int s = 3; s <= max_s; ++s) {
      for (int t = 2; t + 1 <= s; ++t) {
        std::vector<int> hf{1, h};
        for (int j = 2; j <= s; ++j) hf.push_back(j <= t ? 2 : 1);
        for (int k = 0; k < per_cell; ++k) {
          out.push_back({id("almost", h, t, s, k), make_almost_stretched(random_almost_stretched_params(rng, h, t, s)), HilbertFunction(hf), 1, h * (h + 1) / 2 - 1});
        }
      }
    }
  }
  return out;
}

/// Random Artinian ideal inside the square of the maximal ideal.
inline IdealPresentation random_artinian_ideal(Rng& rng, int nvars) {
  const FieldPtr& f = Field::rationals();
  while (true) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < nvars; ++i) {
      const int d = rng.uniform(2, 4);
      Polynomial g = Polynomial::monomial(f, Monomial::var(nvars, i, d), Scalar(rng.nonzero(3)));
      gens.push_back(g + random_polynomial(rng, nvars, f, 2, 4, rng.uniform(0, 2)));
    }
    const int extra = rng.uniform(0, 2);
    for (int k = 0; k < extra; ++k) gens.push_back(random_polynomial(rng, nvars, f, 2, 3, rng.uniform(1, 3)));
    std::vector<Polynomial> nonzero;
    for (auto& g : gens) {
      if (!g.is_zero() && g.order() >= 2) nonzero.push_back(std::move(g));
    }
    IdealPresentation I(nvars, f, std::move(nonzero));
    try {
      build_quotient(I);
      return I;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotArtinian) throw;
    }
  }
}

namespace detail {

inline SuiteResult suite_tables(const VerifyOptions& o) {
  SuiteResult r{"tables", 1, o.seed};
  for (const auto& g : structure_grid(o)) {
    r.check(g.id, [&] {
      ArtinAlgebra A = build_quotient(g.ideal);
      return A.hilbert() == g.hf && socle(A).tau == g.tau;
    });
  }
  return r;
}

inline SuiteResult suite_generators(const VerifyOptions& o) {
  SuiteResult r{"generators", 2, o.seed};
  for (const auto& g : structure_grid(o)) r.check(g.id, [&] { return min_gens(g.ideal) == g.v; });
  return r;
}

inline bool bounds_hold(const IdealPresentation& I) {
  ArtinAlgebra A = build_quotient(I);
  const int e = A.length();
  const int h = A.embedding_dimension();
  if (h < 1) return true;
  const mpz_class v = min_gens(I);
  const mpz_class vstar = leading_forms(I).v_star;
  const mpz_class vlex = lex_segment(A.hilbert(), h).v;
  return lower_bound(e, h) <= v && v <= erv_upper(e, h) && v <= vstar && vstar <= vlex;
}

inline SuiteResult suite_bounds(const VerifyOptions& o) {
  SuiteResult r{"bounds", 3, o.seed};
  r.check("worked(5,3)", [] {
    TR tr = t_and_r(5, 3);
    return tr.t == 2 && tr.r == 1 && erv_upper(5, 3) == 6;
  });
  r.check("worked(7,3)", [] {
    TR tr = t_and_r(7, 3);
    return tr.t == 2 && tr.r == 3 && erv_upper(7, 3) == 7;
  });
  for (const auto& g : structure_grid(o)) r.check(g.id, [&] { return bounds_hold(g.ideal); });
  Rng rng(o.seed + 1);
  const int random_count = o.quick ? 10 : 100;
  for (int k = 0; k < random_count; ++k) {
    const int n = rng.uniform(1, 4);
    IdealPresentation I = random_artinian_ideal(rng, n);
    r.check("random#" + std::to_string(k), [&] { return bounds_hold(I); });
  }
  return r;
}

inline SuiteResult suite_normalize(const VerifyOptions& o) {
  SuiteResult r{"normalize", 4, o.seed};
  Rng rng(o.seed + 2);
  const int count = o.quick ? 5 : 50;
  for (int k = 0; k < count; ++k) {
    const int h = rng.uniform(1, 4);
    const int s = rng.uniform(2, 5);
    const int tau = rng.uniform(1, h);
    StretchedParams p = random_stretched_params(rng, h, s, tau);
    RingMap m = random_invertible_map(rng, h, Field::rationals(), s + 2, 2, 1);
    r.check("stretched#" + std::to_string(k), [&] {
      IdealPresentation K = apply_map(m, make_stretched(p));
      ArtinAlgebra A = build_quotient(K);
      StretchedForm f = normalize_stretched(A, {static_cast<uint64_t>(k)});
      return f.params.h == h && f.params.s == s && f.params.tau == tau && same_ideal(apply_map(f.map, make_stretched(f.params)), K, A.truncation());
    });
  }
  for (int k = 0; k < count; ++k) {
    const int h = rng.uniform(2, 4);
    const int s = rng.uniform(3, 5);
    const int t = rng.uniform(2, s - 1);
    AlmostStretchedParams p = random_almost_stretched_params(rng, h, t, s);
    RingMap m = random_invertible_map(rng, h, Field::rationals(), s + 2, 2, 1);
    r.check("almost#" + std::to_string(k), [&] {
      IdealPresentation K = apply_map(m, make_almost_stretched(p));
      ArtinAlgebra A = build_quotient(K);
      AlmostStretchedForm f = normalize_almost_stretched_gorenstein(A, {static_cast<uint64_t>(k)});
      return f.params.h == h && f.params.t == t && f.params.s == s && same_ideal(apply_map(f.map, make_almost_stretched(f.params)), K, A.truncation());
    });
  }
  return r;
}

inline bool certified(const ClassificationResult& c) {
  return same_ideal(apply_map(c.witness, c.model), c.input, kClassifyTruncation) && contains_generator_product(c.input) == (c.kind == Case7::kCase1);
}

inline SuiteResult suite_classify7(const VerifyOptions& o) {
  SuiteResult r{"classify7", 5, o.seed};
  const std::vector<std::pair<Case7, std::optional<Scalar>>> models{
      {Case7::kCase1, std::nullopt}, {Case7::kCase2a, std::nullopt}, {Case7::kCase2b1, std::nullopt}, {Case7::kCase2b2, Scalar(2)}};
  for (const auto& [c, p] : models) {
    r.check(std::string("model ") + case_name(c), [&] {
      IdealPresentation I = make_model(c, p);
      ArtinAlgebra A = build_quotient(I);
      return A.hilbert() == hf7() && socle(A).tau == 1 && A.length() == 10 && min_gens(I) == 2;
    });
  }
  Rng rng(o.seed + 3);
  const FieldPtr& Q = Field::rationals();
  const int count = o.quick ? 3 : 10;
  for (int k = 0; k < count; ++k) {
    Polynomial a = random_unit(rng, 2, Q, 2);
    r.check("unit a#" + std::to_string(k), [&] {
      ClassificationResult c = classify(a);
      return c.kind == Case7::kCase1 && certified(c);
    });
  }
  for (int k = 0; k < count; ++k) {
    Polynomial a = random_polynomial(rng, 2, Q, 2, 4, 3);
    r.check("a in m^2 #" + std::to_string(k), [&] {
      ClassificationResult c = classify(a);
      return c.kind == Case7::kCase2a && certified(c);
    });
  }
  const FieldPtr gauss = adjoin_sqrt(Scalar(-1));
  for (int k = 0; k < (o.quick ? 1 : 3); ++k) {
    Polynomial a = parse_poly("2*sqrt(-1)*x1", 2, gauss) + random_polynomial(rng, 2, Q, 2, 3, k).lift(gauss);
    r.check("Case2b1 over QQ(sqrt(-1)) #" + std::to_string(k), [&] {
      ClassificationResult c = classify(a);
      return c.kind == Case7::kCase2b1 && certified(c);
    });
  }
  const std::vector<Scalar> ps{Scalar(2), Scalar(3), Scalar(5, 2), Scalar(-2)};
  const int conj = o.quick ? 4 : 20;
  for (int k = 0; k < conj; ++k) {
    const Scalar& p = ps[static_cast<size_t>(k) % ps.size()];
    RingMap m = random_invertible_map(rng, 2, Q, kClassifyTruncation);
    r.check("Case2b2 p=" + p.to_string() + " #" + std::to_string(k), [&] {
      ClassificationResult c = classify_ideal(apply_map(m, make_model(Case7::kCase2b2, p)), {true, static_cast<uint64_t>(k)});
      return c.kind == Case7::kCase2b2 && *c.p_squared == (p * p).lift(c.field) && certified(c);
    });
  }
  return r;
}

inline SuiteResult suite_hensel(const VerifyOptions& o) {
  SuiteResult r{"hensel", 6, o.seed};
  Rng rng(o.seed + 4);
  const FieldPtr& Q = Field::rationals();
  const int count = o.quick ? 6 : 50;
  for (int k = 0; k < count; ++k) {
    const int n = k % 2 == 0 ? 2 : 3;
    const int h = rng.uniform(2, 3);
    const int s = rng.uniform(3, 5);
    IdealPresentation I = rng.coin() ? make_almost_stretched(random_almost_stretched_params(rng, h, rng.uniform(2, s - 1), s))
                                     : make_stretched(random_stretched_params(rng, h, s, rng.uniform(1, h)));
    const Scalar c(rng.nonzero(4), rng.uniform(1, 3));
    Polynomial u = Polynomial::constant(h, c.pow(n)) + random_polynomial(rng, h, Q, 1, 3, 3);
    r.check("n=" + std::to_string(n) + " #" + std::to_string(k), [&] {
      ArtinAlgebra A = build_quotient(I);
      Vector a = A.normal_form(u);
      Vector root = nth_root(A, a, n);
      return is_zero(A.pow(root, n) - a);
    });
  }
  return r;
}

/// Minimal generators of the toric ideal, degree by degree: in S-degree m the
/// ideal is spanned by differences of factorizations, and the part generated in
/// lower degrees by x_i times the differences in degree m - n_i.
inline int toric_kernel_oracle(const NumericalSemigroup& S, int64_t bound) {
  const FieldPtr& f = Field::rationals();
  int total = 0;
  for (int64_t m = 1; m <= bound; ++m) {
    auto facts = factorizations(S, m);
    if (facts.size() < 2) continue;
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < facts.size(); ++i) index[facts[i]] = i;
    std::vector<Vector> rows;
    for (int i = 0; i < S.k; ++i) {
      auto lower = factorizations(S, m - S.gens[static_cast<size_t>(i)]);
      for (size_t b = 1; b < lower.size(); ++b) {
        Vector row = zero_vector(f, facts.size());
        auto u = lower[0];
        auto w = lower[b];
        ++u[static_cast<size_t>(i)];
        ++w[static_cast<size_t>(i)];
        row[index.at(u)] = Scalar(1);
        row[index.at(w)] = Scalar(-1);
        rows.push_back(std::move(row));
      }
    }
    const size_t rk = rows.empty() ? 0 : rank(Matrix::from_rows(f, facts.size(), rows));
    total += static_cast<int>(facts.size() - 1 - rk);
  }
  return total;
}

inline constexpr int64_t kFamilyCap = 40;
inline constexpr int64_t kOracleCap = 30;

inline SuiteResult suite_rgs(const VerifyOptions& o) {
  SuiteResult r{"rgs", 7, o.seed};
  r.check("<7,8,10,19> 6 < v <= 7", [] {
    RgsReport q = check_rgs(semigroup_invariants({7, 8, 10, 19}));
    return q.e == q.h + 4 && q.v > 6 && q.v <= 7 && !q.r1_upper_ok && q.r3_ok;
  });
  r.check("<8,10,12,15> symmetric, v != 5", [] {
    RgsReport q = check_rgs(semigroup_invariants({8, 10, 12, 15}));
    return q.symmetric && q.e == q.h + 5 && q.v != 5;
  });
  const int64_t max_e = o.quick ? 7 : 12;
  const int64_t cap = o.quick ? 20 : kFamilyCap;
  int applicable = 0;
  for (const auto& S : semigroup_family(max_e, 4, cap)) {
    const int64_t h = S.h;
    const bool window = (S.e >= h + 2 && S.e <= h + 3) || (S.symmetric && h >= 2 && S.e >= h + 2 && S.e <= h + 4) || S.e == h + 1;
    if (!window) continue;
    ++applicable;
    std::string id = "<";
    for (size_t i = 0; i < S.gens.size(); ++i) id += (i ? "," : "") + std::to_string(S.gens[i]);
    id += ">";
    r.check(id, [&] { return check_rgs(S).consistent(); });
  }
  r.notes.emplace_back("family", "n1 <= " + std::to_string(max_e) + ", k <= 4, generators <= " + std::to_string(cap) + ", " + std::to_string(applicable) + " in an applicable window");
  const int64_t oracle_e = o.quick ? 5 : 9;
  const int64_t oracle_cap = o.quick ? 12 : kOracleCap;
  int oracle = 0;
  for (const auto& S : semigroup_family(oracle_e, 3, oracle_cap)) {
    ++oracle;
    std::string id = "oracle <";
    for (size_t i = 0; i < S.gens.size(); ++i) id += (i ? "," : "") + std::to_string(S.gens[i]);
    id += ">";
    r.check(id, [&] { return min_presentation_size(S) == toric_kernel_oracle(S, 2 * betti_search_bound(S)); });
  }
  r.notes.emplace_back("oracle", "n1 <= " + std::to_string(oracle_e) + ", k <= 3, generators <= " + std::to_string(oracle_cap) + ", " + std::to_string(oracle) + " semigroups");
  return r;
}

inline SuiteResult suite_models1321(const VerifyOptions& o) {
  SuiteResult r{"models1321", 8, o.seed};
  int k = 0;
  for (const auto& I : make_1321_models()) {
    r.check("model " + std::to_string(++k), [&] {
      ArtinAlgebra A = build_quotient(I);
      return A.hilbert() == HilbertFunction({1, 3, 2, 1}) && socle(A).tau == 1 && min_gens(I) == 5;
    });
  }
  return r;
}

}  // namespace detail

inline SuiteResult verify_suite(const std::string& name, const VerifyOptions& o = {}) {
  static const std::map<std::string, SuiteResult (*)(const VerifyOptions&)> suites{
      {"tables", detail::suite_tables},       {"generators", detail::suite_generators}, {"bounds", detail::suite_bounds},
      {"normalize", detail::suite_normalize}, {"classify7", detail::suite_classify7},   {"hensel", detail::suite_hensel},
      {"rgs", detail::suite_rgs},             {"models1321", detail::suite_models1321},
  };
  auto it = suites.find(name);
  require(it != suites.end(), ErrorCode::kUnknownSuite, "unknown suite '" + name + "'");
  return it->second(o);
}

}  // namespace artin
