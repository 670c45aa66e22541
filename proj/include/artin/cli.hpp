#pragma once

// Command-line front end. run() never throws: every failure becomes an error
// record on `err` and a nonzero exit status.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "artin/report.hpp"

namespace artin {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // module error, or failed verification checks
inline constexpr int kExitUsage = 2;

namespace cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Relative paths land under $ARTIN_OUTPUT_DIR when it is set.
inline std::filesystem::path output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("ARTIN_OUTPUT_DIR"); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  }
  return p;
}

inline void write_file(const std::string& path, const std::string& text) {
  const auto p = output_path(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(p);
  require(static_cast<bool>(out), ErrorCode::kIo, "cannot write '" + p.string() + "'");
  out << text;
}

inline std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      require(item.find_first_not_of(" \t", used) == std::string::npos, ErrorCode::kSyntaxError, "bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::kSyntaxError, "bad integer '" + item + "'");
    }
  }
  require(!out.empty(), ErrorCode::kSyntaxError, "expected a comma-separated list of integers");
  return out;
}

inline std::vector<Polynomial> parse_polys(const std::vector<std::string>& texts, int n, const FieldPtr& f) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, n, f));
  return out;
}

inline std::string error_message(const Error& e) {
  std::string what = e.what();
  const std::string prefix = std::string(code_name(e.code())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

}  // namespace cli

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artinian local rings: Hilbert functions, generator counts, normal forms"};
  app.name("artin");
  app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  app.require_subcommand(1);
  app.fallthrough();
  bool markdown = false;
  app.add_flag("--markdown", markdown, "Render the report as markdown instead of JSON");

  Json report;
  int status = kExitOk;
  std::function<void()> action;

  std::string hf_file;
  auto* hf = app.add_subcommand("hf", "Hilbert function of R/I");
  hf->add_option("file", hf_file, "Ideal file")->required();
  hf->callback([&] {
    action = [&] {
      ArtinAlgebra A = build_quotient(parse_ideal(cli::read_file(hf_file)));
      report = with_schema("hf", Json{{"hf", A.hilbert().values()}});
    };
  });

  std::string inv_file;
  auto* inv = app.add_subcommand("invariants", "Length, embedding dimension, socle degree, type and generator counts");
  inv->add_option("file", inv_file, "Ideal file")->required();
  inv->callback([&] {
    action = [&] {
      IdealPresentation I = parse_ideal(cli::read_file(inv_file));
      ArtinAlgebra A = build_quotient(I);
      Json body = to_json(invariants(A), A.hilbert());
      body["v"] = min_gens(I);
      body["v_star"] = leading_forms(I).v_star;
      body["stretched"] = is_stretched(A);
      body["almost_stretched"] = is_almost_stretched(A);
      report = with_schema("invariants", body);
    };
  });

  std::string e_text;
  int b_h = 0;
  std::string b_hf;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on v(I) from (e, h)");
  bounds->add_option("--e", e_text, "Multiplicity")->required();
  bounds->add_option("--h", b_h, "Embedding codimension")->required();
  bounds->add_option("--hf", b_hf, "Hilbert function, comma separated, for the lex-segment count");
  bounds->callback([&] {
    action = [&] {
      mpz_class e;
      require(e.set_str(e_text, 10) == 0, ErrorCode::kSyntaxError, "bad integer '" + e_text + "'");
      Json body = to_json(bound_report(e, b_h));
      if (!b_hf.empty()) {
        std::vector<int> values;
        for (int64_t x : cli::parse_int_list(b_hf)) values.push_back(static_cast<int>(x));
        HilbertFunction H(values);
        body["hf_admissible"] = hf_admissible(H);
        if (hf_admissible(H)) body["v_lex"] = lex_segment(H, b_h).v;
      }
      report = with_schema("bounds", body);
    };
  });

  auto* make = app.add_subcommand("make", "Build a model ideal");
  make->require_subcommand(1);
  std::string make_out, make_field = "QQ";
  int m_h = 2, m_s = 3, m_tau = 1, m_t = 2;
  std::vector<std::string> m_units;
  std::string m_a = "0", m_w = "1", m_case, m_p;
  int m_which = 0;
  auto emit_ideal = [&](const IdealPresentation& I, Json extra) {
    Json body{{"ideal", to_json(I)}};
    for (auto& [k, v] : extra.items()) body[k] = v;
    if (!make_out.empty()) {
      cli::write_file(make_out, to_text(I));
      body["written"] = cli::output_path(make_out).string();
    }
    report = with_schema("make", body);
  };
  auto* mk_s = make->add_subcommand("stretched", "Stretched model with the given units");
  mk_s->add_option("--h", m_h)->required();
  mk_s->add_option("--s", m_s)->required();
  mk_s->add_option("--tau", m_tau)->required();
  mk_s->add_option("--units", m_units, "One unit per variable beyond tau");
  mk_s->callback([&] {
    action = [&] {
      StretchedParams p{m_h, m_s, m_tau, parse_field_spec(make_field), {}};
      p.units = cli::parse_polys(m_units, m_h, p.field);
      if (m_units.empty()) p.units.assign(static_cast<size_t>(std::max(0, m_h - m_tau)), Polynomial::constant(m_h, Scalar::one(p.field)));
      emit_ideal(make_stretched(p), Json{{"params", to_json(p)}});
    };
  });
  auto* mk_a = make->add_subcommand("almost", "Almost stretched Gorenstein model");
  mk_a->add_option("--h", m_h)->required();
  mk_a->add_option("--t", m_t)->required();
  mk_a->add_option("--s", m_s)->required();
  mk_a->add_option("--a", m_a, "Polynomial a (default 0)");
  mk_a->add_option("--w", m_w, "Unit w (default 1)");
  mk_a->add_option("--units", m_units, "One unit per variable x3..xh");
  mk_a->callback([&] {
    action = [&] {
      AlmostStretchedParams p;
      p.h = m_h;
      p.t = m_t;
      p.s = m_s;
      p.field = parse_field_spec(make_field);
      p.a = parse_poly(m_a, m_h, p.field);
      p.w = parse_poly(m_w, m_h, p.field);
      p.units = cli::parse_polys(m_units, m_h, p.field);
      if (m_units.empty()) p.units.assign(static_cast<size_t>(std::max(0, m_h - 2)), Polynomial::constant(m_h, Scalar::one(p.field)));
      emit_ideal(make_almost_stretched(p), Json{{"params", to_json(p)}});
    };
  });
  auto* mk_m = make->add_subcommand("model", "One of the four models with Hilbert function (1,2,2,2,1,1,1)");
  mk_m->add_option("--case", m_case, "Case1, Case2a, Case2b1 or Case2b2")->required();
  mk_m->add_option("--p", m_p, "Parameter p for Case2b2");
  mk_m->callback([&] {
    action = [&] {
      const Case7 c = parse_case(m_case);
      std::optional<Scalar> p;
      if (!m_p.empty()) {
        Polynomial q = parse_poly(m_p, 0, parse_field_spec(make_field));
        p = q.is_zero() ? Scalar::zero(q.field()) : q.constant_term();
      }
      emit_ideal(make_model(c, p), Json{{"case", case_name(c)}});
    };
  });
  auto* mk_1321 = make->add_subcommand("1321", "The Gorenstein models with Hilbert function (1,3,2,1)");
  mk_1321->add_option("--which", m_which, "1 or 2; required with --out")->check(CLI::Range(1, 2));
  mk_1321->callback([&] {
    action = [&] {
      auto models = make_1321_models();
      if (m_which == 0) {
        require(make_out.empty(), ErrorCode::kInvalidArgument, "--out needs --which");
        Json all = Json::array();
        for (const auto& I : models) all.push_back(to_json(I));
        report = with_schema("make", Json{{"ideals", all}});
        return;
      }
      emit_ideal(models[static_cast<size_t>(m_which - 1)], Json{{"which", m_which}});
    };
  });
  for (auto* sub : {mk_s, mk_a, mk_m, mk_1321}) {
    sub->add_option("--out", make_out, "Also write the ideal in text form to this file");
    sub->add_option("--field", make_field, "Coefficient field, e.g. QQ or sqrt(-1)");
  }

  std::string n_file;
  uint64_t n_seed = 0;
  bool n_ext = false, n_units = false;
  auto* norm = app.add_subcommand("normalize", "Normal form of a stretched or almost stretched Gorenstein quotient");
  norm->add_option("file", n_file, "Ideal file")->required();
  norm->add_option("--seed", n_seed, "Seed for the generic search");
  norm->add_flag("--units", n_units, "Also rescale the units to 1");
  norm->add_flag("--allow-extensions", n_ext, "Adjoin square roots needed by --units");
  norm->callback([&] {
    action = [&] {
      IdealPresentation I = parse_ideal(cli::read_file(n_file));
      ArtinAlgebra A = build_quotient(I);
      NormalizeOptions o{n_seed, 100, n_ext};
      Json body{{"kind", nullptr}};
      if (is_stretched(A)) {
        StretchedForm f = normalize_stretched(A, o);
        if (n_units) {
          StretchedForm g = rescale_stretched_units(f.params, o);
          f = {g.params, compose(g.map, f.map.lift(g.params.field)), I.lift(g.params.field)};
        }
        body["kind"] = "stretched";
        const Json form = to_json(f);
        for (const auto& [k, v] : form.items()) body[k] = v;
      } else {
        AlmostStretchedForm f = normalize_almost_stretched_gorenstein(A, o);
        if (n_units) {
          AlmostStretchedForm g = normalize_units(f.params, o);
          f = {g.params, compose(g.map, f.map.lift(g.params.field)), I.lift(g.params.field)};
        }
        body["kind"] = "almost_stretched";
        const Json form = to_json(f);
        for (const auto& [k, v] : form.items()) body[k] = v;
      }
      report = with_schema("normalize", body);
    };
  });

  std::string c_a, c_file, c_field = "QQ";
  uint64_t c_seed = 0;
  bool c_noext = false;
  auto* cls = app.add_subcommand("classify7", "Classify a Gorenstein quotient with Hilbert function (1,2,2,2,1,1,1)");
  auto* opt_a = cls->add_option("--a", c_a, "Parameter a of x2^2 - a x1 x2 - x1^4, x1^3 x2");
  auto* opt_i = cls->add_option("--ideal", c_file, "Ideal file");
  opt_a->excludes(opt_i);
  cls->add_option("--field", c_field, "Field of --a");
  cls->add_option("--seed", c_seed, "Seed for the generic search");
  cls->add_flag("--no-extensions", c_noext, "Fail instead of adjoining square roots");
  cls->callback([&] {
    action = [&] {
      require(!c_a.empty() || !c_file.empty(), ErrorCode::kInvalidArgument, "give --a or --ideal");
      ClassifyOptions o{!c_noext, c_seed};
      ClassificationResult r = c_file.empty() ? classify(parse_poly(c_a, 2, parse_field_spec(c_field)), o) : classify_ideal(parse_ideal(cli::read_file(c_file)), o);
      report = with_schema("classify7", to_json(r));
    };
  });

  std::string g_text;
  auto* sg = app.add_subcommand("semigroup", "Invariants of a numerical semigroup and its monomial curve");
  sg->add_option("gens", g_text, "Generators, comma separated")->required();
  sg->callback([&] {
    action = [&] {
      NumericalSemigroup S = semigroup_invariants(cli::parse_int_list(g_text));
      report = with_schema("semigroup", to_json(S, check_rgs(S)));
    };
  });

  std::string v_suite = "all";
  uint64_t v_seed = 0;
  bool v_quick = false;
  auto* ver = app.add_subcommand("verify", "Run the verification suites");
  ver->add_option("--suite", v_suite, "Suite name or 'all'");
  ver->add_option("--seed", v_seed, "Seed");
  ver->add_flag("--quick", v_quick, "Smaller grids");
  ver->callback([&] {
    action = [&] {
      VerifyOptions o{v_seed, v_quick};
      Json suites = Json::array();
      bool ok = true;
      if (v_suite == "all") {
        for (const auto& n : suite_names()) {
          SuiteResult r = verify_suite(n, o);
          ok = ok && r.ok();
          suites.push_back(to_json(r));
        }
      } else {
        SuiteResult r = verify_suite(v_suite, o);
        ok = r.ok();
        suites.push_back(to_json(r));
      }
      report = with_schema("verify", Json{{"seed", v_seed}, {"quick", v_quick}, {"ok", ok}, {"suites", suites}});
      if (!ok) status = kExitFailure;
    };
  });

  std::vector<std::string> argv_store{"artin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_record("UsageError", e.what()).dump(2) << "\n";
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << error_record(code_name(e.code()), cli::error_message(e)).dump(2) << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << error_record(code_name(ErrorCode::kInternal), e.what()).dump(2) << "\n";
    return kExitFailure;
  }
  out << (markdown ? to_markdown(report) : report.dump(2) + "\n");
  return status;
}

}  // namespace artin
