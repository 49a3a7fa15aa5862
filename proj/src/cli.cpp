#include "ydtwist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "ydtwist/closedform.hpp"
#include "ydtwist/error.hpp"
#include "ydtwist/twist.hpp"

namespace ydtwist::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

ordered_json params_json(const BorelParams& p) { return {{"ell", p.ell}, {"y", p.y}, {"z", p.z}}; }

ordered_json header(std::string_view command, const BorelParams& p) {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["ell"] = p.ell;
  j["y"] = p.y;
  j["z"] = p.z;
  return j;
}

ordered_json multiset_json(const std::map<std::size_t, std::size_t>& ms) {
  ordered_json arr = ordered_json::array();
  for (const auto& [dim, count] : ms) arr.push_back({{"dimension", dim}, {"count", count}});
  return arr;
}

ordered_json element_json(const Element& e) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back({{"monomial", {m.k, m.t, m.m, m.a, m.b}}, {"coeff", c.to_strings()}});
  return terms;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

BorelParams primary_params(const RunConfig& cfg) { return BorelParams::make(cfg.ell, cfg.y, cfg.z); }

// ---------------------------------------------------------------------------

int cmd_module(const RunConfig& cfg, std::ostream& out) {
  const BorelParams p = primary_params(cfg);
  if (!cfg.g || !cfg.beta) throw Error(ErrorCode::InvalidParams, "module needs --g D1,D2 and --beta B1,B2");
  const Borel h(p);
  const GroupLike g{mod(cfg.g->first, p.ell), mod(cfg.g->second, p.ell)};
  const Character beta{mod(cfg.beta->first, p.ell), mod(cfg.beta->second, p.ell)};
  const SimpleModuleReport rep = simple_module(h, beta, g);

  switch (cfg.output) {
    case OutputFormat::Json: {
      ordered_json j = header("module", p);
      j["g"] = {g.d1, g.d2};
      j["beta"] = {beta.b1, beta.b2};
      j["dimension"] = rep.dimension;
      ordered_json blocks = ordered_json::array();
      for (const auto& b : rep.blocks) blocks.push_back({{"u", b.block.u}, {"v", b.block.v}, {"rank", b.rank}});
      j["blocks"] = std::move(blocks);
      ordered_json basis = ordered_json::array();
      for (const auto& e : rep.basis) basis.push_back(element_json(e));
      j["basis"] = std::move(basis);
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "u,v,rank\n";
      for (const auto& b : rep.blocks) out << b.block.u << ',' << b.block.v << ',' << b.rank << '\n';
      break;
    case OutputFormat::Text:
      out << "H_{q^" << p.y << ",q^" << p.z << "} ell=" << p.ell << " g=(" << g.d1 << ',' << g.d2 << ") beta=("
          << beta.b1 << ',' << beta.b2 << ")\n";
      out << "dimension " << rep.dimension << '\n';
      for (const auto& b : rep.blocks)
        if (b.rank) out << "  block (" << b.block.u << ',' << b.block.v << ") rank " << b.rank << '\n';
      break;
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const BorelParams p = primary_params(cfg);
  const Borel h(p);
  const SweepResult res = sweep(h, cfg.jobs);
  const std::string summary = format_multiset(res.multiset);
  switch (cfg.output) {
    case OutputFormat::Csv:
      out << "d1,d2,b1,b2,dimension\n";
      for (const auto& e : res.entries)
        out << e.g.d1 << ',' << e.g.d2 << ',' << e.beta.b1 << ',' << e.beta.b2 << ',' << e.dimension << '\n';
      out << "# summary: " << summary << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json j = header("sweep", p);
      ordered_json rows = ordered_json::array();
      for (const auto& e : res.entries)
        rows.push_back({{"d1", e.g.d1}, {"d2", e.g.d2}, {"b1", e.beta.b1}, {"b2", e.beta.b2}, {"dimension", e.dimension}});
      j["rows"] = std::move(rows);
      j["multiset"] = multiset_json(res.multiset);
      j["summary"] = summary;
      emit_json(out, j);
      break;
    }
    case OutputFormat::Text:
      out << "ell=" << p.ell << " y=" << p.y << " z=" << p.z << " modules=" << res.entries.size() << '\n';
      out << summary << '\n';
      break;
  }
  return kOk;
}

int cmd_onedim(const RunConfig& cfg, std::ostream& out) {
  const BorelParams p = primary_params(cfg);
  const Borel h(p);
  const auto mods = one_dim_modules(p);
  std::vector<std::size_t> dims;
  dims.reserve(mods.size());
  for (const auto& [g, beta] : mods) dims.push_back(simple_module(h, beta, g, {.with_basis = false}).dimension);
  const bool ok = std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 1; });

  switch (cfg.output) {
    case OutputFormat::Json: {
      ordered_json j = header("onedim", p);
      j["count"] = mods.size();
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < mods.size(); ++i)
        rows.push_back({{"g", {mods[i].first.d1, mods[i].first.d2}},
                        {"beta", {mods[i].second.b1, mods[i].second.b2}},
                        {"dimension", dims[i]}});
      j["modules"] = std::move(rows);
      j["verified"] = ok;
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "d1,d2,b1,b2,dimension\n";
      for (std::size_t i = 0; i < mods.size(); ++i)
        out << mods[i].first.d1 << ',' << mods[i].first.d2 << ',' << mods[i].second.b1 << ',' << mods[i].second.b2
            << ',' << dims[i] << '\n';
      break;
    case OutputFormat::Text:
      out << mods.size() << " one-dimensional modules" << (ok ? ", all verified" : ", VERIFICATION FAILED") << '\n';
      break;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_twist_check(const RunConfig& cfg, std::ostream& out) {
  const BorelParams from = primary_params(cfg);
  if (!cfg.y2 || !cfg.z2) throw Error(ErrorCode::InvalidParams, "twist-check needs --y2 and --z2");
  const BorelParams to = BorelParams::make(cfg.ell, *cfg.y2, *cfg.z2);

  if (!twist_compatible(from, to)) {
    // Negative control: no cocycle exists, but the sweeps are still compared.
    const SweepResult a = sweep(Borel(from), cfg.jobs);
    const SweepResult b = from == to ? a : sweep(Borel(to), cfg.jobs);
    switch (cfg.output) {
      case OutputFormat::Json: {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "twist-check";
        j["from"] = params_json(from);
        j["to"] = params_json(to);
        j["status"] = "incompatible";
        j["reason"] = "r s^{-1} != r' s'^{-1}";
        j["multiset_from"] = format_multiset(a.multiset);
        j["multiset_to"] = format_multiset(b.multiset);
        j["multisets_equal"] = a.multiset == b.multiset;
        emit_json(out, j);
        break;
      }
      case OutputFormat::Csv:
        out << "status,multiset_from,multiset_to\n";
        out << "incompatible," << format_multiset(a.multiset) << ',' << format_multiset(b.multiset) << '\n';
        break;
      case OutputFormat::Text:
        out << "status incompatible: no cocycle twist relates the two algebras\n";
        out << "from " << format_multiset(a.multiset) << "\nto   " << format_multiset(b.multiset) << '\n';
        break;
    }
    return kIncompatible;
  }

  const PresentationReport pres = check_twisted_presentation(from, to);
  const CorrespondenceReport corr = twist_correspondence_check(from, to, cfg.jobs);
  const std::size_t equal = static_cast<std::size_t>(
      std::count_if(corr.pairs.begin(), corr.pairs.end(), [](const PairComparison& c) { return c.equal(); }));
  const bool pass = pres.all_passed() && corr.all_equal();

  switch (cfg.output) {
    case OutputFormat::Json: {
      ordered_json j;
      j["schema"] = kSchema;
      j["command"] = "twist-check";
      j["from"] = params_json(from);
      j["to"] = params_json(to);
      j["status"] = pass ? "pass" : "fail";
      j["sigma"] = {{"a12", pres.sigma.a12}};
      ordered_json checks = ordered_json::array();
      for (const auto& c : pres.checks) checks.push_back({{"relation", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["presentation"] = std::move(checks);
      j["pairs_checked"] = corr.pairs.size();
      j["pairs_equal"] = equal;
      ordered_json mismatches = ordered_json::array();
      for (const auto& c : corr.pairs)
        if (!c.equal())
          mismatches.push_back({{"g", {c.g.d1, c.g.d2}},
                                {"beta", {c.beta.b1, c.beta.b2}},
                                {"beta_twisted", {c.beta_twisted.b1, c.beta_twisted.b2}},
                                {"dim_from", c.dim_from},
                                {"dim_to", c.dim_to}});
      j["mismatches"] = std::move(mismatches);
      j["multiset_from"] = format_multiset(corr.multiset_from);
      j["multiset_to"] = format_multiset(corr.multiset_to);
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "d1,d2,b1,b2,b1_twisted,b2_twisted,dim_from,dim_to,equal\n";
      for (const auto& c : corr.pairs)
        out << c.g.d1 << ',' << c.g.d2 << ',' << c.beta.b1 << ',' << c.beta.b2 << ',' << c.beta_twisted.b1 << ','
            << c.beta_twisted.b2 << ',' << c.dim_from << ',' << c.dim_to << ',' << (c.equal() ? 1 : 0) << '\n';
      break;
    case OutputFormat::Text:
      out << "status " << (pass ? "pass" : "fail") << " (a12 = " << pres.sigma.a12 << ")\n";
      for (const auto& c : pres.checks) out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << '\n';
      out << "  dimensions equal on " << equal << '/' << corr.pairs.size() << " pairs\n";
      break;
  }
  return pass ? kOk : kCheckFailed;
}

int cmd_formula_check(const RunConfig& cfg, std::ostream& out) {
  const BorelParams p = primary_params(cfg);
  // Refuse before any expensive work.
  (void)m_parameters({0, 0}, {0, 0}, p);
  const Borel h(p);
  const int l = p.ell;
  const std::size_t total = static_cast<std::size_t>(l) * l * l * l;

  struct Row {
    GroupLike g;
    Character beta;
    long predicted;
    std::size_t computed;
  };
  std::vector<Row> rows;
  if (cfg.sample == 0 || cfg.sample >= total) {
    const SweepResult res = sweep(h, cfg.jobs);
    for (const auto& e : res.entries) rows.push_back({e.g, e.beta, predicted_dimension(e.g, e.beta, p), e.dimension});
  } else {
    std::vector<std::size_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(cfg.sample);
    std::sort(idx.begin(), idx.end());
    for (std::size_t i : idx) {
      const int b2 = static_cast<int>(i % l), b1 = static_cast<int>(i / l % l);
      const int d2 = static_cast<int>(i / l / l % l), d1 = static_cast<int>(i / l / l / l);
      const GroupLike g{d1, d2};
      const Character beta{b1, b2};
      rows.push_back({g, beta, predicted_dimension(g, beta, p), simple_module(h, beta, g, {.with_basis = false}).dimension});
    }
  }
  const std::size_t equal = static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const Row& r) { return r.predicted == static_cast<long>(r.computed); }));

  switch (cfg.output) {
    case OutputFormat::Csv:
      out << "d1,d2,b1,b2,predicted,computed,equal\n";
      for (const auto& r : rows)
        out << r.g.d1 << ',' << r.g.d2 << ',' << r.beta.b1 << ',' << r.beta.b2 << ',' << r.predicted << ','
            << r.computed << ',' << (r.predicted == static_cast<long>(r.computed) ? 1 : 0) << '\n';
      out << "# equal: " << equal << '/' << rows.size() << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json j = header("formula-check", p);
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows)
        arr.push_back({{"d1", r.g.d1}, {"d2", r.g.d2}, {"b1", r.beta.b1}, {"b2", r.beta.b2},
                       {"predicted", r.predicted}, {"computed", r.computed},
                       {"equal", r.predicted == static_cast<long>(r.computed)}});
      j["rows"] = std::move(arr);
      j["pairs_checked"] = rows.size();
      j["pairs_equal"] = equal;
      emit_json(out, j);
      break;
    }
    case OutputFormat::Text:
      out << "closed form agrees on " << equal << '/' << rows.size() << " pairs\n";
      break;
  }
  return equal == rows.size() ? kOk : kCheckFailed;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const BorelParams p = primary_params(cfg);
  const bool formula = std::gcd(6, p.ell) == 1 && mod(p.y - p.z, p.ell) == mod(2, p.ell);
  switch (cfg.output) {
    case OutputFormat::Json: {
      ordered_json j = header("validate", p);
      j["valid"] = true;
      j["order_r"] = BorelParams::order_of(p.ell, p.y);
      j["order_s"] = BorelParams::order_of(p.ell, p.z);
      j["gcd_condition"] = gcd_condition(p);
      j["formula_applicable"] = formula;
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "ell,y,z,valid,gcd_condition,formula_applicable\n"
          << p.ell << ',' << p.y << ',' << p.z << ",1," << gcd_condition(p) << ',' << formula << '\n';
      break;
    case OutputFormat::Text:
      out << "valid: ell=" << p.ell << " y=" << p.y << " z=" << p.z << "; gcd condition "
          << (gcd_condition(p) ? "holds" : "fails") << "; closed form " << (formula ? "applicable" : "not applicable")
          << '\n';
      break;
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return kInvalidInput;
    case ErrorCode::IncompatibleParams: return kIncompatible;
    case ErrorCode::UnsupportedEll:
    case ErrorCode::FormulaNotApplicable: return kNotApplicable;
    case ErrorCode::InternalConsistency: return kInternal;
    case ErrorCode::DivisionByZero:
    case ErrorCode::ContextMismatch: return kInternal;
  }
  return kInternal;
}

void emit_error(std::ostream& out, std::string_view code, const std::string& message) {
  ordered_json j;
  j["schema"] = kSchema;
  j["error"] = {{"code", code}, {"message", message}};
  out << j.dump(2) << '\n';
}

std::pair<long, long> parse_pair(const std::string& text, const char* flag) {
  std::istringstream is(text);
  long a = 0, b = 0;
  char comma = 0;
  if (!(is >> a >> comma >> b) || comma != ',' || !(is >> std::ws).eof())
    throw Error(ErrorCode::InvalidParams, std::string(flag) + " expects two comma-separated integers, got '" + text + "'");
  return {a, b};
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Module: return cmd_module(cfg, out);
    case Command::Sweep: return cmd_sweep(cfg, out);
    case Command::OneDim: return cmd_onedim(cfg, out);
    case Command::TwistCheck: return cmd_twist_check(cfg, out);
    case Command::FormulaCheck: return cmd_formula_check(cfg, out);
    case Command::Validate: return cmd_validate(cfg, out);
  }
  return kInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple Yetter-Drinfeld modules of the two-parameter Borel algebras H_{r,s} (sl_3)", "ydtwist"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string g_text, beta_text, output_text;
  long y2 = 0, z2 = 0;
  int jobs = -1;
  std::size_t sample = 0;
  unsigned long seed = 1;

  struct Sub {
    Command command;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Command::Module, "module", "compute one simple module H |>_beta g"},
      {Command::Sweep, "sweep", "dimensions of all ell^4 simple modules"},
      {Command::OneDim, "onedim", "list and verify the one-dimensional modules"},
      {Command::TwistCheck, "twist-check", "compare H_{r,s} with H_{r',s'} through a cocycle twist"},
      {Command::FormulaCheck, "formula-check", "compare computed dimensions with the closed form"},
      {Command::Validate, "validate", "check parameters"},
  };
  std::vector<std::pair<CLI::App*, Command>> apps;
  CLI::Option* y2_opt = nullptr;
  CLI::Option* z2_opt = nullptr;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--ell", cfg.ell, "order of q")->required();
    sub->add_option("--y", cfg.y, "r = q^y")->required();
    sub->add_option("--z", cfg.z, "s = q^z")->required();
    sub->add_option("--output", output_text, "json, csv or text");
    sub->add_option("--jobs", jobs, "worker threads (0 = auto; default $YDTWIST_JOBS or 0)");
    if (s.command == Command::Module) {
      sub->add_option("--g", g_text, "group element D1,D2")->required();
      sub->add_option("--beta", beta_text, "character B1,B2")->required();
    }
    if (s.command == Command::TwistCheck) {
      y2_opt = sub->add_option("--y2", y2, "r' = q^y2")->required();
      z2_opt = sub->add_option("--z2", z2, "s' = q^z2")->required();
    }
    if (s.command == Command::FormulaCheck) {
      sub->add_option("--sample", sample, "check this many random pairs (0 = all)");
      sub->add_option("--seed", seed, "sampling seed");
    }
    apps.emplace_back(sub, s.command);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, "usage", e.what());
    err << app.help();
    return kInvalidInput;
  }

  try {
    for (const auto& [sub, command] : apps)
      if (sub->parsed()) cfg.command = command;
    if (!g_text.empty()) cfg.g = parse_pair(g_text, "--g");
    if (!beta_text.empty()) cfg.beta = parse_pair(beta_text, "--beta");
    if (y2_opt && y2_opt->count()) cfg.y2 = y2;
    if (z2_opt && z2_opt->count()) cfg.z2 = z2;
    cfg.sample = sample;
    cfg.seed = seed;

    if (jobs < 0) {
      if (const char* env = std::getenv("YDTWIST_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0)
          throw Error(ErrorCode::InvalidParams, std::string("YDTWIST_JOBS must be a nonnegative integer, got '") + env + "'");
        jobs = static_cast<int>(v);
      } else {
        jobs = 0;
      }
    }
    cfg.jobs = static_cast<unsigned>(jobs);

    if (output_text.empty()) {
      cfg.output = (cfg.command == Command::Sweep || cfg.command == Command::FormulaCheck) ? OutputFormat::Csv
                                                                                         : OutputFormat::Json;
    } else if (output_text == "json") {
      cfg.output = OutputFormat::Json;
    } else if (output_text == "csv") {
      cfg.output = OutputFormat::Csv;
    } else if (output_text == "text") {
      cfg.output = OutputFormat::Text;
    } else {
      throw Error(ErrorCode::InvalidParams, "--output must be json, csv or text");
    }
    return execute(cfg, out);
  } catch (const Error& e) {
    emit_error(out, error_code_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    emit_error(out, "internal", e.what());
    return kInternal;
  }
}

}  // namespace ydtwist::cli
