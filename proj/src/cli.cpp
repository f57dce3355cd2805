#include "specdens/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "specdens/errors.hpp"
#include "specdens/zoo.hpp"

namespace specdens::cli {

namespace {

std::string approx(const Rational& r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << to_double(r);
  return s.str();
}

Tri parse_tri(const std::string& v) {
  if (v == "Yes" || v == "yes" || v == "T" || v == "1") return Tri::Yes;
  if (v == "No" || v == "no" || v == "F" || v == "0") return Tri::No;
  if (v == "Unknown" || v == "unknown" || v == "?") return Tri::Unknown;
  throw Error("bad verdict '" + v + "' (use Yes, No or Unknown)");
}

// "SI=Yes,SM=No,..." or seven letters from T, F, ? in column order.
PropertyVector parse_vector(const std::string& text) {
  PropertyVector pv;
  if (text.find('=') == std::string::npos) {
    if (text.size() != kProperties.size()) {
      throw Error("vector needs seven cells (SI SM FW SW FMP CF G), got '" + text + "'");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
      pv[kProperties[i]] = {parse_tri(std::string(1, text[i])), "given"};
    }
    return pv;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("bad vector item '" + item + "'");
    std::string key = item.substr(0, eq);
    if (key == "FM") key = "FMP";
    bool found = false;
    for (Property p : kProperties) {
      if (to_string(p) == key) {
        pv[p] = {parse_tri(item.substr(eq + 1)), "given"};
        found = true;
      }
    }
    if (!found) throw Error("unknown property '" + key + "'");
  }
  return pv;
}

DensityValue parse_density(const std::string& text) {
  if (text == "unknown") return DensityValue::unknown("given");
  if (text == "undefined") return DensityValue::undefined("given");
  try {
    return DensityValue::exact(parse_rational(text));
  } catch (const Error&) {
    throw Error("bad density '" + text + "' (a rational, 'unknown' or 'undefined')");
  }
}

void print_check(const TheoremCheck& check, std::ostream& out) {
  if (check.violations.empty()) {
    out << "theorem check: no violations\n";
  } else {
    out << "theorem check: " << check.violations.size() << " violation"
        << (check.violations.size() == 1 ? "" : "s") << "\n";
    for (const auto& v : check.violations) out << "  " << v.rule << ": " << v.message << "\n";
  }
  for (const auto& s : check.skipped) out << "  skipped " << s << "\n";
}

std::vector<int> parse_rows(const std::string& text) {
  std::vector<int> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int r = 0;
    try {
      r = std::stoi(item);
    } catch (const std::exception&) {
      throw Error("bad row '" + item + "'");
    }
    if (r < 1 || r > 9) throw Error("rows run from 1 to 9");
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TheoryFile resolve_theory(const std::string& ref) {
  if (ref.rfind("zoo:", 0) == 0) {
    const ZooEntry* e = find_zoo(ref.substr(4));
    if (!e) throw Error("no zoo theory named '" + ref.substr(4) + "'");
    return {e->theory, e->axioms};
  }
  return load_theory(ref);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra, natural densities and combination properties of empty-signature theories"};
  app.require_subcommand(1);

  std::string theory_ref, formula_text, csv_path, vector_text, density_text, rows_text;
  Nat upto = 20, estimate = 0, specrel = 0;
  bool minmod_flag = false, sat_flag = false, witness_flag = false, density_flag = false,
       strict = false;

  auto* spec_cmd = app.add_subcommand("spec", "list the spectrum up to N");
  spec_cmd->add_option("theory", theory_ref, "theory file or zoo:<name>")->required();
  spec_cmd->add_option("--upto", upto, "largest size listed")->check(CLI::PositiveNumber);

  auto* dens_cmd = app.add_subcommand("density", "exact density and sampled ratios");
  dens_cmd->add_option("theory", theory_ref, "theory file or zoo:<name>")->required();
  dens_cmd->add_option("--estimate", estimate, "sample ratios up to N")->check(CLI::PositiveNumber);
  dens_cmd->add_option("--csv", csv_path, "write sampled ratios as CSV");

  auto* cls_cmd = app.add_subcommand("classify", "decide the seven properties and match the table");
  cls_cmd->add_option("theory", theory_ref, "theory file or zoo:<name>")->required();

  auto* f_cmd = app.add_subcommand("formula", "questions about one quantifier-free formula");
  f_cmd->add_option("theory", theory_ref, "theory file or zoo:<name>")->required();
  f_cmd->add_option("formula", formula_text, "formula in prefix syntax")->required();
  auto* g = f_cmd->add_option_group("query");
  g->add_flag("--minmod", minmod_flag, "least model size satisfying the formula");
  g->add_flag("--sat", sat_flag, "satisfiability in the theory");
  g->add_option("--specrel", specrel, "sizes up to N of models satisfying the formula");
  g->add_flag("--witness", witness_flag, "the witness formula");
  g->add_flag("--density", density_flag, "density of the formula's spectrum");
  g->require_option(1);

  auto* t_cmd = app.add_subcommand("table1", "reproduce the classification table");
  t_cmd->add_flag("--strict", strict, "treat flagged anomaly cells as failures");
  t_cmd->add_option("--rows", rows_text, "comma separated row ids");

  auto* c_cmd = app.add_subcommand("check", "check a property vector against a density");
  c_cmd->add_option("--vector", vector_text, "SI=Yes,SM=No,... or seven of T/F/?")->required();
  c_cmd->add_option("--density", density_text, "rational, 'unknown' or 'undefined'")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const eqlogic::Limits limits = eqlogic::Limits::from_env();

    if (*spec_cmd) {
      Theory t = resolve_theory(theory_ref).theory;
      Nat count = 0;
      for (auto k = t.spectrum.next_member(1); k && *k <= upto; k = t.spectrum.next_member(*k + 1)) {
        out << *k << "\n";
        ++count;
      }
      out << "count " << count << "\n";
      return 0;
    }

    if (*dens_cmd) {
      Theory t = resolve_theory(theory_ref).theory;
      DensityValue d = exact_density(t.spectrum);
      out << d.to_string() << "\n";
      if (d.is_exact() && !d.note().empty()) out << "source: " << d.note() << "\n";
      if (estimate > 0) {
        DensityReport rep = estimate_density(t.spectrum, estimate);
        out << "n count ratio approx\n";
        for (const auto& s : rep.samples) {
          out << s.n << " " << s.count << " " << to_string(s.ratio) << " " << approx(s.ratio)
              << (s.block_end ? " block-end" : "") << "\n";
        }
        if (rep.final_ratio) out << "final ratio " << to_string(*rep.final_ratio) << " approx " << approx(*rep.final_ratio) << "\n";
        if (!rep.error.empty()) out << "sampling stopped: " << rep.error << "\n";
        if (!csv_path.empty()) {
          std::ofstream f(csv_path);
          if (!f) throw Error("cannot write '" + csv_path + "'");
          f << rep.to_csv();
        }
      } else if (!csv_path.empty()) {
        throw Error("--csv needs --estimate");
      }
      return 0;
    }

    if (*cls_cmd) {
      Theory t = resolve_theory(theory_ref).theory;
      Classification c = classify(t);
      out << "theory " << t.name << "\n";
      for (Property p : kProperties) {
        out << std::left << std::setw(4) << to_string(p) << std::setw(8)
            << to_string(c.properties.value(p)) << c.properties[p].rule << "\n";
      }
      out << "density " << c.density.to_string() << "\n";
      if (c.row) {
        out << "table row " << *c.row << "\n";
      } else {
        out << "table row unclassified";
        if (!c.candidates.empty()) {
          out << " (candidates";
          for (int r : c.candidates) out << " " << r;
          out << ")";
        }
        out << "\n";
      }
      print_check(c.check, out);
      return c.check.violations.empty() ? 0 : 2;
    }

    if (*f_cmd) {
      Theory t = resolve_theory(theory_ref).theory;
      eqlogic::Formula f = eqlogic::parse(formula_text);
      if (minmod_flag) {
        out << minmod(t, f, limits) << "\n";
      } else if (sat_flag) {
        out << (decide_sat(t, f, limits) ? "sat" : "unsat") << "\n";
      } else if (witness_flag) {
        out << eqlogic::to_string(witness(t, f)) << "\n";
      } else if (density_flag) {
        out << density_rel(t, f, limits).to_string() << "\n";
      } else {
        SpectrumClass s = spec_rel(t, f, limits);
        bool first = true;
        for (auto k = s.next_member(1); k && *k <= specrel; k = s.next_member(*k + 1)) {
          out << (first ? "" : " ") << *k;
          first = false;
        }
        out << "\n";
      }
      return 0;
    }

    if (*t_cmd) {
      Table1Report rep = reproduce_table1(rows_text.empty() ? std::vector<int>{} : parse_rows(rows_text));
      out << rep.to_text();
      if (!rep.all_match()) return 2;
      if (strict && rep.anomaly_count() > 0) {
        out << "strict: anomaly cells count as failures\n";
        return 2;
      }
      return 0;
    }

    if (*c_cmd) {
      TheoremCheck check = check_theorems(parse_vector(vector_text), parse_density(density_text));
      print_check(check, out);
      return check.violations.empty() ? 0 : 2;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace specdens::cli
