// Command line driver. Reads a problem file, runs one library operation,
// and renders the result as text, TSV, or JSON.
//
// Exit codes: 0 success, 1 mathematical error (infinite length, improper
// input ideal, ...), 2 malformed input (file syntax, unknown names, bad
// flags).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idealpow/constructions.hpp"
#include "idealpow/errors.hpp"
#include "idealpow/ideal_ops.hpp"
#include "idealpow/invariants.hpp"
#include "idealpow/io.hpp"

namespace {

using nlohmann::json;
using namespace idealpow;

struct Options {
  std::string file;
  std::string ideal = "I";
  std::string aux;
  std::uint32_t k = 1;
  std::uint32_t kmax = 2;
  std::uint32_t d = 1;
  std::uint32_t e = 0;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(Errc::SyntaxError, 0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const Ideal& named_ideal(const ProblemFile& pf, const std::string& name) {
  const Ideal* found = pf.find(name);
  if (found == nullptr) {
    throw ParseError(Errc::SyntaxError, 0,
                     "no ideal named '" + name + "' in the problem file");
  }
  return *found;
}

// --aux when given, otherwise the ideal of all ring variables.
Ideal aux_or_maximal(const ProblemFile& pf, const std::string& aux) {
  if (!aux.empty()) return named_ideal(pf, aux);
  std::vector<Poly> vars;
  vars.reserve(pf.ring.nvars());
  for (std::size_t i = 0; i < pf.ring.nvars(); ++i) {
    vars.push_back(Poly::variable(pf.ring, i));
  }
  return Ideal(pf.ring, std::move(vars));
}

std::vector<Poly> sorted_generators(const Ideal& ideal) {
  std::vector<Poly> gens = ideal.generators();
  const MonomialOrder& ord = ideal.ring().order();
  std::stable_sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), ord) ==
           std::strong_ordering::greater;
  });
  return gens;
}

json json_int(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

void emit_ideal(const Ideal& ideal, const std::string& format) {
  if (format == "json") {
    json gens = json::array();
    for (const Poly& g : sorted_generators(ideal)) gens.push_back(to_string(g));
    json out;
    out["ring"] = ideal.ring().to_string();
    out["generators"] = gens;
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    if (ideal.is_zero()) {
      std::cout << "0\n";
      return;
    }
    for (const Poly& g : sorted_generators(ideal)) std::cout << to_string(g) << "\n";
  } else {
    std::cout << to_string(ideal) << "\n";
  }
}

void emit_count(const char* key, std::uint64_t value, const std::string& format) {
  if (format == "json") {
    json out;
    out[key] = value;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
}

void emit_length(std::optional<std::uint64_t> value, const std::string& format) {
  if (format == "json") {
    json out;
    out["length"] = value ? json(*value) : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else if (value) {
    std::cout << *value << "\n";
  } else {
    std::cout << "infinite\n";
  }
}

void emit_growth(const GrowthTable& table, const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const GrowthRow& r : table.rows) {
      json row;
      row["k"] = r.k;
      row["length"] = r.length;
      row["ratio_num"] = json_int(r.ratio.get_num());
      row["ratio_den"] = json_int(r.ratio.get_den());
      rows.push_back(row);
    }
    json out;
    out["subject"] = table.subject;
    out["exponent"] = table.exponent;
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    for (const GrowthRow& r : table.rows) {
      std::cout << r.k << "\t" << r.length << "\t" << r.ratio.get_str() << "\n";
    }
  } else {
    std::cout << table.subject << ", e = " << table.exponent << "\n";
    for (const GrowthRow& r : table.rows) {
      std::cout << "k=" << r.k << " length=" << r.length << " ratio=" << r.ratio.get_str()
                << "\n";
    }
  }
}

void emit_probe(const ProbeReport& report, const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const ProbeRow& r : report.rows) {
      json row;
      row["k"] = r.k;
      row["verdict"] = r.pass;
      if (r.witness) row["witness"] = to_string(*r.witness);
      rows.push_back(row);
    }
    json out;
    out["fail_at"] = report.fail_at ? json(*report.fail_at) : json(nullptr);
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    for (const ProbeRow& r : report.rows) {
      std::cout << r.k << "\t" << (r.pass ? "pass" : "fail") << "\t"
                << (r.witness ? to_string(*r.witness) : "") << "\n";
    }
  } else {
    for (const ProbeRow& r : report.rows) {
      std::cout << "k=" << r.k << (r.pass ? " pass" : " fail");
      if (r.witness) std::cout << " witness=" << to_string(*r.witness);
      std::cout << "\n";
    }
    if (report.fail_at) {
      std::cout << "FailAt(" << *report.fail_at << ")\n";
    } else {
      std::cout << "AllPass\n";
    }
  }
}

void emit_hilbert(const HilbertData& h, const std::string& format) {
  if (format == "json") {
    json out;
    out["numerator"] = h.numerator_string();
    out["dimension"] = h.dimension;
    out["multiplicity"] = json_int(h.multiplicity);
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    std::cout << h.numerator_string() << "\t" << h.dimension << "\t" << h.multiplicity
              << "\n";
  } else {
    std::cout << h.numerator_string() << "; dim " << h.dimension << "; mult "
              << h.multiplicity << "\n";
  }
}

struct SubSpec {
  bool aux = false;
  bool aux_required = false;
  bool k = false;
  bool kmax = false;
  int kmax_min = 1;
  bool d = false;
  bool e = false;
};

CLI::App* make_sub(CLI::App& app, Options& opt, const std::string& name,
                   const std::string& desc, const SubSpec& spec) {
  CLI::App* sub = app.add_subcommand(name, desc);
  sub->add_option("--file", opt.file, "problem file")->required()->check(CLI::ExistingFile);
  sub->add_option("--ideal", opt.ideal, "name of the subject ideal (default I)");
  if (spec.aux) {
    CLI::Option* aux = sub->add_option("--aux", opt.aux, "name of the auxiliary ideal");
    if (spec.aux_required) aux->required();
  }
  if (spec.k) sub->add_option("-k", opt.k, "power (default 1)")->check(CLI::PositiveNumber);
  if (spec.kmax) {
    sub->add_option("--kmax", opt.kmax, "largest k")
        ->required()
        ->check(CLI::Range(spec.kmax_min, 1 << 20));
  }
  if (spec.d) sub->add_option("-d", opt.d, "Veronese degree (default 1)")->check(CLI::PositiveNumber);
  if (spec.e) sub->add_option("-e", opt.e, "ratio exponent: lengths are divided by k^e")->required();
  sub->add_option("--format", opt.format, "json, tsv, or text (default text)")
      ->check(CLI::IsMember({"json", "tsv", "text"}));
  return sub;
}

int dispatch(const std::string& name, const Options& opt) {
  ProblemFile pf = parse_problem_file(read_file(opt.file));
  const Ideal& subject = named_ideal(pf, opt.ideal);

  if (name == "power") {
    emit_ideal(power(subject, opt.k), opt.format);
  } else if (name == "colon") {
    emit_ideal(colon(subject, named_ideal(pf, opt.aux)), opt.format);
  } else if (name == "saturate") {
    emit_ideal(saturate(subject, aux_or_maximal(pf, opt.aux)), opt.format);
  } else if (name == "symbolic") {
    emit_ideal(symbolic_power(subject, aux_or_maximal(pf, opt.aux), opt.k), opt.format);
  } else if (name == "form-ideal") {
    Ideal arg = opt.k == 1 ? subject : power(subject, opt.k);
    emit_ideal(form_ideal(arg), opt.format);
  } else if (name == "sharp") {
    emit_ideal(sharp_ideal(subject), opt.format);
  } else if (name == "spread") {
    emit_count("spread", analytic_spread(subject), opt.format);
  } else if (name == "rees") {
    emit_ideal(rees_presentation(subject), opt.format);
  } else if (name == "length") {
    if (opt.aux.empty()) {
      emit_length(local_colength(subject), opt.format);
    } else {
      emit_length(quotient_length(subject, named_ideal(pf, opt.aux)), opt.format);
    }
  } else if (name == "growth") {
    emit_growth(growth_table(subject, aux_or_maximal(pf, opt.aux), opt.e, opt.kmax),
                opt.format);
  } else if (name == "veronese-probe") {
    emit_probe(veronese_probe(subject, aux_or_maximal(pf, opt.aux), opt.d, opt.kmax),
               opt.format);
  } else if (name == "form-probe") {
    emit_probe(form_algebra_probe(subject, opt.kmax), opt.format);
  } else if (name == "hilbert") {
    MonomialIdeal ini = subject.is_zero() ? MonomialIdeal(subject.ring(), {})
                                          : initial_ideal(subject);
    emit_hilbert(hilbert_series(ini), opt.format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact powers, saturations, form ideals, and growth probes for polynomial ideals"};
  app.require_subcommand(1);
  Options opt;

  make_sub(app, opt, "power", "generators of I^k", {.k = true});
  make_sub(app, opt, "colon", "I : J", {.aux = true, .aux_required = true});
  make_sub(app, opt, "saturate", "I : J^inf (J defaults to the ideal of all variables)",
           {.aux = true});
  make_sub(app, opt, "symbolic", "generalized symbolic power I^k : J^inf",
           {.aux = true, .k = true});
  make_sub(app, opt, "form-ideal", "ideal of leading forms of I^k", {.k = true});
  make_sub(app, opt, "sharp", "I-sharp in the ring extended by s", {});
  make_sub(app, opt, "spread", "analytic spread of I", {});
  make_sub(app, opt, "rees", "defining ideal of the Rees algebra of I", {});
  make_sub(app, opt, "length",
           "colength of I, or length of aux/I when --aux is given", {.aux = true});
  make_sub(app, opt, "growth", "lengths of (I^k : J^inf)/I^k for k = 1..kmax",
           {.aux = true, .kmax = true, .e = true});
  make_sub(app, opt, "veronese-probe",
           "compare (I^d : J^inf)^k with I^(dk) : J^inf for k = 2..kmax",
           {.aux = true, .kmax = true, .kmax_min = 2, .d = true});
  make_sub(app, opt, "form-probe",
           "look for fresh generators of the form algebra up to degree kmax",
           {.kmax = true, .kmax_min = 2});
  make_sub(app, opt, "hilbert", "Hilbert series data of the initial ideal of I", {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error (byte " << e.position() << "): " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
