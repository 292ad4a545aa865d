#include "csf/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/harmonic.hpp"
#include "csf/maps.hpp"
#include "csf/numeric.hpp"
#include "csf/operators.hpp"
#include "csf/relations.hpp"
#include "csf/verify.hpp"

namespace csf {

namespace {

std::string poly_json(const Poly& p) {
  nlohmann::json j;
  j["terms"] = nlohmann::json::array();
  for (const auto& [w, c] : p.terms())
    j["terms"].push_back({{"coeff", c.get_str()}, {"word", w.text()}});
  return j.dump();
}

void emit_poly(const Poly& p, const std::string& format, std::ostream& out) {
  if (format == "structured")
    out << poly_json(p) << "\n";
  else
    out << to_string(p) << "\n";
}

// "<index|word>": try word grammar first ([xy]+ or "1"), then index
Poly parse_operand(const std::string& s) {
  if (s == "1") return Poly::unit();
  if (!s.empty() && s.find_first_not_of("xy") == std::string::npos) return Poly(Word(s));
  return Poly(word_from_index(parse_index(s)));
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

struct CliState {
  std::ostream& out;
  std::ostream& err;
  int status = 0;
};

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->default_val("text");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine for cyclic sum formulas on the word algebra Q<x,y>"};
  app.name("csf");
  app.require_subcommand(1);
  CliState state{out, err};

  // map --name {gamma|gamma-inv|phi|alpha|d|alpha-tilde} --input <poly>
  {
    auto* cmd = app.add_subcommand("map", "apply an algebra/coalgebra map to a poly");
    auto name = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>();
    cmd->add_option("--name", *name, "map name")
        ->required()
        ->check(CLI::IsMember({"gamma", "gamma-inv", "phi", "alpha", "d", "alpha-tilde"}));
    cmd->add_option("--input", *input, "poly text")->required();
    add_format_option(cmd, *format);
    cmd->callback([&state, name, input, format] {
      Poly p = parse_poly(*input);
      Poly r;
      if (*name == "gamma") r = apply_automorphism(Automorphism::Gamma, p);
      else if (*name == "gamma-inv") r = apply_automorphism(Automorphism::GammaInv, p);
      else if (*name == "phi") r = apply_automorphism(Automorphism::Phi, p);
      else if (*name == "alpha") r = apply_automorphism(Automorphism::Alpha, p);
      else if (*name == "d") r = apply_d(p);
      else r = apply_alpha_tilde(p);
      emit_poly(r, *format, state.out);
    });
  }

  // star [--bar] --left <index|word> --right <index|word>
  {
    auto* cmd = app.add_subcommand("star", "harmonic product of two arguments");
    auto bar = std::make_shared<bool>(false);
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>();
    cmd->add_flag("--bar", *bar, "use the zeta-star harmonic product");
    cmd->add_option("--left", *left, "index or word")->required();
    cmd->add_option("--right", *right, "index or word")->required();
    add_format_option(cmd, *format);
    cmd->callback([&state, bar, left, right, format] {
      Poly a = parse_operand(*left);
      Poly b = parse_operand(*right);
      emit_poly(*bar ? star_bar(a, b) : star(a, b), *format, state.out);
    });
  }

  // rho|rhobar|del --n <int>=1> --word <word>
  for (const char* which : {"rho", "rhobar", "del"}) {
    auto* cmd = app.add_subcommand(
        which, std::string(which) == "del" ? "derivation operator on a word"
                                           : "cyclic sum operator on a word");
    auto n = std::make_shared<int>(1);
    auto word = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "operator order (>= 1)")->required()->check(CLI::Range(1, 64));
    cmd->add_option("--word", *word, "word over {x,y} or 1")->required();
    add_format_option(cmd, *format);
    std::string which_s(which);
    cmd->callback([&state, n, word, format, which_s] {
      Poly p{parse_word(*word)};
      Poly r;
      if (which_s == "rho") r = rho(*n, p);
      else if (which_s == "rhobar") r = rho_bar(*n, p);
      else r = derivation(*n, p);
      emit_poly(r, *format, state.out);
    });
  }

  // cderiv --variant {c|cbar} --word <word>
  {
    auto* cmd = app.add_subcommand("cderiv", "cyclic derivative applied to 1");
    auto variant = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>();
    cmd->add_option("--variant", *variant, "c or cbar")
        ->required()
        ->check(CLI::IsMember({"c", "cbar"}));
    cmd->add_option("--word", *word, "word over {x,y} or 1")->required();
    add_format_option(cmd, *format);
    cmd->callback([&state, variant, word, format] {
      CyclicVariant v = *variant == "c" ? CyclicVariant::C : CyclicVariant::CBar;
      emit_poly(cyclic_derivative(v, parse_word(*word), Poly::unit()), *format, state.out);
    });
  }

  // member [--bar] --n <int> --word <word>
  {
    auto* cmd =
        app.add_subcommand("member", "membership of a rho image in the Kawashima span");
    auto bar = std::make_shared<bool>(false);
    auto n = std::make_shared<int>(1);
    auto word = std::make_shared<std::string>();
    cmd->add_flag("--bar", *bar, "use rho_bar and the zeta-star span");
    cmd->add_option("--n", *n, "operator order (>= 1)")->required()->check(CLI::Range(1, 64));
    cmd->add_option("--word", *word, "word over {x,y}")->required();
    cmd->callback([&state, bar, n, word] {
      Word w = parse_word(*word);
      Poly image = *bar ? rho_bar(*n, Poly(w)) : rho(*n, Poly(w));
      if (image.is_zero()) {
        state.out << "member: yes (zero image)\n";
        return;
      }
      const int weight = static_cast<int>(*image.homogeneous_degree());
      LinearSystem span = kawashima_span(
          weight, *bar ? HarmonicVariant::StarBar : HarmonicVariant::Star);
      MembershipCertificate cert = membership(span, image);
      if (!cert.member) {
        state.out << "member: no\n";
        state.status = 1;
        return;
      }
      state.out << "member: yes\n";
      for (const auto& [label, c] : cert.combination)
        state.out << "  " << c.get_str() << " * " << label << "\n";
    });
  }

  // keyprop --n <int> --ks <index>
  {
    auto* cmd = app.add_subcommand("keyprop", "key harmonic-product identity for an index");
    auto n = std::make_shared<int>(1);
    auto ks = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "operator order (>= 1)")->required()->check(CLI::Range(1, 64));
    cmd->add_option("--ks", *ks, "index, e.g. 2,1")->required();
    cmd->callback([&state, n, ks] {
      KeyPropResult r = key_prop_check(*n, parse_index(*ks));
      state.out << "lhs = " << to_string(r.lhs) << "\n";
      state.out << "rhs = " << to_string(r.rhs) << "\n";
      state.out << "equal: " << (r.equal ? "yes" : "no") << "\n";
      if (!r.equal) state.status = 1;
    });
  }

  // dims --max-weight <int> [--format text|structured]
  {
    auto* cmd = app.add_subcommand("dims", "dimension table of the cyclic sum spans");
    auto max_weight = std::make_shared<int>(8);
    auto format = std::make_shared<std::string>();
    cmd->add_option("--max-weight", *max_weight, "largest output weight (>= 3)")
        ->required()
        ->check(CLI::Range(3, 64));
    add_format_option(cmd, *format);
    cmd->callback([&state, max_weight, format] {
      DimTable t = dims_table(*max_weight);
      if (*format == "structured")
        state.out << t.to_json() << "\n";
      else
        state.out << t.to_text();
    });
  }

  // zeta [--star] --index <index> [--M <int>]
  {
    auto* cmd = app.add_subcommand("zeta", "truncated numeric zeta / zeta-star value");
    auto star_flag = std::make_shared<bool>(false);
    auto index = std::make_shared<std::string>();
    auto M = std::make_shared<long>(100000);
    cmd->add_flag("--star", *star_flag, "weakly decreasing summation (zeta-star)");
    cmd->add_option("--index", *index, "index, e.g. 2,1")->required();
    cmd->add_option("--M", *M, "summation cutoff (>= 10)")->check(CLI::Range(10L, 1000000000L));
    cmd->callback([&state, star_flag, index, M] {
      Index idx = parse_index(*index);
      TruncationParams params(*M);
      NumericResult r = *star_flag ? zeta_star_num(idx, params) : zeta_num(idx, params);
      state.out << "value = " << fmt_double(r.value) << "\n";
      state.out << "tail_bound = " << fmt_double(r.tail_bound) << "\n";
      state.out << "M = " << r.M_used << "\n";
    });
  }

  // check-csf [--star] --ks <index>
  {
    auto* cmd = app.add_subcommand("check-csf", "numeric cyclic sum check for an index");
    auto star_flag = std::make_shared<bool>(false);
    auto ks = std::make_shared<std::string>();
    auto M = std::make_shared<long>(100000);
    cmd->add_flag("--star", *star_flag, "zeta-star variant");
    cmd->add_option("--ks", *ks, "index, e.g. 2,1")->required();
    cmd->add_option("--M", *M, "summation cutoff (>= 10)")->check(CLI::Range(10L, 1000000000L));
    cmd->callback([&state, star_flag, ks, M] {
      CsfNumericReport rep = csf_numeric_check(
          parse_index(*ks), *star_flag ? ZetaVariant::MZSV : ZetaVariant::MZV,
          TruncationParams(*M));
      state.out << "lhs = " << fmt_double(rep.lhs) << "\n";
      state.out << "rhs = " << fmt_double(rep.rhs) << "\n";
      state.out << "diff = " << fmt_double(rep.diff) << "\n";
      state.out << "tolerance = " << fmt_double(rep.tolerance) << "\n";
      state.out << (rep.pass ? "pass" : "FAIL") << "\n";
      if (!rep.pass) state.status = 1;
    });
  }

  // verify <suite> [bounds]
  {
    auto* cmd = app.add_subcommand("verify", "run a named verification suite");
    auto suite = std::make_shared<std::string>();
    auto opts = std::make_shared<SuiteOptions>();
    cmd->add_option("suite", *suite, "suite name")->required();
    cmd->add_option("--max-weight", opts->max_weight, "weight bound");
    cmd->add_option("--max-degree", opts->max_degree, "degree bound");
    cmd->add_option("--max-n", opts->max_n, "operator order bound");
    cmd->add_option("--instances", opts->instances, "random instance count");
    cmd->add_option("--M", opts->M, "numeric summation cutoff");
    cmd->add_option("--seed", opts->seed, "random seed");
    cmd->callback([&state, suite, opts] {
      SuiteReport rep = run_suite(*suite, *opts);
      state.out << "verify " << rep.suite << ": " << rep.cases << " cases, " << rep.failures
                << " failures\n";
      if (rep.failures > 0) {
        state.out << "first counterexample: " << rep.first_counterexample << "\n";
        state.status = 1;
      }
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::InternalInconsistency ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return state.status;
}

}  // namespace csf
