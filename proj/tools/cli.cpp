#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "slicetorus/bennequin.hpp"
#include "slicetorus/braid.hpp"
#include "slicetorus/certificate_io.hpp"
#include "slicetorus/cobordism.hpp"
#include "slicetorus/estimator.hpp"
#include "slicetorus/knots.hpp"

namespace slicetorus::cli {

namespace {

// Input problems that are not usage errors (missing files, bad JSON, bad braids).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

struct BraidSource {
  std::string text;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* inline_opt = cmd->add_option("--braid", text, "braid word, e.g. \"3: 1 2 -1\"");
    auto* file_opt = cmd->add_option("--braid-file", file, "file holding a braid word");
    inline_opt->excludes(file_opt);
  }

  BraidWord load(std::istream& in) const {
    if (!file.empty()) return parse_braid(read_text(file, in));
    if (text.empty()) throw InputError("one of --braid or --braid-file is required");
    return parse_braid(text);
  }
};

std::vector<CobordismCertificate> load_certs(const std::vector<std::string>& paths, std::istream& in) {
  std::vector<CobordismCertificate> out;
  for (const auto& path : paths) {
    auto certs = certificates_from_text(read_text(path, in));
    out.insert(out.end(), certs.begin(), certs.end());
  }
  return out;
}

CobordismCertificate load_single_cert(const std::string& path, std::istream& in) {
  auto certs = certificates_from_text(read_text(path, in));
  if (certs.size() != 1) throw InputError("'" + path + "' must hold exactly one certificate");
  return certs.front();
}

Json interval_json(const RationalInterval& v) {
  Json j;
  j["lower"] = format_rational(v.lower());
  j["upper"] = format_rational(v.upper());
  return j;
}

Json error_json(const std::string& message, std::optional<std::size_t> step = std::nullopt) {
  Json j;
  j["error"] = message;
  if (step) j["step"] = *step;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Slice-torus invariant bounds and cobordism certificates for braid closures",
               "slicetorus"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "also print a one-line summary to stderr");

  auto* summary = app.add_subcommand("summary", "closure statistics of a braid word")->fallthrough();
  BraidSource summary_braid;
  summary_braid.attach(summary);

  auto* genus = app.add_subcommand("genus", "slice genus, or a bracket when undetermined")->fallthrough();
  BraidSource genus_braid;
  genus_braid.attach(genus);
  std::vector<std::string> genus_certs;
  genus->add_option("--certs", genus_certs, "certificate files from the knot to torus knots");

  auto* bennequin = app.add_subcommand("bennequin", "slice-Bennequin interval")->fallthrough();
  BraidSource bennequin_braid;
  bennequin_braid.attach(bennequin);

  auto* build = app.add_subcommand("cobordism-build", "construct a cobordism certificate")->fallthrough();
  std::string construction;
  build->add_option("construction", construction, "lemma1 or lemma2")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2"}));
  BraidSource build_braid;
  build_braid.attach(build);
  int build_p = 0;
  build->add_option("--p", build_p, "torus index for lemma2");

  auto* verify = app.add_subcommand("cobordism-verify", "replay and verify certificates")->fallthrough();
  std::string verify_path = "-";
  verify->add_option("--cert", verify_path, "certificate file, '-' for stdin");

  auto* squeezed = app.add_subcommand("squeezed", "check a squeezing pair of cobordisms")->fallthrough();
  std::string plus_path;
  std::string minus_path;
  std::string t_plus_text;
  std::string t_minus_text;
  squeezed->add_option("--plus", plus_path, "certificate from T+ to K")->required();
  squeezed->add_option("--minus", minus_path, "certificate from K to -|T-|")->required();
  squeezed->add_option("--t-plus", t_plus_text, "positive torus knot 'p,q'")->required();
  squeezed->add_option("--t-minus", t_minus_text, "torus knot 'p,q' whose mirror ends C-")->required();

  auto* vbound = app.add_subcommand("vbound", "inner and outer bounds for the value set V(K)")->fallthrough();
  BraidSource vbound_braid;
  vbound_braid.attach(vbound);
  std::vector<std::string> alt_braids;
  std::vector<std::string> fixture_paths;
  std::vector<std::string> vbound_certs;
  std::vector<std::string> vbound_certs_inv;
  std::string squeezed_value;
  int vbound_p_max = 0;
  vbound->add_option("--alt-braid", alt_braids, "other braid words for the same knot");
  vbound->add_option("--fixtures", fixture_paths, "fixture JSON files");
  vbound->add_option("--p-max", vbound_p_max, "also intersect with the ell bracket up to this p");
  vbound->add_option("--certs", vbound_certs, "certificate files used for t_p(K)");
  vbound->add_option("--certs-inv", vbound_certs_inv, "certificate files used for t_p(-K)");
  vbound->add_option("--squeezed-value", squeezed_value, "value from a squeezed check, 'n/d'");

  auto* ell = app.add_subcommand("ell", "bracket for the limit of the t_p sequence")->fallthrough();
  BraidSource ell_braid;
  ell_braid.attach(ell);
  int ell_p_max = 3;
  std::vector<std::string> ell_certs;
  std::vector<std::string> ell_certs_inv;
  ell->add_option("--p-max", ell_p_max, "largest torus index p")->check(CLI::PositiveNumber);
  ell->add_option("--certs", ell_certs, "certificate files used for t_p(K)");
  ell->add_option("--certs-inv", ell_certs_inv, "certificate files used for t_p(-K)");

  auto* sum = app.add_subcommand("sum", "value set of K^#a # T(2,3)^#b from V(K)")->fallthrough();
  std::string sum_lower;
  std::string sum_upper;
  long sum_a = 1;
  long sum_b = 0;
  sum->add_option("--lower", sum_lower, "lower end of V(K), 'n/d'")->required();
  sum->add_option("--upper", sum_upper, "upper end of V(K), 'n/d'")->required();
  sum->add_option("--a", sum_a, "copies of K")->required();
  sum->add_option("--b", sum_b, "copies of T(2,3), negative for mirrors")->required();

  auto verb = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.starts_with("-"); });
  if (verb != args.end() && app.get_subcommand_no_throw(*verb) == nullptr) {
    out << error_json("unknown verb '" + *verb + "'").dump() << '\n';
    return 2;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json(e.what()).dump() << '\n';
    return 2;
  }

  Json result;
  std::string note;
  try {
    if (*summary) {
      const auto word = summary_braid.load(in);
      const auto s = closure_summary(word);
      result["strands"] = s.strands;
      result["length"] = s.length;
      result["writhe"] = s.writhe;
      result["components"] = s.components;
      result["missing_positive"] = s.missing_positive;
      result["missing_negative"] = s.missing_negative;
      result["is_positive_word"] = s.is_positive_word;
      note = render_braid(word) + ": " + std::to_string(s.components) + " component(s)";
    } else if (*genus) {
      const auto word = genus_braid.load(in);
      const auto certs = load_certs(genus_certs, in);
      const auto bracket = g4_bracket(word, certs);
      if (bracket.lower == bracket.upper) {
        result["genus"] = format_rational(bracket.lower);
        note = "g4 = " + format_rational(bracket.lower);
      } else {
        result["genus"] = nullptr;
        result["bracket"] = bracket_to_json(bracket);
        note = "g4 in " + to_string(bracket.interval());
      }
    } else if (*bennequin) {
      const auto interval = slice_torus_interval(bennequin_braid.load(in));
      result = interval_json(interval);
      note = "every slice-torus invariant lies in " + to_string(interval);
    } else if (*build) {
      CobordismCertificate cert;
      if (construction == "lemma1") {
        cert = build_lemma_i(build_braid.load(in));
      } else {
        cert = build_lemma_ii(build_p);
      }
      result = certificate_to_json(cert);
      note = std::to_string(cert.moves.size()) + " moves";
    } else if (*verify) {
      const auto certs = certificates_from_text(read_text(verify_path, in));
      std::vector<Json> reports;
      for (const auto& cert : certs) reports.push_back(verification_report(verify_certificate(cert)));
      result = reports.size() == 1 ? reports.front() : Json(reports);
      note = std::to_string(reports.size()) + " certificate(s) verified";
    } else if (*squeezed) {
      const auto value = check_squeezed(load_single_cert(plus_path, in), load_single_cert(minus_path, in),
                                        parse_torus_spec(t_plus_text), parse_torus_spec(t_minus_text));
      result["squeezed"] = value.has_value();
      result["value"] = value ? Json(format_rational(*value)) : Json(nullptr);
      note = value ? "squeezed, value " + format_rational(*value) : "inconclusive";
    } else if (*vbound) {
      VEstimateOptions options;
      for (const auto& text : alt_braids) options.alternate_words.push_back(parse_braid(text));
      for (const auto& path : fixture_paths) {
        auto fixtures = fixtures_from_text(read_text(path, in));
        options.fixtures.insert(options.fixtures.end(), fixtures.begin(), fixtures.end());
      }
      options.p_max = vbound_p_max;
      options.certs_k = load_certs(vbound_certs, in);
      options.certs_inv = load_certs(vbound_certs_inv, in);
      if (!squeezed_value.empty()) options.squeezed_value = parse_rational(squeezed_value);
      const auto estimate = v_estimate(vbound_braid.load(in), options);
      result["outer"] = interval_json(estimate.outer);
      result["inner"] = estimate.inner ? interval_json(*estimate.inner) : Json(nullptr);
      result["outer_witness"] = estimate.outer_witness;
      note = "V(K) within " + to_string(estimate.outer);
    } else if (*ell) {
      const auto bracket = ell_bracket(ell_braid.load(in), ell_p_max, load_certs(ell_certs, in),
                                       load_certs(ell_certs_inv, in));
      result = bracket_to_json(bracket);
      note = "l(K) in " + to_string(bracket.interval());
    } else if (*sum) {
      const RationalInterval v(parse_rational(sum_lower), parse_rational(sum_upper));
      const auto interval = sum_with_squeezed(v, sum_a, sum_b);
      result = interval_json(interval);
      note = to_string(interval);
    }
  } catch (const VerificationError& e) {
    out << error_json(e.what(), e.step()).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    out << error_json(e.what()).dump() << '\n';
    return 1;
  }

  out << result.dump() << '\n';
  if (human) err << note << '\n';
  return 0;
}

}  // namespace slicetorus::cli
