#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

#include "braidnorm/braid_word.hpp"
#include "braidnorm/certificates.hpp"
#include "braidnorm/closure.hpp"
#include "braidnorm/norms.hpp"
#include "braidnorm/quasi.hpp"
#include "braidnorm/signature.hpp"

namespace braidnorm::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kVerifyError = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write file: " + path);
  f << content;
}

int cmd_signature(const std::string& word, int strands, bool emit_matrix,
                  std::ostream& out) {
  const BraidWord w = parse_braid_word(word);
  const int n = strands > 0 ? strands : width(w);
  if (emit_matrix) {
    const SeifertMatrix v = seifert_matrix(w, n);
    out << v.entries.to_text() << "\n";
  }
  out << link_signature(w, n) << "\n";
  return kOk;
}

int cmd_norm(const std::string& word, int n, const std::string& cert_path,
             std::ostream& out) {
  const BraidWord w = parse_braid_word(word);
  const ConjugateProductCertificate upper = biinvariant_upper(w);
  out << "word-norm upper: " << upper.length() << "\n";
  out << "word-norm lower: " << biinvariant_lower(w) << "\n";
  const NuWitness nu = nu_upper(w, n);
  out << "nu[" << n << "] upper: " << nu.length() << "\n";
  out << "nu[" << n << "] lower: " << nu_lower(w, n) << "\n";
  if (!cert_path.empty()) {
    nlohmann::json bundle = nlohmann::json::array();
    bundle.push_back(nlohmann::json::parse(to_json(upper)));
    bundle.push_back(nlohmann::json::parse(to_json(nu)));
    write_file(cert_path, bundle.dump(2));
    out << "certificates: " << cert_path << "\n";
  }
  return kOk;
}

int cmd_cl(const std::string& word, int n, int p, int q,
           const std::string& cert_path, std::ostream& out) {
  const BraidWord w = parse_braid_word(word);
  const CommutatorCertificate upper = cl_upper(w, n, p, q);
  out << "cl upper: " << upper.length() << "\n";
  out << "cl lower: " << cl_lower(w, n, p, q) << "\n";
  out << "K: " << cl_lower_constant(n, p, q) << "\n";
  if (!cert_path.empty()) {
    write_file(cert_path, to_json(upper));
    out << "certificate: " << cert_path << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "cannot read file: " << path << "\n";
    return kDomainError;
  }
  std::stringstream buffer;
  buffer << f.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    err << "certificate parse error: " << e.what() << "\n";
    return kDomainError;
  }
  const auto check_one = [&](const nlohmann::json& item) -> bool {
    return parse_and_validate_certificate(item.dump());
  };
  bool all_valid = true;
  if (j.is_array()) {
    for (const auto& item : j) all_valid = check_one(item) && all_valid;
  } else {
    all_valid = check_one(j);
  }
  if (!all_valid) {
    err << "INVALID certificate: product does not reproduce the target\n";
    return kVerifyError;
  }
  out << "valid\n";
  return kOk;
}

int cmd_defects(int n, int m, int samples, int len, std::uint64_t seed,
                const std::string& csv_path, std::ostream& out,
                std::ostream& err) {
  const DefectReport report = defect_experiment(n, m, samples, len, seed);
  out << "n: " << report.n << "\n";
  out << "m: " << report.m << "\n";
  out << "samples: " << report.samples << "\n";
  out << "len: " << report.len << "\n";
  out << "seed: " << report.seed << "\n";
  out << "max_defect: " << report.max_defect << "\n";
  out << "bound: " << report.bound << "\n";
  out << "violations: " << report.violations.size() << "\n";
  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "sample,defect\n";
    for (std::size_t i = 0; i < report.defects.size(); ++i)
      csv << i << "," << report.defects[i] << "\n";
    write_file(csv_path, csv.str());
  }
  if (!report.passed()) {
    err << "defect bound violated\n";
    return kVerifyError;
  }
  return kOk;
}

std::string growth_csv(const GrowthReport& report) {
  std::ostringstream csv;
  csv << "k,sigma,ratio\n";
  for (std::size_t i = 0; i < report.sigma.size(); ++i) {
    const long long k = static_cast<long long>(i) + 1;
    Rational ratio{report.sigma[i], k};
    const long long g = std::gcd(std::llabs(ratio.num), ratio.den);
    if (g > 1) {
      ratio.num /= g;
      ratio.den /= g;
    }
    csv << k << "," << report.sigma[i] << "," << ratio.str() << "\n";
  }
  return csv.str();
}

void print_growth(const GrowthReport& report, std::ostream& out) {
  for (std::size_t i = 0; i < report.sigma.size(); ++i)
    out << "sigma(h^" << (i + 1) << ") = " << report.sigma[i] << "\n";
  out << "tail quotient: " << report.tail_quotient.str() << "\n";
  out << "half slope: " << report.half_slope.str() << "\n";
  out << "estimators agree: " << (report.estimators_agree ? "yes" : "no") << "\n";
}

int cmd_growth(const std::string& word, int k_max, const std::string& csv_path,
               std::ostream& out) {
  const BraidWord h = parse_braid_word(word);
  const GrowthReport report = stable_growth(h, k_max);
  print_growth(report, out);
  if (!csv_path.empty()) write_file(csv_path, growth_csv(report));
  return kOk;
}

int cmd_search(int max_len, int strands, int k_max, const std::string& csv_path,
               std::ostream& out) {
  const WitnessResult result = witness_search(max_len, strands, k_max);
  out << "witness: " << to_string(result.h) << "\n";
  out << "rate: " << result.rate.str() << "\n";
  print_growth(result.growth, out);
  if (!csv_path.empty()) write_file(csv_path, growth_csv(result.growth));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"braid norms, link signatures, and certificates"};
  app.require_subcommand(1);

  std::string word, cert_path, csv_path, file_path;
  int strands = 0, n = 2, p = 1, q = 1, m = 5, samples = 100, len = 8;
  int k_max = 8, max_len = 6;
  std::uint64_t seed = 1;
  bool emit_matrix = false;

  auto* sig = app.add_subcommand("signature", "signature of a braid closure");
  sig->add_option("word", word)->required();
  sig->add_option("--strands", strands);
  sig->add_flag("--emit-matrix", emit_matrix);

  auto* norm = app.add_subcommand("norm", "biinvariant word norm and nu bounds");
  norm->add_option("word", word)->required();
  norm->add_option("--n", n);
  norm->add_option("--cert", cert_path);

  auto* cl = app.add_subcommand("cl", "commutator length bounds");
  cl->add_option("word", word)->required();
  cl->add_option("--n", n);
  cl->add_option("--p", p);
  cl->add_option("--q", q);
  cl->add_option("--cert", cert_path);

  auto* verify = app.add_subcommand("verify", "re-validate a certificate file");
  verify->add_option("file", file_path)->required();

  auto* defects = app.add_subcommand("defects", "sample the signature defect");
  defects->add_option("--n", n);
  defects->add_option("--m", m);
  defects->add_option("--samples", samples);
  defects->add_option("--len", len);
  defects->add_option("--seed", seed);
  defects->add_option("--csv", csv_path);

  auto* growth = app.add_subcommand("growth", "signature growth along powers");
  growth->add_option("word", word)->required();
  growth->add_option("--kmax", k_max);
  growth->add_option("--csv", csv_path);

  auto* search = app.add_subcommand("search", "search for a growth witness");
  search->add_option("--len", max_len);
  search->add_option("--strands", strands)->default_val(4);
  search->add_option("--kmax", k_max);
  search->add_option("--csv", csv_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return kOk;
    }
    err << e.what() << "\n";
    return kDomainError;
  }

  try {
    if (sig->parsed()) return cmd_signature(word, strands, emit_matrix, out);
    if (norm->parsed()) return cmd_norm(word, n, cert_path, out);
    if (cl->parsed()) return cmd_cl(word, n, p, q, cert_path, out);
    if (verify->parsed()) return cmd_verify(file_path, out, err);
    if (defects->parsed())
      return cmd_defects(n, m, samples, len, seed, csv_path, out, err);
    if (growth->parsed()) return cmd_growth(word, k_max, csv_path, out);
    if (search->parsed())
      return cmd_search(max_len, strands > 0 ? strands : 4, k_max, csv_path, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const budget_exhausted_error& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyError;
  }
  err << "no subcommand\n";
  return kDomainError;
}

}  // namespace braidnorm::cli
