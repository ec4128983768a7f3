#include <fstream>
#include <initializer_list>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ntl/enumerate.hpp"
#include "ntl/perm.hpp"
#include "ntl/runs.hpp"
#include "ntl/verify.hpp"

namespace {

// Exit codes: 0 success, 1 verification/conversion failure, 2 usage/parse
// error.
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ConversionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ntl::NtlMonomial monomial_from_text(const std::string& text, int rank) {
  const ntl::Word raw = ntl::parse_word(text, rank);
  const auto canonical = ntl::canonical_form(raw);
  if (!canonical)
    throw ConversionFailure("word \"" + ntl::format_word(raw) +
                            "\" is zero in the algebra");
  if (!(canonical->word() == raw))
    throw ConversionFailure("word \"" + ntl::format_word(raw) +
                            "\" is not canonical; its canonical form is \"" +
                            ntl::format_monomial(*canonical) + "\"");
  return *canonical;
}

nlohmann::json profile_json(const ntl::NtlMonomial& m) {
  const ntl::RunSequence runs = ntl::monomial_to_runs(m);
  nlohmann::json runs_json = nlohmann::json::array();
  for (const ntl::RunPair& pair : runs.pairs())
    runs_json.push_back({pair.peak, pair.length});

  nlohmann::json j;
  j["n"] = m.rank();
  j["word"] = m.word().letters();
  j["degree"] = m.degree();
  j["runs"] = runs_json;
  j["dyck"] = ntl::format_dyck(ntl::runs_to_dyck(runs));
  j["perm"] = ntl::monomial_to_permutation(m).images();
  return j;
}

void require_format(const std::string& format,
                    std::initializer_list<const char*> allowed) {
  for (const char* candidate : allowed)
    if (format == candidate) return;
  throw UsageFailure("--format " + format + " is not supported here");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << content;
}

std::string distribution_row(const ntl::DegreeDistribution& distribution) {
  std::string row;
  for (std::uint64_t count : distribution.counts) {
    if (!row.empty()) row += ',';
    row += std::to_string(count);
  }
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nil-Temperley-Lieb algebra of a path graph: normal forms, "
               "basis enumeration, Dyck-path and permutation bijections"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "output format (default: text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output_path, "write output to a file");

  int rank = -1;
  std::string word_text;
  auto* normalize = app.add_subcommand(
      "normalize", "print the canonical form of a word, or 0 if it is zero");
  normalize->add_option("-n,--rank", rank, "number of path vertices")
      ->required()
      ->check(CLI::NonNegativeNumber);
  normalize->add_option("word", word_text, "word, e.g. \"3 1 2\" or x3x1x2")
      ->required();

  int degree_filter = -1;
  auto* basis = app.add_subcommand(
      "basis", "list the basis monomials in lexicographic order");
  basis->add_option("-n,--rank", rank, "number of path vertices")
      ->required()
      ->check(CLI::NonNegativeNumber);
  basis->add_option("--degree", degree_filter,
                    "only monomials of this degree")
      ->check(CLI::NonNegativeNumber);

  auto* dim =
      app.add_subcommand("dim", "print the dimension of the algebra of P_n");
  dim->add_option("-n,--rank", rank, "number of path vertices")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* triangle = app.add_subcommand(
      "triangle", "degree distributions for n = 0..N, one row per rank");
  triangle->add_option("-n,--n-max", rank, "largest rank to include")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string direction;
  std::string input_text;
  std::string render = "none";
  auto* convert = app.add_subcommand(
      "convert", "convert between monomials, Dyck paths, and permutations");
  convert->add_option("direction", direction, "conversion to perform")
      ->required()
      ->check(CLI::IsMember({"to-dyck", "from-dyck", "to-perm", "from-perm"}));
  convert->add_option("input", input_text, "object in the source format")
      ->required();
  convert->add_option("-n,--rank", rank,
                      "rank (required for to-*, checked for from-*)")
      ->check(CLI::NonNegativeNumber);
  convert
      ->add_option("--render", render,
                   "with a Dyck path involved, print a drawing instead")
      ->check(CLI::IsMember({"none", "ascii", "svg"}));

  bool with_oracle = false;
  auto* verify = app.add_subcommand(
      "verify", "run the cross-check suite for P_n; exit 0 iff all pass");
  verify->add_option("-n,--rank", rank, "number of path vertices")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--oracle", with_oracle,
                   "also run the brute-force word-space checks (rank <= 5)");

  for (CLI::App* sub : {normalize, basis, dim, triangle, convert, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::ostringstream out;

    if (*normalize) {
      require_format(format, {"text"});
      const auto canonical =
          ntl::canonical_form(ntl::parse_word(word_text, rank));
      out << (canonical ? ntl::format_monomial(*canonical) : "0") << "\n";
    } else if (*basis) {
      require_format(format, {"text", "json"});
      nlohmann::json rows = nlohmann::json::array();
      for (const ntl::NtlMonomial& m : ntl::enumerate_basis(rank)) {
        if (degree_filter >= 0 && m.degree() != degree_filter) continue;
        if (format == "json")
          rows.push_back(m.word().letters());
        else
          out << ntl::format_monomial(m) << "\n";
      }
      if (format == "json") out << rows.dump() << "\n";
    } else if (*dim) {
      require_format(format, {"text"});
      out << ntl::dimension(rank) << "\n";
    } else if (*triangle) {
      require_format(format, {"text", "csv", "json"});
      nlohmann::json rows = nlohmann::json::array();
      for (int n = 0; n <= rank; ++n) {
        const ntl::DegreeDistribution distribution =
            ntl::degree_distribution(n);
        if (format == "json")
          rows.push_back(distribution.counts);
        else
          out << distribution_row(distribution) << "\n";
      }
      if (format == "json") out << rows.dump() << "\n";
    } else if (*convert) {
      require_format(format, {"text", "json"});
      if (render != "none" && format == "json")
        throw UsageFailure("--render cannot be combined with --format json");

      ntl::NtlMonomial m = [&] {
        if (direction == "to-dyck" || direction == "to-perm") {
          if (rank < 0)
            throw UsageFailure("-n is required for " + direction);
          return monomial_from_text(input_text, rank);
        }
        if (direction == "from-dyck") {
          const ntl::DyckPath path = ntl::parse_dyck(input_text);
          if (rank >= 0 && rank != path.semilength() - 1)
            throw ntl::InputError("path has semilength " +
                                  std::to_string(path.semilength()) +
                                  ", which does not match rank " +
                                  std::to_string(rank));
          return ntl::runs_to_monomial(ntl::dyck_to_runs(path));
        }
        const ntl::Permutation p = ntl::parse_permutation(input_text);
        if (rank >= 0 && rank != p.size() - 1)
          throw ntl::InputError("permutation acts on " +
                                std::to_string(p.size()) +
                                " elements, which does not match rank " +
                                std::to_string(rank));
        return ntl::permutation_to_monomial(p);
      }();

      if (format == "json") {
        out << profile_json(m).dump() << "\n";
      } else if (render != "none") {
        const ntl::DyckPath path = ntl::runs_to_dyck(ntl::monomial_to_runs(m));
        out << (render == "ascii" ? ntl::ascii_mountain(path)
                                  : ntl::svg_mountain(path));
      } else if (direction == "to-dyck") {
        out << ntl::format_dyck(ntl::runs_to_dyck(ntl::monomial_to_runs(m)))
            << "\n";
      } else if (direction == "to-perm") {
        out << ntl::format_permutation(ntl::monomial_to_permutation(m))
            << "\n";
      } else {
        out << ntl::format_monomial(m) << "\n";
      }
    } else if (*verify) {
      require_format(format, {"text"});
      const bool ok = ntl::verify_claims(rank, {.with_oracle = with_oracle},
                                         out, std::cerr);
      write_output(output_path, out.str());
      return ok ? 0 : kExitFailure;
    }

    write_output(output_path, out.str());
    return 0;
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ntl::Not321Avoiding& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ConversionFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ntl::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
