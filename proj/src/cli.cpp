#include "bijenum/cli.hpp"

#include <CLI11.hpp>
#include <limits>
#include <string_view>
#include <utility>

#include "bijenum/alphabet.hpp"
#include "bijenum/bignum.hpp"
#include "bijenum/diagonal.hpp"
#include "bijenum/errors.hpp"
#include "bijenum/growth.hpp"
#include "bijenum/numeration.hpp"
#include "bijenum/pairing.hpp"
#include "bijenum/real_codec.hpp"
#include "bijenum/rewriting.hpp"

namespace bijenum::cli {

namespace {

// Argument-level mistakes that should exit 1 rather than 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Nat parse_nat(const std::string& text) {
  if (text.empty()) throw UsageError("expected a non-negative decimal integer");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw UsageError("\"" + text + "\" is not a non-negative decimal integer");
    }
  }
  return Nat(text);
}

std::size_t parse_count(const std::string& text) {
  const Nat n = parse_nat(text);
  if (n > std::numeric_limits<std::size_t>::max()) {
    throw UsageError("\"" + text + "\" is too large");
  }
  return static_cast<std::size_t>(n);
}

SubstitutionCode code_from_map_spec(const std::string& spec) {
  std::vector<std::string> symbols;
  std::vector<std::string> codewords;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string::npos) comma = spec.size();
    const std::string_view entry(spec.data() + start, comma - start);
    const std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == entry.size()) {
      throw UsageError("--map entry \"" + std::string(entry) +
                       "\" must look like symbol=codeword");
    }
    if (eq != 1) {
      throw UsageError("--map symbols must be single characters");
    }
    symbols.emplace_back(entry.substr(0, eq));
    codewords.emplace_back(entry.substr(eq + 1));
    start = comma + 1;
  }
  return SubstitutionCode(Alphabet::make(std::move(symbols)), std::move(codewords));
}

SubstitutionCode resolve_code(const std::string& map_spec, const std::string& alphabet_chars) {
  const bool has_map = !map_spec.empty();
  const bool has_alphabet = !alphabet_chars.empty();
  if (has_map == has_alphabet) {
    throw UsageError("exactly one of --map or --alphabet is required");
  }
  if (has_map) return code_from_map_spec(map_spec);
  return SubstitutionCode::make(Alphabet::from_characters(alphabet_chars));
}

std::string elide(const std::string& text, bool full) {
  if (full || text.size() <= 40) return text;
  return text.substr(0, 16) + "..." + text.substr(text.size() - 16);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bijective string/integer enumerations, pairing, and codecs"};
  app.name("bijenum");
  app.require_subcommand(1);

  std::string alphabet_chars;
  std::string map_spec;
  std::string text_arg;
  std::string x_arg, y_arg, z_arg;
  std::string table_path;
  std::string n_arg;
  std::string steps_arg;
  bool full_output = false;

  auto* index_cmd =
      app.add_subcommand("index", "shortlex position of a string over an alphabet");
  index_cmd->add_option("--alphabet", alphabet_chars, "ordered symbol characters, e.g. 01")
      ->required();
  index_cmd->add_option("string", text_arg, "input string (may be empty)")->required();
  index_cmd->callback([&] {
    auto a = Alphabet::from_characters(alphabet_chars);
    out << shortlex_index(SymbolString::parse(a, text_arg)).str() << "\n";
  });

  auto* string_cmd =
      app.add_subcommand("string", "string at a shortlex position over an alphabet");
  string_cmd->add_option("--alphabet", alphabet_chars, "ordered symbol characters")
      ->required();
  string_cmd->add_option("n", z_arg, "position, non-negative decimal")->required();
  string_cmd->callback([&] {
    auto a = Alphabet::from_characters(alphabet_chars);
    out << shortlex_string(parse_nat(z_arg), a).str() << "\n";
  });

  auto* enum_cmd =
      app.add_subcommand("enumerate", "first strings of the shortlex enumeration");
  enum_cmd->add_option("--alphabet", alphabet_chars, "ordered symbol characters")
      ->required();
  enum_cmd->add_option("limit", z_arg, "number of strings to print")->required();
  enum_cmd->callback([&] {
    auto a = Alphabet::from_characters(alphabet_chars);
    ShortlexEnumerator stream(a);
    const Nat limit = parse_nat(z_arg);
    for (Nat i = 0; i < limit; ++i) out << stream.next().str() << "\n";
  });

  auto* pair_cmd = app.add_subcommand("pair", "Cantor pairing of two integers");
  pair_cmd->add_option("x", x_arg, "first component")->required();
  pair_cmd->add_option("y", y_arg, "second component")->required();
  pair_cmd->callback(
      [&] { out << pair(parse_nat(x_arg), parse_nat(y_arg)).str() << "\n"; });

  auto* unpair_cmd = app.add_subcommand("unpair", "inverse Cantor pairing");
  unpair_cmd->add_option("z", z_arg, "paired value")->required();
  unpair_cmd->callback([&] {
    auto [x, y] = unpair(parse_nat(z_arg));
    out << x.str() << " " << y.str() << "\n";
  });

  auto* rewrite_cmd =
      app.add_subcommand("rewrite", "substitution-rewrite a string into binary");
  rewrite_cmd->add_option("--map", map_spec, "explicit table, e.g. m=0,w=1");
  rewrite_cmd->add_option("--alphabet", alphabet_chars,
                          "source alphabet; uses the canonical block code");
  rewrite_cmd->add_option("string", text_arg, "input string")->required();
  rewrite_cmd->callback([&] {
    const SubstitutionCode code = resolve_code(map_spec, alphabet_chars);
    out << rewrite(SymbolString::parse(code.source(), text_arg), code).str() << "\n";
  });

  auto* unrewrite_cmd =
      app.add_subcommand("unrewrite", "decode a substitution-rewritten binary string");
  unrewrite_cmd->add_option("--map", map_spec, "explicit table, e.g. m=0,w=1");
  unrewrite_cmd->add_option("--alphabet", alphabet_chars,
                            "source alphabet; uses the canonical block code");
  unrewrite_cmd->add_option("bits", text_arg, "binary string")->required();
  unrewrite_cmd->callback([&] {
    const SubstitutionCode code = resolve_code(map_spec, alphabet_chars);
    out << unrewrite(SymbolString::parse(Alphabet::binary(), text_arg), code).str()
        << "\n";
  });

  auto* real_cmd = app.add_subcommand("real", "decimal representation codec");
  real_cmd->require_subcommand(1);
  auto* encode_cmd = real_cmd->add_subcommand("encode", "encode [sign]digits*.digits*");
  encode_cmd->add_option("text", text_arg, "decimal representation")->required();
  encode_cmd->callback([&] { out << encode_real(parse_decimal(text_arg)).str() << "\n"; });
  auto* decode_cmd = real_cmd->add_subcommand("decode", "decode an encoded representation");
  decode_cmd->add_option("n", z_arg, "encoded value")->required();
  decode_cmd->callback([&] { out << render(decode_real(parse_nat(z_arg))) << "\n"; });

  auto* diagonal_cmd =
      app.add_subcommand("diagonal", "diagonal string of a bit table, with witnesses");
  diagonal_cmd->add_option("--table", table_path, "file: one 0/1 row per line")->required();
  diagonal_cmd->add_option("--n", n_arg, "diagonal length")->required();
  diagonal_cmd->callback([&] {
    const Enumeration table = Enumeration::load_file(table_path);
    const std::size_t n = parse_count(n_arg);
    out << diagonal_prefix(table, n).str() << "\n";
    for (const DiagonalWitness& w : verify_diagonal(table, n)) {
      out << w.row << " " << w.position << " " << (w.row_bit ? 1 : 0) << " "
          << (w.diagonal_bit ? 1 : 0) << "\n";
    }
  });

  auto* extend_cmd =
      app.add_subcommand("extend", "iteratively extend an injection with fresh strings");
  extend_cmd->add_option("--steps", steps_arg, "number of extension steps")->required();
  extend_cmd->callback([&] {
    const std::size_t steps = parse_count(steps_arg);
    std::vector<std::string> labels;
    labels.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) labels.push_back("q" + std::to_string(i));
    const InjectionState state = run_extension(labels, steps);
    for (const auto& [label, assigned] : state.assignments()) {
      out << label << "\t" << assigned.str() << "\n";
    }
  });

  auto* grow_cmd = app.add_subcommand("grow", "run the concatenation growth process");
  grow_cmd->add_option("--steps", steps_arg, "number of growth steps")->required();
  grow_cmd->add_flag("--full", full_output, "print full strings, never elided");
  grow_cmd->callback([&] {
    const std::size_t steps = parse_count(steps_arg);
    run_growth(steps, [&](const GrowthState& g) {
      out << g.count.str() << "\t" << g.sup.length() << "\t"
          << elide(g.sup.str(), full_output) << "\n";
    });
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bijenum");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace bijenum::cli
