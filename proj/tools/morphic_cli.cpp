// Command line front end: prove, check, verify-prefix, subseq, search.
//
// Exit codes: 0 success, 1 negative outcome (proof attempt failed, check
// rejected, prefixes differ), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "morphic/codec.hpp"
#include "morphic/proofdoc.hpp"
#include "morphic/prover.hpp"
#include "morphic/repsearch.hpp"
#include "morphic/subseq.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw morphic::Error(morphic::ErrorKind::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ProveArgs {
  std::string file;
  bool basic = false;
  std::string format = "text";
  double tol = morphic::kDefaultScalingTolerance;
  std::size_t max_pair_len = 10;
  std::string emit;
};

int run_prove(const ProveArgs& a) {
  const auto problem = morphic::parse_problem(read_file(a.file));
  morphic::ProverConfig config;
  config.tolerance = a.tol;
  config.max_pair_len = a.max_pair_len;
  auto result = a.basic ? morphic::prove_basic(problem, config) : morphic::prove_general(problem, config);
  if (!result) {
    std::cout << "FAILED " << morphic::to_string(result.failure().stage) << ": " << result.failure().detail << "\n";
    return kExitNegative;
  }
  const auto& proof = result.value();
  if (!a.emit.empty()) {
    std::ofstream out(a.emit, std::ios::binary);
    if (!out) throw morphic::Error(morphic::ErrorKind::parse_error, "cannot write " + a.emit);
    out << morphic::serialize_proof(proof);
  }
  std::cout << (a.format == "latex" ? morphic::render_latex(proof) : morphic::render_text(proof));
  return kExitOk;
}

int run_check(const std::string& file) {
  const auto proof = morphic::parse_proof(read_file(file));
  const auto report = morphic::check_proof(proof);
  if (report.ok()) {
    std::cout << "ok: " << proof.table.size() << " pairs, exponents " << proof.p << " " << proof.q << "\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) {
    std::cout << morphic::to_string(v.condition) << " pair " << v.pair_index << ": " << v.detail << "\n";
  }
  return kExitNegative;
}

int run_verify_prefix(const std::string& file, std::size_t n) {
  const auto problem = morphic::parse_problem(read_file(file));
  const auto left = morphic::coded_prefix(problem.lhs, n);
  const auto right = morphic::coded_prefix(problem.rhs, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (left[i] != right[i]) {
      std::cout << "mismatch at position " << i << "\n";
      return kExitNegative;
    }
  }
  std::cout << "equal\n";
  return kExitOk;
}

// File holds one (morphism, coding) half of a problem file.
morphic::MorphicRep read_rep_file(const std::string& path) {
  morphic::detail::LineReader in(read_file(path));
  auto half = morphic::detail::read_half(in, "f");
  if (!in.done()) in.fail("unexpected extra input");
  morphic::Coding tau = morphic::Coding::from_digits(morphic::to_string(half.coding));
  return morphic::MorphicRep(std::move(half.morphism), std::move(tau), 0);
}

int run_encode_blocks(const std::string& path) {
  const auto rep = read_rep_file(path);
  const auto k = morphic::odd_length_power(rep.morphism);
  if (!k) {
    std::cerr << "no power of the morphism up to 12 has only odd-length images\n";
    return kExitNegative;
  }
  if (*k > 1) std::cerr << "upscaled to f^" << *k << "\n";
  const auto enc = morphic::block_encode(morphic::morphism_power(rep.morphism, *k));
  // Compose with the input coding so the halves encode even/odd of tau(f^inf(0)).
  auto compose = [&](const morphic::Coding& c) {
    std::vector<morphic::Symbol> map;
    for (auto s : c.map()) map.push_back(rep.coding(s));
    return morphic::Coding(rep.coding.target_size(), std::move(map));
  };
  std::cout << morphic::format_half(enc.morphism, compose(enc.first))
            << morphic::format_half(enc.morphism, compose(enc.second));
  return kExitOk;
}

int run_subseq_builtin(const std::string& name, const std::string& op, std::size_t n) {
  const auto rep = name == "spir" ? morphic::spir_rep() : morphic::fib_rep();
  if (name != "fib" && name != "spir") {
    throw morphic::Error(morphic::ErrorKind::parse_error, "subseq builtin must be fib or spir");
  }
  const auto w = op == "even" ? morphic::even_prefix(rep, n) : morphic::odd_prefix(rep, n);
  std::cout << morphic::to_string(w) << "\n";
  return kExitOk;
}

struct SearchArgs {
  std::string target;
  std::size_t alphabet = 1;
  std::size_t max_len = 2;
  std::size_t prefix = 40;
  unsigned jobs = 1;
};

int run_search(const SearchArgs& a) {
  const morphic::Word target = morphic::is_builtin_sequence(a.target)
                                   ? morphic::builtin_sequence(a.target, a.prefix)
                                   : morphic::parse_digit_sequence(read_file(a.target));
  const auto found = morphic::search(morphic::SearchSpec{a.alphabet, a.max_len, a.prefix, target}, a.jobs);
  std::cout << found.size() << " representations\n";
  for (const auto& r : found) {
    std::cout << "complexity " << r.complexity << "\n" << morphic::format_half(r.rep.morphism, r.rep.coding);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prove equality of morphic sequences"};
  app.require_subcommand(1);

  ProveArgs prove;
  auto* prove_cmd = app.add_subcommand("prove", "Prove tau(f^inf(0)) = rho(g^inf(0)) for a problem file");
  prove_cmd->add_option("file", prove.file, "Problem file")->required();
  prove_cmd->add_flag("--basic", prove.basic, "Only try the fixed choice v_i = g(i)");
  prove_cmd->add_option("--format", prove.format, "text or latex")->check(CLI::IsMember({"text", "latex"}));
  prove_cmd->add_option("--tol", prove.tol, "Log-space eigenvalue tolerance")->check(CLI::PositiveNumber);
  prove_cmd->add_option("--max-pair-len", prove.max_pair_len, "Longest safe pair considered")
      ->check(CLI::PositiveNumber);
  prove_cmd->add_option("--emit-proof", prove.emit, "Also write the proof object to this file");

  std::string check_file;
  auto* check_cmd = app.add_subcommand("check", "Re-check a serialized proof");
  check_cmd->add_option("prooffile", check_file, "Proof file")->required();

  std::string verify_file;
  std::size_t verify_n = 0;
  auto* verify_cmd = app.add_subcommand("verify-prefix", "Compare the first N coded symbols of both sides");
  verify_cmd->add_option("file", verify_file, "Problem file")->required();
  verify_cmd->add_option("--n", verify_n, "Prefix length")->required();

  std::string builtin;
  std::string op = "even";
  std::size_t subseq_n = 0;
  std::string encode_file;
  auto* subseq_cmd = app.add_subcommand("subseq", "Even/odd subsequences and their block encoding");
  auto* builtin_opt = subseq_cmd->add_option("--builtin", builtin, "fib or spir");
  subseq_cmd->add_option("--op", op, "even or odd")->check(CLI::IsMember({"even", "odd"}));
  subseq_cmd->add_option("--n", subseq_n, "Prefix length");
  auto* encode_opt = subseq_cmd->add_option("--encode-blocks", encode_file, "File with one morphism and coding");
  builtin_opt->excludes(encode_opt);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Brute-force representations of a target prefix");
  search_cmd->add_option("--target", search.target, "Digit file or builtin (fib, even-fib, odd-fib, spir)")
      ->required();
  search_cmd->add_option("--alphabet", search.alphabet, "Alphabet size n")->required();
  search_cmd->add_option("--maxlen", search.max_len, "Maximal image length k")->required();
  search_cmd->add_option("--prefix", search.prefix, "Number of target symbols to match")->required();
  search_cmd->add_option("--jobs", search.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (*prove_cmd) return run_prove(prove);
    if (*check_cmd) return run_check(check_file);
    if (*verify_cmd) return run_verify_prefix(verify_file, verify_n);
    if (*subseq_cmd) {
      if (*encode_opt) return run_encode_blocks(encode_file);
      if (*builtin_opt) return run_subseq_builtin(builtin, op, subseq_n);
      std::cerr << "subseq needs --builtin or --encode-blocks\n\n" << subseq_cmd->help();
      return kExitInput;
    }
    if (*search_cmd) return run_search(search);
  } catch (const morphic::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
