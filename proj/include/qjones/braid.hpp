#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qjones {

/// One letter sigma_generator^{sign} of a braid word; generator is 1-based.
struct Crossing {
  int generator = 1;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A braid on `strands` strands given by a word in the Artin generators.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<Crossing> word);

  int strands() const noexcept { return strands_; }
  const std::vector<Crossing>& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  int writhe() const;

  /// Underlying permutation as 0-based images: transpositions (i, i+1)
  /// composed left to right starting from the identity.
  std::vector<int> permutation() const;

  BraidWord reversed() const;
  /// Every crossing sign flipped.
  BraidWord mirrored() const;
  /// Cancels adjacent sigma_i sigma_i^{-1} pairs until none remain.
  BraidWord freely_reduced() const;

  /// Signed-integer text form, e.g. "1 -2 1 -2".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Crossing> word_;
};

/// Parses whitespace-separated nonzero integers: n > 0 is sigma_n, n < 0 its inverse.
/// Strand count defaults to max|n| + 1. Errors carry the 1-based token index.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// True iff the closure has one component, i.e. the permutation is an m-cycle.
bool closure_is_knot(const BraidWord& b);
/// Throws NotAKnotError unless closure_is_knot(b).
void require_knot(const BraidWord& b);

/// Conjugation g * beta * g^{-1} by the signed generator g (then freely reduced).
struct Conjugate {
  int generator;
};
/// Adds a strand and appends sigma_m (resp. sigma_m^{-1}).
struct StabilizePositive {};
struct StabilizeNegative {};
using MarkovMove = std::variant<Conjugate, StabilizePositive, StabilizeNegative>;

BraidWord markov_move(const BraidWord& b, const MarkovMove& move);

/// One row of a braid corpus file.
struct CorpusEntry {
  std::string name;
  int strands = 0;
  std::string word;
  std::optional<std::string> alexander;
  std::optional<double> volume;

  BraidWord braid() const { return parse_braid(word, strands); }
};

/// Reads a JSON array of {name, strands, word, alexander?, volume?}. Every
/// entry must parse and close to a knot.
std::vector<CorpusEntry> parse_corpus(std::string_view json_text);
std::vector<CorpusEntry> load_corpus(const std::string& path);
std::string corpus_to_json(const std::vector<CorpusEntry>& entries);

/// The built-in corpus (unknot, trefoils, figure-eight, 5_1, 5_2 and Markov variants).
const std::vector<CorpusEntry>& bundled_corpus();

}  // namespace qjones
