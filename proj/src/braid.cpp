#include "qjones/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "corpus_data.hpp"

#include "qjones/error.hpp"

namespace qjones {

BraidWord::BraidWord(int strands, std::vector<Crossing> word) : strands_(strands), word_(std::move(word)) {
  if (strands_ < 1) throw DomainError("a braid needs at least one strand");
  for (const auto& c : word_) {
    if (c.generator < 1 || c.generator > strands_ - 1) {
      throw DomainError("generator sigma_" + std::to_string(c.generator) + " out of range for " +
                        std::to_string(strands_) + " strands");
    }
    if (c.sign != 1 && c.sign != -1) throw DomainError("crossing sign must be +1 or -1");
  }
}

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& c : word_) w += c.sign;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> perm(static_cast<std::size_t>(strands_));
  for (int i = 0; i < strands_; ++i) perm[i] = i;
  for (const auto& c : word_) std::swap(perm[c.generator - 1], perm[c.generator]);
  return perm;
}

BraidWord BraidWord::reversed() const {
  std::vector<Crossing> w(word_.rbegin(), word_.rend());
  return {strands_, std::move(w)};
}

BraidWord BraidWord::mirrored() const {
  std::vector<Crossing> w = word_;
  for (auto& c : w) c.sign = -c.sign;
  return {strands_, std::move(w)};
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<Crossing> out;
  for (const auto& c : word_) {
    if (!out.empty() && out.back().generator == c.generator && out.back().sign == -c.sign) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return {strands_, std::move(out)};
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& c : word_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c.sign * c.generator);
  }
  return out;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<Crossing> word;
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t index = 0;
  int max_generator = 0;
  while (in >> token) {
    ++index;
    char* end = nullptr;
    const long value = std::strtol(token.c_str(), &end, 10);
    if (end == token.c_str() || *end != '\0') throw ParseError("braid: '" + token + "' is not an integer", index);
    if (value == 0) throw ParseError("braid: generator 0 is invalid", index);
    const int generator = static_cast<int>(std::labs(value));
    if (strands && generator >= *strands) {
      throw ParseError("braid: generator " + std::to_string(generator) + " needs more than " +
                           std::to_string(*strands) + " strands",
                       index);
    }
    max_generator = std::max(max_generator, generator);
    word.push_back({generator, value > 0 ? 1 : -1});
  }
  if (!strands && word.empty()) throw ParseError("braid: empty word without a strand count", 0);
  if (strands && *strands < 1) throw ParseError("braid: strand count must be positive", 0);
  return {strands.value_or(max_generator + 1), std::move(word)};
}

bool closure_is_knot(const BraidWord& b) {
  const auto perm = b.permutation();
  int length = 0;
  int i = 0;
  do {
    i = perm[i];
    ++length;
  } while (i != 0);
  return length == b.strands();
}

void require_knot(const BraidWord& b) {
  if (!closure_is_knot(b)) throw NotAKnotError("closure is not a knot: '" + b.to_string() + "'");
}

BraidWord markov_move(const BraidWord& b, const MarkovMove& move) {
  return std::visit(
      [&](const auto& m) -> BraidWord {
        using M = std::decay_t<decltype(m)>;
        std::vector<Crossing> w = b.word();
        if constexpr (std::is_same_v<M, Conjugate>) {
          const int g = std::abs(m.generator);
          if (g < 1 || g > b.strands() - 1) throw DomainError("conjugating generator out of range");
          const int s = m.generator > 0 ? 1 : -1;
          w.insert(w.begin(), Crossing{g, s});
          w.push_back(Crossing{g, -s});
          return BraidWord(b.strands(), std::move(w)).freely_reduced();
        } else {
          const int sign = std::is_same_v<M, StabilizePositive> ? 1 : -1;
          w.push_back(Crossing{b.strands(), sign});
          return BraidWord(b.strands() + 1, std::move(w));
        }
      },
      move);
}

// ---------------------------------------------------------------------------
// Corpus files

std::vector<CorpusEntry> parse_corpus(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("corpus: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw ParseError("corpus: top level must be an array", 0);
  std::vector<CorpusEntry> out;
  std::size_t index = 0;
  for (const auto& item : doc) {
    ++index;
    try {
      CorpusEntry e;
      e.name = item.at("name").get<std::string>();
      e.strands = item.at("strands").get<int>();
      e.word = item.at("word").get<std::string>();
      if (item.contains("alexander") && !item["alexander"].is_null()) e.alexander = item["alexander"].get<std::string>();
      if (item.contains("volume") && !item["volume"].is_null()) e.volume = item["volume"].get<double>();
      if (!closure_is_knot(e.braid())) throw NotAKnotError("corpus entry '" + e.name + "' does not close to a knot");
      out.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("corpus: ") + ex.what(), index);
    }
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::string corpus_to_json(const std::vector<CorpusEntry>& entries) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json item{{"name", e.name}, {"strands", e.strands}, {"word", e.word}};
    if (e.alexander) item["alexander"] = *e.alexander;
    if (e.volume) item["volume"] = *e.volume;
    doc.push_back(std::move(item));
  }
  return doc.dump(2);
}

const std::vector<CorpusEntry>& bundled_corpus() {
  static const std::vector<CorpusEntry> corpus = parse_corpus(detail::kBundledCorpus);
  return corpus;
}

}  // namespace qjones
