#include "wiseowl/text.hpp"

#include <locale.h>
#include <wctype.h>

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace wiseowl {

namespace {

// UTF-8 classification through the C.UTF-8 locale when the system has it.
class Classifier {
 public:
  Classifier() {
    loc_ = newlocale(LC_CTYPE_MASK, "C.UTF-8", static_cast<locale_t>(0));
    if (!loc_) {
      loc_ = newlocale(LC_CTYPE_MASK, "C.utf8", static_cast<locale_t>(0));
    }
  }
  ~Classifier() {
    if (loc_) freelocale(loc_);
  }
  Classifier(const Classifier &) = delete;
  Classifier &operator=(const Classifier &) = delete;

  bool alnum(std::uint32_t cp) const {
    if (cp < 0x80) {
      return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
             (cp >= '0' && cp <= '9');
    }
    if (!loc_) return true;
    return iswalnum_l(static_cast<wint_t>(cp), loc_) != 0;
  }

  std::uint32_t lower(std::uint32_t cp) const {
    if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
    if (!loc_) return cp;
    return static_cast<std::uint32_t>(towlower_l(static_cast<wint_t>(cp), loc_));
  }

 private:
  locale_t loc_ = static_cast<locale_t>(0);
};

const Classifier &classifier() {
  static const Classifier c;
  return c;
}

// Decodes one code point starting at text[i]; invalid bytes decode as
// U+FFFD and advance by one.
std::uint32_t decode(std::string_view text, std::size_t &i) {
  auto b = static_cast<unsigned char>(text[i]);
  std::size_t len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3
                               : (b >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || i + len > text.size()) {
    ++i;
    return 0xFFFD;
  }
  std::uint32_t cp = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
  for (std::size_t k = 1; k < len; ++k) {
    auto c = static_cast<unsigned char>(text[i + k]);
    if ((c >> 6) != 0x2) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  i += len;
  return cp;
}

void encode(std::string &out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  const auto &cls = classifier();
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    std::uint32_t cp = decode(text, i);
    if (cls.alnum(cp)) {
      encode(current, cls.lower(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string_view truncate_tokens(std::string_view text, std::size_t max_tokens) {
  const auto &cls = classifier();
  std::size_t seen = 0;
  bool in_token = false;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    bool alnum = cls.alnum(decode(text, i));
    if (alnum && !in_token) {
      if (seen == max_tokens) return text.substr(0, start);
      ++seen;
    }
    in_token = alnum;
  }
  return text;
}

const std::vector<std::string_view> &stopwords() {
  // NLTK English stopword list, pinned.
  static const std::vector<std::string_view> kWords = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
      "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
      "hers", "herself", "it", "it's", "its", "itself", "they", "them",
      "their", "theirs", "themselves", "what", "which", "who", "whom", "this",
      "that", "that'll", "these", "those", "am", "is", "are", "was", "were",
      "be", "been", "being", "have", "has", "had", "having", "do", "does",
      "did", "doing", "a", "an", "the", "and", "but", "if", "or", "because",
      "as", "until", "while", "of", "at", "by", "for", "with", "about",
      "against", "between", "into", "through", "during", "before", "after",
      "above", "below", "to", "from", "up", "down", "in", "out", "on", "off",
      "over", "under", "again", "further", "then", "once", "here", "there",
      "when", "where", "why", "how", "all", "any", "both", "each", "few",
      "more", "most", "other", "some", "such", "no", "nor", "not", "only",
      "own", "same", "so", "than", "too", "very", "s", "t", "can", "will",
      "just", "don", "don't", "should", "should've", "now", "d", "ll", "m",
      "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't",
      "didn", "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn",
      "hasn't", "haven", "haven't", "isn", "isn't", "ma", "mightn",
      "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
      "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won",
      "won't", "wouldn", "wouldn't"};
  return kWords;
}

bool is_stopword(std::string_view token) {
  static const std::unordered_set<std::string_view> kSet(stopwords().begin(),
                                                         stopwords().end());
  return kSet.count(token) > 0;
}

double adequacy(std::span<const std::string> tokens) {
  if (tokens.empty()) return 0.0;
  const double n = static_cast<double>(tokens.size());
  const double completeness =
      std::min(n / static_cast<double>(kTargetDefinitionTokens), 1.0);
  const auto content = std::count_if(tokens.begin(), tokens.end(),
                                     [](const std::string &t) { return !is_stopword(t); });
  const double quality = static_cast<double>(content) / n;
  return (completeness + quality) / 2.0;
}

}  // namespace wiseowl
