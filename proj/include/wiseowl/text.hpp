#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wiseowl {

// Lowercased maximal alphanumeric runs, in order. Input is UTF-8.
std::vector<std::string> tokenize(std::string_view text);

// Cuts `text` right after its `max_tokens`-th token.
std::string_view truncate_tokens(std::string_view text, std::size_t max_tokens);

// The pinned English stopword list (179 words).
const std::vector<std::string_view> &stopwords();
bool is_stopword(std::string_view token);

inline constexpr std::size_t kTargetDefinitionTokens = 10;

// Mean of completeness (token count against the target length, capped at 1)
// and quality (share of non-stopword tokens).
double adequacy(std::span<const std::string> tokens);

}  // namespace wiseowl
