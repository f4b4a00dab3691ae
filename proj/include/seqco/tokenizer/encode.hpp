#pragma once

#include <vector>

#include "seqco/problems/features.hpp"
#include "seqco/problems/types.hpp"
#include "seqco/tokenizer/vocab.hpp"

namespace seqco::tok {

enum class TokenRole : std::uint8_t {
  kPrefix = 0,
  kState,
  kSplit,
  kAction,
  kPad,
};

struct TokenSequence {
  std::vector<TokenId> ids;
  std::vector<TokenRole> roles;

  std::size_t size() const { return ids.size(); }
  void push(TokenId id, TokenRole role) {
    ids.push_back(id);
    roles.push_back(role);
  }
  void append(const TokenSequence& other) {
    ids.insert(ids.end(), other.ids.begin(), other.ids.end());
    roles.insert(roles.end(), other.roles.begin(), other.roles.end());
  }
};

TokenId encode_value(const problems::TaggedValue& v);

/// Static prefix in layout order, closed by the prefix splitter.
TokenSequence encode_prefix(const problems::ProblemInstance& instance);

/// One step block: state tokens, action splitter, action token.
TokenSequence encode_step(const std::vector<problems::TaggedValue>& state_values,
                          int action);

/// Human-readable decode of one id (for the tokenize-inspect command).
std::string describe_token(TokenId id, TokenRole role);

}  // namespace seqco::tok
