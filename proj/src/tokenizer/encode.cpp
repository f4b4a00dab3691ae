#include "seqco/tokenizer/encode.hpp"

#include <cstdio>

namespace seqco::tok {

TokenId encode_value(const problems::TaggedValue& v) {
  return v.tag == problems::TaggedValue::Tag::kDiscrete
             ? discrete_value_to_token(v.value)
             : continuous_to_token(v.value);
}

TokenSequence encode_prefix(const problems::ProblemInstance& instance) {
  const auto values = problems::static_prefix_values(instance);
  TokenSequence seq;
  seq.ids.reserve(values.size() + 1);
  seq.roles.reserve(values.size() + 1);
  for (const auto& v : values) seq.push(encode_value(v), TokenRole::kPrefix);
  seq.push(VocabSpec::kPrefixSplit, TokenRole::kSplit);
  return seq;
}

TokenSequence encode_step(const std::vector<problems::TaggedValue>& state_values,
                          int action) {
  TokenSequence seq;
  seq.ids.reserve(state_values.size() + 2);
  seq.roles.reserve(state_values.size() + 2);
  for (const auto& v : state_values) {
    seq.push(encode_value(v), TokenRole::kState);
  }
  seq.push(VocabSpec::kActionSplit, TokenRole::kSplit);
  seq.push(discrete_to_token(action), TokenRole::kAction);
  return seq;
}

std::string describe_token(TokenId id, TokenRole role) {
  const char* role_name = "";
  switch (role) {
    case TokenRole::kPrefix: role_name = "prefix"; break;
    case TokenRole::kState: role_name = "state"; break;
    case TokenRole::kSplit: role_name = "split"; break;
    case TokenRole::kAction: role_name = "action"; break;
    case TokenRole::kPad: role_name = "pad"; break;
  }
  char buf[96];
  if (id == VocabSpec::kActionSplit) {
    std::snprintf(buf, sizeof(buf), "%4d  %-6s  <|>", id, role_name);
  } else if (id == VocabSpec::kPrefixSplit) {
    std::snprintf(buf, sizeof(buf), "%4d  %-6s  <X>", id, role_name);
  } else if (id == VocabSpec::kPad) {
    std::snprintf(buf, sizeof(buf), "%4d  %-6s  <pad>", id, role_name);
  } else if (id >= VocabSpec::kContinuousMin && id < VocabSpec::kContinuousMax) {
    std::snprintf(buf, sizeof(buf), "%4d  %-6s  ~%.6f", id, role_name,
                  token_to_continuous(id));
  } else {
    std::snprintf(buf, sizeof(buf), "%4d  %-6s  %d", id, role_name, id);
  }
  return buf;
}

}  // namespace seqco::tok
