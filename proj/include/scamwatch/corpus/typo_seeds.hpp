#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>

#include "scamwatch/corpus/public_suffix.hpp"

namespace scamwatch::corpus {

enum class TypoModel {
  char_duplication,
  char_omission,
  char_transposition,
  char_substitution_adjacent,
  missing_dot,
};

inline constexpr std::array<TypoModel, 5> kAllTypoModels = {
    TypoModel::char_duplication, TypoModel::char_omission, TypoModel::char_transposition,
    TypoModel::char_substitution_adjacent, TypoModel::missing_dot};

std::string_view to_string(TypoModel model);
TypoModel parse_typo_model(std::string_view name);

// Typosquatting candidates for a popular registrable domain. Each candidate
// applies one model once to the label left of the public suffix; the
// missing-dot model instead drops a dot, treating a bare domain as if it
// were written with a "www." prefix ("wwwexample.com").
//
// Throws InvalidArgument if `domain` is not lowercase ASCII with a dot, or
// if the label to mutate is empty.
std::set<std::string> generate_typo_seeds(std::string_view domain, const std::set<TypoModel>& models,
                                          const PublicSuffixList& suffixes = PublicSuffixList::bundled());

}  // namespace scamwatch::corpus
