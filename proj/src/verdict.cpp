#include "sepreg/verdict.hpp"

#include <array>

namespace sepreg {

namespace {

constexpr std::array<std::pair<Family, const char*>, 9> kFamilyNames{{
    {Family::Pt, "pt"},
    {Family::SubseqSingle, "subseq-single"},
    {Family::SubseqUnion, "subseq-union"},
    {Family::SuffixSingle, "suffix-single"},
    {Family::SuffixUnion, "suffix-union"},
    {Family::SuffixBc, "suffix-bc"},
    {Family::PrefixSingle, "prefix-single"},
    {Family::PrefixUnion, "prefix-union"},
    {Family::PrefixBc, "prefix-bc"},
}};

}  // namespace

std::string family_name(Family f) {
    for (const auto& [family, name] : kFamilyNames) {
        if (family == f) return name;
    }
    return "unknown";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& [family, text] : kFamilyNames) {
        if (name == text) return family;
    }
    return std::nullopt;
}

bool validate_ordered_pair(const Nfa& k, const Nfa& l, const OrderedPairEvidence& ev) {
    if (!member(k, ev.lower) || !member(l, ev.upper)) return false;
    switch (ev.relation) {
        case OrderedPairEvidence::Relation::Subsequence:
            return is_subsequence(ev.lower, ev.upper);
        case OrderedPairEvidence::Relation::Suffix:
            return is_suffix(ev.lower, ev.upper);
        case OrderedPairEvidence::Relation::Prefix:
            return is_prefix(ev.lower, ev.upper);
        case OrderedPairEvidence::Relation::Equal:
            return ev.lower == ev.upper;
    }
    return false;
}

}  // namespace sepreg
