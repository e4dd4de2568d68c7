#pragma once

// Keyword tables embedded at build time from core/data/keywords.*.txt.
// Definitions live in the generated keyword_data.cpp.

namespace idstat::detail {

extern const char* const kEmbeddedKeywordsC;
extern const char* const kEmbeddedKeywordsCpp;
extern const char* const kEmbeddedKeywordsJava;

}  // namespace idstat::detail
