#pragma once

// Thin UTF-8 / Unicode helpers on top of ICU.

#include <string>
#include <string_view>

namespace translit::unicode {

/// Decodes UTF-8 into code points. Throws InvalidArgument on malformed input.
std::u32string decode(std::string_view utf8);

std::string encode(char32_t cp);
std::string encode(std::u32string_view cps);

std::string to_nfc(std::string_view utf8);
std::string to_lower(std::string_view utf8);
std::string to_upper(std::string_view utf8);

bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
bool is_whitespace(char32_t cp);

}  // namespace translit::unicode
