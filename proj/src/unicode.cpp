#include "translit/unicode.hpp"

#include "translit/error.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace translit::unicode {

namespace {

icu::UnicodeString from_utf8(std::string_view utf8) {
    return icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
}

std::string to_utf8(const icu::UnicodeString& s) {
    std::string out;
    s.toUTF8String(out);
    return out;
}

}  // namespace

std::u32string decode(std::string_view utf8) {
    std::u32string out;
    out.reserve(utf8.size());
    const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
    const auto length = static_cast<int32_t>(utf8.size());
    int32_t i = 0;
    while (i < length) {
        UChar32 c;
        U8_NEXT(bytes, i, length, c);
        if (c < 0) {
            throw InvalidArgument("invalid UTF-8 sequence at byte " + std::to_string(i - 1));
        }
        out.push_back(static_cast<char32_t>(c));
    }
    return out;
}

std::string encode(char32_t cp) {
    char buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(reinterpret_cast<uint8_t*>(buf), n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
    if (error) {
        throw InvalidArgument("code point out of range");
    }
    return std::string(buf, static_cast<std::size_t>(n));
}

std::string encode(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size() * 2);
    for (char32_t cp : cps) {
        out += encode(cp);
    }
    return out;
}

std::string to_nfc(std::string_view utf8) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
        throw Error(std::string("ICU NFC unavailable: ") + u_errorName(status));
    }
    icu::UnicodeString normalized = nfc->normalize(from_utf8(utf8), status);
    if (U_FAILURE(status)) {
        throw Error(std::string("NFC normalization failed: ") + u_errorName(status));
    }
    return to_utf8(normalized);
}

std::string to_lower(std::string_view utf8) {
    icu::UnicodeString s = from_utf8(utf8);
    s.toLower(icu::Locale::getRoot());
    return to_utf8(s);
}

std::string to_upper(std::string_view utf8) {
    icu::UnicodeString s = from_utf8(utf8);
    s.toUpper(icu::Locale::getRoot());
    return to_utf8(s);
}

bool is_letter(char32_t cp) { return u_isalpha(static_cast<UChar32>(cp)); }
bool is_upper(char32_t cp) { return u_isUUppercase(static_cast<UChar32>(cp)); }
bool is_lower(char32_t cp) { return u_isULowercase(static_cast<UChar32>(cp)); }
bool is_whitespace(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

}  // namespace translit::unicode
