#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monkey {

/// Raised when a target contains a symbol that the alphabet can never produce.
class OutOfAlphabetError : public std::invalid_argument {
public:
    OutOfAlphabetError(char symbol, std::size_t position)
        : std::invalid_argument(describe(symbol, position)), symbol_(symbol), position_(position) {}

    [[nodiscard]] char symbol() const { return symbol_; }
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    static std::string describe(char symbol, std::size_t position) {
        return "target character '" + std::string(1, symbol) + "' at position " + std::to_string(position) +
               " is not in the alphabet";
    }

    char symbol_;
    std::size_t position_;
};

/**
 * Ordered set of distinct byte symbols that candidates are drawn from.
 *
 * Two presets match the reference material: `letters_space()` is the 52 ASCII
 * letters followed by the space character (A = 53, the simulation alphabet)
 * and `letters()` is the 52 letters alone (A = 52, the closed-form alphabet).
 */
class Alphabet {
public:
    static constexpr std::string_view kLettersSpaceName = "letters+space";
    static constexpr std::string_view kLettersName = "letters";

    static Alphabet from_symbols(std::string_view symbols) {
        if (symbols.empty()) {
            throw std::invalid_argument("alphabet must contain at least one symbol");
        }
        Alphabet out;
        for (char c : symbols) {
            auto& seen = out.member_[static_cast<unsigned char>(c)];
            if (seen) {
                throw std::invalid_argument("alphabet symbol '" + std::string(1, c) + "' appears more than once");
            }
            seen = true;
        }
        out.symbols_ = std::string(symbols);
        return out;
    }

    static Alphabet letters() { return from_symbols(ascii_letters()); }
    static Alphabet letters_space() { return from_symbols(std::string(ascii_letters()) + ' '); }

    /// Preset name or an explicit symbol list.
    static Alphabet parse(std::string_view spec) {
        if (spec == kLettersSpaceName) {
            return letters_space();
        }
        if (spec == kLettersName) {
            return letters();
        }
        return from_symbols(spec);
    }

    [[nodiscard]] std::size_t size() const { return symbols_.size(); }
    [[nodiscard]] const std::string& symbols() const { return symbols_; }
    [[nodiscard]] char operator[](std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] bool contains(char c) const { return member_[static_cast<unsigned char>(c)]; }

    /// Copy with every symbol of `text` not already present appended in order of first appearance.
    [[nodiscard]] Alphabet extended_with(std::string_view text) const {
        Alphabet out = *this;
        for (char c : text) {
            auto& seen = out.member_[static_cast<unsigned char>(c)];
            if (!seen) {
                seen = true;
                out.symbols_.push_back(c);
            }
        }
        return out;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    Alphabet() = default;

    static constexpr std::string_view ascii_letters() {
        return "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    }

    std::string symbols_;
    std::array<bool, 256> member_{};
};

/// Phrase the simulation tries to reproduce.
class TargetText {
public:
    explicit TargetText(std::string text) : text_(std::move(text)) {
        if (text_.empty()) {
            throw std::invalid_argument("target text must not be empty");
        }
    }

    [[nodiscard]] const std::string& text() const { return text_; }
    [[nodiscard]] std::size_t length() const { return text_.size(); }
    [[nodiscard]] std::string_view prefix(std::size_t n) const { return std::string_view(text_).substr(0, n); }

    /// Position of the first symbol within the first `prefix_length` characters that `alphabet` lacks.
    [[nodiscard]] std::optional<std::size_t> first_invalid(const Alphabet& alphabet,
                                                           std::size_t prefix_length) const {
        const auto view = prefix(prefix_length);
        for (std::size_t i = 0; i < view.size(); ++i) {
            if (!alphabet.contains(view[i])) {
                return i;
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] bool is_valid_for(const Alphabet& alphabet) const {
        return !first_invalid(alphabet, length()).has_value();
    }

    /// Throws OutOfAlphabetError naming the first offending character.
    void require_valid(const Alphabet& alphabet, std::size_t prefix_length) const {
        if (auto pos = first_invalid(alphabet, prefix_length)) {
            throw OutOfAlphabetError(text_[*pos], *pos);
        }
    }

private:
    std::string text_;
};

inline constexpr std::string_view kHamletPhrase = "To be, or not to be, that is the Question";

}  // namespace monkey
