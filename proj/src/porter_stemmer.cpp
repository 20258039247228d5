// Porter suffix-stripping stemmer, original 1980 rule set.
#include <algorithm>
#include <string>
#include <string_view>

#include "reposim/text.hpp"

namespace reposim::text {

namespace {

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

class Stemmer {
public:
    explicit Stemmer(std::string_view word) : w_(word) {}

    std::string run() {
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5a();
        step5b();
        return w_;
    }

private:
    std::string w_;

    bool consonant(std::size_t i) const {
        switch (w_[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u': return false;
            case 'y': return i == 0 || !consonant(i - 1);
            default: return true;
        }
    }

    // Number of VC sequences in w_[0, len).
    int measure(std::size_t len) const {
        int m = 0;
        std::size_t i = 0;
        while (i < len && consonant(i)) ++i;
        while (i < len) {
            while (i < len && !consonant(i)) ++i;
            if (i >= len) break;
            ++m;
            while (i < len && consonant(i)) ++i;
        }
        return m;
    }

    bool has_vowel(std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i)
            if (!consonant(i)) return true;
        return false;
    }

    bool double_consonant(std::size_t len) const {
        return len >= 2 && w_[len - 1] == w_[len - 2] && consonant(len - 1);
    }

    // Stem ends consonant-vowel-consonant, the last not w, x or y.
    bool cvc(std::size_t len) const {
        if (len < 3) return false;
        if (!consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) return false;
        const char c = w_[len - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view s) const { return std::string_view(w_).ends_with(s); }

    void replace_suffix(std::size_t suffix_len, std::string_view replacement) {
        w_.resize(w_.size() - suffix_len);
        w_.append(replacement);
    }

    // Applies the rule with the longest matching suffix when cond(stem length)
    // holds. Returns whether any suffix matched.
    template <std::size_t N, class Cond>
    bool longest(const Rule (&rules)[N], Cond cond) {
        const Rule* best = nullptr;
        for (const Rule& r : rules)
            if (ends(r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
        if (!best) return false;
        const std::size_t stem_len = w_.size() - best->suffix.size();
        if (cond(stem_len, *best)) replace_suffix(best->suffix.size(), best->replacement);
        return true;
    }

    void step1a() {
        static constexpr Rule rules[] = {{"sses", "ss"}, {"ies", "i"}, {"ss", "ss"}, {"s", ""}};
        longest(rules, [](std::size_t, const Rule&) { return true; });
    }

    void step1b() {
        if (ends("eed")) {
            if (measure(w_.size() - 3) > 0) w_.pop_back();
            return;
        }
        std::size_t cut = 0;
        if (ends("ed") && has_vowel(w_.size() - 2)) cut = 2;
        else if (ends("ing") && has_vowel(w_.size() - 3)) cut = 3;
        if (cut == 0) return;
        w_.resize(w_.size() - cut);

        if (ends("at") || ends("bl") || ends("iz")) {
            w_.push_back('e');
        } else if (double_consonant(w_.size())) {
            const char last = w_.back();
            if (last != 'l' && last != 's' && last != 'z') w_.pop_back();
        } else if (measure(w_.size()) == 1 && cvc(w_.size())) {
            w_.push_back('e');
        }
    }

    void step1c() {
        if (ends("y") && has_vowel(w_.size() - 1)) w_.back() = 'i';
    }

    void step2() {
        static constexpr Rule rules[] = {
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
            {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
        };
        longest(rules, [this](std::size_t stem, const Rule&) { return measure(stem) > 0; });
    }

    void step3() {
        static constexpr Rule rules[] = {
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        };
        longest(rules, [this](std::size_t stem, const Rule&) { return measure(stem) > 0; });
    }

    void step4() {
        static constexpr Rule rules[] = {
            {"al", ""},   {"ance", ""}, {"ence", ""}, {"er", ""},  {"ic", ""},   {"able", ""},
            {"ible", ""}, {"ant", ""},  {"ement", ""}, {"ment", ""}, {"ent", ""}, {"ion", ""},
            {"ou", ""},   {"ism", ""},  {"ate", ""},  {"iti", ""}, {"ous", ""},  {"ive", ""},
            {"ize", ""},
        };
        longest(rules, [this](std::size_t stem, const Rule& r) {
            if (measure(stem) <= 1) return false;
            if (r.suffix == "ion") return stem > 0 && (w_[stem - 1] == 's' || w_[stem - 1] == 't');
            return true;
        });
    }

    void step5a() {
        if (!ends("e")) return;
        const std::size_t stem = w_.size() - 1;
        const int m = measure(stem);
        if (m > 1 || (m == 1 && !cvc(stem))) w_.pop_back();
    }

    void step5b() {
        if (measure(w_.size()) > 1 && double_consonant(w_.size()) && w_.back() == 'l') w_.pop_back();
    }
};

}  // namespace

std::string stem(std::string_view word) {
    const bool alpha = std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; });
    if (!alpha) return std::string(word);
    return Stemmer(word).run();
}

}  // namespace reposim::text
