#include "eislat/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace eislat {

namespace {

class WordParser {
public:
    explicit WordParser(const std::string& text) : s_(text) {}

    Word parse() {
        Word w = sequence();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "word syntax error at position " << pos_ << ": " << what << " in '" << s_ << "'";
        throw std::invalid_argument(os.str());
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    long number() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected a number");
        return std::strtol(s_.substr(start, pos_ - start).c_str(), nullptr, 10);
    }

    std::size_t generator() {
        if (!peek('a')) fail("expected a generator aN");
        ++pos_;
        const long n = number();
        if (n < 1) fail("generator index must be positive");
        return static_cast<std::size_t>(n);
    }

    long exponent() {
        if (!peek('^')) return 1;
        ++pos_;
        return number();
    }

    static Word power(const Word& w, long k) {
        Word out;
        if (k >= 0) {
            for (long i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
            return out;
        }
        Word inv;
        for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back({it->generator, -it->power});
        return power(inv, -k);
    }

    Word sequence() {
        Word w;
        for (;;) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] == ')') return w;
            if (s_[pos_] == '(') {
                ++pos_;
                Word inner = sequence();
                if (!peek(')')) fail("missing ')'");
                ++pos_;
                const Word p = power(inner, exponent());
                w.insert(w.end(), p.begin(), p.end());
                continue;
            }
            const std::size_t first = generator();
            if (s_.compare(pos_, 2, "..") == 0) {
                pos_ += 2;
                const std::size_t last = generator();
                if (first <= last)
                    for (std::size_t i = first; i <= last; ++i) w.push_back({i, 1});
                else
                    for (std::size_t i = first; i >= last; --i) w.push_back({i, 1});
                continue;
            }
            const long k = exponent();
            if (k != 0) w.push_back({first, k});
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text) { return WordParser(text).parse(); }

std::size_t word_length(const Word& w) {
    std::size_t n = 0;
    for (const auto& l : w) n += static_cast<std::size_t>(std::labs(l.power));
    return n;
}

std::string to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << 'a' << w[i].generator;
        if (w[i].power != 1) os << '^' << w[i].power;
    }
    return os.str();
}

GroupElt eval_word(const Ambient& g, const Word& w) {
    const std::size_t n = g->rank();
    std::vector<GroupElt> fwd, inv;
    for (std::size_t i = 0; i < n; ++i) {
        fwd.push_back(reflection(g, unit_vector(n, i), SixthRoot::omega()));
        inv.push_back(reflection(g, unit_vector(n, i), SixthRoot::omega_bar()));
    }
    GroupElt p = GroupElt::identity(g);
    for (const auto& l : w) {
        if (l.generator == 0 || l.generator > n)
            throw std::invalid_argument("unknown generator a" + std::to_string(l.generator) + " for a rank-" +
                                        std::to_string(n) + " lattice");
        const GroupElt& f = l.power >= 0 ? fwd[l.generator - 1] : inv[l.generator - 1];
        for (long k = 0; k < std::labs(l.power); ++k) p = p * f;
    }
    return p;
}

}  // namespace eislat
