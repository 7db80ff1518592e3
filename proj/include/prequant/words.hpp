#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace prequant {

// One letter of a word in the free group on the surface generators.
// generator is a 0-based index (a_i = 2(i-1), b_i = 2(i-1)+1); exponent is +-1.
struct Letter {
    int generator = 0;
    int exponent = +1;

    Letter inverse() const { return {generator, -exponent}; }
    bool operator==(const Letter&) const = default;
};

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    // Freely reduces on construction, so a Word is always its own reduction.
    explicit Word(const std::vector<Letter>& letters) {
        for (const Letter& l : letters) push(l);
    }

    void push(const Letter& l) {
        if (l.exponent != 1 && l.exponent != -1) {
            throw std::invalid_argument("Word: exponent must be +-1");
        }
        if (!letters_.empty() && letters_.back() == l.inverse()) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool operator==(const Word&) const = default;

    Word inverse() const {
        Word w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push(it->inverse());
        return w;
    }

    Word concat(const Word& other) const {
        Word w = *this;
        for (const Letter& l : other.letters()) w.push(l);
        return w;
    }

private:
    std::vector<Letter> letters_;
};

}  // namespace prequant
