#include "outf3/free_group.hpp"

#include <algorithm>
#include <sstream>

namespace outf3::freegrp {

FreeWord FreeWord::from_letters(std::vector<Letter> letters) {
    FreeWord w;
    w.letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.sign != 1 && l.sign != -1)
            throw PreconditionError("letter sign must be +-1");
        if (l.index < 1)
            throw PreconditionError("letter index must be positive");
        if (!w.letters_.empty() && w.letters_.back().index == l.index &&
            w.letters_.back().sign == -l.sign) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

FreeWord FreeWord::generator(int index, int sign) {
    return from_letters({Letter{index, sign}});
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    std::vector<Letter> combined = letters_;
    combined.insert(combined.end(), rhs.letters_.begin(), rhs.letters_.end());
    return from_letters(std::move(combined));
}

FreeWord FreeWord::inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        inv.push_back(Letter{it->index, -it->sign});
    FreeWord w;
    w.letters_ = std::move(inv);  // inverse of a reduced word is reduced
    return w;
}

FreeWord FreeWord::conjugated_by(const FreeWord& w) const {
    return w * (*this) * w.inverse();
}

FreeWord FreeWord::power(int k) const {
    FreeWord base = k >= 0 ? *this : inverse();
    FreeWord out;
    for (int step = 0; step < std::abs(k); ++step) out = out * base;
    return out;
}

int FreeWord::max_index() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.index);
    return m;
}

std::vector<long> FreeWord::exponent_sums(int rank) const {
    std::vector<long> sums(rank, 0);
    for (const Letter& l : letters_) {
        if (l.index > rank)
            throw PreconditionError("letter index exceeds rank");
        sums[l.index - 1] += l.sign;
    }
    return sums;
}

std::string FreeWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << " ";
        out << "a" << letters_[i].index;
        if (letters_[i].sign < 0) out << "^-1";
    }
    return out.str();
}

std::string to_string(const GeneratorName& g) {
    switch (g.kind) {
        case GenKind::Epsilon: return "e" + std::to_string(g.i);
        case GenKind::Rho: return "r" + std::to_string(g.i) + std::to_string(g.j);
        case GenKind::Lambda: return "l" + std::to_string(g.i) + std::to_string(g.j);
        case GenKind::Sigma: return "s" + std::to_string(g.i) + std::to_string(g.j);
        case GenKind::Delta: return "D";
    }
    throw Error("unreachable generator kind");
}

GeneratorName parse_generator_name(const std::string& token) {
    if (token == "D") return GeneratorName{GenKind::Delta};
    if (token.size() == 2 && token[0] == 'e' && std::isdigit(token[1]))
        return GeneratorName{GenKind::Epsilon, token[1] - '0'};
    if (token.size() == 3 && std::isdigit(token[1]) && std::isdigit(token[2])) {
        int i = token[1] - '0';
        int j = token[2] - '0';
        switch (token[0]) {
            case 'r': return GeneratorName{GenKind::Rho, i, j};
            case 'l': return GeneratorName{GenKind::Lambda, i, j};
            case 's': return GeneratorName{GenKind::Sigma, i, j};
            default: break;
        }
    }
    throw ParseError("unknown generator token '" + token + "'");
}

std::string to_string(const GeneratorWord& word) {
    std::ostringstream out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) out << " ";
        out << to_string(word[k].gen);
        if (word[k].exponent != 1) out << "^" << word[k].exponent;
    }
    return out.str();
}

GeneratorWord parse_generator_word(const std::string& text) {
    GeneratorWord word;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        int exponent = 1;
        auto caret = token.find('^');
        if (caret != std::string::npos) {
            try {
                exponent = std::stoi(token.substr(caret + 1));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in token '" + token + "'");
            }
            token = token.substr(0, caret);
        }
        word.push_back(GeneratorPower{parse_generator_name(token), exponent});
    }
    return word;
}

const FreeWord& FreeAutomorphism::image(int index) const {
    if (index < 1 || index > rank_)
        throw PreconditionError("basis index out of range");
    return images_[static_cast<std::size_t>(index) - 1];
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
    if (rank < 1)
        throw PreconditionError("rank must be positive");
    FreeAutomorphism aut;
    aut.rank_ = rank;
    for (int i = 1; i <= rank; ++i) aut.images_.push_back(FreeWord::generator(i));
    return aut;
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
    if (w.max_index() > rank_)
        throw PreconditionError("word does not fit in rank " + std::to_string(rank_));
    FreeWord out;
    for (const Letter& l : w.letters()) {
        const FreeWord& img = images_[static_cast<std::size_t>(l.index) - 1];
        out = out * (l.sign > 0 ? img : img.inverse());
    }
    return out;
}

bool FreeAutomorphism::same_map(const FreeAutomorphism& other) const {
    return rank_ == other.rank_ && images_ == other.images_;
}

bool FreeAutomorphism::is_identity() const {
    for (int i = 1; i <= rank_; ++i)
        if (image(i) != FreeWord::generator(i)) return false;
    return true;
}

std::string FreeAutomorphism::map_key() const {
    std::ostringstream out;
    for (int i = 1; i <= rank_; ++i) out << image(i).str() << ";";
    return out.str();
}

namespace {

// Explicit images of a named generator or its inverse. The inverse formulas:
// e, s and D are involutions; r_ij^{-1}: a_i -> a_i a_j^{-1};
// l_ij^{-1}: a_i -> a_j^{-1} a_i.
std::vector<FreeWord> generator_images(const GeneratorName& g, int rank, bool inverted) {
    auto in_range = [rank](int idx) { return idx >= 1 && idx <= rank; };
    std::vector<FreeWord> images;
    for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(i));

    switch (g.kind) {
        case GenKind::Epsilon:
            if (!in_range(g.i))
                throw PreconditionError("epsilon index out of range");
            images[g.i - 1] = FreeWord::generator(g.i, -1);
            break;
        case GenKind::Rho:
            if (!in_range(g.i) || !in_range(g.j) || g.i == g.j)
                throw PreconditionError("rho indices must be distinct and within rank");
            images[g.i - 1] = FreeWord::generator(g.i) * FreeWord::generator(g.j, inverted ? -1 : 1);
            break;
        case GenKind::Lambda:
            if (!in_range(g.i) || !in_range(g.j) || g.i == g.j)
                throw PreconditionError("lambda indices must be distinct and within rank");
            images[g.i - 1] = FreeWord::generator(g.j, inverted ? -1 : 1) * FreeWord::generator(g.i);
            break;
        case GenKind::Sigma: {
            if (g.i == g.j)
                throw PreconditionError("sigma indices must be distinct");
            int lo = std::min(g.i, g.j);
            int hi = std::max(g.i, g.j);
            if (lo < 1 || hi > rank + 1)
                throw PreconditionError("sigma indices out of range");
            if (hi <= rank) {
                images[lo - 1] = FreeWord::generator(hi);
                images[hi - 1] = FreeWord::generator(lo);
            } else {
                // s_{i(n+1)}: a_i -> a_i^{-1}, a_j -> a_j a_i^{-1}. An involution.
                for (int j = 1; j <= rank; ++j) {
                    images[j - 1] = j == lo
                        ? FreeWord::generator(lo, -1)
                        : FreeWord::generator(j) * FreeWord::generator(lo, -1);
                }
            }
            break;
        }
        case GenKind::Delta:
            for (int i = 1; i <= rank; ++i) images[i - 1] = FreeWord::generator(i, -1);
            break;
    }
    return images;
}

}  // namespace

FreeAutomorphism make_generator(const GeneratorName& name, int rank) {
    if (rank < 1)
        throw PreconditionError("rank must be positive");
    FreeAutomorphism aut;
    aut.rank_ = rank;
    aut.images_ = generator_images(name, rank, false);
    aut.provenance_ = {GeneratorPower{name, 1}};
    return aut;
}

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
    if (a.rank_ != b.rank_)
        throw PreconditionError("cannot compose automorphisms of different ranks");
    FreeAutomorphism out;
    out.rank_ = a.rank_;
    out.images_.reserve(b.images_.size());
    for (const FreeWord& img : b.images_) out.images_.push_back(a.apply(img));
    out.provenance_ = a.provenance_;
    out.provenance_.insert(out.provenance_.end(), b.provenance_.begin(), b.provenance_.end());
    return out;
}

FreeAutomorphism inverse(const FreeAutomorphism& aut) {
    FreeAutomorphism out = FreeAutomorphism::identity(aut.rank());
    out.provenance_.clear();
    for (auto it = aut.provenance_.rbegin(); it != aut.provenance_.rend(); ++it) {
        const int steps = std::abs(it->exponent);
        const bool inverted = it->exponent > 0;  // inverse word flips each sign
        for (int s = 0; s < steps; ++s) {
            FreeAutomorphism factor;
            factor.rank_ = aut.rank();
            factor.images_ = generator_images(it->gen, aut.rank(), inverted);
            factor.provenance_ = {GeneratorPower{it->gen, inverted ? -1 : 1}};
            out = compose(out, factor);
        }
    }
    return out;
}

FreeAutomorphism evaluate_word(const GeneratorWord& word, int rank) {
    FreeAutomorphism out = FreeAutomorphism::identity(rank);
    for (const GeneratorPower& p : word) {
        FreeAutomorphism g = make_generator(p.gen, rank);
        FreeAutomorphism factor = p.exponent >= 0 ? g : inverse(g);
        for (int s = 0; s < std::abs(p.exponent); ++s) out = compose(out, factor);
    }
    return out;
}

FreeAutomorphism evaluate_word(const std::string& text, int rank) {
    return evaluate_word(parse_generator_word(text), rank);
}

std::optional<FreeWord> inner_witness(const FreeAutomorphism& aut) {
    const int rank = aut.rank();

    int pivot = 0;
    for (int i = 1; i <= rank; ++i) {
        if (aut.image(i) != FreeWord::generator(i)) {
            pivot = i;
            break;
        }
    }
    if (pivot == 0) return FreeWord{};  // the identity: empty witness

    // An inner automorphism sends a_p to v a_p v^{-1}, reduced as written.
    const FreeWord& u = aut.image(pivot);
    if (u.size() % 2 == 0) return std::nullopt;
    const std::size_t m = u.size() / 2;
    if (!(u.letter(m) == Letter{pivot, +1})) return std::nullopt;

    std::vector<Letter> prefix(u.letters().begin(), u.letters().begin() + static_cast<long>(m));
    FreeWord v = FreeWord::from_letters(prefix);
    if (u != v * FreeWord::generator(pivot) * v.inverse()) return std::nullopt;

    std::size_t longest = 0;
    for (int i = 1; i <= rank; ++i) longest = std::max(longest, aut.image(i).size());
    const long bound = static_cast<long>(longest / 2 + 1);

    // The conjugator is v up to right multiplication by powers of a_pivot.
    for (long k = -bound; k <= bound; ++k) {
        FreeWord w = v * FreeWord::generator(pivot).power(static_cast<int>(k));
        bool all_match = true;
        for (int i = 1; i <= rank && all_match; ++i)
            all_match = aut.image(i) == FreeWord::generator(i).conjugated_by(w);
        if (all_match) return w;
    }
    return std::nullopt;
}

bool outer_equal(const FreeAutomorphism& a, const FreeAutomorphism& b) {
    if (a.rank() != b.rank())
        throw PreconditionError("cannot compare automorphisms of different ranks");
    return inner_witness(compose(a, inverse(b))).has_value();
}

IntMatrix abelianization(const FreeAutomorphism& aut) {
    const int n = aut.rank();
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int col = 1; col <= n; ++col) {
        std::vector<long> sums = aut.image(col).exponent_sums(n);
        for (int row = 1; row <= n; ++row)
            m.at(static_cast<std::size_t>(row) - 1, static_cast<std::size_t>(col) - 1) =
                sums[static_cast<std::size_t>(row) - 1];
    }
    return m;
}

}  // namespace outf3::freegrp
