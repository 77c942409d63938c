#include "fga/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fga {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(separator, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

long long parse_integer(std::string_view text, const char* what) {
    constexpr long long kLimit = 1000000000000000000ll;
    text = trim(text);
    if (text.empty())
        throw parse_error("invalid_integer", std::string("empty ") + what);
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (i == text.size())
        throw parse_error("invalid_integer", std::string("malformed ") + what);
    long long value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("invalid_integer",
                              std::string("malformed ") + what + " '" + std::string(text) + "'");
        if (value > kLimit / 10)
            throw parse_error("invalid_integer", std::string(what) + " out of range");
        value = value * 10 + (text[i] - '0');
    }
    return text[0] == '-' ? -value : value;
}

BigInt parse_big_integer(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw parse_error("invalid_scalar", "empty integer");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (i == text.size()) throw parse_error("invalid_scalar", "malformed integer");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw parse_error("invalid_scalar", "malformed integer '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

// A word factor: `name` or `name^k`. Appends |k| copies of the letter.
void append_factor(std::string_view factor, const Alphabet& alphabet,
                   std::vector<Letter>& letters) {
    factor = trim(factor);
    if (factor.empty())
        throw parse_error("invalid_word", "empty word factor");
    if (factor == "e") return; // identity factor
    std::string_view name = factor;
    long long exponent = 1;
    std::size_t caret = factor.find('^');
    if (caret != std::string_view::npos) {
        name = trim(factor.substr(0, caret));
        exponent = parse_integer(factor.substr(caret + 1), "exponent");
        if (exponent == 0)
            throw parse_error("invalid_word", "zero exponent in '" + std::string(factor) + "'");
        if (exponent > 1000000 || exponent < -1000000)
            throw parse_error("invalid_word", "exponent out of range in '" + std::string(factor) + "'");
    }
    auto index = alphabet.index_of(name);
    if (!index)
        throw parse_error("unknown_generator", "unknown generator '" + std::string(name) + "'");
    Letter letter(static_cast<std::uint32_t>(*index), exponent < 0 ? -1 : 1);
    for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
        letters.push_back(letter);
}

bool is_number_token(std::string_view token) {
    token = trim(token);
    if (token.empty()) return false;
    std::size_t i = token[0] == '-' || token[0] == '+' ? 1 : 0;
    if (i == token.size()) return false;
    return std::all_of(token.begin() + static_cast<std::ptrdiff_t>(i), token.end(),
                       [](unsigned char c) { return std::isdigit(c) || c == '/'; });
}

} // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    text = trim(text);
    if (text.empty()) throw parse_error("invalid_word", "empty word");
    if (text == "e") return Word(alphabet);
    std::vector<Letter> letters;
    for (std::string_view factor : split(text, '*')) append_factor(factor, alphabet, letters);
    return Word::reduced(alphabet, letters);
}

std::string format_word(const Word& w) {
    if (w.is_identity()) return "e";
    std::string out;
    std::size_t i = 0;
    const auto& letters = w.letters();
    while (i < letters.size()) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        if (!out.empty()) out += "*";
        out += w.alphabet().name(letters[i].generator_index);
        long long exponent = static_cast<long long>(j - i) * letters[i].sign;
        if (exponent != 1) out += "^" + std::to_string(exponent);
        i = j;
    }
    return out;
}

Letter parse_letter(std::string_view text, const Alphabet& alphabet) {
    Word w = parse_word(text, alphabet);
    if (w.length() != 1)
        throw parse_error("invalid_letter", "expected a single letter, got '" + std::string(text) + "'");
    return w.letters()[0];
}

std::string format_letter(const Alphabet& alphabet, Letter letter) {
    std::string out = alphabet.name(letter.generator_index);
    if (letter.sign < 0) out += "^-1";
    return out;
}

Scalar parse_scalar(std::string_view text, const Field& field) {
    text = trim(text);
    std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        if (!field.is_rational())
            throw parse_error("invalid_scalar", "fractions are only valid over the rationals");
        BigInt numerator = parse_big_integer(text.substr(0, slash));
        BigInt denominator = parse_big_integer(text.substr(slash + 1));
        if (denominator == 0)
            throw parse_error("invalid_scalar", "zero denominator");
        return Scalar::rational(BigRational(numerator, denominator));
    }
    return Scalar::from_integer(field, parse_big_integer(text));
}

AlgebraElement parse_element(std::string_view text, const Field& field, const Alphabet& alphabet) {
    text = trim(text);
    if (text.empty()) throw parse_error("invalid_element", "empty element");

    AlgebraElement result(field, alphabet);
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    while (pos < text.size()) {
        // A '+'/'-' separates terms unless it is an exponent sign (after '^').
        std::size_t end = pos;
        char previous = 0;
        while (end < text.size()) {
            char c = text[end];
            if ((c == '+' || c == '-') && previous != '^') break;
            if (!std::isspace(static_cast<unsigned char>(c))) previous = c;
            ++end;
        }
        std::string_view term = trim(text.substr(pos, end - pos));
        if (term.empty()) throw parse_error("invalid_element", "empty term");

        // Leading numeric factor = coefficient; the rest is the word.
        std::vector<std::string_view> factors = split(term, '*');
        Scalar coefficient = Scalar::one(field);
        std::size_t first_word_factor = 0;
        if (is_number_token(factors[0])) {
            coefficient = parse_scalar(factors[0], field);
            first_word_factor = 1;
        }
        for (std::size_t i = first_word_factor; i < factors.size(); ++i)
            if (is_number_token(factors[i]))
                throw parse_error("invalid_element",
                                  "numeric factor in the middle of a term: '" + std::string(term) + "'");
        std::vector<Letter> letters;
        for (std::size_t i = first_word_factor; i < factors.size(); ++i)
            append_factor(factors[i], alphabet, letters);
        Word word = Word::reduced(alphabet, letters);
        result.add_term(word, negative ? -coefficient : coefficient);

        if (end == text.size()) break;
        negative = text[end] == '-';
        pos = end + 1;
        if (trim(text.substr(pos)).empty())
            throw parse_error("invalid_element", "trailing sign with no term");
    }
    return result;
}

std::string format_element(const AlgebraElement& f, const ExposureOrder& ord) {
    if (f.is_zero()) return "0";
    if (f.alphabet() != ord.alphabet())
        throw error("alphabet_mismatch", "element and order over different alphabets");

    std::string out;
    bool first = true;
    for (const Word& word : support_descending(f, ord)) {
        Scalar coefficient = f.coefficient(word);
        bool negative = false;
        if (f.field().is_rational() && coefficient.rational_value() < 0) {
            negative = true;
            coefficient = -coefficient;
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (word.is_identity()) {
            out += coefficient.to_string();
        } else if (coefficient.is_one()) {
            out += format_word(word);
        } else {
            out += coefficient.to_string() + "*" + format_word(word);
        }
    }
    return out;
}

Field parse_field_spec(std::string_view text) {
    text = trim(text);
    if (text == "q" || text == "Q") return Field::rationals();
    if (text.size() > 3 && (text.substr(0, 3) == "fp:" || text.substr(0, 3) == "Fp:")) {
        long long p = parse_integer(text.substr(3), "modulus");
        if (p < 2) throw parse_error("invalid_field", "modulus must be at least 2");
        try {
            return Field::prime(static_cast<std::uint64_t>(p));
        } catch (const error& e) {
            throw parse_error(e.code(), e.what());
        }
    }
    throw parse_error("invalid_field", "field spec must be 'q' or 'fp:<p>'");
}

std::string format_field_spec(const Field& field) {
    return field.is_rational() ? "q" : "fp:" + std::to_string(field.modulus());
}

namespace {

// Collects generator base names in order of first appearance.
class NameCollector {
public:
    void see(std::string_view token) {
        token = trim(token);
        std::size_t caret = token.find('^');
        std::string name(trim(caret == std::string_view::npos ? token : token.substr(0, caret)));
        if (name.empty() || name == "e")
            throw parse_error("invalid_order_spec", "malformed letter '" + std::string(token) + "'");
        if (std::find(names_.begin(), names_.end(), name) == names_.end())
            names_.push_back(name);
    }

    Alphabet alphabet() const { return Alphabet(names_); }

private:
    std::vector<std::string> names_;
};

std::vector<Letter> parse_letter_list(std::string_view body, const Alphabet& alphabet) {
    std::vector<Letter> letters;
    for (std::string_view token : split(body, ','))
        letters.push_back(parse_letter(token, alphabet));
    return letters;
}

OrderSpec parse_shortlex_body(std::string_view body) {
    NameCollector collector;
    for (std::string_view token : split(body, ',')) collector.see(token);
    Alphabet alphabet = collector.alphabet();
    try {
        return {shortlex(alphabet, parse_letter_list(body, alphabet)), alphabet};
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        throw parse_error(e.code(), e.what());
    }
}

OrderSpec parse_weighted_body(std::string_view body) {
    std::vector<std::string_view> assignment_tokens;
    std::string_view tie_body;
    bool have_tie = false;
    for (std::string_view part : split(body, ';')) {
        part = trim(part);
        if (part.substr(0, 4) == "tie=") {
            tie_body = part.substr(4);
            have_tie = true;
        } else {
            for (std::string_view token : split(part, ','))
                if (!trim(token).empty()) assignment_tokens.push_back(token);
        }
    }
    if (!have_tie)
        throw parse_error("invalid_order_spec", "weighted order requires a tie=<letters> part");

    NameCollector collector;
    std::vector<std::pair<std::string_view, std::string_view>> assignments;
    for (std::string_view token : assignment_tokens) {
        std::size_t eq = token.find('=');
        if (eq == std::string_view::npos)
            throw parse_error("invalid_order_spec", "weight assignment must be letter=value");
        collector.see(token.substr(0, eq));
        assignments.emplace_back(token.substr(0, eq), token.substr(eq + 1));
    }
    Alphabet alphabet = collector.alphabet();

    std::vector<std::vector<std::int64_t>> weights(alphabet.rank() * 2);
    for (const auto& [letter_text, weight_text] : assignments) {
        Letter letter = parse_letter(letter_text, alphabet);
        std::vector<std::int64_t> weight;
        for (std::string_view component : split(weight_text, '|'))
            weight.push_back(parse_integer(component, "weight"));
        weights[letter.code()] = std::move(weight);
    }
    for (std::size_t code = 0; code < weights.size(); ++code)
        if (weights[code].empty())
            throw parse_error("invalid_order_spec", "missing weight for a letter");

    try {
        return {weighted_shortlex(alphabet, weights, parse_letter_list(tie_body, alphabet)),
                alphabet};
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        throw parse_error(e.code(), e.what());
    }
}

std::vector<Word> parse_forbidden_list(std::string_view body, const Alphabet& alphabet) {
    std::vector<Word> forbidden;
    for (std::string_view token : split(body, ','))
        if (!trim(token).empty()) forbidden.push_back(parse_word(token, alphabet));
    return forbidden;
}

} // namespace

OrderSpec parse_order_spec(std::string_view text) {
    text = trim(text);
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw parse_error("invalid_order_spec", "order spec must start with a kind prefix");
    std::string_view kind = trim(text.substr(0, colon));
    std::string_view body = text.substr(colon + 1);

    if (kind == "shortlex") return parse_shortlex_body(body);
    if (kind == "weighted") return parse_weighted_body(body);

    if (kind == "treesum" || kind == "lewin") {
        const std::string expected = std::string(kind) + " spec must be " + std::string(kind) +
                                     ":forbidden=<word,...>;base=...";
        std::string_view rest = trim(body);
        if (rest.substr(0, 10) != "forbidden=")
            throw parse_error("invalid_order_spec", expected);
        rest = rest.substr(10);
        std::size_t base_pos = rest.find(";base=");
        if (base_pos == std::string_view::npos)
            throw parse_error("invalid_order_spec", expected);
        std::string_view forbidden_body = rest.substr(0, base_pos);
        std::string_view base_body = rest.substr(base_pos + 6);

        OrderSpec base = kind == "treesum" ? parse_order_spec(base_body)
                                           : parse_shortlex_body(base_body);
        std::vector<Word> forbidden = parse_forbidden_list(forbidden_body, base.alphabet);
        try {
            PrefixTree tree(std::move(forbidden));
            OrderPtr order = kind == "treesum" ? tree_sum(base.order, std::move(tree))
                                               : lewin_order(base.order, std::move(tree));
            return {std::move(order), base.alphabet};
        } catch (const error& e) {
            throw parse_error(e.code(), e.what());
        }
    }

    throw parse_error("invalid_order_spec", "unknown order kind '" + std::string(kind) + "'");
}

} // namespace fga
