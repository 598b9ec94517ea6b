#include "ltlfmt/smt/sexpr.hpp"

#include <cctype>

#include "ltlfmt/errors.hpp"

namespace ltlfmt::smt {

std::string SExpr::symbol() const
{
    if (text.size() >= 2 && text.front() == '|' && text.back() == '|')
        return text.substr(1, text.size() - 2);
    return text;
}

std::string to_string(const SExpr& e)
{
    if (e.is_atom())
        return e.text;
    std::string out = "(";
    for (std::size_t k = 0; k < e.items.size(); ++k) {
        if (k)
            out += ' ';
        out += to_string(e.items[k]);
    }
    return out + ")";
}

namespace {

class Reader {
public:
    Reader(std::string_view text, std::string* comments) : text_(text), comments_(comments) {}

    // nullopt when input ends before the expression does.
    std::optional<SExpr> read()
    {
        skip();
        if (pos_ >= text_.size())
            return std::nullopt;
        char c = text_[pos_];
        if (c == ')')
            throw Error("unbalanced ')' in solver output");
        if (c == '(') {
            ++pos_;
            SExpr list;
            list.is_list = true;
            for (;;) {
                skip();
                if (pos_ >= text_.size())
                    return std::nullopt;
                if (text_[pos_] == ')') {
                    ++pos_;
                    return list;
                }
                auto item = read();
                if (!item)
                    return std::nullopt;
                list.items.push_back(std::move(*item));
            }
        }
        if (c == '|' || c == '"')
            return delimited(c);
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '('
               && text_[pos_] != ')' && text_[pos_] != ';' && text_[pos_] != '"' && text_[pos_] != '|')
            ++pos_;
        // A bare atom at the very end may still be growing.
        if (pos_ >= text_.size() && !at_top_level_terminated())
            return std::nullopt;
        return SExpr{std::string(text_.substr(start, pos_ - start)), {}, false};
    }

    std::size_t position() const { return pos_; }
    void set_atom_needs_terminator(bool v) { atom_needs_terminator_ = v; }

private:
    bool at_top_level_terminated() const { return !atom_needs_terminator_; }

    std::optional<SExpr> delimited(char delim)
    {
        std::size_t start = pos_++;
        while (pos_ < text_.size()) {
            if (text_[pos_] == delim) {
                // "" escapes a quote inside string literals.
                if (delim == '"' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
                    pos_ += 2;
                    continue;
                }
                if (delim == '"' && pos_ + 1 >= text_.size() && atom_needs_terminator_)
                    return std::nullopt;
                ++pos_;
                return SExpr{std::string(text_.substr(start, pos_ - start)), {}, false};
            }
            ++pos_;
        }
        return std::nullopt;
    }

    void skip()
    {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == ';') {
                std::size_t end = text_.find('\n', pos_);
                if (end == std::string_view::npos)
                    end = text_.size();
                if (comments_) {
                    comments_->append(text_.substr(pos_, end - pos_));
                    comments_->push_back('\n');
                }
                pos_ = end;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::string* comments_;
    std::size_t pos_ = 0;
    bool atom_needs_terminator_ = true;
};

} // namespace

std::optional<SExpr> take_sexpr(std::string_view buffer, std::size_t& consumed, std::string* comments)
{
    std::string scratch;
    Reader reader(buffer, comments ? &scratch : nullptr);
    auto e = reader.read();
    if (!e) {
        consumed = 0;
        return std::nullopt;
    }
    consumed = reader.position();
    if (comments)
        comments->append(scratch);
    return e;
}

SExpr parse_sexpr(std::string_view text)
{
    Reader reader(text, nullptr);
    reader.set_atom_needs_terminator(false);
    auto e = reader.read();
    if (!e)
        throw Error("incomplete s-expression: " + std::string(text));
    std::size_t rest = reader.position();
    while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest])))
        ++rest;
    if (rest != text.size())
        throw Error("trailing input after s-expression: " + std::string(text));
    return *e;
}

} // namespace ltlfmt::smt
