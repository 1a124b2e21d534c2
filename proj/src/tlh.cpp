#include "adq/tlh.hpp"

#include "adq/error.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <limits>

namespace adq {

namespace {

bool valid_diff_name(const std::string& name) {
    if (name.size() == 2) return name[0] == 'd' && is_valid_var(name[1]);
    if (name.size() == 3) return name[0] == 'd' && name[1] == 'd' && is_valid_var(name[2]);
    return false;
}

unsigned basic_grade(const std::string& name) {
    return name.size() == 2 ? 1 : 2;
}

}  // namespace

DiffTag DiffTag::basic(const std::string& name) {
    if (!valid_diff_name(name))
        throw Error("not a differential symbol: '" + name + "'");
    DiffTag t;
    t.parts_.push_back(name);
    return t;
}

unsigned DiffTag::grade() const {
    unsigned g = 0;
    for (const auto& p : parts_) g += basic_grade(p);
    return g;
}

DiffTag DiffTag::operator*(const DiffTag& o) const {
    DiffTag t;
    t.parts_.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
               std::back_inserter(t.parts_));
    return t;
}

bool DiffTag::operator<(const DiffTag& o) const {
    unsigned ga = grade(), gb = o.grade();
    if (ga != gb) return ga < gb;
    return parts_ < o.parts_;
}

std::string DiffTag::str() const {
    if (parts_.empty()) return "1";
    std::string s;
    for (const auto& p : parts_) {
        if (!s.empty()) s += '*';
        s += p;
    }
    return s;
}

GradedSum GradedSum::symbol(VarId v) {
    GradedSum s;
    s.add(Poly::variable(v), DiffTag());
    return s;
}

GradedSum GradedSum::differential(const std::string& name) {
    GradedSum s;
    s.add(Poly(1), DiffTag::basic(name));
    return s;
}

void GradedSum::add(Poly coeff, DiffTag tag) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(tag), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

unsigned GradedSum::min_grade() const {
    if (terms_.empty()) throw Error("empty graded sum has no grade");
    unsigned g = std::numeric_limits<unsigned>::max();
    for (const auto& [tag, c] : terms_) g = std::min(g, tag.grade());
    return g;
}

GradedSum GradedSum::operator+(const GradedSum& o) const {
    GradedSum r = *this;
    for (const auto& [tag, c] : o.terms_) r.add(c, tag);
    return r;
}

GradedSum GradedSum::operator-(const GradedSum& o) const {
    GradedSum r = *this;
    for (const auto& [tag, c] : o.terms_) r.add(-c, tag);
    return r;
}

GradedSum GradedSum::operator*(const GradedSum& o) const {
    GradedSum r;
    for (const auto& [ta, ca] : terms_)
        for (const auto& [tb, cb] : o.terms_) r.add(ca * cb, ta * tb);
    return r;
}

GradedSum GradedSum::finite_part() const {
    GradedSum r;
    for (const auto& [tag, c] : terms_)
        if (tag.grade() == 0) r.add(c, tag);
    return r;
}

std::string GradedSum::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [tag, c] : terms_) {
        bool neg = c.term_count() == 1 && c.terms().begin()->second.is_negative();
        Poly shown = neg ? -c : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (tag.is_unit()) {
            s += shown.str();
        } else if (shown == Poly(1)) {
            s += tag.str();
        } else if (shown.term_count() == 1) {
            s += shown.str() + "*" + tag.str();
        } else {
            s += "(" + shown.str() + ")*" + tag.str();
        }
    }
    return s;
}

GradedSum tlh_reduce(const GradedSum& s) {
    unsigned g = s.min_grade();  // throws on empty
    GradedSum r;
    for (const auto& [tag, c] : s.terms())
        if (tag.grade() == g) r.add(c, tag);
    return r;
}

GradedSum product_rule_tlh(const GradedSum& u, const GradedSum& v) {
    GradedSum full = u * v;
    GradedSum base = u.finite_part() * v.finite_part();
    GradedSum diff = full - base;
    if (diff.is_zero()) return diff;  // d(constant * constant) = 0
    return tlh_reduce(diff);
}

GradedSum with_differential(VarId v) {
    return GradedSum::symbol(v) + GradedSum::differential(std::string("d") + v);
}

namespace {

class GradedParser {
public:
    explicit GradedParser(const std::string& text) : text_(text) {}

    GradedSum parse() {
        GradedSum s = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", 1, static_cast<int>(pos_) + 1);
        return s;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    GradedSum sum() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        GradedSum s = product();
        if (neg) s = GradedSum() - s;
        while (true) {
            skip_ws();
            if (eat('+')) {
                s = s + product();
            } else if (eat('-')) {
                s = s - product();
            } else {
                break;
            }
        }
        return s;
    }

    GradedSum product() {
        GradedSum s = atom();
        while (eat('*')) s = s * atom();
        return s;
    }

    GradedSum atom() {
        skip_ws();
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) throw ParseError("expected a value", 1, col);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                digits += text_[pos_++];
            return GradedSum(Poly(Rational::parse(digits)));
        }
        if (c >= 'a' && c <= 'z') {
            std::string word;
            while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z')
                word += text_[pos_++];
            if (word.size() == 1) return GradedSum::symbol(word[0]);
            if (valid_diff_name(word)) return GradedSum::differential(word);
            throw ParseError("unknown symbol '" + word + "'", 1, col);
        }
        throw ParseError(std::string("unknown token '") + c + "'", 1, col);
    }
};

}  // namespace

GradedSum parse_graded(const std::string& text) {
    return GradedParser(text).parse();
}

}  // namespace adq
