#include "sympow/rational.hpp"

#include "sympow/error.hpp"

#include <cctype>

namespace sympow {

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.find('-') != std::string::npos)
        throw DomainError("malformed rational '" + text + "'");
    BigInt d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    Rational q(BigInt(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

RationalVector::RationalVector(std::vector<Rational> entries) : v_(std::move(entries)) {
    for (auto& q : v_) q.canonicalize();
}

Rational RationalVector::sum() const {
    Rational s(0);
    for (const auto& q : v_) s += q;
    return s;
}

RationalVector RationalVector::scaled(const Rational& n) const {
    std::vector<Rational> out(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) out[i] = v_[i] * n;
    return RationalVector(std::move(out));
}

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
    const std::size_t n = std::min(a.v_.size(), b.v_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a.v_[i], b.v_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return a.v_.size() <=> b.v_.size();
}

std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

} // namespace sympow
