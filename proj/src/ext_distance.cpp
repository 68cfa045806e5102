#include "cm/ext_distance.hpp"

#include <cctype>

namespace cm {

ExtDistance ExtDistance::parse(const std::string& s) {
    if (s == "inf" || s == "INF" || s == "infinity") return infinity();
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits(s)) throw ParseError("bad rational: '" + s + "'");
        return ExtDistance(BigRational(BigInt(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw ParseError("bad rational: '" + s + "'");
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator: '" + s + "'");
    return ExtDistance(BigRational(BigInt(num), d));
}

} // namespace cm
