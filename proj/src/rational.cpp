#include "latexp/rational.hpp"

#include <cctype>

namespace latexp {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    const auto bad = [&] { return input_error("bad rational literal: '" + s + "'"); };
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw bad();
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        // decimal: sign, integer part, fractional part
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        for (char c : ip)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        Int scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Int num = Int(ip) * scale + (fp.empty() ? Int(0) : Int(fp));
        Rat q(num, scale);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::string rational_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat pow_rat(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (base == 0 && exp < 0) throw input_error("pow_rat: zero base, negative exponent");
    Rat b = exp < 0 ? Rat(1 / base) : base;
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace latexp
