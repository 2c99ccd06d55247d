#include <cmath>
#include <cstdio>
#include <string>

#include "mpimpe/lp.hpp"

namespace mpimpe::lp {

namespace {

// Fixed-point with 12 significant digits, trailing zeros trimmed.
std::string number(double v) {
    if (v == 0.0) return "0";
    if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
    const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(v))));
    const int decimals = std::max(0, 11 - magnitude);
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

std::string signed_term(double coef, const std::string& name) {
    return (coef < 0 ? " - " : " + ") + number(std::abs(coef)) + " " + name;
}

}  // namespace

std::string to_lp_format(const LinearProgram& lp) {
    std::string out = "Minimize\n obj:";
    bool any = false;
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (lp.objective()[j] == 0.0) continue;
        out += signed_term(lp.objective()[j], lp.var_name(j));
        any = true;
    }
    if (!any) out += " 0 " + (lp.num_vars() ? lp.var_name(0) : std::string("x0"));
    out += "\nSubject To\n";
    for (const auto& c : lp.constraints()) {
        out += " " + c.name + ":";
        for (const auto& t : c.terms) out += signed_term(t.coef, lp.var_name(t.var));
        if (c.terms.empty()) out += " 0 " + lp.var_name(0);
        switch (c.relation) {
        case Relation::LessEqual: out += " <= "; break;
        case Relation::GreaterEqual: out += " >= "; break;
        case Relation::Equal: out += " = "; break;
        }
        out += number(c.rhs) + "\n";
    }
    out += "Bounds\n";
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        const auto& b = lp.bounds()[j];
        const auto& name = lp.var_name(j);
        if (b.lower == -kInfinity && b.upper == kInfinity) {
            out += " " + name + " free\n";
        } else if (b.lower == b.upper) {
            out += " " + name + " = " + number(b.lower) + "\n";
        } else {
            out += " " + number(b.lower) + " <= " + name + " <= " + number(b.upper) + "\n";
        }
    }
    out += "End\n";
    return out;
}

}  // namespace mpimpe::lp
