#include "grb/printer.hpp"

#include <sstream>

namespace grb {

namespace {

std::string tuple(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void printFamily(std::ostringstream& os, const Presentation& p, const CoordFamily& f) {
    bool isBase = f.weight.isZero() && f.name == p.baseFamilyName;
    os << "  " << (isBase ? "base " : "coord ") << f.name;
    if (!f.lifts.empty()) os << tuple(f.lifts);
    os << "[" << f.count << "]";
    if (!isBase) os << " weight " << f.weight.str();
    os << ";\n";
}

} // namespace

namespace {

std::string identifier(const std::string& name) {
    std::string out;
    for (char c : name) {
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
            c == '_')
            out += c;
        else
            out += '_';
    }
    if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out = "b_" + out;
    return out;
}

} // namespace

std::string printPresentation(const Presentation& p) {
    std::ostringstream os;
    os << "bundle " << (p.name.empty() ? "unnamed" : identifier(p.name)) << " {\n";
    os << "  weights " << p.ncomp << ";\n";
    os << "  charts";
    for (auto& c : p.charts) os << " " << c;
    os << ";\n";
    for (auto& f : p.families)
        if (f.weight.isZero() && f.name == p.baseFamilyName) printFamily(os, p, f);
    for (auto& f : p.families)
        if (!(f.weight.isZero() && f.name == p.baseFamilyName)) printFamily(os, p, f);
    for (auto& [name, info] : p.fnTable) {
        if (info.symGroups.empty() && info.inverseFamily.empty() && !info.baseMap &&
            info.dim == 0)
            continue;
        if (!info.inverseOf.empty() && info.inverseFamily.empty())
            continue; // emitted with its primal
        os << "  fn " << name;
        if (info.dim > 0 && !info.inverseFamily.empty()) os << " dim " << info.dim;
        if (!info.inverseFamily.empty()) os << " inverse " << info.inverseFamily;
        for (auto& g : info.symGroups) {
            os << " sym";
            for (int s : g) os << " " << s;
        }
        if (info.baseMap) os << " basemap";
        os << ";\n";
    }
    for (auto& t : p.transitions) {
        os << "  transition " << t.from << " -> " << t.to << " {\n";
        for (auto& c : p.allCoords())
            os << "    " << c.str() << " = " << t.lawOf(c).str() << ";\n";
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string printMorphism(const Presentation& src, const Presentation& dst, const Morphism& phi,
                          const std::string& name) {
    std::ostringstream os;
    os << "morphism " << identifier(name.empty() ? (phi.name.empty() ? "phi" : phi.name) : name)
       << " : " << identifier(src.name) << " -> " << identifier(dst.name) << " {\n";
    for (auto& cm : phi.maps) {
        os << "  chart " << cm.srcChart << " -> " << cm.dstChart << " {\n";
        for (auto& c : dst.allCoords()) {
            auto it = cm.pullback.find(c.key());
            if (it == cm.pullback.end()) continue;
            os << "    " << c.str() << " = " << it->second.str() << ";\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string printSigma(const Presentation& D, const Perm& g, const Morphism& sigma) {
    std::ostringstream os;
    std::vector<int> oneLine;
    for (int v : g) oneLine.push_back(v + 1);
    os << "sigma " << tuple(oneLine) << " on " << identifier(D.name) << " {\n";
    for (auto& cm : sigma.maps) {
        os << "  chart " << cm.srcChart << " {\n";
        for (auto& c : D.allCoords()) {
            auto it = cm.pullback.find(c.key());
            if (it == cm.pullback.end()) continue;
            os << "    " << c.str() << " = " << it->second.str() << ";\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace grb
