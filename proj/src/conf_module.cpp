#include "leibconf/conf_module.hpp"

#include <set>
#include <sstream>

namespace leibconf {

ConfModule::ConfModule(std::string n, std::vector<std::string> b)
    : name(std::move(n)), basis(std::move(b)) {
    std::set<std::string> seen;
    for (const auto& e : basis) {
        if (e.empty()) throw error("empty basis name in module " + name);
        if (!seen.insert(e).second) throw error("duplicate basis name in module " + name + ": " + e);
    }
}

int ConfModule::basis_index(const std::string& b) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == b) return static_cast<int>(i);
    return -1;
}

ConfModule direct_sum(const std::string& name, const ConfModule& a, const ConfModule& b) {
    std::vector<std::string> basis = a.basis;
    for (const auto& e : b.basis) {
        // qualify on collision so the sum stays well formed
        std::string n = e;
        if (a.basis.end() != std::find(a.basis.begin(), a.basis.end(), n))
            n = b.name + "." + e;
        basis.push_back(n);
    }
    return ConfModule(name, std::move(basis));
}

ModValue::ModValue(ConfModule m, VarCtx c) : mod(std::move(m)), ctx(std::move(c)) {
    coeffs.assign(mod.rank(), Poly(ctx));
}

ModValue::ModValue(ConfModule m, VarCtx c, std::vector<Poly> cs)
    : mod(std::move(m)), ctx(std::move(c)), coeffs(std::move(cs)) {
    if (static_cast<int>(coeffs.size()) != mod.rank())
        throw error("coefficient count does not match module rank");
    for (const auto& p : coeffs)
        if (p.ctx() != ctx) throw error("coefficient context mismatch in module value");
}

ModValue ModValue::basis_unit(ConfModule m, int index, VarCtx c) {
    ModValue v(std::move(m), std::move(c));
    if (index < 0 || index >= v.mod.rank()) throw error("basis index out of range");
    v.coeffs[index] = Poly::constant(v.ctx, Rat(1));
    return v;
}

bool ModValue::is_zero() const {
    for (const auto& p : coeffs)
        if (!p.is_zero()) return false;
    return true;
}

ModValue ModValue::operator-() const {
    ModValue v(mod, ctx);
    for (int i = 0; i < mod.rank(); ++i) v.coeffs[i] = -coeffs[i];
    return v;
}

ModValue& ModValue::operator+=(const ModValue& o) {
    if (mod != o.mod) throw error("module mismatch in value addition");
    if (ctx != o.ctx) throw error("variable contexts differ");
    for (int i = 0; i < mod.rank(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

ModValue& ModValue::operator-=(const ModValue& o) { return *this += -o; }

ModValue ModValue::scaled(const Rat& c) const {
    ModValue v(mod, ctx);
    for (int i = 0; i < mod.rank(); ++i) v.coeffs[i] = coeffs[i].scaled(c);
    return v;
}

ModValue ModValue::scaled(const Poly& p) const {
    ModValue v(mod, ctx);
    for (int i = 0; i < mod.rank(); ++i) v.coeffs[i] = coeffs[i] * p;
    return v;
}

ModValue ModValue::substituted(const std::map<std::string, Poly>& assign, const VarCtx& out) const {
    ModValue v(mod, out);
    for (int i = 0; i < mod.rank(); ++i) v.coeffs[i] = coeffs[i].substituted(assign, out);
    return v;
}

std::string ModValue::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < mod.rank(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[i].str() << ") " << mod.basis[i];
    }
    return os.str();
}

ModValue embed_block(const ModValue& v, const ConfModule& sum, int offset) {
    ModValue out(sum, v.ctx);
    for (int i = 0; i < v.mod.rank(); ++i) out.coeffs[offset + i] = v.coeffs[i];
    return out;
}

ModValue project_block(const ModValue& v, const ConfModule& part, int offset) {
    ModValue out(part, v.ctx);
    for (int i = 0; i < part.rank(); ++i) out.coeffs[i] = v.coeffs[offset + i];
    return out;
}

}  // namespace leibconf
